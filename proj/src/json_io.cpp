#include "qqg/json_io.hpp"

namespace qqg {

json cyclo_to_json(const CycloNum& x) {
    json arr = json::array();
    for (const Rat& r : x.full_coeffs()) arr.push_back(rat_to_string(r));
    return arr;
}

CycloNum cyclo_from_json(const CycloContext* ctx, const json& j) {
    if (!j.is_array() || (int)j.size() != ctx->degree())
        throw std::invalid_argument("cyclotomic number must be an array of " +
                                    std::to_string(ctx->degree()) + " rational strings");
    std::vector<Rat> c(j.size());
    for (size_t i = 0; i < j.size(); ++i) c[i] = rat_from_string(j[i].get<std::string>());
    return CycloNum(ctx, std::move(c));
}

json matrix_to_json(const Mat& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(cyclo_to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat matrix_from_json(const CycloContext* ctx, const json& j) {
    if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
    int rows = (int)j.size();
    int cols = rows ? (int)j[0].size() : 0;
    Mat m(ctx, rows, cols);
    for (int r = 0; r < rows; ++r) {
        if ((int)j[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
        for (int c = 0; c < cols; ++c) m.at(r, c) = cyclo_from_json(ctx, j[r][c]);
    }
    return m;
}

json rep_to_json(const Representation& M) {
    json j;
    j["n"] = M.ctx->n();
    j["dim"] = M.dim;
    j["label"] = M.label ? json(M.label->to_string()) : json(nullptr);
    j["E"] = matrix_to_json(M.E);
    j["F"] = matrix_to_json(M.F);
    j["K"] = matrix_to_json(M.K);
    return j;
}

Representation rep_from_json(const Algebra& alg, const json& j) {
    if (!j.contains("n") || j["n"].get<int>() != alg.n())
        throw std::invalid_argument("module file has n=" +
                                    (j.contains("n") ? j["n"].dump() : "missing") +
                                    ", context has n=" + std::to_string(alg.n()));
    Representation M;
    M.ctx = &alg.cy();
    M.dim = j.at("dim").get<int>();
    M.E = matrix_from_json(M.ctx, j.at("E"));
    M.F = matrix_from_json(M.ctx, j.at("F"));
    M.K = matrix_from_json(M.ctx, j.at("K"));
    if (M.E.rows() != M.dim || M.F.rows() != M.dim || M.K.rows() != M.dim ||
        M.E.cols() != M.dim || M.F.cols() != M.dim || M.K.cols() != M.dim)
        throw std::invalid_argument("matrix dimensions disagree with dim");
    if (M.dim > 0) {
        auto kinv = inverse(M.K);
        if (!kinv) throw std::invalid_argument("K action is singular");
        M.Kinv = *kinv;
    } else {
        M.Kinv = Mat(M.ctx, 0, 0);
    }
    if (!j.at("label").is_null())
        M.label = IndecompLabel::parse(j.at("label").get<std::string>(), alg.n());
    ValidationReport rep = validate(M);
    if (!rep.ok())
        throw std::invalid_argument("module violates defining relations: " + rep.violations[0]);
    return M;
}

json algebra_elem_to_json(const AlgebraElem& x) {
    json arr = json::array();
    for (const auto& [m, c] : x.terms()) {
        json t;
        t["a"] = m.a;
        t["b"] = m.b;
        t["c"] = m.c;
        t["coeff"] = cyclo_to_json(c);
        arr.push_back(std::move(t));
    }
    return arr;
}

AlgebraElem algebra_elem_from_json(const Algebra& alg, const json& j) {
    AlgebraElem x(&alg);
    for (const auto& t : j) {
        CycloNum c = cyclo_from_json(&alg.cy(), t.at("coeff"));
        x = x + alg.monomial(t.at("a").get<int>(), t.at("b").get<int>(), t.at("c").get<int>(), c);
    }
    return x;
}

json green_to_json(const GreenRing& ring, const GreenElem& e) {
    json arr = json::array();
    for (const auto& [m, c] : e.terms()) {
        json mono;
        mono["y"] = m.y;
        mono["x"] = json::array();
        for (auto& [t, ex] : m.x) mono["x"].push_back({t, ex});
        mono["eps"] = json::array();
        for (auto& [t, ex] : m.eps) mono["eps"].push_back({t, ex});
        mono["zp"] = m.zp;
        mono["zm"] = m.zm;
        mono["w"] = json::array();
        for (auto& [s, id] : m.w) mono["w"].push_back({json(s), json(ring.eta_labels()[id])});
        arr.push_back({{"monomial", mono}, {"coeff", c.get_str()}});
    }
    return arr;
}

GreenElem green_from_json(const GreenRing& ring, const json& j) {
    GreenElem e;
    for (const auto& t : j) {
        const json& mono = t.at("monomial");
        GreenMono m;
        m.y = mono.at("y").get<int>();
        for (const auto& p : mono.at("x")) m.x.emplace_back(p[0].get<int>(), p[1].get<int>());
        for (const auto& p : mono.at("eps")) m.eps.emplace_back(p[0].get<int>(), p[1].get<int>());
        m.zp = mono.at("zp").get<int>();
        m.zm = mono.at("zm").get<int>();
        for (const auto& p : mono.at("w"))
            m.w.emplace_back(p[0].get<int>(), ring.eta_id(p[1].get<std::string>()));
        std::sort(m.x.begin(), m.x.end());
        std::sort(m.eps.begin(), m.eps.end());
        std::sort(m.w.begin(), m.w.end());
        Int c(t.at("coeff").get<std::string>());
        e.add_term(m, c);
    }
    return e;
}

}  // namespace qqg
