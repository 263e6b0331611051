#include "qqg/crosscheck.hpp"

#include <sstream>

namespace qqg {

CrossCheckResult cross_check_product(const Engine& eng, const GreenRing& ring,
                                     const IndecompLabel& A, const IndecompLabel& B) {
    CrossCheckResult res;
    res.description = "[" + A.to_string() + "] * [" + B.to_string() + "]";
    GreenElem symbolic = ring.mul(ring.from_label(A), ring.from_label(B));

    Representation MA = eng.construct(A);
    Representation MB = eng.construct(B);
    Representation T = tensor(eng.algebra(), MA, MB);
    auto claim = eng.decompose(T);
    if (!claim) {
        res.detail = "engine could not identify the decomposition";
        return res;
    }
    GreenElem constructive;
    for (const auto& [lab, mult] : *claim) {
        if (!ring.label_expressible(lab)) {
            res.detail = "decomposition contains " + lab.to_string() +
                         ", which has no generator expression";
            return res;
        }
        constructive = constructive + ring.from_label(lab).scaled(Int(mult));
    }
    constructive = ring.reduce(constructive);
    res.ok = symbolic == constructive;
    std::ostringstream os;
    os << "engine: " << claim_to_string(*claim) << "; symbolic = " << ring.to_string(symbolic);
    if (!res.ok) os << "; constructive = " << ring.to_string(constructive);
    res.detail = os.str();
    return res;
}

GreenElem derive_syzygy_class(const Engine& eng, const GreenRing& ring, int sign, int s) {
    if (s < 1) throw std::invalid_argument("derive_syzygy_class: s >= 1 required");
    const Algebra& alg = eng.algebra();
    GreenElem cls = sign > 0 ? ring.gen_zp(1) : ring.gen_zm(1);
    Representation step = eng.construct(IndecompLabel::syzygy(sign, 1, 1));
    Representation cur = step;
    for (int k = 2; k <= s; ++k) {
        Representation T = tensor(alg, cur, step);
        PeelResult peel = eng.peel_projectives(T);
        Representation expect = eng.construct(IndecompLabel::syzygy(sign, k, 1));
        IsoResult iso = eng.find_isomorphism(peel.stable, expect);
        if (iso.status != IsoStatus::Found)
            throw UnverifiedError("derive_syzygy_class: stable part of the tensor power is not "
                                  "the expected syzygy at s=" +
                                  std::to_string(k));
        GreenElem z1 = sign > 0 ? ring.gen_zp(1) : ring.gen_zm(1);
        cls = ring.mul(cls, z1);
        for (const auto& [lab, mult] : peel.projectives)
            cls = ring.reduce(cls - ring.from_label(lab).scaled(Int(mult)));
        cur = peel.stable;
    }
    return cls;
}

}  // namespace qqg
