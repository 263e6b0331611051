#include "qqg/labels.hpp"

#include <sstream>

namespace qqg {

std::string IndecompLabel::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Simple: os << "V" << l; break;
        case Kind::BlockSimple: os << "V(" << t << "," << r << ")"; break;
        case Kind::Proj: os << "P" << l; break;
        case Kind::Syzygy: os << "Omega^" << (sign >= 0 ? "" : "-") << s << "V" << l; break;
        case Kind::Band: os << "M" << s << "(" << l << "," << eta << ")"; break;
    }
    return os.str();
}

IndecompLabel IndecompLabel::parse(const std::string& in, int n) {
    auto fail = [&]() -> IndecompLabel {
        throw std::invalid_argument("unrecognized module label: '" + in + "'");
    };
    try {
        if (in.rfind("Omega^", 0) == 0) {
            size_t pos = 6;
            int sign = +1;
            if (pos < in.size() && in[pos] == '-') {
                sign = -1;
                ++pos;
            }
            size_t v = in.find('V', pos);
            if (v == std::string::npos) return fail();
            int s = std::stoi(in.substr(pos, v - pos));
            int l = std::stoi(in.substr(v + 1));
            return syzygy(sign, s, l);
        }
        if (in.size() > 1 && in[0] == 'V' && in.find('(') != std::string::npos) {
            size_t open = in.find('('), comma = in.find(','), close = in.find(')');
            if (open == std::string::npos || comma == std::string::npos || close == std::string::npos)
                return fail();
            int t = std::stoi(in.substr(open + 1, comma - open - 1));
            int r = std::stoi(in.substr(comma + 1, close - comma - 1));
            return block_simple(t, r, n);
        }
        if (in.size() > 1 && in[0] == 'V') return simple(std::stoi(in.substr(1)));
        if (in.size() > 1 && in[0] == 'P') return proj(std::stoi(in.substr(1)));
        if (in.size() > 1 && in[0] == 'M') {
            size_t open = in.find('('), comma = in.find(','), close = in.find(')');
            if (open == std::string::npos || comma == std::string::npos || close == std::string::npos)
                return fail();
            int s = std::stoi(in.substr(1, open - 1));
            int l = std::stoi(in.substr(open + 1, comma - open - 1));
            std::string eta = in.substr(comma + 1, close - comma - 1);
            return band(s, l, eta);
        }
    } catch (const std::logic_error&) {
        return fail();
    }
    return fail();
}

std::string claim_to_string(const DecompClaim& c) {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [lab, mult] : c) {
        if (!first) os << " + ";
        first = false;
        if (mult != 1) os << mult << "*";
        os << lab.to_string();
    }
    return os.str();
}

}  // namespace qqg
