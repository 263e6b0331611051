#include "qqg/greenexpr.hpp"

#include <cctype>

namespace qqg {

namespace {

struct Parser {
    const GreenRing& ring;
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }

    bool eat(char c) {
        if (!peek(c)) return false;
        ++pos;
        return true;
    }

    long read_uint() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit((unsigned char)s[pos]))
            throw ParseError("expected a number", pos);
        long v = 0;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos]))
            v = v * 10 + (s[pos++] - '0');
        return v;
    }

    GreenElem atom() {
        skip_ws();
        if (pos >= s.size()) throw ParseError("unexpected end of expression", pos);
        char c = s[pos];
        if (c == '(') {
            ++pos;
            GreenElem e = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos);
            return e;
        }
        if (c == '-') {
            ++pos;
            return -factor();
        }
        if (std::isdigit((unsigned char)c)) return ring.one().scaled(Int(read_uint()));
        if (c == 'y') {
            ++pos;
            return ring.gen_y(1);
        }
        if (c == 'x') {
            ++pos;
            return ring.gen_x((int)read_uint());
        }
        if (c == 'e') {
            ++pos;
            return ring.gen_eps((int)read_uint());
        }
        if (c == 'z') {
            ++pos;
            if (pos >= s.size() || (s[pos] != '+' && s[pos] != '-'))
                throw ParseError("expected z+ or z-", pos);
            bool plus = s[pos++] == '+';
            return plus ? ring.gen_zp(1) : ring.gen_zm(1);
        }
        if (c == 'w') {
            ++pos;
            long sidx = read_uint();
            if (!eat(',')) throw ParseError("expected ',' in w{s},{eta}", pos);
            skip_ws();
            size_t start = pos;
            while (pos < s.size() && (std::isalnum((unsigned char)s[pos]))) ++pos;
            if (start == pos) throw ParseError("expected a band parameter label", pos);
            return ring.gen_w((int)sidx, s.substr(start, pos - start));
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }

    GreenElem factor() {
        GreenElem base = atom();
        skip_ws();
        if (eat('^')) {
            long e = read_uint();
            GreenElem acc = ring.one();
            for (long i = 0; i < e; ++i) acc = GreenElem::raw_mul(acc, base);
            return acc;
        }
        return base;
    }

    GreenElem term() {
        GreenElem acc = factor();
        while (true) {
            skip_ws();
            if (!eat('*')) return acc;
            acc = GreenElem::raw_mul(acc, factor());
        }
    }

    GreenElem expr() {
        GreenElem acc = term();
        while (true) {
            skip_ws();
            if (pos >= s.size()) return acc;
            // "z+"/"z-" are consumed inside atom(), so +/- here are binary.
            if (s[pos] == '+') {
                ++pos;
                acc = acc + term();
            } else if (s[pos] == '-') {
                ++pos;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }
};

}  // namespace

GreenElem parse_green_expr(const GreenRing& ring, const std::string& input) {
    Parser p{ring, input};
    GreenElem e = p.expr();
    p.skip_ws();
    if (p.pos != input.size()) throw ParseError("trailing input", p.pos);
    return e;
}

}  // namespace qqg
