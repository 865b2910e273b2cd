#include "e8cat/parse.hpp"

#include <cctype>
#include <vector>

namespace e8cat {

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c))
            throw ParseError("expected '" + std::string(1, c) + "' at position " +
                             std::to_string(pos) + " in element expression");
    }
    bool eat_word(const std::string& w) {
        skip_ws();
        if (s.compare(pos, w.size(), w) == 0) {
            pos += w.size();
            return true;
        }
        return false;
    }
    int number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected a number at position " + std::to_string(pos));
        return std::stoi(s.substr(start, pos - start));
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
};

int gamma_index(Cursor& c) {
    if (!c.eat('g')) throw ParseError("expected 'g<i>' in psi(...)");
    int i = c.number();
    if (i < 0 || i > 7) throw ParseError("gamma index out of range 0..7");
    return i;
}

int bit(Cursor& c) {
    int v = c.number();
    if (v != 0 && v != 1) throw ParseError("psi sign bits must be 0 or 1");
    return v;
}

RootVec parse_root(Cursor& c) {
    RootVec v{};
    if (c.peek() == '(') {
        c.expect('(');
        for (int k = 0; k < 8; ++k) {
            c.skip_ws();
            if (c.eat('+'))
                v.twice[k] = 1;
            else if (c.eat('-'))
                v.twice[k] = -1;
            else
                throw ParseError("expected '+' or '-' in half-root literal");
        }
        c.expect(')');
        c.expect('/');
        if (c.number() != 2) throw ParseError("half-root literal must end in /2");
        if (!is_root(v)) throw ParseError("half-vector is not a root (odd number of minus signs?)");
        return v;
    }
    if (!c.eat('x')) throw ParseError("expected root expression like x7-x8");
    int i = c.number();
    int sign;
    if (c.eat('+'))
        sign = 1;
    else if (c.eat('-'))
        sign = -1;
    else
        throw ParseError("expected '+' or '-' between root coordinates");
    if (!c.eat('x')) throw ParseError("expected second coordinate like x8");
    int j = c.number();
    if (i < 1 || i > 8 || j < 1 || j > 8 || i == j)
        throw ParseError("root coordinates must be distinct indices in 1..8");
    v.twice[i - 1] = 2;
    v.twice[j - 1] = 2 * sign;
    return v;
}

E8GroupElem parse_atom(Cursor& c) {
    if (c.eat_word("psi")) {
        c.expect('(');
        int i = gamma_index(c);
        c.expect(':');
        int a = bit(c);
        c.expect(':');
        int b = bit(c);
        c.expect(',');
        int j = gamma_index(c);
        c.expect(':');
        int cc = bit(c);
        c.expect(':');
        int d = bit(c);
        c.expect(')');
        return E8GroupElem::psi(i, a, b, j, cc, d);
    }
    if (c.eat_word("tau")) {
        c.expect('(');
        RootVec v = parse_root(c);
        c.expect(')');
        return E8GroupElem::tau(v);
    }
    if (c.eat_word("x")) return E8GroupElem::x();
    throw ParseError("expected psi(...), tau(...) or x at position " + std::to_string(c.pos));
}

}  // namespace

E8GroupElem parse_element(const std::string& expr) {
    Cursor c{expr};
    E8GroupElem g = parse_atom(c);
    while (c.eat('*')) {
        E8GroupElem h = parse_atom(c);
        try {
            g = elem_mul(g, h);
        } catch (const MixedEncoding&) {
            g = elem_mul_resolved(g, h);
        }
    }
    if (!c.done())
        throw ParseError("unexpected trailing input at position " + std::to_string(c.pos));
    return g;
}

}  // namespace e8cat
