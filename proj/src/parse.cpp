#include "tracelab/parse.hpp"

#include <cctype>
#include <stdexcept>

namespace tracelab {

namespace {

[[noreturn]] void malformed(std::size_t pos) {
    throw std::invalid_argument("malformed expression at position " + std::to_string(pos + 1));
}

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }

    i64 integer() {
        skip_ws();
        const std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) malformed(start);
        i64 v = 0;
        for (std::size_t i = start; i < pos; ++i) {
            v = v * 10 + (s[i] - '0');
            if (v > (i64(1) << 40)) malformed(start);  // keeps later arithmetic in range
        }
        return v;
    }

    std::string identifier() {
        skip_ws();
        const std::size_t start = pos;
        if (pos >= s.size() || !(std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            malformed(pos);
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }
};

std::size_t lookup_var(const std::vector<std::string>& vars, const std::string& name,
                       std::size_t pos) {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return i;
    throw std::invalid_argument("unknown variable '" + name + "' at position " +
                                std::to_string(pos + 1));
}

struct PolyParser {
    Cursor cur;
    const ArtinianAlgebra& A;

    std::vector<i64> vadd(std::vector<i64> a, const std::vector<i64>& b) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = A.field().add(a[i], b[i]);
        return a;
    }
    std::vector<i64> vneg(std::vector<i64> a) {
        for (i64& x : a) x = A.field().neg(x);
        return a;
    }
    std::vector<i64> vpow(std::vector<i64> base, i64 k) {
        auto r = A.one_element();
        for (i64 i = 0; i < k; ++i) r = A.mul_elements(r, base);
        return r;
    }

    std::vector<i64> expr() {
        bool neg = cur.eat('-');
        auto acc = term();
        if (neg) acc = vneg(std::move(acc));
        while (true) {
            if (cur.eat('+'))
                acc = vadd(std::move(acc), term());
            else if (cur.eat('-'))
                acc = vadd(std::move(acc), vneg(term()));
            else
                return acc;
        }
    }

    std::vector<i64> term() {
        auto acc = factor();
        while (cur.eat('*')) acc = A.mul_elements(acc, factor());
        return acc;
    }

    i64 exponent() {
        const i64 k = cur.integer();
        if (k > 64) malformed(cur.pos - 1);  // quotients here are nilpotent far earlier
        return k;
    }

    std::vector<i64> factor() {
        const char c = cur.peek();
        if (c == '-') {
            cur.eat('-');
            return vneg(factor());
        }
        if (c == '(') {
            cur.eat('(');
            auto inner = expr();
            if (!cur.eat(')')) malformed(cur.pos);
            if (cur.eat('^')) inner = vpow(std::move(inner), exponent());
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto e = A.zero_element();
            e[0] = A.field().reduce(cur.integer());
            return e;
        }
        const std::size_t at = cur.pos;
        const std::string name = cur.identifier();
        auto v = A.var_element(lookup_var(A.var_names(), name, at));
        if (cur.eat('^')) v = vpow(std::move(v), exponent());
        return v;
    }
};

}  // namespace

std::vector<i64> parse_poly(const std::string& expr, const ArtinianAlgebra& A) {
    PolyParser p{Cursor{expr}, A};
    auto v = p.expr();
    if (!p.cur.done()) malformed(p.cur.pos);
    return v;
}

Monomial parse_monomial(const std::string& expr, const std::vector<std::string>& vars) {
    Cursor cur{expr};
    Monomial m(vars.size(), 0);
    while (true) {
        const std::size_t at = cur.pos;
        const std::string name = cur.identifier();
        const std::size_t j = lookup_var(vars, name, at);
        int k = 1;
        if (cur.eat('^')) {
            const i64 e = cur.integer();
            if (e < 0 || e > 1000) malformed(at);
            k = static_cast<int>(e);
        }
        m[j] += k;
        if (cur.done()) return m;
        if (!cur.eat('*')) malformed(cur.pos);
    }
}

}  // namespace tracelab
