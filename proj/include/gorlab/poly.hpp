#pragma once

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>
#include <vector>

#include "gorlab/common.hpp"

namespace gorlab {

// Exponent vector. The ambient ring fixes the number of variables.
struct Monomial {
    std::vector<int> e;

    explicit Monomial(int nvars = 0) : e(nvars, 0) {}
    static Monomial var(int nvars, int i, int pow = 1) {
        Monomial m(nvars);
        m.e[i] = pow;
        return m;
    }

    int deg() const { return std::accumulate(e.begin(), e.end(), 0); }
    bool is_one() const {
        return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(static_cast<int>(e.size()));
        for (size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] + o.e[i];
        return r;
    }
    bool divides(const Monomial& o) const {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    // quotient o / this, caller guarantees divisibility
    Monomial quot_into(const Monomial& o) const {
        Monomial r(static_cast<int>(e.size()));
        for (size_t i = 0; i < e.size(); ++i) r.e[i] = o.e[i] - e[i];
        return r;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(static_cast<int>(a.e.size()));
        for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }
    static bool coprime(const Monomial& a, const Monomial& b) {
        for (size_t i = 0; i < a.e.size(); ++i)
            if (a.e[i] > 0 && b.e[i] > 0) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
};

enum class MonoOrderKind { grevlex, lex };

// Returns -1/0/1 for a < b, a == b, a > b.
inline int mono_cmp(MonoOrderKind k, const Monomial& a, const Monomial& b) {
    if (k == MonoOrderKind::grevlex) {
        int da = a.deg(), db = b.deg();
        if (da != db) return da < db ? -1 : 1;
        for (int i = static_cast<int>(a.e.size()) - 1; i >= 0; --i) {
            int d = a.e[i] - b.e[i];
            if (d != 0) return d < 0 ? 1 : -1;
        }
        return 0;
    }
    for (size_t i = 0; i < a.e.size(); ++i) {
        int d = a.e[i] - b.e[i];
        if (d != 0) return d > 0 ? 1 : -1;
    }
    return 0;
}

template <class F>
struct Term {
    Monomial m;
    typename F::Elem c;
};

// Terms sorted strictly descending in the ring's order; no zero coefficients.
template <class F>
struct Poly {
    std::vector<Term<F>> t;

    bool is_zero() const { return t.empty(); }
    const Term<F>& lead() const {
        GORLAB_CHECK(!t.empty(), "lead term of zero polynomial");
        return t.front();
    }
    int total_deg() const {
        int d = -1;
        for (const auto& x : t) d = std::max(d, x.m.deg());
        return d;
    }
    bool operator==(const Poly& o) const {
        if (t.size() != o.t.size()) return false;
        for (size_t i = 0; i < t.size(); ++i)
            if (!(t[i].m == o.t[i].m) || t[i].c != o.t[i].c) return false;
        return true;
    }
};

// Polynomial ring context: field, variable names, monomial order.
template <class F>
struct PolyRing {
    F field;
    std::vector<std::string> vars;
    MonoOrderKind order = MonoOrderKind::grevlex;

    int nvars() const { return static_cast<int>(vars.size()); }
    int cmp(const Monomial& a, const Monomial& b) const { return mono_cmp(order, a, b); }

    Poly<F> zero() const { return {}; }
    Poly<F> constant(typename F::Elem c) const {
        Poly<F> p;
        if (!field.is_zero(c)) p.t.push_back({Monomial(nvars()), c});
        return p;
    }
    Poly<F> one() const { return constant(field.one()); }
    Poly<F> var(int i, int pow = 1) const {
        Poly<F> p;
        p.t.push_back({Monomial::var(nvars(), i, pow), field.one()});
        return p;
    }
    Poly<F> mono(const Monomial& m, typename F::Elem c) const {
        Poly<F> p;
        if (!field.is_zero(c)) p.t.push_back({m, c});
        return p;
    }

    // Sort (descending), merge equal monomials, drop zeros.
    Poly<F> normalized(std::vector<Term<F>> terms) const {
        std::sort(terms.begin(), terms.end(),
                  [&](const Term<F>& a, const Term<F>& b) { return cmp(a.m, b.m) > 0; });
        Poly<F> p;
        for (auto& x : terms) {
            if (!p.t.empty() && p.t.back().m == x.m)
                p.t.back().c = field.add(p.t.back().c, x.c);
            else
                p.t.push_back(x);
            if (!p.t.empty() && field.is_zero(p.t.back().c)) p.t.pop_back();
        }
        return p;
    }

    Poly<F> add(const Poly<F>& a, const Poly<F>& b) const {
        std::vector<Term<F>> ts = a.t;
        ts.insert(ts.end(), b.t.begin(), b.t.end());
        return normalized(std::move(ts));
    }
    Poly<F> neg(const Poly<F>& a) const {
        Poly<F> p = a;
        for (auto& x : p.t) x.c = field.neg(x.c);
        return p;
    }
    Poly<F> sub(const Poly<F>& a, const Poly<F>& b) const { return add(a, neg(b)); }
    Poly<F> scale(typename F::Elem c, const Poly<F>& a) const {
        if (field.is_zero(c)) return {};
        Poly<F> p = a;
        for (auto& x : p.t) x.c = field.mul(c, x.c);
        return p;
    }
    Poly<F> mul_term(const Monomial& m, typename F::Elem c, const Poly<F>& a) const {
        if (field.is_zero(c)) return {};
        Poly<F> p = a;
        for (auto& x : p.t) {
            x.m = x.m * m;
            x.c = field.mul(c, x.c);
        }
        return p;  // multiplying by a monomial preserves the term order
    }
    Poly<F> mul(const Poly<F>& a, const Poly<F>& b) const {
        std::vector<Term<F>> ts;
        ts.reserve(a.t.size() * b.t.size());
        for (const auto& x : a.t)
            for (const auto& y : b.t) ts.push_back({x.m * y.m, field.mul(x.c, y.c)});
        return normalized(std::move(ts));
    }

    bool is_homogeneous(const Poly<F>& a) const {
        if (a.is_zero()) return true;
        int d = a.t.front().m.deg();
        for (const auto& x : a.t)
            if (x.m.deg() != d) return false;
        return true;
    }

    // constant term (coefficient of the monomial 1)
    typename F::Elem constant_coeff(const Poly<F>& a) const {
        for (const auto& x : a.t)
            if (x.m.is_one()) return x.c;
        return field.zero();
    }

    std::string mono_str(const Monomial& m) const {
        std::string s;
        for (int i = 0; i < nvars(); ++i) {
            if (m.e[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += vars[i];
            if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
        }
        return s;
    }

    std::string str(const Poly<F>& a) const {
        if (a.is_zero()) return "0";
        std::string s;
        for (size_t i = 0; i < a.t.size(); ++i) {
            if (i) s += " + ";
            std::string ms = mono_str(a.t[i].m);
            std::string cs = field.str(a.t[i].c);
            if (ms.empty())
                s += cs;
            else if (field.eq(a.t[i].c, field.one()))
                s += ms;
            else
                s += cs + "*" + ms;
        }
        return s;
    }
};

// Recursive descent parser for the text syntax used by ring files and the CLI:
//   poly   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' nat]
//   atom   := nat | var | '(' poly ')'
template <class F>
class PolyParser {
public:
    PolyParser(const PolyRing<F>& ring, const std::string& text) : r_(ring), s_(text) {}

    Poly<F> parse() {
        auto p = parse_expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    const PolyRing<F>& r_;
    const std::string& s_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw error("polynomial syntax error at column " + std::to_string(pos_ + 1) + ": " + msg +
                    " in \"" + s_ + "\"");
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly<F> parse_expr() {
        bool neg = false;
        skip_ws();
        if (eat('-')) neg = true;
        else (void)eat('+');
        Poly<F> acc = parse_term();
        if (neg) acc = r_.neg(acc);
        for (;;) {
            skip_ws();
            if (eat('+')) acc = r_.add(acc, parse_term());
            else if (eat('-')) acc = r_.sub(acc, parse_term());
            else break;
        }
        return acc;
    }

    Poly<F> parse_term() {
        Poly<F> acc = parse_factor();
        while (eat('*')) acc = r_.mul(acc, parse_factor());
        return acc;
    }

    Poly<F> parse_factor() {
        Poly<F> base = parse_atom();
        if (eat('^')) {
            long long n = parse_nat();
            Poly<F> acc = r_.one();
            for (long long i = 0; i < n; ++i) acc = r_.mul(acc, base);
            return acc;
        }
        return base;
    }

    long long parse_nat() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected a number");
        long long n = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            n = n * 10 + (s_[pos_] - '0');
            if (n > 1000000000) fail("number too large");
            ++pos_;
        }
        return n;
    }

    Poly<F> parse_atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)))
            return r_.constant(r_.field.from_int(parse_nat()));
        if (c == '(') {
            ++pos_;
            auto p = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            for (int i = 0; i < r_.nvars(); ++i)
                if (r_.vars[i] == name) return r_.var(i);
            pos_ = start;
            fail("unknown variable '" + name + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

template <class F>
Poly<F> parse_poly(const PolyRing<F>& ring, const std::string& text) {
    return PolyParser<F>(ring, text).parse();
}

} // namespace gorlab
