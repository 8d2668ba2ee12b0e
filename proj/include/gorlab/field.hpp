#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "gorlab/common.hpp"

namespace gorlab {

// Prime field F_p, p < 2^31. Elements are stored reduced into [0, p), so
// products fit in int64 without overflow. All operations are exact.
class FpField {
public:
    using Elem = std::int64_t;

    explicit FpField(std::int64_t p) : p_(p) {
        if (p < 2 || p >= (std::int64_t(1) << 31)) throw error("characteristic out of range");
        for (std::int64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) throw error("characteristic must be prime: " + std::to_string(p));
    }

    std::int64_t characteristic() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long long n) const {
        Elem r = static_cast<Elem>(n % p_);
        return r < 0 ? r + p_ : r;
    }

    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }

    Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p_ ? s - p_ : s; }
    Elem sub(Elem a, Elem b) const { Elem s = a - b; return s < 0 ? s + p_ : s; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p_; }

    Elem inv(Elem a) const {
        if (a == 0) throw error("division by zero");
        // extended Euclid
        std::int64_t t = 0, nt = 1, r = p_, nr = a;
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        GORLAB_CHECK(r == 1, "non-invertible element in a field");
        return t < 0 ? t + p_ : t;
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    std::string str(Elem a) const { return std::to_string(a); }

    bool operator==(const FpField& o) const { return p_ == o.p_; }

private:
    std::int64_t p_;
};

// Rational numbers with arbitrary precision, used for cross checks.
class QField {
public:
    using Elem = boost::multiprecision::cpp_rational;

    std::int64_t characteristic() const { return 0; }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long long n) const { return Elem(n); }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw error("division by zero");
        return Elem(1) / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    std::string str(const Elem& a) const { return a.str(); }

    bool operator==(const QField&) const { return true; }
};

} // namespace gorlab
