#pragma once

#include <cstdint>
#include <stdexcept>

namespace tracelab {

using i64 = std::int64_t;

/// Arithmetic in GF(p).  p is capped below 2^31 so products fit in i64.
class PrimeField {
public:
    explicit PrimeField(i64 p) : p_(p) {
        if (p < 2 || p >= (i64(1) << 31) || !is_prime(p))
            throw std::invalid_argument("not prime");
    }

    i64 p() const { return p_; }

    i64 reduce(i64 x) const {
        x %= p_;
        return x < 0 ? x + p_ : x;
    }
    i64 add(i64 a, i64 b) const { return (a + b) % p_; }
    i64 sub(i64 a, i64 b) const { return reduce(a - b); }
    i64 mul(i64 a, i64 b) const { return (a * b) % p_; }
    i64 neg(i64 a) const { return a == 0 ? 0 : p_ - a; }

    i64 inv(i64 a) const {
        a = reduce(a);
        if (a == 0) throw std::domain_error("division by zero");
        // extended Euclid
        i64 r0 = p_, r1 = a, s0 = 0, s1 = 1;
        while (r1 != 0) {
            const i64 q = r0 / r1;
            r0 -= q * r1;
            std::swap(r0, r1);
            s0 -= q * s1;
            std::swap(s0, s1);
        }
        return reduce(s0);
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

private:
    static bool is_prime(i64 n) {
        for (i64 d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    i64 p_;
};

}  // namespace tracelab
