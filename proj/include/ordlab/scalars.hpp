#pragma once

#include <gmpxx.h>
#include <compare>
#include <stdexcept>
#include <string>

namespace ordlab {

// Exact scalars. Rationals are GMP-backed and always canonical
// (coprime, positive denominator, zero is 0/1).
using Int = mpz_class;
using Rat = mpq_class;

enum class Ord { Less, Equal, Greater };

inline Ord ord_of(int c) { return c < 0 ? Ord::Less : c > 0 ? Ord::Greater : Ord::Equal; }

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Ord rat_compare(const Rat& a, const Rat& b) { return ord_of(cmp(a, b)); }

// "p/q" or "p"; exact, no rounding.
Rat rat_parse(const std::string& s);
std::string rat_str(const Rat& r);

// Element of Z[1/2] stored as mantissa * 2^exponent with odd (or zero)
// mantissa, so equality is structural.
class Dyadic {
public:
    Dyadic() : m_(0), e_(0) {}
    explicit Dyadic(long n) : m_(n), e_(0) { normalize(); }
    Dyadic(Int mantissa, long exponent) : m_(std::move(mantissa)), e_(exponent) { normalize(); }

    const Int& mantissa() const { return m_; }
    long exponent() const { return e_; }
    bool is_zero() const { return m_ == 0; }

    Dyadic operator+(const Dyadic& o) const;
    Dyadic operator-() const { return Dyadic(-m_, e_); }
    Dyadic operator-(const Dyadic& o) const { return *this + (-o); }

    // value * 2^k
    Dyadic scale_pow2(long k) const {
        if (m_ == 0) return Dyadic();
        return Dyadic(m_, e_ + k);
    }

    Rat to_rational() const;
    // Throws std::domain_error unless the denominator is a power of two.
    static Dyadic from_rational(const Rat& r);

    bool operator==(const Dyadic& o) const { return m_ == o.m_ && e_ == o.e_; }
    Ord compare(const Dyadic& o) const;
    bool operator<(const Dyadic& o) const { return compare(o) == Ord::Less; }

    std::string str() const;             // "m*2^e"
    static Dyadic parse(const std::string& s);

private:
    void normalize();
    Int m_;
    long e_;
};

} // namespace ordlab
