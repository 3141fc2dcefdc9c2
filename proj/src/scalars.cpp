#include "ordlab/scalars.hpp"

#include <algorithm>

namespace ordlab {

Rat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        Rat r;
        if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
        r.canonicalize();
        return r;
    }
    Int num, den;
    if (num.set_str(s.substr(0, slash), 10) != 0 || den.set_str(s.substr(slash + 1), 10) != 0)
        throw std::invalid_argument("bad rational: " + s);
    return make_rat(num, den);
}

std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

void Dyadic::normalize() {
    if (m_ == 0) {
        e_ = 0;
        return;
    }
    auto tz = mpz_scan1(m_.get_mpz_t(), 0);
    if (tz > 0) {
        m_ >>= tz;
        e_ += static_cast<long>(tz);
    }
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
    if (m_ == 0) return o;
    if (o.m_ == 0) return *this;
    long e = std::min(e_, o.e_);
    Int a = m_ << static_cast<unsigned long>(e_ - e);
    Int b = o.m_ << static_cast<unsigned long>(o.e_ - e);
    return Dyadic(a + b, e);
}

Rat Dyadic::to_rational() const {
    Rat r(m_);
    if (e_ >= 0) {
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(e_));
    } else {
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-e_));
    }
    return r;
}

Dyadic Dyadic::from_rational(const Rat& r) {
    const Int& den = r.get_den();
    if (den == 1) return Dyadic(r.get_num(), 0);
    // den is positive and canonical; must be 2^k
    auto tz = mpz_scan1(den.get_mpz_t(), 0);
    Int rest = den >> tz;
    if (rest != 1) throw std::domain_error("rational is not dyadic: " + rat_str(r));
    return Dyadic(r.get_num(), -static_cast<long>(tz));
}

Ord Dyadic::compare(const Dyadic& o) const {
    int sa = sgn(m_), sb = sgn(o.m_);
    if (sa != sb) return ord_of(sa - sb);
    if (sa == 0) return Ord::Equal;
    long e = std::min(e_, o.e_);
    Int a = m_ << static_cast<unsigned long>(e_ - e);
    Int b = o.m_ << static_cast<unsigned long>(o.e_ - e);
    return ord_of(cmp(a, b));
}

std::string Dyadic::str() const {
    return m_.get_str() + "*2^" + std::to_string(e_);
}

Dyadic Dyadic::parse(const std::string& s) {
    auto star = s.find("*2^");
    if (star == std::string::npos) {
        Int m;
        if (m.set_str(s, 10) != 0) throw std::invalid_argument("bad dyadic: " + s);
        return Dyadic(m, 0);
    }
    Int m;
    if (m.set_str(s.substr(0, star), 10) != 0) throw std::invalid_argument("bad dyadic: " + s);
    long e = std::stol(s.substr(star + 3));
    return Dyadic(m, e);
}

} // namespace ordlab
