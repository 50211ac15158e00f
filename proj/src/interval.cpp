#include "ztk/interval.hpp"

#include <algorithm>
#include <ostream>

namespace ztk {

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw std::domain_error("interval endpoints out of order");
}

int Interval::sign() const {
    if (lo_ > Rational(0)) return 1;
    if (hi_ < Rational(0)) return -1;
    return 0;
}

Interval operator+(const Interval& a, const Interval& b) {
    return Interval(a.lo_ + b.lo_, a.hi_ + b.hi_);
}

Interval operator-(const Interval& a, const Interval& b) {
    return Interval(a.lo_ - b.hi_, a.hi_ - b.lo_);
}

Interval operator*(const Interval& a, const Interval& b) {
    const Rational p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_;
    const Rational p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
    return Interval(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
}

Interval operator/(const Interval& a, const Interval& b) { return a * b.invert(); }

Interval operator*(const Rational& c, const Interval& a) {
    if (c >= Rational(0)) return Interval(c * a.lo_, c * a.hi_);
    return Interval(c * a.hi_, c * a.lo_);
}

Interval operator+(const Rational& c, const Interval& a) {
    return Interval(c + a.lo_, c + a.hi_);
}

Interval Interval::invert() const {
    if (sign() == 0) throw std::domain_error("inverting an interval containing zero");
    return Interval(hi_.inverse(), lo_.inverse());
}

Interval Interval::intersect(const Interval& o) const {
    const Rational lo = std::max(lo_, o.lo_);
    const Rational hi = std::min(hi_, o.hi_);
    if (lo > hi) throw std::domain_error("intersection of disjoint intervals");
    return Interval(lo, hi);
}

Interval Interval::hull(const Interval& o) const {
    return Interval(std::min(lo_, o.lo_), std::max(hi_, o.hi_));
}

std::ostream& operator<<(std::ostream& os, const Interval& iv) {
    return os << "[" << iv.lo_ << ", " << iv.hi_ << "]";
}

Interval nth_root_enclosure(const Rational& x, unsigned p, unsigned prec) {
    if (x.sign() < 0) throw std::domain_error("nth root of negative value");
    if (p == 0) throw std::domain_error("zeroth root");
    if (x.is_zero()) return Interval(Rational(0));

    // Scale so the root lands on the dyadic grid 2^-prec: with
    // M = floor(num * 2^(p*prec) / den), r = floor(M^(1/p)) satisfies
    // r <= x^(1/p) * 2^prec < r + 1.
    Int scaled = x.num() << (static_cast<unsigned long>(p) * prec);
    Int m;
    mpz_fdiv_q(m.get_mpz_t(), scaled.get_mpz_t(), x.den().get_mpz_t());
    Int r;
    mpz_root(r.get_mpz_t(), m.get_mpz_t(), p);

    Int rp;
    mpz_pow_ui(rp.get_mpz_t(), r.get_mpz_t(), p);
    const Int unit = Int(1) << prec;
    if (rp * x.den() == scaled) return Interval(Rational(r, unit));
    return Interval(Rational(r, unit), Rational(r + 1, unit));
}

}  // namespace ztk
