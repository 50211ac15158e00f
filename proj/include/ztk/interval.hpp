#ifndef ZTK_INTERVAL_HPP
#define ZTK_INTERVAL_HPP

#include "ztk/rational.hpp"

#include <iosfwd>

namespace ztk {

/// Closed interval with exact rational endpoints. Every operation returns an
/// interval containing the exact image set; field operations lose nothing
/// (no rounding), only root extraction introduces width.
class Interval {
public:
    Interval() : lo_(0), hi_(0) {}
    Interval(Rational point) : lo_(point), hi_(point) {}
    Interval(Rational lo, Rational hi);

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }

    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool contains_zero() const { return sign() == 0; }
    /// Strict membership in the open interval (lo, hi).
    bool interior_contains(const Rational& x) const { return lo_ < x && x < hi_; }
    bool interior_contains(const Interval& o) const { return lo_ < o.lo_ && o.hi_ < hi_; }

    /// -1 if entirely negative, +1 if entirely positive, 0 if 0 is contained.
    int sign() const;

    Interval operator-() const { return Interval(-hi_, -lo_); }
    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    friend Interval operator/(const Interval& a, const Interval& b);
    friend Interval operator*(const Rational& c, const Interval& a);
    friend Interval operator+(const Rational& c, const Interval& a);

    /// [1/hi, 1/lo] with orientation fixed; throws if 0 is contained.
    Interval invert() const;

    /// Throws std::domain_error when the intervals are disjoint.
    Interval intersect(const Interval& o) const;
    Interval hull(const Interval& o) const;

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Interval& iv);

private:
    Rational lo_, hi_;
};

/// Enclosure of x^(1/p) of width <= 2^-prec (exact point interval when the
/// root is a representable dyadic multiple). Requires x >= 0, p >= 1.
Interval nth_root_enclosure(const Rational& x, unsigned p, unsigned prec);

}  // namespace ztk

#endif
