#ifndef ZTK_RATIONAL_FUNCTION_HPP
#define ZTK_RATIONAL_FUNCTION_HPP

#include "ztk/polynomial.hpp"

#include <iosfwd>

namespace ztk {

/// Quotient of two polynomials, kept in canonical reduced form:
///   - numerator and denominator are coprime (exact Euclidean gcd),
///   - both have integer coefficients with joint content 1,
///   - the denominator's leading coefficient is positive.
class RationalFunction {
public:
    RationalFunction() : num_(), den_{1} {}
    RationalFunction(Polynomial num, Polynomial den);
    RationalFunction(const Polynomial& p) : RationalFunction(p, Polynomial{1}) {}

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    Rational eval(const Rational& x) const;  // throws on a pole

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Substitution k -> k+1 on both parts.
    RationalFunction shift1() const { return {num_.shift1(), den_.shift1()}; }

    /// True when a = c*b for a nonzero rational scalar c.
    bool proportional_to(const RationalFunction& o) const;

    std::string str(const std::string& var = "k") const;
    friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

private:
    Polynomial num_, den_;
};

/// 1/h(k) - 1/h(k+1) as a reduced rational function.
RationalFunction reciprocal_difference(const Polynomial& h);

}  // namespace ztk

#endif
