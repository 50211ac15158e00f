#include "ztk/rational_function.hpp"

#include <ostream>

namespace ztk {

namespace {

// gcd of positive rationals: gcd(a/b, c/d) = gcd(a,c)/lcm(b,d).
Rational rational_gcd(const Rational& a, const Rational& b) {
    Int n, d;
    mpz_gcd(n.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
    mpz_lcm(d.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
    return Rational(n, d);
}

}  // namespace

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial{1};
        return;
    }
    Polynomial g = Polynomial::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
    }
    const Rational joint = rational_gcd(num_.content(), den_.content());
    num_ = joint.inverse() * num_;
    den_ = joint.inverse() * den_;
    if (den_.leading().sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

Rational RationalFunction::eval(const Rational& x) const {
    const Rational d = den_.eval(x);
    if (d.is_zero()) throw std::domain_error("rational function evaluated at a pole");
    return num_.eval(x) / d;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

bool RationalFunction::proportional_to(const RationalFunction& o) const {
    if (is_zero() || o.is_zero()) return is_zero() == o.is_zero();
    return (num_ * o.den_).primitive() == (o.num_ * den_).primitive();
}

std::string RationalFunction::str(const std::string& var) const {
    if (den_ == Polynomial{1}) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
    return os << f.str();
}

RationalFunction reciprocal_difference(const Polynomial& h) {
    return RationalFunction(h.shift1() - h, h * h.shift1());
}

}  // namespace ztk
