#ifndef ZTK_POLYNOMIAL_HPP
#define ZTK_POLYNOMIAL_HPP

#include "ztk/rational.hpp"

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace ztk {

/// Univariate polynomial with exact rational coefficients, stored lowest
/// degree first with trailing zeros stripped.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(Rational constant);
    Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<long> coeffs);

    /// Parses a comma-separated coefficient list, lowest degree first,
    /// each entry "a" or "a/b" (the CLI wire format).
    static Polynomial parse_coeffs(const std::string& text);

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational leading() const { return is_zero() ? Rational(0) : c_.back(); }

    Rational eval(const Rational& x) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& a);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    /// q with q(t) = p(k0 + t) identically.
    Polynomial shift(const Rational& k0) const;
    /// Substitution k -> k+1.
    Polynomial shift1() const { return shift(Rational(1)); }

    Polynomial pow(unsigned e) const;

    /// Euclidean division: *this = q*d + r with deg r < deg d.
    void divmod(const Polynomial& d, Polynomial& q, Polynomial& r) const;
    /// Exact division; throws if the remainder is nonzero.
    Polynomial exact_div(const Polynomial& d) const;

    /// Positive rational c such that (1/c)*|p| has coprime integer
    /// coefficients; content of the zero polynomial is 0.
    Rational content() const;
    /// p scaled to integer coprime coefficients with positive leading one.
    Polynomial primitive() const;

    /// Monic gcd made primitive with positive leading coefficient
    /// (constant 1 for coprime inputs).
    static Polynomial gcd(const Polynomial& a, const Polynomial& b);

    /// Human-readable form like "16k^2+8k-5".
    std::string str(const std::string& var = "k") const;
    /// Comma-separated coefficients, lowest degree first.
    std::string coeff_str() const;

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p);

private:
    void strip();
    std::vector<Rational> c_;
};

}  // namespace ztk

#endif
