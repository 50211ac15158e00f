#include "ztk/polynomial.hpp"

#include <ostream>
#include <sstream>

namespace ztk {

Polynomial::Polynomial(Rational constant) {
    c_.push_back(std::move(constant));
    strip();
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { strip(); }

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    strip();
}

Polynomial Polynomial::parse_coeffs(const std::string& text) {
    std::vector<Rational> cs;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t b = tok.find_first_not_of(" \t");
        size_t e = tok.find_last_not_of(" \t");
        if (b == std::string::npos) throw std::domain_error("empty coefficient");
        cs.push_back(Rational::parse(tok.substr(b, e - b + 1)));
    }
    if (cs.empty()) throw std::domain_error("empty coefficient list");
    return Polynomial(std::move(cs));
}

void Polynomial::strip() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> r;
    r.reserve(c_.size());
    for (const auto& c : c_) r.push_back(-c);
    return Polynomial(std::move(r));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
    std::vector<Rational> r;
    r.reserve(a.c_.size());
    for (const auto& x : a.c_) r.push_back(c * x);
    return Polynomial(std::move(r));
}

Polynomial Polynomial::shift(const Rational& k0) const {
    // Horner in (t + k0): result(t) = (...(c_d*(t+k0) + c_{d-1})*(t+k0) + ...)
    Polynomial acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        std::vector<Rational> next(acc.c_.size() + 1, Rational(0));
        for (size_t i = 0; i < acc.c_.size(); ++i) {
            next[i + 1] += acc.c_[i];
            next[i] += k0 * acc.c_[i];
        }
        next[0] += *it;
        acc = Polynomial(std::move(next));
    }
    return acc;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r{1};
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

void Polynomial::divmod(const Polynomial& d, Polynomial& q, Polynomial& r) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = c_;
    std::vector<Rational> quo(
        c_.size() >= d.c_.size() ? c_.size() - d.c_.size() + 1 : 0, Rational(0));
    const Rational dl = d.leading();
    for (int i = static_cast<int>(rem.size()) - 1;
         i >= static_cast<int>(d.c_.size()) - 1; --i) {
        if (rem[i].is_zero()) continue;
        Rational f = rem[i] / dl;
        quo[i - (d.c_.size() - 1)] = f;
        for (size_t j = 0; j < d.c_.size(); ++j)
            rem[i - (d.c_.size() - 1) + j] -= f * d.c_[j];
    }
    q = Polynomial(std::move(quo));
    r = Polynomial(std::move(rem));
}

Polynomial Polynomial::exact_div(const Polynomial& d) const {
    Polynomial q, r;
    divmod(d, q, r);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

Rational Polynomial::content() const {
    if (is_zero()) return Rational(0);
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& c : c_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), Int(::abs(c.num())).get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    }
    return Rational(num_gcd, den_lcm);
}

Polynomial Polynomial::primitive() const {
    if (is_zero()) return *this;
    Rational c = content();
    if (leading().sign() < 0) c = -c;
    return c.inverse() * *this;
}

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial q, r;
        x.divmod(y, q, r);
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return x.primitive();
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[i];
        if (c.is_zero()) continue;
        const bool first = out.empty();
        Rational a = c.abs();
        if (c.sign() < 0)
            out += first ? "-" : "-";
        else if (!first)
            out += "+";
        const bool unit = a == Rational(1) && i > 0;
        if (!unit) out += a.str();
        if (i > 0) {
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::string Polynomial::coeff_str() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) out += ",";
        out += c_[i].str();
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

}  // namespace ztk
