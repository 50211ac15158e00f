#include "ztk/rational.hpp"

#include <ostream>
#include <sstream>

namespace ztk {

Rational::Rational(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Int(num), Int(den)) {}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(text));
        return Rational(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::domain_error("cannot parse rational: \"" + text + "\"");
    }
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.v_ == 0) throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::abs() const {
    Rational r;
    r.v_ = ::abs(v_);
    return r;
}

Rational Rational::inverse() const {
    if (v_ == 0) throw std::domain_error("inverse of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
}

Int Rational::floor() const {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    const Rational base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Int pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), base.v_.get_num_mpz_t(), n);
    mpz_pow_ui(pd.get_mpz_t(), base.v_.get_den_mpz_t(), n);
    Rational r;
    r.v_ = mpq_class(pn, pd);  // base normalized, so powers stay coprime
    return r;
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::decimal(unsigned digits) const {
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    Int t;  // truncate toward zero
    mpz_tdiv_q(t.get_mpz_t(), Int(v_.get_num() * scale).get_mpz_t(), v_.get_den_mpz_t());
    bool neg = t < 0;
    std::string d = Int(::abs(t)).get_str();
    if (d.size() <= digits) d.insert(0, digits + 1 - d.size(), '0');
    std::string out = neg ? "-" : "";
    out += d.substr(0, d.size() - digits);
    if (digits > 0) out += "." + d.substr(d.size() - digits);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow2(long e) { return Rational(2).pow(e); }

}  // namespace ztk
