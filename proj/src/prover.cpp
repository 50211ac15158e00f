#include "ztk/prover.hpp"

#include <sstream>

namespace ztk {

namespace {

bool nonneg_witness(const Polynomial& shifted) {
    if (shifted.is_zero() || shifted.coeff(0).sign() <= 0) return false;
    for (const auto& c : shifted.coeffs())
        if (c.sign() < 0) return false;
    return true;
}

}  // namespace

std::string PositivityCertificate::str() const {
    std::ostringstream os;
    os << "poly " << p.coeff_str() << "\n";
    os << "k0 " << k0 << "\n";
    os << "witness_shift " << witness_shift << "\n";
    os << "checked";
    for (const auto& [k, v] : checked_points) os << " " << k << ":" << v.str();
    os << "\n";
    return os.str();
}

PositivityCertificate prove_positive(const Polynomial& p, long k0, long search_cap) {
    if (p.is_zero() || p.leading().sign() <= 0)
        throw ProverError("prove_positive: leading coefficient must be positive (got " +
                          p.str() + ")");
    long K = k0;
    for (;; ++K) {
        if (K - k0 > search_cap)
            throw ProverError("prove_positive: shift search cap exhausted for " + p.str());
        if (nonneg_witness(p.shift(Rational(Int(K))))) break;
    }
    PositivityCertificate cert;
    cert.p = p;
    cert.k0 = k0;
    cert.witness_shift = K;
    for (long k = k0; k < K; ++k) {
        Rational v = p.eval(Rational(Int(k)));
        if (v.sign() <= 0)
            throw ProverError("prove_positive: " + p.str() + " is " + v.str() + " at k=" +
                              std::to_string(k));
        cert.checked_points.emplace_back(k, v);
    }
    return cert;
}

bool verify_certificate(const PositivityCertificate& cert) {
    if (cert.witness_shift < cert.k0) return false;
    if (!nonneg_witness(cert.p.shift(Rational(Int(cert.witness_shift))))) return false;
    long expect = cert.k0;
    for (const auto& [k, v] : cert.checked_points) {
        if (k != expect++) return false;
        if (v.sign() <= 0 || cert.p.eval(Rational(Int(k))) != v) return false;
    }
    return expect == cert.witness_shift;
}

long find_min_threshold(const Polynomial& p, long search_cap) {
    if (p.is_zero() || p.leading().sign() <= 0)
        throw ProverError("find_min_threshold: leading coefficient must be positive");
    // Find any witness shift first; every nonpositive integer point lies
    // below it, so scanning down from there recovers the minimal threshold.
    long K = 1;
    while (!nonneg_witness(p.shift(Rational(Int(K))))) {
        if (++K > search_cap)
            throw ProverError("find_min_threshold: search cap exhausted for " + p.str());
    }
    long threshold = K;
    while (threshold > 1 && p.eval(Rational(Int(threshold - 1))).sign() > 0) --threshold;
    return threshold;
}

}  // namespace ztk
