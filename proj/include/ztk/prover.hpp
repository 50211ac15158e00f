#ifndef ZTK_PROVER_HPP
#define ZTK_PROVER_HPP

#include "ztk/polynomial.hpp"

#include <vector>

namespace ztk {

/// Thrown when a polynomial cannot be certified positive (either it really is
/// nonpositive somewhere on the requested range, or the search cap ran out).
struct ProverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Machine-checkable evidence that p(k) > 0 for every integer k >= k0:
/// the coefficients of p(K + t) are all >= 0 with positive constant term
/// (so p > 0 on [K, inf)), and each integer in [k0, K) is checked directly.
struct PositivityCertificate {
    Polynomial p;
    long k0 = 0;
    long witness_shift = 0;  // K
    std::vector<std::pair<long, Rational>> checked_points;

    /// Canonical text form, sufficient for independent re-verification.
    std::string str() const;
};

inline constexpr long kDefaultSearchCap = 10000;

/// Certifies p(k) > 0 for all integers k >= k0. Requires a positive leading
/// coefficient (a positive constant counts); throws ProverError when p is
/// nonpositive at some integer >= k0 or the shift search exceeds the cap.
PositivityCertificate prove_positive(const Polynomial& p, long k0,
                                     long search_cap = kDefaultSearchCap);

/// Independent re-check of a certificate (used by tests; shares no state with
/// the construction above beyond Polynomial arithmetic).
bool verify_certificate(const PositivityCertificate& cert);

/// Smallest integer k* >= 1 with p(k) > 0 for all integers k >= k*.
long find_min_threshold(const Polynomial& p, long search_cap = kDefaultSearchCap);

}  // namespace ztk

#endif
