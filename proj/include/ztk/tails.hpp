#ifndef ZTK_TAILS_HPP
#define ZTK_TAILS_HPP

#include "ztk/interval.hpp"

#include <optional>

namespace ztk {

inline constexpr unsigned kDefaultMaxPrec = 4096;

enum class SeriesKind { alternating, riemann };

/// One tail computation: series kind, exponent, start index, and the target
/// enclosure width 2^-prec.
struct TailQuery {
    SeriesKind kind;
    Rational s;
    unsigned long n = 1;
    unsigned prec = 64;
};

/// Floor of a reciprocal, or indeterminate when the enclosure straddles an
/// integer at the precision cap.
struct FloorResult {
    std::optional<Int> value;
    unsigned bits_used = 0;
    Interval reciprocal;  // enclosure of 1/x

    bool determinate() const { return value.has_value(); }
};

/// Enclosure of zeta*_n(s) = sum_{k>=n} (-1)^(k+1) k^-s, width <= 2^-prec.
/// Requires s > 0 (rational s handled exactly via certified root enclosures).
/// Enclosures at increasing prec are nested for the same (s, n).
Interval alt_tail_enclosure(const TailQuery& q);

/// Enclosure of zeta_n(s) = sum_{k>=n} k^-s, width <= 2^-prec.
/// Requires integer s >= 2.
Interval riemann_tail_enclosure(const TailQuery& q);

/// Enclosure of zeta(s) obtained from the alternating series via
/// zeta(s) = zeta*(s) / (1 - 2^(1-s)); integer s >= 2.
Interval zeta_from_alternating(unsigned s, unsigned prec);

/// Floor of 1/x from an interval excluding zero; indeterminate when the two
/// endpoint floors disagree. Throws if x contains zero.
FloorResult floor_reciprocal(const Interval& x);

/// floor(1 / tail) by adaptive refinement: doubles prec from start_prec until
/// the floor is determinate or max_prec is reached.
FloorResult floor_reciprocal_tail(SeriesKind kind, const Rational& s, unsigned long n,
                                  unsigned max_prec = kDefaultMaxPrec,
                                  unsigned start_prec = 64);

}  // namespace ztk

#endif
