#ifndef ZTK_LEMMAS_HPP
#define ZTK_LEMMAS_HPP

#include "ztk/formulas.hpp"
#include "ztk/prover.hpp"
#include "ztk/rational_function.hpp"

#include <optional>
#include <vector>

namespace ztk {

enum class Parity { even, odd };
enum class Side { left, right };

Parity parity_of(unsigned long n);
std::string parity_name(Parity p);
std::string side_name(Side s);

/// The bound-function pairs of the telescoping framework for s = 1..4:
/// 1/(h(k)+1) - 1/(h(k+1)+1) < (tail term pair) < 1/h(k) - 1/h(k+1),
/// h = f (even start) or g (odd start), valid from k_even / k_odd on. The
/// even-case f have negative leading coefficients (the sandwich uses 1/f with
/// f -> -inf); the sign is recorded rather than a growth condition enforced.
struct BoundFunctionSet {
    unsigned s;
    Polynomial f;
    Polynomial g;
    long k_even;
    long k_odd;

    int f_leading_sign() const { return f.leading().sign(); }
    int g_leading_sign() const { return g.leading().sign(); }
};

const BoundFunctionSet& bound_functions(unsigned s);  // s in 1..4

/// Everything produced while reducing one side of the chain inequality for
/// a pair of consecutive series terms.
struct TelescopingParts {
    Polynomial center_num, center_den;  // term pair as one fraction, unreduced
    Polynomial bound_num, bound_den;    // 1/h(k) - 1/h(k+1), unreduced
    RationalFunction difference;        // reduced right-minus-left of the side
    Polynomial delta_raw;               // oriented cross-multiplied numerator
    Polynomial common_factor;           // gcd of the two numerators above
    Polynomial delta_reduced;           // delta_raw / common_factor
};

/// Reduces the selected side for exponent s with bound function h (callers
/// normally pass f_s for even parity or g_s for odd; the left side shifts
/// h to h+1 internally).
TelescopingParts telescoping_parts(const Polynomial& h, unsigned s, Parity parity, Side side);

/// The reduced difference alone (right-minus-left of the selected
/// inequality), using the built-in bound function for (s, parity).
RationalFunction build_telescoping_difference(const Polynomial& h, unsigned s, Parity parity,
                                              Side side);

/// Verification record for one side of one lemma.
struct LemmaSideReport {
    unsigned s;
    Parity parity;
    Side side;
    TelescopingParts parts;
    long min_threshold = 0;       // certified minimal k for the whole side
    long expected_threshold = 0;  // stated threshold being checked against
    Polynomial expected_simplified;
    bool matches_expected = false;
    std::vector<PositivityCertificate> certificates;
};

LemmaSideReport verify_lemma_side(unsigned s, Parity parity, Side side);

/// Both sides of the (s, parity) lemma; `threshold` is the combined minimal
/// integer from which the full chain inequality is certified.
struct LemmaReport {
    unsigned s;
    Parity parity;
    LemmaSideReport left;
    LemmaSideReport right;
    long threshold = 0;
    bool matches_expected = false;
};

LemmaReport verify_lemma(unsigned s, Parity parity);

/// The open sandwich interval (1/(h+1), 1/h) around zeta*_n(s), endpoints
/// exact, orientation normalized. Requires n in the parity-appropriate range.
Interval theorem_bounds(unsigned s, unsigned long n);

/// One row of a formula-vs-oracle sweep.
struct VerifyRow {
    unsigned long n = 0;
    Parity parity = Parity::even;
    bool in_range = false;
    Int formula_value;
    std::optional<Int> oracle_value;
    bool match = false;
    unsigned bits_used = 0;
    std::optional<bool> containment_ok;  // oracle enclosure inside theorem_bounds
};

/// Compares eval_thm<s> with the tail oracle on [n_min, n_max]; when n is in
/// the stated range, additionally checks that the 128-bit enclosure lies
/// strictly inside theorem_bounds(s, n).
std::vector<VerifyRow> verify_theorem(unsigned s, unsigned long n_min, unsigned long n_max,
                                      unsigned max_prec = kDefaultMaxPrec);

/// Sweeps any closed-form formula against its tail oracle.
std::vector<VerifyRow> verify_formula(FormulaId id, unsigned long n_min, unsigned long n_max,
                                      const FibParams& fib_params = {},
                                      const KimSongParams& ks_params = {},
                                      unsigned max_prec = kDefaultMaxPrec);

/// Smallest n of the given parity such that formula = oracle for every
/// scanned n' >= n of that parity up to n_cap; throws if none exists.
unsigned long find_empirical_threshold(FormulaId id, Parity parity, unsigned long n_cap,
                                       const FibParams& fib_params = {},
                                       const KimSongParams& ks_params = {});

}  // namespace ztk

#endif
