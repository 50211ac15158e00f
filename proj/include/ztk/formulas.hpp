#ifndef ZTK_FORMULAS_HPP
#define ZTK_FORMULAS_HPP

#include "ztk/fib.hpp"

#include <string>

namespace ztk {

/// Closed enumeration of the closed-form floor formulas.
enum class FormulaId {
    thm1,
    thm2,
    thm3,
    thm4,
    lin_s2,
    lin_s3,
    linli_s4,
    kimsong_frac,
    on_fib1,
    on_fib2,
    kuha_gen,
    kuha_fib,
};

FormulaId formula_from_name(const std::string& name);
std::string formula_name(FormulaId id);

struct FormulaResult {
    Int value;
    bool in_validity_range = true;
    std::string range_note;
};

/// Fractional exponent s = q/p for the alternating-tail floor formula;
/// q in {1,2}, p >= 2, q = 2 only with odd p.
struct KimSongParams {
    unsigned long p = 2;
    unsigned long q = 1;

    void validate() const;
    Rational exponent() const { return Rational(static_cast<long>(q), static_cast<long>(p)); }
};

FormulaResult eval_thm1(unsigned long n);
FormulaResult eval_thm2(unsigned long n);
FormulaResult eval_thm3(unsigned long n);
FormulaResult eval_thm4(unsigned long n);

/// floor(1/zeta_n(s)) closed forms for s = 2, 3.
FormulaResult eval_lin(unsigned s, unsigned long n);
/// The s = 4 case with its inner exact floors.
FormulaResult eval_linli_s4(unsigned long n);

/// floor((-1)^(n+1) * 2 * (n - 1/2)^(q/p)) via adaptive root enclosures.
FormulaResult eval_kimsong(unsigned long n, const KimSongParams& params,
                           unsigned max_prec = kDefaultMaxPrec);

/// The reciprocal-Fibonacci floor formulas (on_fib1, on_fib2, kuha_gen,
/// kuha_fib); `params` is only consulted for kuha_gen.
FormulaResult eval_fib_formula(FormulaId id, unsigned long n, const FibParams& params = {});

/// Brute-force oracle for the Fibonacci formulas: certified tail enclosure
/// plus floor_reciprocal.
FloorResult fib_formula_oracle(FormulaId id, unsigned long n, const FibParams& params = {},
                               unsigned max_prec = kDefaultMaxPrec);

}  // namespace ztk

#endif
