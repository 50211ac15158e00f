#ifndef ZTK_FIB_HPP
#define ZTK_FIB_HPP

#include "ztk/tails.hpp"

namespace ztk {

/// Parameters of the generalized Fibonacci recurrence
/// V_{k+1} = a V_k + b V_{k-1}, V_0 = c, V_1 = 1; restricted to
/// 1 <= b <= a and c = 0.
struct FibParams {
    long a = 1;
    long b = 1;
    long c = 0;

    void validate() const;
};

/// F_k with F_0 = 0, F_1 = 1.
Int fib(unsigned long k);

/// V_k under `params` (equals fib for a=b=1, c=0).
Int gen_fib(unsigned long k, const FibParams& params);

/// Which reciprocal-Fibonacci series a tail oracle sums.
enum class FibSeries {
    reciprocal,          // sum 1/F_k
    reciprocal_squared,  // sum 1/F_k^2
    alternating_gen,     // sum (-1)^k / V_k
};

/// Certified enclosure of the series tail starting at index n (n >= 2).
Interval fib_tail_enclosure(FibSeries series, unsigned long n, const FibParams& params,
                            unsigned prec);

/// floor(1 / tail) by adaptive refinement, the brute-force oracle for the
/// reciprocal-Fibonacci floor formulas.
FloorResult fib_tail_floor(FibSeries series, unsigned long n, const FibParams& params,
                           unsigned max_prec = kDefaultMaxPrec);

}  // namespace ztk

#endif
