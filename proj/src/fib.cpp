#include "ztk/fib.hpp"

namespace ztk {

void FibParams::validate() const {
    if (b < 1 || b > a) throw std::domain_error("fib params require 1 <= b <= a");
    if (c != 0) throw std::domain_error("fib params require c = 0");
}

Int fib(unsigned long k) {
    Int r;
    mpz_fib_ui(r.get_mpz_t(), k);
    return r;
}

Int gen_fib(unsigned long k, const FibParams& params) {
    params.validate();
    Int prev = params.c, cur = 1;
    if (k == 0) return prev;
    for (unsigned long i = 1; i < k; ++i) {
        Int next = params.a * cur + params.b * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

namespace {

// Partial sum of m terms plus a certified remainder interval. For the
// positive series the remainder uses the geometric bound F_{k+1} >= (3/2) F_k
// (k >= 3), giving tail <= 3/F_m (resp. 3/F_m^2). The alternating series has
// decreasing terms, so the remainder has the sign of, and magnitude at most,
// its first omitted term.
Interval tail_with_terms(FibSeries series, unsigned long n, const FibParams& params,
                         unsigned long m) {
    Rational sum(0);
    for (unsigned long k = n; k < m; ++k) {
        switch (series) {
            case FibSeries::reciprocal:
                sum += Rational(Int(1), fib(k));
                break;
            case FibSeries::reciprocal_squared: {
                Int f = fib(k);
                sum += Rational(Int(1), f * f);
                break;
            }
            case FibSeries::alternating_gen: {
                Rational t(Int(1), gen_fib(k, params));
                sum += (k % 2 == 0) ? t : -t;
                break;
            }
        }
    }
    switch (series) {
        case FibSeries::reciprocal:
            return Interval(sum, sum + Rational(Int(3), fib(m)));
        case FibSeries::reciprocal_squared: {
            Int f = fib(m);
            return Interval(sum, sum + Rational(Int(3), f * f));
        }
        case FibSeries::alternating_gen: {
            Rational t(Int(1), gen_fib(m, params));
            if (m % 2 == 0) return Interval(sum, sum + t);
            return Interval(sum - t, sum);
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

Interval fib_tail_enclosure(FibSeries series, unsigned long n, const FibParams& params,
                            unsigned prec) {
    if (n < 2) throw std::domain_error("fib tail requires n >= 2");
    if (series == FibSeries::alternating_gen) params.validate();
    const Rational eps = pow2(-static_cast<long>(prec));
    // F_k and V_k grow at least geometrically, so ~1.5*prec terms suffice.
    for (unsigned long m = n + 2;; m *= 2) {
        Interval e = tail_with_terms(series, n, params, m);
        if (e.width() <= eps) return e;
        if (m > 100000) throw std::runtime_error("fib tail: precision cap exceeded");
    }
}

FloorResult fib_tail_floor(FibSeries series, unsigned long n, const FibParams& params,
                           unsigned max_prec) {
    FloorResult last;
    for (unsigned prec = 64;;) {
        Interval enc = fib_tail_enclosure(series, n, params, prec);
        if (enc.sign() != 0) {
            last = floor_reciprocal(enc);
            last.bits_used = prec;
            if (last.determinate()) return last;
        } else {
            last = FloorResult{};
            last.bits_used = prec;
        }
        if (prec >= max_prec) return last;
        prec = prec * 2 > max_prec ? max_prec : prec * 2;
    }
}

}  // namespace ztk
