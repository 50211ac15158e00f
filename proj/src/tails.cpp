#include "ztk/tails.hpp"

#include <vector>

namespace ztk {

namespace {

// The alternating tails are summed with iterated forward-difference averaging:
// for T = sum_{i>=0} (-1)^i a(n+i) with a completely monotone (a(k) = k^-s is,
// for every rational s > 0), repeatedly applying
//     T = a(n)/2 + (1/2) * sum (-1)^i (a(n+i) - a(n+i+1))
// gives, with b^j = j-th forward difference row and A_j = sum_{i<j} b^i_0/2^(i+1),
//     T in [A_j + b^(j+1)_0 / 2^j,  A_j + b^j_0 / 2^j].
// All rows are nonnegative and decreasing, the bracket width is b^j_1 / 2^j,
// and j |-> b^j_0 is convex, so the brackets are nested as j grows. Each extra
// level halves the remainder, so j ~ prec levels reach width 2^-prec without
// ever summing more than O(prec) series terms.

Rational term_exact(unsigned long k, unsigned long s) {
    Int ks;
    mpz_ui_pow_ui(ks.get_mpz_t(), k, s);
    return Rational(Int(1), ks);
}

Interval term_root(unsigned long k, unsigned long q, unsigned long p, unsigned prec) {
    Int kq;
    mpz_ui_pow_ui(kq.get_mpz_t(), k, q);
    return nth_root_enclosure(Rational(Int(1), kq), static_cast<unsigned>(p), prec);
}

// One pass of the averaging scheme over terms given as intervals; tightens `E`
// in place and returns true once width(E) <= eps. The caller fixes the term
// table, so repeated calls with longer tables extend the same nested chain.
bool difference_pass(const std::vector<Interval>& terms, const Rational& eps, Interval& E) {
    std::vector<Interval> row = terms;
    Interval acc{Rational(0)};
    Rational scale(1);  // 1/2^j
    for (size_t j = 1; row.size() >= 3; ++j) {
        scale = scale / Rational(2);
        acc = acc + scale * row[0];
        for (size_t k = 0; k + 1 < row.size(); ++k) row[k] = row[k] - row[k + 1];
        row.pop_back();
        // remainder of the j-th transformed series lies in [b^(j+1)_0, b^j_0]
        Rational rem_lo = (row[0] - row[1]).lo();
        if (rem_lo < Rational(0)) rem_lo = Rational(0);
        Rational rem_hi = row[0].hi();
        if (rem_hi < rem_lo) rem_hi = rem_lo;
        E = E.intersect(Interval(acc.lo() + scale * rem_lo, acc.hi() + scale * rem_hi));
        if (E.width() <= eps) return true;
    }
    return false;
}

// |zeta*_n(s)| enclosure with width <= 2^-prec.
Interval alt_tail_abs(unsigned long n, const Rational& s, unsigned prec) {
    const Rational eps = pow2(-static_cast<long>(prec));
    const bool integral = s.is_integer();
    const unsigned long s_int = integral ? mpz_get_ui(s.num().get_mpz_t()) : 0;
    const unsigned long q = mpz_get_ui(s.num().get_mpz_t());
    const unsigned long p = mpz_get_ui(s.den().get_mpz_t());

    // Trivial a-priori bracket [a(n)-a(n+1), a(n)], refined below.
    Interval E = [&] {
        if (integral) {
            Rational a0 = term_exact(n, s_int), a1 = term_exact(n + 1, s_int);
            return Interval(a0 - a1, a0);
        }
        Interval a0 = term_root(n, q, p, 64), a1 = term_root(n + 1, q, p, 64);
        Rational lo = a0.lo() - a1.hi();
        if (lo < Rational(0)) lo = Rational(0);
        return Interval(lo, a0.hi());
    }();

    for (size_t levels = 64;; levels *= 2) {
        std::vector<Interval> terms;
        terms.reserve(levels + 2);
        // Deterministic per-round precision so reruns retrace the same chain.
        const unsigned term_prec = static_cast<unsigned>(2 * levels + 64);
        for (unsigned long i = 0; i <= levels + 1; ++i) {
            terms.push_back(integral ? Interval(term_exact(n + i, s_int))
                                     : term_root(n + i, q, p, term_prec));
        }
        if (difference_pass(terms, eps, E)) return E;
        if (levels > (1u << 20))
            throw std::runtime_error("alternating tail: precision cap exceeded");
    }
}

Interval alt_tail_signed(unsigned long n, const Rational& s, unsigned prec) {
    Interval mag = alt_tail_abs(n, s, prec);
    return (n % 2 == 1) ? mag : -mag;
}

unsigned ceil_log2(unsigned long v) {
    unsigned b = 0;
    while ((1ul << b) < v) ++b;
    return b;
}

}  // namespace

Interval alt_tail_enclosure(const TailQuery& q) {
    if (q.kind != SeriesKind::alternating)
        throw std::domain_error("alt_tail_enclosure requires an alternating query");
    if (q.s <= Rational(0))
        throw std::domain_error("alternating tail requires s > 0");
    if (q.n < 1) throw std::domain_error("start index must be >= 1");
    return alt_tail_signed(q.n, q.s, q.prec);
}

Interval riemann_tail_enclosure(const TailQuery& q) {
    if (q.kind != SeriesKind::riemann)
        throw std::domain_error("riemann_tail_enclosure requires a riemann query");
    if (!q.s.is_integer() || q.s <= Rational(1))
        throw std::domain_error("riemann tail requires integer s >= 2");
    if (q.n < 1) throw std::domain_error("start index must be >= 1");

    // Splitting off the even-indexed terms gives
    //   zeta_n(s) = zeta*_n(s) + 2^(1-s) zeta_ceil(n/2)(s),
    // which unrolls to a positive combination of alternating tails and ends at
    //   zeta_1(s) = zeta*_1(s) / (1 - 2^(1-s)).
    std::vector<unsigned long> starts;
    for (unsigned long m = q.n; m > 1; m = (m + 1) / 2) starts.push_back(m);

    const long s_int = mpz_get_si(q.s.num().get_mpz_t());
    const Rational half_pow = pow2(1 - s_int);            // 2^(1-s) <= 1/2
    const Rational euler = (Rational(1) - half_pow).inverse();  // <= 2

    for (unsigned comp_prec = q.prec + ceil_log2(starts.size() + 2) + 2;; comp_prec += 8) {
        Interval acc{Rational(0)};
        Rational coef(1);
        for (unsigned long m : starts) {
            acc = acc + coef * alt_tail_signed(m, q.s, comp_prec);
            coef *= half_pow;
        }
        acc = acc + (coef * euler) * alt_tail_signed(1, q.s, comp_prec);
        if (acc.width() <= pow2(-static_cast<long>(q.prec))) return acc;
    }
}

Interval zeta_from_alternating(unsigned s, unsigned prec) {
    if (s < 2) throw std::domain_error("zeta_from_alternating requires s >= 2");
    const Rational euler = (Rational(1) - pow2(1 - static_cast<long>(s))).inverse();
    return euler * alt_tail_signed(1, Rational(static_cast<long>(s)), prec + 1);
}

FloorResult floor_reciprocal(const Interval& x) {
    if (x.sign() == 0)
        throw std::domain_error("floor_reciprocal: interval contains zero");
    Interval rec = x.invert();
    FloorResult r;
    r.reciprocal = rec;
    Int flo = rec.lo().floor();
    Int fhi = rec.hi().floor();
    if (flo == fhi) r.value = flo;
    return r;
}

FloorResult floor_reciprocal_tail(SeriesKind kind, const Rational& s, unsigned long n,
                                  unsigned max_prec, unsigned start_prec) {
    FloorResult last;
    for (unsigned prec = start_prec;;) {
        TailQuery q{kind, s, n, prec};
        Interval enc =
            kind == SeriesKind::alternating ? alt_tail_enclosure(q) : riemann_tail_enclosure(q);
        if (enc.sign() != 0) {
            last = floor_reciprocal(enc);
            last.bits_used = prec;
            if (last.determinate()) return last;
        } else {
            last = FloorResult{};
            last.bits_used = prec;
        }
        if (prec >= max_prec) return last;  // indeterminate at cap
        prec = prec * 2 > max_prec ? max_prec : prec * 2;
    }
}

}  // namespace ztk
