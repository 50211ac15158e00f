#include "ztk/lemmas.hpp"

#include <array>

namespace ztk {

Parity parity_of(unsigned long n) { return n % 2 == 0 ? Parity::even : Parity::odd; }
std::string parity_name(Parity p) { return p == Parity::even ? "even" : "odd"; }
std::string side_name(Side s) { return s == Side::left ? "left" : "right"; }

const BoundFunctionSet& bound_functions(unsigned s) {
    static const std::array<BoundFunctionSet, 4> table = {{
        {1, Polynomial{0, -4}, Polynomial{-3, 4}, 1, 1},
        {2, Polynomial{-2, 4, -8}, Polynomial{5, -12, 8}, 1, 1},
        {3, Polynomial{1, -9, 12, -16}, Polynomial{-12, 33, -36, 16}, 11, 4},
        {4, Polynomial{7, 12, -32, 32, -32}, Polynomial{12, -84, 128, -96, 32}, 5, 6},
    }};
    if (s < 1 || s > 4) throw std::domain_error("bound functions defined for s = 1..4");
    return table[s - 1];
}

namespace {

// Expected reductions for each (s, parity, side): the displayed forms the
// verifier reproduces, plus the threshold being certified against.
struct ExpectedSide {
    std::vector<long> bound_num, bound_den;  // unreduced 1/h(k) - 1/h(k+1)
    std::vector<long> diff_num, diff_den;    // reduced difference (s = 1 only)
    std::vector<long> simplified;
    bool simplified_is_raw;
    long threshold;
};

const ExpectedSide& expected_side(unsigned s, Parity parity, Side side) {
    // Indexed [s-1][parity][side] with parity even=0, side right=0.
    static const ExpectedSide table[4][2][2] = {
        {// s = 1
         {{{-4}, {0, 16, 16}, {1}, {0, 4, 12, 8}, {0, 8}, false, 1},
          {{-4}, {-3, 8, 16}, {3}, {0, -6, 4, 64, 64}, {3}, false, 1}},
         {{{4}, {-3, -8, 16}, {3}, {0, 6, 4, -64, 64}, {3}, false, 1},
          {{4}, {-4, 0, 16}, {1}, {0, -2, 0, 8}, {-4, 8}, false, 1}}},
        {// s = 2
         {{{-4, -16}, {12, 0, 16, 64, 64}, {}, {}, {12}, false, 1},
          {{-4, -16}, {5, -8, 0, 64, 64}, {}, {}, {-5, 8, 16}, false, 1}},
         {{{-4, 16}, {5, 8, 0, -64, 64}, {}, {}, {-5, -8, 16}, false, 1},
          {{-4, 16}, {12, 0, 16, -64, 64}, {}, {}, {12}, false, 1}}},
        {// s = 3
         {{{-13, -24, -48},
           {-12, 75, 117, 104, 240, 384, 256},
           {},
           {},
           {-12, 3, 423, 1602, 1452, 288},
           false,
           1},
          {{-13, -24, -48},
           {-22, 33, 93, 72, 240, 384, 256},
           {},
           {},
           {22, 99, -27, -922, -972, 96},
           false,
           11}},
         {{{13, -24, 48},
           {-12, -75, 117, -104, 240, -384, 256},
           {},
           {},
           {12, 3, -423, 1602, -1452, 288},
           false,
           4},
          {{13, -24, 48},
           {-22, -33, 93, -72, 240, -384, 256},
           {},
           {},
           {-22, 99, 27, -922, 972, 96},
           false,
           1}}},
        {// s = 4
         {{{-20, -96, -96, -128},
           {-91, -744, -1488, 64, 448, 1280, 2048, 2048, 1024},
           {},
           {},
           {-91, -1472, -9624, -32608, -58880, -45312, 3584, 2048},
           true,
           5},
          {{-20, -96, -96, -128},
           {-96, -816, -1648, 0, 384, 1280, 2048, 2048, 1024},
           {},
           {},
           {96, 1584, 10480, 35840, 65600, 52480},
           true,
           1}},
         {{{-20, 96, -96, 128},
           {-96, 816, -1648, 0, 384, -1280, 2048, -2048, 1024},
           {},
           {},
           {-96, 1584, -10480, 35840, -65600, 52480},
           true,
           2},
          {{-20, 96, -96, 128},
           {-91, 744, -1488, -64, 448, -1280, 2048, -2048, 1024},
           {},
           {},
           {91, -1472, 9624, -32608, 58880, -45312, -3584, 2048},
           true,
           6}}},
    };
    if (s < 1 || s > 4) throw std::domain_error("expected table covers s = 1..4");
    return table[s - 1][parity == Parity::even ? 0 : 1][side == Side::right ? 0 : 1];
}

Polynomial from_longs(const std::vector<long>& v) {
    std::vector<Rational> c;
    c.reserve(v.size());
    for (long x : v) c.emplace_back(x);
    return Polynomial(std::move(c));
}

// (2k)^s and its parity-dependent partner (2k+1)^s or (2k-1)^s.
void center_fraction(unsigned s, Parity parity, Polynomial& num, Polynomial& den) {
    Polynomial even_term = Polynomial{0, 2}.pow(s);
    Polynomial partner =
        (parity == Parity::even ? Polynomial{1, 2} : Polynomial{-1, 2}).pow(s);
    // even: -1/(2k)^s + 1/(2k+1)^s ; odd: 1/(2k-1)^s - 1/(2k)^s
    num = even_term - partner;
    den = even_term * partner;
}

}  // namespace

TelescopingParts telescoping_parts(const Polynomial& h, unsigned s, Parity parity, Side side) {
    TelescopingParts parts;
    const Polynomial hb = side == Side::right ? h : h + Polynomial{1};
    parts.bound_num = hb.shift1() - hb;
    parts.bound_den = hb * hb.shift1();
    center_fraction(s, parity, parts.center_num, parts.center_den);

    const RationalFunction bound(parts.bound_num, parts.bound_den);
    const RationalFunction center(parts.center_num, parts.center_den);
    if (side == Side::right) {
        parts.difference = bound - center;
        parts.delta_raw = parts.bound_num * parts.center_den - parts.center_num * parts.bound_den;
    } else {
        parts.difference = center - bound;
        parts.delta_raw = parts.center_num * parts.bound_den - parts.bound_num * parts.center_den;
    }
    parts.common_factor = Polynomial::gcd(parts.bound_num, parts.center_num);
    if (parts.common_factor.degree() < 1) parts.common_factor = Polynomial{1};
    parts.delta_reduced = parts.delta_raw.exact_div(parts.common_factor);
    return parts;
}

RationalFunction build_telescoping_difference(const Polynomial& h, unsigned s, Parity parity,
                                              Side side) {
    return telescoping_parts(h, s, parity, side).difference;
}

LemmaSideReport verify_lemma_side(unsigned s, Parity parity, Side side) {
    const BoundFunctionSet& bf = bound_functions(s);
    const Polynomial& h = parity == Parity::even ? bf.f : bf.g;
    LemmaSideReport rep;
    rep.s = s;
    rep.parity = parity;
    rep.side = side;
    rep.parts = telescoping_parts(h, s, parity, side);
    const ExpectedSide& exp = expected_side(s, parity, side);
    rep.expected_threshold = exp.threshold;
    rep.expected_simplified = from_longs(exp.simplified);

    // Sign conditions reducing the side to polynomial positivity: both raw
    // denominators, the canceled common numerator factor, and the simplified
    // polynomial itself must be positive from the threshold on.
    std::vector<Polynomial> conditions = {rep.parts.center_den, rep.parts.bound_den};
    if (rep.parts.common_factor.degree() >= 1) conditions.push_back(rep.parts.common_factor);
    conditions.push_back(rep.parts.delta_reduced);

    rep.min_threshold = 1;
    for (const auto& cond : conditions) {
        long t = find_min_threshold(cond);
        rep.min_threshold = std::max(rep.min_threshold, t);
        rep.certificates.push_back(prove_positive(cond, t));
    }

    const Polynomial& emitted = exp.simplified_is_raw ? rep.parts.delta_raw : rep.parts.delta_reduced;
    bool forms_ok = rep.parts.bound_num == from_longs(exp.bound_num) &&
                    rep.parts.bound_den == from_longs(exp.bound_den) &&
                    emitted == rep.expected_simplified;
    if (!exp.diff_num.empty())
        forms_ok = forms_ok && rep.parts.difference ==
                                   RationalFunction(from_longs(exp.diff_num), from_longs(exp.diff_den));
    rep.matches_expected = forms_ok && rep.min_threshold <= rep.expected_threshold;
    return rep;
}

LemmaReport verify_lemma(unsigned s, Parity parity) {
    LemmaReport rep;
    rep.s = s;
    rep.parity = parity;
    rep.left = verify_lemma_side(s, parity, Side::left);
    rep.right = verify_lemma_side(s, parity, Side::right);
    rep.threshold = std::max(rep.left.min_threshold, rep.right.min_threshold);
    const BoundFunctionSet& bf = bound_functions(s);
    const long stated = parity == Parity::even ? bf.k_even : bf.k_odd;
    rep.matches_expected =
        rep.left.matches_expected && rep.right.matches_expected && rep.threshold <= stated;
    return rep;
}

Interval theorem_bounds(unsigned s, unsigned long n) {
    const BoundFunctionSet& bf = bound_functions(s);
    Rational h;
    if (n % 2 == 0) {
        if (n < 2 * static_cast<unsigned long>(bf.k_even))
            throw std::domain_error("theorem_bounds: even n below 2*k_even");
        h = bf.f.eval(Rational(Int(n), Int(2)));
    } else {
        if (n + 1 < 2 * static_cast<unsigned long>(bf.k_odd))
            throw std::domain_error("theorem_bounds: odd n below 2*k_odd - 1");
        h = bf.g.eval(Rational(Int(n + 1), Int(2)));
    }
    const Rational a = (h + Rational(1)).inverse();
    const Rational b = h.inverse();
    return a <= b ? Interval(a, b) : Interval(b, a);
}

namespace {

FormulaResult theorem_formula(unsigned s, unsigned long n) {
    switch (s) {
        case 1: return eval_thm1(n);
        case 2: return eval_thm2(n);
        case 3: return eval_thm3(n);
        case 4: return eval_thm4(n);
        default: throw std::domain_error("theorem formulas cover s = 1..4");
    }
}

VerifyRow make_row(unsigned long n, const FormulaResult& f, const FloorResult& o) {
    VerifyRow row;
    row.n = n;
    row.parity = parity_of(n);
    row.in_range = f.in_validity_range;
    row.formula_value = f.value;
    row.oracle_value = o.value;
    row.bits_used = o.bits_used;
    row.match = o.determinate() && *o.value == f.value;
    return row;
}

}  // namespace

std::vector<VerifyRow> verify_theorem(unsigned s, unsigned long n_min, unsigned long n_max,
                                      unsigned max_prec) {
    if (n_min < 1) throw std::domain_error("verify_theorem requires n_min >= 1");
    const Rational sr(static_cast<long>(s));
    std::vector<VerifyRow> rows;
    for (unsigned long n = n_min; n <= n_max; ++n) {
        FormulaResult f = theorem_formula(s, n);
        FloorResult o = floor_reciprocal_tail(SeriesKind::alternating, sr, n, max_prec);
        VerifyRow row = make_row(n, f, o);
        if (row.in_range) {
            Interval enc = alt_tail_enclosure({SeriesKind::alternating, sr, n, 128});
            row.containment_ok = theorem_bounds(s, n).interior_contains(enc);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<VerifyRow> verify_formula(FormulaId id, unsigned long n_min, unsigned long n_max,
                                      const FibParams& fib_params,
                                      const KimSongParams& ks_params, unsigned max_prec) {
    std::vector<VerifyRow> rows;
    for (unsigned long n = n_min; n <= n_max; ++n) {
        FormulaResult f;
        FloorResult o;
        switch (id) {
            case FormulaId::thm1:
            case FormulaId::thm2:
            case FormulaId::thm3:
            case FormulaId::thm4: {
                const unsigned s = id == FormulaId::thm1   ? 1
                                   : id == FormulaId::thm2 ? 2
                                   : id == FormulaId::thm3 ? 3
                                                           : 4;
                f = theorem_formula(s, n);
                o = floor_reciprocal_tail(SeriesKind::alternating, Rational(static_cast<long>(s)),
                                          n, max_prec);
                break;
            }
            case FormulaId::lin_s2:
            case FormulaId::lin_s3: {
                const unsigned s = id == FormulaId::lin_s2 ? 2 : 3;
                f = eval_lin(s, n);
                o = floor_reciprocal_tail(SeriesKind::riemann, Rational(static_cast<long>(s)), n,
                                          max_prec);
                break;
            }
            case FormulaId::linli_s4:
                f = eval_linli_s4(n);
                o = floor_reciprocal_tail(SeriesKind::riemann, Rational(4), n, max_prec);
                break;
            case FormulaId::kimsong_frac:
                f = eval_kimsong(n, ks_params, max_prec);
                o = floor_reciprocal_tail(SeriesKind::alternating, ks_params.exponent(), n,
                                          max_prec);
                break;
            default:
                f = eval_fib_formula(id, n, fib_params);
                o = fib_formula_oracle(id, n, fib_params, max_prec);
                break;
        }
        rows.push_back(make_row(n, f, o));
    }
    return rows;
}

unsigned long find_empirical_threshold(FormulaId id, Parity parity, unsigned long n_cap,
                                       const FibParams& fib_params,
                                       const KimSongParams& ks_params) {
    unsigned long start = parity == Parity::even ? 2 : 1;
    switch (id) {
        case FormulaId::on_fib1:
        case FormulaId::on_fib2:
        case FormulaId::kuha_gen:
        case FormulaId::kuha_fib:
            start = std::max<unsigned long>(start, 2);  // tail oracle needs n >= 2
            break;
        default:
            break;
    }
    unsigned long threshold = start;
    bool found_any = false;
    for (unsigned long n = start; n <= n_cap; n += 2) {
        auto rows = verify_formula(id, n, n, fib_params, ks_params);
        found_any = true;
        if (!rows[0].match) threshold = n + 2;
    }
    if (!found_any || threshold > n_cap)
        throw std::runtime_error("find_empirical_threshold: no matching n below cap");
    return threshold;
}

}  // namespace ztk
