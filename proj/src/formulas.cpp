#include "ztk/formulas.hpp"

#include <array>
#include <utility>

namespace ztk {

namespace {

const std::array<std::pair<FormulaId, const char*>, 12> kNames = {{
    {FormulaId::thm1, "thm1"},
    {FormulaId::thm2, "thm2"},
    {FormulaId::thm3, "thm3"},
    {FormulaId::thm4, "thm4"},
    {FormulaId::lin_s2, "lin_s2"},
    {FormulaId::lin_s3, "lin_s3"},
    {FormulaId::linli_s4, "linli_s4"},
    {FormulaId::kimsong_frac, "kimsong_frac"},
    {FormulaId::on_fib1, "on_fib1"},
    {FormulaId::on_fib2, "on_fib2"},
    {FormulaId::kuha_gen, "kuha_gen"},
    {FormulaId::kuha_fib, "kuha_fib"},
}};

Int as_int(const Rational& r) {
    if (!r.is_integer())
        throw std::logic_error("formula value unexpectedly non-integral: " + r.str());
    return r.num();
}

void require_n(unsigned long n) {
    if (n < 1) throw std::domain_error("formula requires n >= 1");
}

}  // namespace

FormulaId formula_from_name(const std::string& name) {
    for (const auto& [id, s] : kNames)
        if (name == s) return id;
    throw std::domain_error("unknown formula id: " + name);
}

std::string formula_name(FormulaId id) {
    for (const auto& [fid, s] : kNames)
        if (fid == id) return s;
    throw std::logic_error("unnamed formula id");
}

void KimSongParams::validate() const {
    if (p < 2 || (q != 1 && q != 2)) throw std::domain_error("kim-song requires p >= 2, q in {1,2}");
    if (q == 2 && p % 2 == 0) throw std::domain_error("kim-song with q = 2 requires odd p");
    if (q >= p) throw std::domain_error("kim-song requires s = q/p < 1");
}

FormulaResult eval_thm1(unsigned long n) {
    require_n(n);
    Int m(static_cast<unsigned long>(n));
    return {n % 2 == 0 ? Int(-2 * m) : Int(2 * m - 1), true, ""};
}

FormulaResult eval_thm2(unsigned long n) {
    require_n(n);
    Int m(static_cast<unsigned long>(n));
    Int core = 2 * m * m - 2 * m + 1;
    return {n % 2 == 0 ? Int(-core - 1) : core, true, ""};
}

FormulaResult eval_thm3(unsigned long n) {
    require_n(n);
    Rational m{Int(n)};
    Rational core = Rational(2) * m.pow(3) - Rational(3) * m.pow(2) +
                    Rational(9, 2) * m - Rational(5, 2);
    FormulaResult r;
    if (n % 2 == 0) {
        r.value = as_int(-(core + Rational(3, 2)));
        r.in_validity_range = n >= 22;
        if (!r.in_validity_range) r.range_note = "below stated even threshold 22";
    } else {
        r.value = as_int(core);
        r.in_validity_range = n >= 7;
        if (!r.in_validity_range) r.range_note = "below stated odd threshold 7";
    }
    return r;
}

FormulaResult eval_thm4(unsigned long n) {
    require_n(n);
    Int m(static_cast<unsigned long>(n));
    Int core = 2 * m * m * m * m - 4 * m * m * m + 8 * m * m - 6 * m - 8;
    FormulaResult r;
    if (n % 2 == 0) {
        r.value = -core - 1;
        r.in_validity_range = n >= 10;
        if (!r.in_validity_range) r.range_note = "below stated even threshold 10";
    } else {
        r.value = core;
        r.in_validity_range = n >= 11;
        if (!r.in_validity_range) r.range_note = "below stated odd threshold 11";
    }
    return r;
}

FormulaResult eval_lin(unsigned s, unsigned long n) {
    require_n(n);
    Int m(static_cast<unsigned long>(n));
    if (s == 2) return {Int(m - 1), true, ""};
    if (s == 3) return {Int(2 * m * (m - 1)), true, ""};
    throw std::domain_error("lin formula defined for s = 2, 3 only");
}

FormulaResult eval_linli_s4(unsigned long n) {
    require_n(n);
    if (n % 2 == 0) {
        Int m(n / 2);
        Int inner;
        mpz_fdiv_q_ui(inner.get_mpz_t(), Int(3 * (5 * m - 1)).get_mpz_t(), 2);
        return {Int(24 * m * m * m - 18 * m * m + inner), true, ""};
    }
    // Odd case: the inner term is the nearest integer to 3(58m-17)/4, i.e.
    // floor((174m-49)/4); plain floor of 3(58m-17)/4 is one short when m is
    // odd. Valid from n = 3 on (n = 1 needs 30 in place of 31).
    Int m((n + 1) / 2);
    Int inner;
    mpz_fdiv_q_ui(inner.get_mpz_t(), Int(174 * m - 49).get_mpz_t(), 4);
    FormulaResult r;
    r.value = Int(24 * m * m * m - 54 * m * m + inner);
    r.in_validity_range = n >= 3;
    if (!r.in_validity_range) r.range_note = "n=1 exceptional for the odd-case formula";
    return r;
}

FormulaResult eval_kimsong(unsigned long n, const KimSongParams& params, unsigned max_prec) {
    require_n(n);
    params.validate();
    // 2 * (n - 1/2)^(q/p), floored after applying the sign (-1)^(n+1).
    Rational base = Rational(2 * static_cast<long>(n) - 1, 2).pow(static_cast<long>(params.q));
    for (unsigned prec = 64;;) {
        Interval root = nth_root_enclosure(base, static_cast<unsigned>(params.p), prec);
        Interval v = Rational(2) * root;
        if (n % 2 == 0) v = -v;
        Int flo = v.lo().floor(), fhi = v.hi().floor();
        if (flo == fhi) {
            FormulaResult r;
            r.value = flo;
            if (params.q == 1 && params.p <= 4) {
                r.in_validity_range = true;
            } else {
                r.in_validity_range = false;
                r.range_note = "valid for n >= N, threshold N unknown";
            }
            return r;
        }
        if (prec >= max_prec)
            throw std::runtime_error("kim-song formula: floor indeterminate at precision cap");
        prec = prec * 2 > max_prec ? max_prec : prec * 2;
    }
}

FormulaResult eval_fib_formula(FormulaId id, unsigned long n, const FibParams& params) {
    require_n(n);
    FormulaResult r;
    switch (id) {
        case FormulaId::on_fib1:
            if (n == 1) {
                // The odd branch at n=1 references F_{-1}; computed with the
                // standard extension F_{-1}=1 but reported as unverified.
                r.value = Int(1) - 1;
                r.in_validity_range = false;
                r.range_note = "n=1 references F_{-1}; unverified against the oracle";
            } else {
                r.value = n % 2 == 0 ? fib(n - 2) : Int(fib(n - 2) - 1);
            }
            return r;
        case FormulaId::on_fib2:
            r.value = fib(n - 1) * fib(n);
            if (n % 2 == 0) r.value -= 1;
            return r;
        case FormulaId::kuha_gen: {
            params.validate();
            Int v = gen_fib(n, params) + gen_fib(n - 1, params);
            r.value = (n % 2 == 0 ? v : -v) - 1;
            return r;
        }
        case FormulaId::kuha_fib: {
            Int v = fib(n + 1);
            r.value = (n % 2 == 0 ? v : -v) - 1;
            return r;
        }
        default:
            throw std::domain_error("not a fibonacci formula id");
    }
}

FloorResult fib_formula_oracle(FormulaId id, unsigned long n, const FibParams& params,
                               unsigned max_prec) {
    switch (id) {
        case FormulaId::on_fib1:
            return fib_tail_floor(FibSeries::reciprocal, n, params, max_prec);
        case FormulaId::on_fib2:
            return fib_tail_floor(FibSeries::reciprocal_squared, n, params, max_prec);
        case FormulaId::kuha_gen:
            return fib_tail_floor(FibSeries::alternating_gen, n, params, max_prec);
        case FormulaId::kuha_fib:
            return fib_tail_floor(FibSeries::alternating_gen, n, FibParams{1, 1, 0}, max_prec);
        default:
            throw std::domain_error("not a fibonacci formula id");
    }
}

}  // namespace ztk
