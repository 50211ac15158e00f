#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ztk/lemmas.hpp"

using namespace ztk;

TEST_CASE("bound function table") {
    CHECK(bound_functions(2).f == Polynomial{-2, 4, -8});
    CHECK(bound_functions(2).g == Polynomial{5, -12, 8});
    CHECK(bound_functions(1).f_leading_sign() == -1);
    CHECK(bound_functions(1).g_leading_sign() == 1);
    CHECK(bound_functions(3).k_even == 11);
    CHECK(bound_functions(3).k_odd == 4);
    CHECK(bound_functions(4).k_even == 5);
    CHECK(bound_functions(4).k_odd == 6);
    CHECK_THROWS(bound_functions(5));
}

TEST_CASE("all six lemmas certify with stated thresholds") {
    const long stated[4][2] = {{1, 1}, {1, 1}, {11, 4}, {5, 6}};
    for (unsigned s = 1; s <= 4; ++s) {
        for (Parity parity : {Parity::even, Parity::odd}) {
            LemmaReport rep = verify_lemma(s, parity);
            CHECK(rep.matches_expected);
            CHECK(rep.threshold <= stated[s - 1][parity == Parity::even ? 0 : 1]);
            CHECK(rep.left.matches_expected);
            CHECK(rep.right.matches_expected);
            for (const auto& cert : rep.left.certificates) CHECK(verify_certificate(cert));
            for (const auto& cert : rep.right.certificates) CHECK(verify_certificate(cert));
        }
    }
}

TEST_CASE("reduced forms match the expected displays") {
    LemmaSideReport r = verify_lemma_side(3, Parity::even, Side::left);
    CHECK(r.parts.difference.num() == Polynomial{22, 99, -27, -922, -972, 96});
    CHECK(r.parts.difference.den() ==
          Polynomial{0, 0, 0, -176, -792, 216, 6800, 16416, 27456, 48128, 64512, 49152, 16384});
    CHECK(r.min_threshold == 11);

    LemmaSideReport s2l = verify_lemma_side(2, Parity::even, Side::left);
    CHECK(s2l.parts.delta_reduced == Polynomial{-5, 8, 16});
    CHECK(s2l.parts.common_factor == Polynomial{1, 4});

    // both constant-12 reductions
    CHECK(verify_lemma_side(2, Parity::even, Side::right).parts.delta_reduced == Polynomial{12});
    CHECK(verify_lemma_side(2, Parity::odd, Side::left).parts.delta_reduced == Polynomial{12});

    LemmaSideReport s4or = verify_lemma_side(4, Parity::odd, Side::right);
    CHECK(s4or.parts.delta_raw == Polynomial{-96, 1584, -10480, 35840, -65600, 52480});
    CHECK(s4or.parts.common_factor == Polynomial{-1, 4});
}

TEST_CASE("telescoping difference is positive beyond its threshold") {
    for (unsigned s = 1; s <= 4; ++s) {
        for (Parity parity : {Parity::even, Parity::odd}) {
            for (Side side : {Side::left, Side::right}) {
                LemmaSideReport rep = verify_lemma_side(s, parity, side);
                for (long k = rep.min_threshold; k < rep.min_threshold + 20; ++k)
                    CHECK(rep.parts.difference.eval(Rational(Int(k))).sign() > 0);
            }
        }
    }
}

TEST_CASE("difference matches the raw fraction difference at sample points") {
    for (unsigned s = 1; s <= 4; ++s) {
        for (Parity parity : {Parity::even, Parity::odd}) {
            const auto& bf = bound_functions(s);
            const Polynomial& h = parity == Parity::even ? bf.f : bf.g;
            for (Side side : {Side::left, Side::right}) {
                TelescopingParts parts = telescoping_parts(h, s, parity, side);
                for (long k = 20; k <= 24; ++k) {
                    Rational x{Int(k)};
                    Rational center = parts.center_num.eval(x) / parts.center_den.eval(x);
                    Rational bound = parts.bound_num.eval(x) / parts.bound_den.eval(x);
                    Rational expect = side == Side::right ? bound - center : center - bound;
                    CHECK(parts.difference.eval(x) == expect);
                    CHECK(parts.delta_raw == parts.common_factor * parts.delta_reduced);
                }
            }
        }
    }
}

TEST_CASE("theorem bounds sandwich the tail") {
    for (unsigned s = 1; s <= 4; ++s) {
        const auto& bf = bound_functions(s);
        for (unsigned long n = 1; n <= 60; ++n) {
            bool in_range = n % 2 == 0 ? n >= 2 * static_cast<unsigned long>(bf.k_even)
                                       : n + 1 >= 2 * static_cast<unsigned long>(bf.k_odd);
            if (!in_range) {
                CHECK_THROWS(theorem_bounds(s, n));
                continue;
            }
            Interval bounds = theorem_bounds(s, n);
            Interval tail =
                alt_tail_enclosure({SeriesKind::alternating, Rational(static_cast<long>(s)), n, 128});
            CHECK(bounds.interior_contains(tail));
        }
    }
}

TEST_CASE("sandwich endpoints are reciprocals of consecutive integers apart") {
    // the open interval is (1/(h+1), 1/h) in absolute value
    Interval b = theorem_bounds(2, 10);
    CHECK((b.lo().inverse() - b.hi().inverse()).abs() == Rational(1));
}

TEST_CASE("verify_theorem rows") {
    auto rows = verify_theorem(2, 1, 30);
    CHECK(rows.size() == 30);
    for (const auto& row : rows) {
        CHECK(row.match);
        CHECK(row.in_range);
        REQUIRE(row.containment_ok.has_value());
        CHECK(*row.containment_ok);
    }
    auto t3 = verify_theorem(3, 5, 8);
    for (const auto& row : t3) {
        CHECK(row.match == row.in_range);  // 5, 6, 8 are below threshold and mismatch
        if (!row.in_range) CHECK(!row.containment_ok.has_value());
    }
}

TEST_CASE("verify_formula dispatch") {
    auto rows = verify_formula(FormulaId::lin_s2, 1, 20);
    for (const auto& row : rows) CHECK(row.match);
    auto fib_rows = verify_formula(FormulaId::kuha_gen, 2, 10, FibParams{2, 2, 0});
    for (const auto& row : fib_rows) CHECK(row.match);
    auto ks = verify_formula(FormulaId::kimsong_frac, 1, 10, {}, KimSongParams{3, 1});
    for (const auto& row : ks) CHECK(row.match);
}

TEST_CASE("empirical thresholds") {
    CHECK(find_empirical_threshold(FormulaId::thm4, Parity::even, 100) <= 10);
    CHECK(find_empirical_threshold(FormulaId::thm4, Parity::odd, 101) <= 11);
    CHECK(find_empirical_threshold(FormulaId::thm3, Parity::even, 100) <= 22);
    CHECK(find_empirical_threshold(FormulaId::thm1, Parity::odd, 51) == 1);
}
