#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ztk/formulas.hpp"

using namespace ztk;

TEST_CASE("names round trip") {
    for (auto id : {FormulaId::thm1, FormulaId::thm2, FormulaId::thm3, FormulaId::thm4,
                    FormulaId::lin_s2, FormulaId::lin_s3, FormulaId::linli_s4,
                    FormulaId::kimsong_frac, FormulaId::on_fib1, FormulaId::on_fib2,
                    FormulaId::kuha_gen, FormulaId::kuha_fib})
        CHECK(formula_from_name(formula_name(id)) == id);
    CHECK_THROWS(formula_from_name("nope"));
}

TEST_CASE("first-power tail formula") {
    CHECK(eval_thm1(1).value == 1);
    CHECK(eval_thm1(2).value == -4);
    CHECK(eval_thm1(3).value == 5);
    CHECK(eval_thm1(1000).value == -2000);
    CHECK(eval_thm1(999).value == 1997);
    CHECK(eval_thm1(5).in_validity_range);
}

TEST_CASE("second-power tail formula") {
    CHECK(eval_thm2(1).value == 1);
    CHECK(eval_thm2(2).value == -6);
    CHECK(eval_thm2(3).value == 13);
    CHECK(eval_thm2(10).value == -182);
}

TEST_CASE("third-power tail formula") {
    CHECK(eval_thm3(7).value == 568);
    CHECK(eval_thm3(22).value == -19942);
    CHECK(!eval_thm3(6).in_validity_range);
    CHECK(!eval_thm3(20).in_validity_range);
    CHECK(eval_thm3(21).in_validity_range);
    CHECK(eval_thm3(23).in_validity_range);
}

TEST_CASE("fourth-power tail formula") {
    CHECK(eval_thm4(10).value == -16733);
    CHECK(eval_thm4(11).value == 24852);
    CHECK(!eval_thm4(9).in_validity_range);
    CHECK(!eval_thm4(8).in_validity_range);
    CHECK(eval_thm4(12).in_validity_range);
}

TEST_CASE("plain zeta tail formulas") {
    CHECK(eval_lin(2, 1).value == 0);
    CHECK(eval_lin(2, 7).value == 6);
    CHECK(eval_lin(3, 1).value == 0);
    CHECK(eval_lin(3, 5).value == 40);
    CHECK_THROWS(eval_lin(4, 1));
    CHECK(eval_linli_s4(1).value == 1);
    CHECK(!eval_linli_s4(1).in_validity_range);
    CHECK(eval_linli_s4(2).value == 12);
    CHECK(eval_linli_s4(3).value == 50);
    CHECK(eval_linli_s4(4).value == 133);
    CHECK(eval_linli_s4(5).value == 280);
}

TEST_CASE("fractional exponent formula") {
    KimSongParams half{2, 1};
    CHECK(eval_kimsong(1, half).value == 1);
    CHECK(eval_kimsong(2, half).value == -3);
    CHECK(eval_kimsong(1, half).in_validity_range);
    KimSongParams third{3, 1};
    CHECK(eval_kimsong(1, third).value == 1);
    KimSongParams two_fifths{5, 2};
    CHECK(!eval_kimsong(3, two_fifths).in_validity_range);
    CHECK_THROWS(KimSongParams{2, 2}.validate());  // q=2 needs odd p
    CHECK_THROWS(KimSongParams{3, 3}.validate());  // s < 1
    CHECK_THROWS(KimSongParams{1, 1}.validate());
}

TEST_CASE("fibonacci formulas") {
    FibParams fp{1, 1, 0};
    CHECK(eval_fib_formula(FormulaId::on_fib1, 4, fp).value == 1);
    CHECK(eval_fib_formula(FormulaId::on_fib1, 5, fp).value == 1);
    CHECK(!eval_fib_formula(FormulaId::on_fib1, 1, fp).in_validity_range);
    CHECK(eval_fib_formula(FormulaId::on_fib2, 3, fp).value == 2);
    CHECK(eval_fib_formula(FormulaId::on_fib2, 4, fp).value == 5);
    CHECK(eval_fib_formula(FormulaId::kuha_fib, 2, fp).value == 1);
    CHECK(eval_fib_formula(FormulaId::kuha_fib, 3, fp).value == -4);
    CHECK(eval_fib_formula(FormulaId::kuha_gen, 4, FibParams{2, 1, 0}).value == 16);
}

TEST_CASE("formulas agree with oracles on a small sweep") {
    FibParams fp{1, 1, 0};
    for (unsigned long n = 2; n <= 12; ++n) {
        for (auto id : {FormulaId::on_fib1, FormulaId::on_fib2, FormulaId::kuha_fib}) {
            FloorResult o = fib_formula_oracle(id, n, fp);
            REQUIRE(o.determinate());
            CHECK(eval_fib_formula(id, n, fp).value == *o.value);
        }
    }
}
