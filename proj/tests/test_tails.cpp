#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ztk/tails.hpp"

using namespace ztk;

namespace {

// Reference decimal expansions, truncated (not rounded); the true value lies
// in [parsed, parsed + 10^-digits).
const char* kLn2 = "0.6931471805599453094172321214581765680755001343602552541206800094933936";
const char* kZeta2 = "1.644934066848226436472415166646025189218949901206798437735558229370007";
const char* kZeta3 = "1.202056903159594285399738161511449990764986292340498881792271555341838";
const char* kZeta4 = "1.082323233711138191516003696541167902774750951918726907682976215444121";

Interval bracket_of(const std::string& decimal_text) {
    auto dot = decimal_text.find('.');
    REQUIRE(dot != std::string::npos);
    std::string digits = decimal_text.substr(0, dot) + decimal_text.substr(dot + 1);
    unsigned frac = static_cast<unsigned>(decimal_text.size() - dot - 1);
    Int den = 1;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
    Rational lo{Int(digits, 10), den};
    return Interval(lo, lo + Rational(Int(1), den));
}

bool overlaps(const Interval& a, const Interval& b) {
    return a.lo() <= b.hi() && b.lo() <= a.hi();
}

}  // namespace

TEST_CASE("alternating tail encloses known constants") {
    Interval ln2 = alt_tail_enclosure({SeriesKind::alternating, Rational(1), 1, 64});
    CHECK(ln2.width() <= pow2(-64));
    CHECK(overlaps(ln2, bracket_of(kLn2)));

    CHECK(overlaps(zeta_from_alternating(2, 64), bracket_of(kZeta2)));
    CHECK(overlaps(zeta_from_alternating(3, 64), bracket_of(kZeta3)));
    CHECK(overlaps(zeta_from_alternating(4, 64), bracket_of(kZeta4)));
}

TEST_CASE("riemann tail encloses known constants") {
    Interval z2 = riemann_tail_enclosure({SeriesKind::riemann, Rational(2), 1, 64});
    CHECK(z2.width() <= pow2(-64));
    CHECK(overlaps(z2, bracket_of(kZeta2)));
    Interval z4 = riemann_tail_enclosure({SeriesKind::riemann, Rational(4), 1, 80});
    CHECK(z4.width() <= pow2(-80));
    CHECK(overlaps(z4, bracket_of(kZeta4)));
}

TEST_CASE("enclosures nest as precision grows") {
    for (long s : {1, 2, 3}) {
        for (unsigned long n : {1ul, 2ul, 7ul, 100ul}) {
            Interval a = alt_tail_enclosure({SeriesKind::alternating, Rational(s), n, 64});
            Interval b = alt_tail_enclosure({SeriesKind::alternating, Rational(s), n, 128});
            Interval c = alt_tail_enclosure({SeriesKind::alternating, Rational(s), n, 256});
            CHECK(a.contains(b));
            CHECK(b.contains(c));
        }
    }
    Interval a = alt_tail_enclosure({SeriesKind::alternating, Rational(1, 2), 3, 64});
    Interval b = alt_tail_enclosure({SeriesKind::alternating, Rational(1, 2), 3, 128});
    CHECK(a.contains(b));
}

TEST_CASE("alternating tail sign follows the first term") {
    for (unsigned long n = 1; n <= 8; ++n) {
        Interval t = alt_tail_enclosure({SeriesKind::alternating, Rational(1), n, 64});
        CHECK(t.sign() == (n % 2 == 1 ? 1 : -1));
    }
}

TEST_CASE("preconditions") {
    CHECK_THROWS(alt_tail_enclosure({SeriesKind::alternating, Rational(0), 1, 64}));
    CHECK_THROWS(alt_tail_enclosure({SeriesKind::alternating, Rational(-1), 1, 64}));
    CHECK_THROWS(alt_tail_enclosure({SeriesKind::riemann, Rational(1), 1, 64}));
    CHECK_THROWS(alt_tail_enclosure({SeriesKind::alternating, Rational(1), 0, 64}));
    CHECK_THROWS(riemann_tail_enclosure({SeriesKind::riemann, Rational(1), 1, 64}));
    CHECK_THROWS(riemann_tail_enclosure({SeriesKind::riemann, Rational(1, 2), 1, 64}));
}

TEST_CASE("floor of reciprocal intervals") {
    FloorResult r = floor_reciprocal(Interval(Rational(2, 5), Rational(3, 7)));
    REQUIRE(r.determinate());
    CHECK(*r.value == 2);
    // endpoints floor to different integers: indeterminate
    CHECK(!floor_reciprocal(Interval(Rational(1, 3), Rational(1, 2))).determinate());
    CHECK_THROWS(floor_reciprocal(Interval(Rational(-1), Rational(1))));
    FloorResult neg = floor_reciprocal(Interval(Rational(-2, 5), Rational(-1, 3)));
    REQUIRE(neg.determinate());
    CHECK(*neg.value == -3);
}

TEST_CASE("floor oracle spot values") {
    auto fl = [](SeriesKind k, const Rational& s, unsigned long n) {
        FloorResult r = floor_reciprocal_tail(k, s, n);
        REQUIRE(r.determinate());
        return *r.value;
    };
    CHECK(fl(SeriesKind::alternating, Rational(1), 1) == 1);    // 1/ln 2
    CHECK(fl(SeriesKind::alternating, Rational(1), 2) == -4);   // 1/(ln 2 - 1)
    CHECK(fl(SeriesKind::alternating, Rational(2), 2) == -6);   // 1/(pi^2/12 - 1)
    CHECK(fl(SeriesKind::alternating, Rational(1, 2), 1) == 1);
    CHECK(fl(SeriesKind::riemann, Rational(3), 2) == 4);
    CHECK(fl(SeriesKind::riemann, Rational(2), 1000000) == 999999);
}

TEST_CASE("alternating tail enclosure matches a hand bound") {
    // zeta*_2(2) = pi^2/12 - 1 is in (-1/4 + 1/9 - ... , 0): within (-1/4, 0)
    Interval t = alt_tail_enclosure({SeriesKind::alternating, Rational(2), 2, 64});
    CHECK(Interval(Rational(-1, 4), Rational(0)).interior_contains(t));
}

TEST_CASE("floor oracle is precision independent") {
    for (unsigned long n : {1ul, 2ul, 3ul, 10ul, 37ul}) {
        FloorResult a = floor_reciprocal_tail(SeriesKind::alternating, Rational(1), n, 4096, 64);
        FloorResult b = floor_reciprocal_tail(SeriesKind::alternating, Rational(1), n, 4096, 128);
        REQUIRE(a.determinate());
        REQUIRE(b.determinate());
        CHECK(*a.value == *b.value);
    }
}
