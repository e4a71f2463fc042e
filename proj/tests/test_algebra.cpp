#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plethygen/errors.hpp"
#include "plethygen/qlaurent.hpp"
#include "plethygen/rational.hpp"
#include "plethygen/zpoly.hpp"

#include <random>

using namespace plethygen;

namespace {

std::mt19937 rng(20250823);

QLaurent random_qlaurent() {
    std::uniform_int_distribution<int> nterms(0, 5), exp(-6, 6), coeff(-9, 9);
    QLaurent f;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) f.add_term(exp(rng), coeff(rng));
    return f;
}

FactoredRational random_rational() {
    std::uniform_int_distribution<int> nterms(1, 3), zexp(0, 4), qexp(-3, 3),
        coeff(-5, 5), b(1, 3), a(-2, 2), nfac(0, 3);
    ZQPoly num;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i)
        num.add_term(zexp(rng), QLaurent::monomial(qexp(rng), coeff(rng)));
    std::vector<DenFactor> factors;
    int k = nfac(rng);
    for (int i = 0; i < k; ++i) factors.push_back({a(rng), b(rng), 1});
    return FactoredRational(std::move(num), std::move(factors));
}

}  // namespace

TEST_CASE("q-integers") {
    CHECK(QLaurent::q_integer(1) == QLaurent::one());
    QLaurent q3;
    q3.add_term(2, 1);
    q3.add_term(0, 1);
    q3.add_term(-2, 1);
    CHECK(QLaurent::q_integer(3) == q3);
    CHECK(QLaurent::q_integer(0).is_zero());
    CHECK(QLaurent::q_integer(-2).is_zero());
    for (int n = 1; n <= 10; ++n) {
        CHECK(QLaurent::q_integer(n).is_symmetric());
        CHECK(QLaurent::q_integer(n).at_one() == n);
    }
}

TEST_CASE("Laurent arithmetic is a commutative ring") {
    for (int trial = 0; trial < 200; ++trial) {
        QLaurent a = random_qlaurent(), b = random_qlaurent(), c = random_qlaurent();
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a + (-a) == QLaurent::zero());
        CHECK((a * b).inverted() == a.inverted() * b.inverted());
        CHECK(a.inverted().inverted() == a);
        CHECK(a.shifted(3).shifted(-3) == a);
    }
}

TEST_CASE("positive part drops exactly the negative exponents") {
    QLaurent f;
    f.add_term(-2, 1);
    f.add_term(0, 1);
    f.add_term(3, 1);
    QLaurent want;
    want.add_term(0, 1);
    want.add_term(3, 1);
    CHECK(f.positive_part() == want);
    // Telescoping: the positive part of (q - 1/q)[k]_q is q^k.
    QLaurent qminus = QLaurent::monomial(1, 1) - QLaurent::monomial(-1, 1);
    for (int k = 1; k <= 12; ++k)
        CHECK((qminus * QLaurent::q_integer(k)).positive_part() ==
              QLaurent::monomial(k, 1));
}

TEST_CASE("ZPoly division and gcd") {
    ZPoly a = ZPoly::one_minus_power(6);
    ZPoly b = ZPoly::one_minus_power(2);
    auto q = a.divided_exactly_by(b);
    REQUIRE(q.has_value());
    CHECK(*q * b == a);
    CHECK(!b.divided_exactly_by(a).has_value());
    // gcd is normalized to a positive leading coefficient: z^2 - 1.
    ZPoly g = zpoly_gcd(ZPoly::one_minus_power(4), ZPoly::one_minus_power(6));
    CHECK(g == -ZPoly::one_minus_power(2));
    CHECK(ZPoly::ones(4) == *ZPoly::one_minus_power(4).divided_exactly_by(
                                ZPoly::one_minus_power(1)));
}

TEST_CASE("palindromicity ignores a leading power of z") {
    CHECK(ZPoly::ones(5).is_palindromic());
    ZPoly p = ZPoly::monomial(2, 1) + ZPoly::monomial(3, 2) + ZPoly::monomial(4, 1);
    CHECK(p.is_palindromic());
    ZPoly np = ZPoly::monomial(0, 1) + ZPoly::monomial(1, 2) + ZPoly::monomial(2, 3);
    CHECK(!np.is_palindromic());
    CHECK(ZPoly::zero().is_palindromic());
}

TEST_CASE("ZQPoly reversal") {
    ZQPoly p = ZQPoly::term(0, QLaurent::one()) +
               ZQPoly::term(3, QLaurent::monomial(4, 1));
    ZQPoly r = p.reversed();
    // reversing 1 + q^4 z^3 gives q^{-4} + z^3.
    ZQPoly want = ZQPoly::term(0, QLaurent::monomial(-4, 1)) +
                  ZQPoly::term(3, QLaurent::one());
    CHECK(r == want);
    CHECK(p.reversed().reversed() == p);
}

TEST_CASE("series expansion of a geometric factor") {
    // 1 / (1 - q^2 z) = sum_h q^{2h} z^h.
    FactoredRational r(ZQPoly::one(), {{2, 1, 1}});
    QSeries s = series_expand(r, 6);
    for (std::size_t h = 0; h <= 6; ++h)
        CHECK(s[h] == QLaurent::monomial(2 * static_cast<std::int64_t>(h), 1));
}

TEST_CASE("series expansion respects products") {
    for (int trial = 0; trial < 50; ++trial) {
        FactoredRational a = random_rational(), b = random_rational();
        QSeries sa = series_expand(a, 8), sb = series_expand(b, 8);
        CHECK(series_expand(rational_mul(a, b), 8) == series_mul(sa, sb, 8));
    }
}

TEST_CASE("rational_add and rational_equal agree with series") {
    for (int trial = 0; trial < 50; ++trial) {
        FactoredRational a = random_rational(), b = random_rational();
        FactoredRational s = rational_add(a, b);
        QSeries ss = series_expand(s, 8);
        QSeries want(8);
        QSeries sa = series_expand(a, 8), sb = series_expand(b, 8);
        for (std::size_t h = 0; h <= 8; ++h) want[h] = sa[h] + sb[h];
        CHECK(ss == want);
        CHECK(rational_equal(s, rational_add(b, a)));
        CHECK(rational_equal(a, a));
    }
    // Same value over syntactically different denominators.
    // 1/(1-z) == (1+z)/(1-z^2).
    FactoredRational lhs(ZQPoly::one(), {{0, 1, 1}});
    FactoredRational rhs(ZQPoly::one() + ZQPoly::term(1, QLaurent::one()),
                         {{0, 2, 1}});
    CHECK(rational_equal(lhs, rhs));
    CHECK(!rational_equal(lhs, FactoredRational(ZQPoly::one(), {{0, 2, 1}})));
}

TEST_CASE("invert_variables normal form") {
    for (int trial = 0; trial < 50; ++trial) {
        FactoredRational r = random_rational();
        if (r.is_zero()) continue;
        InvertedRational inv = invert_variables(r);
        CHECK(inv.qshift == 0);
        // Inverting twice recovers the original as a rational function.
        InvertedRational twice = invert_variables(inv.rational);
        CHECK(shifted_rational_equal(twice.sign * inv.sign, -inv.zshift + twice.zshift,
                                     twice.rational, 1, 0, r));
    }
}

TEST_CASE("specialize_q1 reduces to lowest terms") {
    // (1 - q^2 z) / ((1-z)(1-z^2)) at q=1 is 1/(1-z^2).
    FactoredRational r(ZQPoly::one() - ZQPoly::term(1, QLaurent::monomial(2, 1)),
                       {{0, 1, 1}, {0, 2, 1}});
    ZRational zr = specialize_q1(r);
    CHECK(zr.num == ZPoly::one());
    CHECK(zr.den == ZPoly::one_minus_power(2));
    CHECK(zr.den.coeff(0) > 0);
}

TEST_CASE("JSON round trip is bit exact") {
    for (int trial = 0; trial < 100; ++trial) {
        FactoredRational r = random_rational();
        FactoredRational back = rational_from_json(rational_to_json(r));
        CHECK(back == r);
        CHECK(rational_to_json(back) == rational_to_json(r));
    }
    CHECK_THROWS_AS(rational_from_json("{"), UsageError);
    CHECK_THROWS_AS(rational_from_json("{\"numerator\":[]}"), UsageError);
}

TEST_CASE("display format") {
    FactoredRational a3(ZQPoly::term(0, QLaurent::monomial(1, 1)) +
                            ZQPoly::term(3, QLaurent::monomial(4, 1)),
                        {{0, 4, 1}, {2, 2, 1}, {3, 1, 1}});
    CHECK(a3.str() == "(q + q^4*z^3) / ((1-q^3*z)*(1-q^2*z^2)*(1-z^4))");
}
