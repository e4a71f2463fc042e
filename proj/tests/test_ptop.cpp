#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plethygen/errors.hpp"
#include "plethygen/ptop.hpp"
#include "plethygen/qehr.hpp"
#include "plethygen/sl2.hpp"
#include "plethygen/tables.hpp"

using namespace plethygen;

namespace {

QLaurent qminus() {
    return QLaurent::monomial(1, 1) - QLaurent::monomial(-1, 1);
}

}  // namespace

TEST_CASE("pt_series drops negative q powers per coefficient") {
    QSeries s(2);
    s[0] = QLaurent::monomial(-2, 1) + QLaurent::one() + QLaurent::monomial(3, 1);
    s[1] = QLaurent::monomial(-1, 4);
    QSeries t = pt_series(s);
    CHECK(t[0] == QLaurent::one() + QLaurent::monomial(3, 1));
    CHECK(t[1].is_zero());
    CHECK(t[2].is_zero());
}

TEST_CASE("universal denominator factors") {
    auto norm = [](std::vector<DenFactor> f) {
        return FactoredRational(ZQPoly::one(), std::move(f)).factors();
    };
    CHECK(norm(d_w_factors(1)) == norm({{0, 2, 1}, {1, 1, 1}}));
    CHECK(norm(d_w_factors(2)) == norm({{0, 1, 2}, {0, 2, 1}, {2, 1, 1}}));
    CHECK(norm(d_w_factors(3)) ==
          norm({{0, 2, 1}, {0, 4, 1}, {0, 6, 1}, {1, 1, 1}, {3, 1, 1}}));
    CHECK_THROWS_AS(d_w_factors(0), UsageError);
}

TEST_CASE("telescoping definition of the generating function") {
    // The positive part of (q - 1/q) s_mu[s_h](1/q,q) is sum_k a^{[k]} q^k.
    for (const auto& mu : {Partition{2}, Partition{3}, Partition{2, 1}})
        for (int h = 0; h <= 8; ++h) {
            QLaurent lhs = (qminus() * splet(mu, h)).positive_part();
            QLaurent rhs;
            for (const auto& [k, c] : decompose_qint(splet(mu, h)))
                rhs += QLaurent::monomial(k, c);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("compute_A matches the stored compact forms") {
    for (const auto& entry : weight_le4_forms())
        CHECK(rational_equal(compute_A(entry.mu), entry.value));
}

TEST_CASE("compute_A series matches the direct definition") {
    for (const auto& mu : {Partition{1}, Partition{2, 1}, Partition{2, 2}}) {
        QSeries s = series_expand(compute_A(mu), 8);
        for (int h = 0; h <= 8; ++h) {
            QLaurent want;
            for (const auto& [k, c] : decompose_qint(splet(mu, h)))
                want += QLaurent::monomial(k, c);
            CHECK(s[static_cast<std::size_t>(h)] == want);
        }
    }
}

TEST_CASE("numerators have nonnegative q exponents") {
    for (const auto& mu : {Partition{3}, Partition{2, 2}, Partition{3, 1, 1}}) {
        ComputeAResult r = compute_A_detailed(mu);
        if (!r.rational.numerator().is_zero())
            CHECK(r.rational.numerator().min_q_exp() >= 0);
    }
}

TEST_CASE("explicit truncation override still stabilizes") {
    ComputeAOptions options;
    options.m = 15;  // deliberately small; doubling must rescue it
    ComputeAResult r = compute_A_detailed({3}, options);
    CHECK(rational_equal(r.rational, *known_form(Partition{3})));
}

TEST_CASE("exact single factor division") {
    ZQPoly u = ZQPoly::one() + ZQPoly::term(2, QLaurent::monomial(1, 3));
    ZQPoly f = ZQPoly::one() - ZQPoly::term(1, QLaurent::monomial(2, 1));
    auto q = zq_divide_exact(u * f, 2, 1);
    REQUIRE(q.has_value());
    CHECK(*q == u);
    CHECK(!zq_divide_exact(ZQPoly::one() + ZQPoly::term(1, QLaurent::one()), 2, 1)
               .has_value());
}

TEST_CASE("single pole closed forms match the series definition") {
    // PT of z^a q^b / (1 - q^c z): compare series of the closed form with
    // the positive part of the direct expansion.
    for (std::int64_t a = 0; a <= 2; ++a)
        for (std::int64_t b = -5; b <= 3; ++b)
            for (std::int64_t c = -3; c <= 3; ++c) {
                FactoredRational closed = pt_single_pole(a, b, c);
                QSeries got = series_expand(closed, 10);
                for (std::int64_t h = 0; h <= 10; ++h) {
                    QLaurent want;  // z^h term of the source is q^{b+(h-a)c}
                    if (h >= a) {
                        std::int64_t e = b + (h - a) * c;
                        if (e >= 0) want = QLaurent::monomial(e, 1);
                    }
                    CHECK(got[static_cast<std::size_t>(h)] == want);
                }
            }
}

TEST_CASE("conjectured hook denominator") {
    CHECK(check_conjecture_denominator({3}));
    CHECK(check_conjecture_denominator({2, 2}));
    // The literal statement fails in tiny weights; recorded, not asserted.
    CHECK(!check_conjecture_denominator({1}));
}
