#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plethygen/errors.hpp"
#include "plethygen/sl2.hpp"

using namespace plethygen;

TEST_CASE("splet basics") {
    CHECK(splet({1}, 3) == QLaurent::q_integer(4));
    CHECK(splet({3}, 2) == QLaurent::q_integer(7) + QLaurent::q_integer(3));
    CHECK(splet({1, 1}, 0).is_zero());
    CHECK(splet({}, 5) == QLaurent::one());
    CHECK_THROWS_AS(splet({2, 1}, 2, SpletMethod::Gauss), UsageError);
}

TEST_CASE("splet methods agree") {
    for (const auto& mu : {Partition{2}, Partition{2, 1}, Partition{3, 2}})
        for (int h = 0; h <= 5; ++h)
            CHECK(splet(mu, h, SpletMethod::Ssyt) == splet(mu, h, SpletMethod::Qehr));
    for (int w = 1; w <= 5; ++w)
        for (int h = 0; h <= 6; ++h)
            CHECK(splet({w}, h, SpletMethod::Ssyt) ==
                  splet({w}, h, SpletMethod::Gauss));
}

TEST_CASE("greedy q-integer decomposition") {
    QLaurent f = QLaurent::q_integer(3);
    CHECK(decompose_qint(f) == QintDecomposition{{3, 1}});
    CHECK(decompose_qint(q_binomial_centered(5, 2)) ==
          QintDecomposition{{7, 1}, {3, 1}});
    CHECK(decompose_qint(QLaurent::zero()).empty());
    CHECK_THROWS_AS(decompose_qint(QLaurent::monomial(1, 1)), UsageError);
    // Symmetric but not a character: q^2 - 1 + q^{-2}.
    QLaurent bad;
    bad.add_term(2, 1);
    bad.add_term(0, -1);
    bad.add_term(-2, 1);
    CHECK_THROWS_AS(decompose_qint(bad), UsageError);
}

TEST_CASE("coefficient extraction") {
    CHECK(coefficient({3}, 2, 7) == 1);
    CHECK(coefficient({3}, 2, 5) == 0);
    CHECK(coefficient({3}, 2, 3) == 1);
    CHECK(coefficient({2}, 1, 3) == 1);
    CHECK(coefficient({2}, 1, 0) == 0);
    CHECK(coefficient({2}, 1, -3) == 0);
    // Parity mismatch gives zero without erroring.
    CHECK(coefficient({3}, 2, 4) == 0);
}

TEST_CASE("recurrence cases") {
    CHECK(recurrence_w(3, 2, 7) == 1);
    CHECK(recurrence_w(3, 3, 4) == 1);
    CHECK(recurrence_w(3, 3, 2) == 0);
    CHECK(recurrence_h(2, 3, 7) == 1);
    CHECK(recurrence_h(3, 3, 4) == 1);
    for (int h = 1; h <= 10; ++h) {
        CHECK(recurrence_w(1, h, h + 1) == 1);
        CHECK(recurrence_h(1, h, h + 1) == 1);
    }
    CHECK_THROWS_AS(recurrence_w(3, 2, 8), UsageError);  // parity
    CHECK_THROWS_AS(recurrence_w(3, 2, 9), UsageError);  // out of range
    CHECK_THROWS_AS(recurrence_w(0, 2, 1), UsageError);
}

TEST_CASE("recurrences reproduce the oracle") {
    for (int w = 1; w <= 6; ++w)
        for (int h = 1; h <= 6; ++h)
            for (std::int64_t k = (w * h) % 2 ? 2 : 1; k <= w * h + 1; k += 2) {
                BigInt want = coefficient({w}, h, k, SpletMethod::Gauss);
                CHECK(recurrence_w(w, h, k) == want);
                CHECK(recurrence_h(w, h, k) == want);
            }
}

TEST_CASE("single row coefficients are symmetric in w and h") {
    for (int w = 1; w <= 6; ++w)
        for (int h = 1; h <= 6; ++h)
            for (std::int64_t k = 1; k <= w * h + 1; ++k)
                CHECK(coefficient({w}, h, k) == coefficient({h}, w, k));
}

TEST_CASE("hook shapes factor as a product of centered q-binomials") {
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m)
            for (int d = 0; d <= 5; ++d) {
                Partition mu{m + 1};
                mu.insert(mu.end(), static_cast<std::size_t>(n), 1);
                CHECK(splet(mu, d) == q_binomial_centered(n + m, m) *
                                          q_binomial_centered(m + d + 1, n + m + 1));
            }
}

TEST_CASE("pi3 pairs count the cubic coefficients") {
    CHECK(pi3_count(2, 7) == 1);
    CHECK(pi3_count(3, 4) == 1);
    CHECK(pi3_count(0, 1) == 1);
    for (int h = 0; h <= 15; ++h)
        for (std::int64_t k = (3 * h) % 2 ? 2 : 1; k <= 3 * h + 1; k += 2)
            CHECK(pi3_count(h, k) == coefficient({3}, h, k, SpletMethod::Gauss));
}

TEST_CASE("cone points count the cubic coefficients") {
    CHECK(cone_count(Cone::B1, 2, 7) == 1);
    CHECK(cone_count(Cone::B2, 2, 7) == 0);
    for (int h = 0; h <= 15; ++h)
        for (std::int64_t k = (3 * h) % 2 ? 2 : 1; k <= 3 * h + 1; k += 2)
            CHECK(cone_count(Cone::B1, h, k) + cone_count(Cone::B2, h, k) ==
                  coefficient({3}, h, k, SpletMethod::Gauss));
}
