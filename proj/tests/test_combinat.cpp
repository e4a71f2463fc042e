#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plethygen/combinat.hpp"
#include "plethygen/errors.hpp"

#include <algorithm>
#include <random>

using namespace plethygen;

TEST_CASE("partition plumbing") {
    CHECK_THROWS_AS(validate_partition({1, 2}), UsageError);
    CHECK_THROWS_AS(validate_partition({2, 0}), UsageError);
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(6).size() == 11);
    CHECK(partitions_of(4, 2) ==
          std::vector<Partition>{{4}, {3, 1}, {2, 2}});
    CHECK(conjugate_partition({3, 1}) == Partition{2, 1, 1});
    CHECK(conjugate_partition({2, 1}) == Partition{2, 1});
    for (const auto& mu : partitions_of(7))
        CHECK(conjugate_partition(conjugate_partition(mu)) == mu);
}

TEST_CASE("hooks and tableau counts") {
    CHECK(hook_lengths({2, 2}) ==
          std::vector<std::vector<int>>{{3, 2}, {2, 1}});
    CHECK(syt_count({2, 2}) == 2);
    CHECK(syt_count({3, 1, 1}) == 6);
    for (const auto& mu : partitions_of(6))
        CHECK(syt_count(mu) == BigInt(syt_enumerate(mu).size()));
    // Total SYT over shapes of n equals involutions of n (n=6: 76).
    BigInt total = 0;
    for (const auto& mu : partitions_of(6)) total += syt_count(mu);
    CHECK(total == 76);
}

TEST_CASE("ssyt enumeration counts") {
    auto count = [](const Partition& mu, int max_entry) {
        std::size_t n = 0;
        ssyt_enumerate(mu, max_entry, [&](const auto&) {
            ++n;
            return true;
        });
        return n;
    };
    CHECK(count({2}, 2) == 6);      // dim Sym^2 of C^3
    CHECK(count({1, 1}, 2) == 3);   // dim Alt^2 of C^3
    CHECK(count({2, 1}, 2) == 8);   // dim of the adjoint of GL_3
    CHECK(count({1, 1, 1}, 1) == 0);
}

TEST_CASE("descents and major index") {
    std::vector<int> w{2, 3, 1, 4, 5, 6};
    CHECK(position_descents(w) == std::vector<int>{2});
    CHECK(word_maj(w) == 2);
    CHECK(descent_composition(w) == std::vector<int>{2, 4});
    CHECK(letter_descents({2, 3, 1, 4, 5, 6}) == std::vector<int>{1});
    // Sum of maj over S_n equals n(n-1)/2 * n!/2.
    std::int64_t total = 0;
    for (const auto& p : permutations_of(4)) total += word_maj(p);
    CHECK(total == 6 * 24 / 2);
}

TEST_CASE("tableau descents") {
    Tableau t{{{1, 3, 4, 5, 6}, {2}}};
    CHECK(tableau_descents(t) == std::vector<int>{1});
    CHECK(tableau_maj(t) == 1);
}

TEST_CASE("RSK is a bijection") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> len(0, 8), letter(0, 5);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<int> word(static_cast<std::size_t>(len(rng)));
        for (auto& x : word) x = letter(rng);
        RSKPair pq = rsk(word);
        CHECK(inverse_rsk(pq) == word);
        // P rows are weakly increasing, Q is standard.
        for (const auto& row : pq.p)
            CHECK(std::is_sorted(row.begin(), row.end()));
    }
}

TEST_CASE("RSK recording tableau of a chamber point") {
    RSKPair pq = rsk({1, 0, 0, 1, 1, 1});
    CHECK(pq.q == std::vector<std::vector<int>>{{1, 3, 4, 5, 6}, {2}});
}

TEST_CASE("centered q-binomials") {
    for (int n = 1; n <= 8; ++n)
        CHECK(q_binomial_centered(n, 1) == QLaurent::q_integer(n));
    CHECK(q_binomial_centered(5, 2) ==
          QLaurent::q_integer(7) + QLaurent::q_integer(3));
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n; ++k) {
            QLaurent b = q_binomial_centered(n, k);
            CHECK(b == q_binomial_centered(n, n - k));
            CHECK(b.is_symmetric());
        }
    CHECK(q_binomial_centered(4, 7).is_zero());
}
