#pragma once

#include "plethygen/qlaurent.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace plethygen {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// is allowed.
using Partition = std::vector<int>;

/// Throws UsageError when parts are not weakly decreasing positive integers.
void validate_partition(const Partition& mu);
int partition_size(const Partition& mu);
Partition conjugate_partition(const Partition& mu);
/// All partitions of w with at most `max_parts` parts, in lexicographically
/// decreasing order, starting with (w).
std::vector<Partition> partitions_of(int w, int max_parts = 64);

/// Hook lengths cell by cell, row-major.
std::vector<std::vector<int>> hook_lengths(const Partition& mu);
/// Number of standard Young tableaux of shape mu (hook length formula).
BigInt syt_count(const Partition& mu);

/// A standard Young tableau stored row by row with entries 1..n.
struct Tableau {
    std::vector<std::vector<int>> rows;
};
/// Descent set of a SYT: i such that i+1 is in a strictly lower row.
std::vector<int> tableau_descents(const Tableau& t);
int tableau_maj(const Tableau& t);
std::vector<Tableau> syt_enumerate(const Partition& mu);

/// Streams all semistandard Young tableaux of shape mu with entries in
/// 0..max_entry, row by row. Returns false if the visitor stopped early.
bool ssyt_enumerate(const Partition& mu, int max_entry,
                    const std::function<bool(const std::vector<std::vector<int>>&)>& visit);

/// RSK row insertion applied to a word (sequence over nonnegative integers).
/// P keeps the word's letters; Q is standard with entries 1..n.
struct RSKPair {
    std::vector<std::vector<int>> p;
    std::vector<std::vector<int>> q;
};
RSKPair rsk(const std::vector<int>& word);
std::vector<int> inverse_rsk(const RSKPair& pair);

/// Permutations of {1..n} in lexicographic order.
std::vector<std::vector<int>> permutations_of(int n);
/// Positions i (1-based) with word[i] > word[i+1].
std::vector<int> position_descents(const std::vector<int>& word);
/// For a permutation: letters i such that i+1 appears to the left of i.
std::vector<int> letter_descents(const std::vector<int>& perm);
/// Composition of n whose partial sums are the positions of descents, i.e.
/// the lengths of the maximal weakly increasing runs.
std::vector<int> descent_composition(const std::vector<int>& word);
int word_maj(const std::vector<int>& word);

/// Centered Gaussian binomial: the classical q-binomial in t evaluated at
/// t = q^2 and recentered by q^{-k(n-k)}, making it symmetric in q <-> 1/q.
/// Zero for k < 0 or k > n.
QLaurent q_binomial_centered(std::int64_t n, std::int64_t k);

}  // namespace plethygen
