#pragma once

#include "plethygen/combinat.hpp"
#include "plethygen/rational.hpp"
#include "plethygen/zpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace plethygen {

/// A_mu(1/z, 1/q) == (-1)^{|mu|} z^2 A_{mu'}(z, q); needs |mu| >= 2.
bool check_reciprocity(const Partition& mu);

/// For the hook mu = (n+1, 1^m):
/// A_mu(1/z, 1/q) == (-1)^{|mu|} z^{n-m+2} A_mu(z, q).
bool check_hook_reciprocity(int n, int m);

/// QEhr_mu(1/z, 1/q) == (-1)^{|mu|+1} z^2 QEhr_{mu'}(z, q).
bool qehr_reciprocity(const Partition& mu);

struct HStarReport {
    Partition mu;
    std::int64_t d = 0;      // minimal period with (1-z^d)^w A_mu(z,1) polynomial
    std::int64_t d_lcm = 0;  // lcm of the z-exponents of the universal denominator
    ZPoly hstar;
    bool hook_or_self_conjugate = false;
    std::optional<bool> quotient_palindromic;  // hooks / self-conjugate only
    std::optional<bool> inequalities_pass;     // all other shapes
    bool pass = false;
    std::string diagnostic;
};

/// The h* pipeline: A_mu(z,1) in lowest terms, the minimal valid period d,
/// the h* polynomial, and the palindromicity or coefficient-inequality test
/// depending on the shape class.
HStarReport hstar_report(const Partition& mu);

/// [a_{3[4n]}^{[2n+1]}]_{n=0..N}, checked against the series of
/// (1 + t^2 + 2t^4 + t^6 + t^8) / ((1-t^3)(1-t^6)).
std::vector<BigInt> km_series(int n_max);

}  // namespace plethygen
