#pragma once

#include "plethygen/combinat.hpp"
#include "plethygen/qlaurent.hpp"

#include <map>
#include <optional>
#include <vector>

namespace plethygen {

/// Symmetric polynomial in x_1..x_n: exponent vector (length n) -> integer
/// coefficient.
struct SymPoly {
    int n = 0;
    std::map<std::vector<int>, BigInt> terms;

    bool operator==(const SymPoly&) const = default;
};

/// Schur polynomial expansion: partition -> multiplicity.
using SchurExpansion = std::map<Partition, BigInt>;

/// s_lambda(x_1..x_n) from SSYT weights.
SymPoly schur_poly(const Partition& lambda, int n);

/// s_nu[s_mu] in n variables, by substituting the ordered monomial alphabet
/// of s_mu (lex-decreasing, with multiplicity) into s_nu.
SymPoly plethysm_poly(const Partition& nu, const Partition& mu, int n);

/// Greedy expansion into Schur polynomials by repeated subtraction of the
/// lex-greatest term.
SchurExpansion schur_decompose(SymPoly p);

/// The plethysm structure constant: multiplicity of s_lambda in s_nu[s_mu].
BigInt gl_coefficient(const Partition& nu, const Partition& mu, const Partition& lambda,
                      int n);

/// All nonzero structure constants of s_nu[s_mu] over |nu| <= dmax with at
/// most m parts, in n variables.
std::map<std::pair<Partition, Partition>, BigInt> bbA_truncated(const Partition& mu,
                                                                int n, int m, int dmax);

/// The diagonal series [a_{r mu [nu]}^{r lambda}]_{r=0..N}. When nu is a
/// single row and lambda has at most two parts, computed through the SL2
/// coefficients; otherwise by brute-force plethysm.
std::vector<BigInt> kirillov_series(const Partition& lambda, const Partition& mu,
                                    const Partition& nu, int n_max);

/// Smallest-order constant-coefficient linear recurrence satisfied by the
/// whole sequence, if one of order <= max_order exists. Empirical: fitted to
/// the given terms only.
std::optional<std::vector<BigRat>> fit_recurrence(const std::vector<BigInt>& seq,
                                                  int max_order);

}  // namespace plethygen
