#pragma once

#include "plethygen/combinat.hpp"
#include "plethygen/qlaurent.hpp"

#include <cstdint>
#include <map>

namespace plethygen {

enum class SpletMethod { Auto, Ssyt, Qehr, Gauss };

/// The centered plethysm character s_mu[s_h](1/q, q) as a Laurent
/// polynomial in q.
/// ssyt:  sum over SSYT of shape mu with entries 0..h of q^{2*sum - |mu| h};
/// qehr:  z^h series coefficient of the closed-form quantum Ehrhart series;
/// gauss: centered q-binomial (w+h, w), single-row mu only.
QLaurent splet(const Partition& mu, int h, SpletMethod method = SpletMethod::Auto);

/// Multiplicities in the expansion f = sum_k a_k [k]_q (greedy from the top
/// q-degree). Keys are k >= 1; k = 0 never appears.
using QintDecomposition = std::map<std::int64_t, BigInt>;
QintDecomposition decompose_qint(const QLaurent& f);

/// a_{mu[h]}^{[k]}: the multiplicity of [k]_q in s_mu[s_h](1/q, q);
/// 0 for k <= 0 or parity mismatch.
BigInt coefficient(const Partition& mu, int h, std::int64_t k,
                   SpletMethod method = SpletMethod::Auto);

/// The single-row coefficients a_{w[h]}^{[k]} by the three-case recursion in
/// w (resp. in h). Preconditions: w, h >= 1, 1 <= k <= wh+1 and
/// k == wh+1 (mod 2).
BigInt recurrence_w(int w, int h, std::int64_t k);
BigInt recurrence_h(int w, int h, std::int64_t k);

/// Number of partition pairs (mu1, mu2) with mu2 even, mu1 >= 2 mu2,
/// mu1 != 2 mu2 + 1, mu1 <= h and 3h - 2(mu1 + mu2) + 1 = k.
std::int64_t pi3_count(int h, std::int64_t k);

enum class Cone { B1, B2 };
/// Lattice points p = a(4,0,0,0) + b(2,0,2,0) + c(1,0,0,3), a,b,c >= 0, with
/// B1: p1 = h, p2+p3+p4 = k-1; B2: p1 = h-3, p2+p3+p4 = k-4.
std::int64_t cone_count(Cone which, int h, std::int64_t k);

}  // namespace plethygen
