#pragma once

#include "plethygen/combinat.hpp"
#include "plethygen/rational.hpp"

namespace plethygen {

/// Closed-form quantum Ehrhart series of the coarse chamber of shape mu:
/// (sum over SYT(mu) of q^{-2 maj(T)} (z q^w)^{des(T)}) over
/// prod_{i=0}^{w} (1 - q^{w-2i} z). Its z^h coefficient is the centered
/// plethysm character s_mu[s_h](1/q, q).
FactoredRational qehr_mu(const Partition& mu);

/// Heine's product: prod_{i=0}^{w} 1/(1 - q^{w-2i} z).
FactoredRational heine(int w);

/// Carlitz identity check: the series over all permutations of S_w has
/// z^h coefficient [h+1]_q^w for every h <= hmax.
bool carlitz_check(int w, int hmax);

}  // namespace plethygen
