#pragma once

#include "plethygen/combinat.hpp"
#include "plethygen/rational.hpp"

#include <cstdint>
#include <optional>

namespace plethygen {

/// Drop all terms with negative q-exponent from every z-coefficient.
QSeries pt_series(const QSeries& s);

/// The universal denominator clearing every A_mu with |mu| = w:
/// w even: (1-z) * prod_{i=1}^{w}(1-z^i) * prod_{i=1}^{w/2}(1-q^{2i}z);
/// w odd:  prod_{i=1}^{w}(1-z^{2i}) * prod_{i=1}^{(w+1)/2}(1-q^{2i-1}z).
std::vector<DenFactor> d_w_factors(int w);

struct ComputeAOptions {
    std::optional<std::size_t> m;  // initial truncation order override
    int max_retries = 4;
};

struct ComputeAResult {
    FactoredRational rational;  // p_low over the d_w factors
    std::size_t m_used = 0;
};

/// A_mu(z,q) as p_low / d_w via truncated series: expand (q - 1/q) times the
/// quantum Ehrhart series to order m, drop negative q-powers, multiply by
/// d_w and keep the exact band of z-degrees <= m - deg_z(d_w). The band is
/// recomputed at a larger order and must agree (retrying with doubled m),
/// re-expanded as a sanity check, and must have no negative q-exponents.
ComputeAResult compute_A_detailed(const Partition& mu, const ComputeAOptions& options = {});
FactoredRational compute_A(const Partition& mu);

/// Exact quotient of p by (1 - q^a z^b), if it divides.
std::optional<ZQPoly> zq_divide_exact(const ZQPoly& p, std::int64_t a, std::int64_t b);

/// Whether d_mu(z,q) * A_mu(z,q) / (1-z)^2 is a polynomial over the
/// integers, with d_mu built from the hook lengths of mu:
/// w even: prod_c (1-z^{h(c)}) * prod_{i=0}^{w/2-1} (1-q^{w-2i}z);
/// w odd:  prod_c (1-z^{2h(c)}) * prod_{i=0}^{(w-1)/2} (1-q^{w-2i}z).
/// An empirical check; callers must not assume the outcome.
bool check_conjecture_denominator(const Partition& mu);

/// Closed form of PT^q applied to z^a q^b / (1 - q^c z); the c = 0 factor is
/// (1 - z). Test-only cross-validation path.
FactoredRational pt_single_pole(std::int64_t a, std::int64_t b, std::int64_t c);

}  // namespace plethygen
