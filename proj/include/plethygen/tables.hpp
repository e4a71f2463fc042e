#pragma once

#include "plethygen/combinat.hpp"
#include "plethygen/rational.hpp"

#include <optional>
#include <vector>

namespace plethygen {

/// A published compact rational form of A_mu, stored as golden data.
struct KnownForm {
    Partition mu;
    FactoredRational value;
};

/// The 11 compact forms for |mu| <= 4.
const std::vector<KnownForm>& weight_le4_forms();

/// The four |mu| = 5 forms for (5), (4,1), (3,2), (3,1,1), each the sum of
/// a list of simple rational terms.
const std::vector<KnownForm>& weight5_forms();

/// Lookup across both tables.
std::optional<FactoredRational> known_form(const Partition& mu);

}  // namespace plethygen
