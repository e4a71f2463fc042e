#include "plethygen/qehr.hpp"

#include "plethygen/errors.hpp"

namespace plethygen {

namespace {

std::vector<DenFactor> heine_factors(int w) {
    // One factor (1 - q^{w-2i} z) per i = 0..w; multiplicities merge when
    // exponents repeat (they never do here).
    std::vector<DenFactor> factors;
    for (int i = 0; i <= w; ++i) factors.push_back({w - 2 * static_cast<std::int64_t>(i), 1, 1});
    return factors;
}

}  // namespace

FactoredRational qehr_mu(const Partition& mu) {
    validate_partition(mu);
    int w = partition_size(mu);
    if (w > 10) throw ResourceError("qehr_mu limited to |mu| <= 10");
    ZQPoly num;
    for (const auto& t : syt_enumerate(mu)) {
        int maj = tableau_maj(t);
        int des = static_cast<int>(tableau_descents(t).size());
        num.add_term(des, QLaurent::monomial(-2 * static_cast<std::int64_t>(maj) +
                                                 static_cast<std::int64_t>(w) * des,
                                             1));
    }
    return FactoredRational(std::move(num), heine_factors(w));
}

FactoredRational heine(int w) {
    if (w < 1) throw UsageError("heine needs w >= 1");
    return FactoredRational(ZQPoly::one(), heine_factors(w));
}

bool carlitz_check(int w, int hmax) {
    if (w < 1 || w > 6) throw UsageError("carlitz_check needs 1 <= w <= 6");
    ZQPoly num;
    for (const auto& pi : permutations_of(w)) {
        int maj = word_maj(pi);
        int des = static_cast<int>(position_descents(pi).size());
        num.add_term(des, QLaurent::monomial(-2 * static_cast<std::int64_t>(maj) +
                                                 static_cast<std::int64_t>(w) * des,
                                             1));
    }
    FactoredRational cube(std::move(num), heine_factors(w));
    QSeries s = series_expand(cube, static_cast<std::size_t>(hmax));
    for (int h = 0; h <= hmax; ++h) {
        QLaurent expected = QLaurent::one();
        for (int i = 0; i < w; ++i) expected = expected * QLaurent::q_integer(h + 1);
        if (s[static_cast<std::size_t>(h)] != expected) return false;
    }
    return true;
}

}  // namespace plethygen
