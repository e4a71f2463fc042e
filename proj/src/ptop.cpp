#include "plethygen/ptop.hpp"

#include "plethygen/errors.hpp"
#include "plethygen/qehr.hpp"

#include <numeric>

namespace plethygen {

QSeries pt_series(const QSeries& s) {
    QSeries out(s.order());
    for (std::size_t h = 0; h <= s.order(); ++h) out[h] = s[h].positive_part();
    return out;
}

std::vector<DenFactor> d_w_factors(int w) {
    if (w < 1) throw UsageError("d_w needs w >= 1");
    std::vector<DenFactor> factors;
    if (w % 2 == 0) {
        factors.push_back({0, 1, 1});
        for (int i = 1; i <= w; ++i) factors.push_back({0, i, 1});
        for (int i = 1; i <= w / 2; ++i) factors.push_back({2 * i, 1, 1});
    } else {
        for (int i = 1; i <= w; ++i) factors.push_back({0, 2 * i, 1});
        for (int i = 1; i <= (w + 1) / 2; ++i) factors.push_back({2 * i - 1, 1, 1});
    }
    return factors;
}

namespace {

ZQPoly factors_poly(const std::vector<DenFactor>& factors) {
    ZQPoly p = ZQPoly::one();
    for (const auto& f : factors)
        for (std::int64_t i = 0; i < f.m; ++i)
            p = p * (ZQPoly::one() - ZQPoly::term(f.b, QLaurent::monomial(f.a, 1)));
    return p;
}

/// Coefficients of z^0..z^m of PT^q (q - 1/q) QEhr_mu.
QSeries pt_qehr_series(const FactoredRational& qehr, std::size_t m) {
    QSeries s = series_expand(qehr, m);
    QLaurent qminus = QLaurent::monomial(1, 1) - QLaurent::monomial(-1, 1);
    for (std::size_t h = 0; h <= m; ++h) s[h] = qminus * s[h];
    return pt_series(s);
}

/// The exact band: z-coefficients of degree <= band of the truncated PT
/// series times the d_w polynomial.
ZQPoly low_band(const FactoredRational& qehr, const ZQPoly& dw, std::size_t m,
                std::int64_t band) {
    QSeries prod = series_mul(pt_qehr_series(qehr, m), dw, m);
    ZQPoly p;
    for (std::int64_t j = 0; j <= band; ++j)
        p.add_term(j, prod[static_cast<std::size_t>(j)]);
    return p;
}

}  // namespace

ComputeAResult compute_A_detailed(const Partition& mu, const ComputeAOptions& options) {
    validate_partition(mu);
    int w = partition_size(mu);
    if (w < 1 || w > 8) throw ResourceError("compute_A limited to 1 <= |mu| <= 8");
    std::vector<DenFactor> dw = d_w_factors(w);
    ZQPoly dw_poly = factors_poly(dw);
    std::int64_t deg_dw = 0;
    for (const auto& f : dw) deg_dw += f.b * f.m;
    FactoredRational qehr = qehr_mu(mu);

    std::size_t m = options.m.value_or(static_cast<std::size_t>(w) * w +
                                       2 * static_cast<std::size_t>(deg_dw));
    if (m < static_cast<std::size_t>(deg_dw))
        throw UsageError("truncation order must be at least deg_z(d_w)");

    ZQPoly p_low;
    std::int64_t band = 0;
    bool stable = false;
    for (int attempt = 0; attempt <= options.max_retries; ++attempt) {
        band = static_cast<std::int64_t>(m) - deg_dw;
        p_low = low_band(qehr, dw_poly, m, band);
        // The wider band must reveal no further terms: the candidate is only
        // accepted when the recomputed numerator is the same polynomial.
        ZQPoly recheck =
            low_band(qehr, dw_poly, m + static_cast<std::size_t>(w) + 1,
                     band + w + 1);
        if (recheck == p_low) {
            stable = true;
            break;
        }
        m *= 2;
    }
    if (!stable)
        throw VerificationError("compute_A: truncation band did not stabilize");

    FactoredRational result(p_low, dw);
    if (series_expand(result, static_cast<std::size_t>(band)) !=
        pt_qehr_series(qehr, static_cast<std::size_t>(band)))
        throw InternalError("compute_A: series recheck failed");
    if (!p_low.is_zero() && p_low.min_q_exp() < 0)
        throw InternalError("compute_A: negative q-exponent in numerator");
    return {std::move(result), m};
}

FactoredRational compute_A(const Partition& mu) {
    return compute_A_detailed(mu).rational;
}

std::optional<ZQPoly> zq_divide_exact(const ZQPoly& p, std::int64_t a, std::int64_t b) {
    if (p.is_zero()) return ZQPoly::zero();
    // p = u * (1 - q^a z^b), so u_j = p_j + q^a u_{j-b}, from low degree up.
    QLaurent qa = QLaurent::monomial(a, 1);
    ZQPoly u;
    for (std::int64_t j = 0; j <= p.z_degree(); ++j) {
        QLaurent c = p.coeff(j);
        if (j >= b) c += qa * u.coeff(j - b);
        u.add_term(j, c);
    }
    ZQPoly check = u - u * ZQPoly::term(b, qa);
    if (check == p) return u;
    return std::nullopt;
}

bool check_conjecture_denominator(const Partition& mu) {
    validate_partition(mu);
    int w = partition_size(mu);
    if (w < 1 || w > 7) throw ResourceError("conjecture check limited to |mu| <= 7");

    std::vector<DenFactor> dmu;
    for (const auto& row : hook_lengths(mu))
        for (int hl : row) dmu.push_back({0, w % 2 == 0 ? hl : 2 * hl, 1});
    for (int i = 0; 2 * i < w; ++i) dmu.push_back({static_cast<std::int64_t>(w) - 2 * i, 1, 1});

    FactoredRational a = compute_A(mu);
    // d_mu * A / (1-z)^2 = (numerator * d_mu) / (d_w * (1-z)^2); divide the
    // expanded numerator by each factor in turn.
    ZQPoly num = a.numerator() * factors_poly(dmu);
    std::vector<DenFactor> divisors = a.factors();
    divisors.push_back({0, 1, 2});
    for (const auto& f : divisors) {
        for (std::int64_t i = 0; i < f.m; ++i) {
            auto q = zq_divide_exact(num, f.a, f.b);
            if (!q) return false;
            num = std::move(*q);
        }
    }
    return true;
}

FactoredRational pt_single_pole(std::int64_t a, std::int64_t b, std::int64_t c) {
    if (a < 0) throw UsageError("pt_single_pole needs z-exponent a >= 0");
    ZQPoly num = ZQPoly::term(a, QLaurent::monomial(b, 1));
    if (c > 0) {
        if (b >= 0) return FactoredRational(std::move(num), {{c, 1, 1}});
        // Subtract the leading terms with negative q-exponent: those with
        // b + kc < 0, i.e. k <= d below.
        std::int64_t d = (-b - 1) / c;
        std::int64_t zshift = d + a + 1;
        return FactoredRational(
            ZQPoly::term(zshift, QLaurent::monomial((d + 1) * c + b, 1)), {{c, 1, 1}});
    }
    if (c == 0) {
        if (b < 0) return FactoredRational::zero();
        return FactoredRational(std::move(num), {{0, 1, 1}});
    }
    // c < 0: only finitely many terms survive.
    if (b < 0) return FactoredRational::zero();
    std::int64_t d = b / (-c);
    ZQPoly p;
    for (std::int64_t k = 0; k <= d; ++k)
        p.add_term(a + k, QLaurent::monomial(b + k * c, 1));
    return FactoredRational(std::move(p), {});
}

}  // namespace plethygen
