#include "plethygen/recip.hpp"

#include "plethygen/errors.hpp"
#include "plethygen/ptop.hpp"
#include "plethygen/qehr.hpp"
#include "plethygen/sl2.hpp"

#include <numeric>
#include <sstream>

namespace plethygen {

bool check_reciprocity(const Partition& mu) {
    validate_partition(mu);
    int w = partition_size(mu);
    if (w < 2) throw UsageError("reciprocity check needs |mu| >= 2");
    InvertedRational lhs = invert_variables(compute_A(mu));
    FactoredRational rhs = compute_A(conjugate_partition(mu));
    int sign = (w % 2 == 0) ? 1 : -1;
    return shifted_rational_equal(lhs.sign, lhs.zshift, lhs.rational, sign, 2, rhs);
}

bool check_hook_reciprocity(int n, int m) {
    if (n < 0 || m < 0 || n + m + 1 < 2)
        throw UsageError("hook reciprocity needs n, m >= 0 with n+m+1 >= 2");
    Partition mu{n + 1};
    mu.insert(mu.end(), static_cast<std::size_t>(m), 1);
    int w = partition_size(mu);
    FactoredRational a = compute_A(mu);
    InvertedRational lhs = invert_variables(a);
    int sign = (w % 2 == 0) ? 1 : -1;
    return shifted_rational_equal(lhs.sign, lhs.zshift, lhs.rational, sign,
                                  static_cast<std::int64_t>(n) - m + 2, a);
}

bool qehr_reciprocity(const Partition& mu) {
    validate_partition(mu);
    int w = partition_size(mu);
    InvertedRational lhs = invert_variables(qehr_mu(mu));
    FactoredRational rhs = qehr_mu(conjugate_partition(mu));
    int sign = (w % 2 == 0) ? -1 : 1;  // (-1)^{w+1}
    return shifted_rational_equal(lhs.sign, lhs.zshift, lhs.rational, sign, 2, rhs);
}

namespace {

bool is_hook(const Partition& mu) {
    for (std::size_t i = 1; i < mu.size(); ++i)
        if (mu[i] != 1) return false;
    return !mu.empty();
}

ZPoly power(const ZPoly& p, int e) {
    ZPoly r = ZPoly::one();
    for (int i = 0; i < e; ++i) r = r * p;
    return r;
}

/// Necessary coefficient inequalities for an h* candidate of a rational
/// polytope with period d and degree bound big_s:
///   h0+...+h_{i+1} >= h_S+...+h_{S-i}  for 0 <= i < floor(S/2),
///   h_s+...+h_{s-i} >= h_0+...+h_i     for 0 <= i <= s.
bool hstar_inequalities(const ZPoly& hstar, std::int64_t big_s) {
    std::int64_t s = hstar.degree();
    if (s > big_s) return false;
    auto coeff = [&](std::int64_t j) {
        return (j < 0) ? BigInt(0) : hstar.coeff(static_cast<std::size_t>(j));
    };
    for (std::int64_t i = 0; i < big_s / 2; ++i) {
        BigInt lhs = 0, rhs = 0;
        for (std::int64_t j = 0; j <= i + 1; ++j) lhs += coeff(j);
        for (std::int64_t j = 0; j <= i; ++j) rhs += coeff(big_s - j);
        if (lhs < rhs) return false;
    }
    for (std::int64_t i = 0; i <= s; ++i) {
        BigInt lhs = 0, rhs = 0;
        for (std::int64_t j = 0; j <= i; ++j) {
            lhs += coeff(s - j);
            rhs += coeff(j);
        }
        if (lhs < rhs) return false;
    }
    return true;
}

}  // namespace

HStarReport hstar_report(const Partition& mu) {
    validate_partition(mu);
    int w = partition_size(mu);
    if (w < 1 || w > 7) throw ResourceError("hstar_report limited to |mu| <= 7");
    HStarReport report;
    report.mu = mu;

    ZRational a1 = specialize_q1(compute_A(mu));
    std::int64_t d_lcm = 1;
    for (const auto& f : d_w_factors(w)) d_lcm = std::lcm(d_lcm, f.b);
    report.d_lcm = d_lcm;

    std::optional<ZPoly> hstar;
    for (std::int64_t d = 1; d <= d_lcm; ++d) {
        ZPoly num = power(ZPoly::one_minus_power(static_cast<std::size_t>(d)), w) * a1.num;
        auto q = num.divided_exactly_by(a1.den);
        if (q) {
            report.d = d;
            hstar = std::move(*q);
            break;
        }
    }
    if (!hstar) {
        report.diagnostic = "no valid period d found up to the denominator lcm";
        return report;
    }
    report.hstar = *hstar;

    report.hook_or_self_conjugate = is_hook(mu) || conjugate_partition(mu) == mu;
    std::ostringstream diag;
    if (report.hook_or_self_conjugate) {
        auto quot = hstar->divided_exactly_by(ZPoly::ones(static_cast<std::size_t>(report.d)));
        bool ok = quot.has_value() && quot->is_palindromic();
        report.quotient_palindromic = ok;
        report.pass = ok;
        diag << "d=" << report.d << " h*=" << hstar->str();
        if (quot) diag << " quotient=" << quot->str();
        else diag << " quotient not a polynomial";
    } else {
        std::int64_t big_s = report.d * w - 1;
        bool ok = hstar_inequalities(*hstar, big_s);
        report.inequalities_pass = ok;
        report.pass = ok;
        diag << "d=" << report.d << " h*=" << hstar->str() << " S=" << big_s;
    }
    report.diagnostic = diag.str();
    return report;
}

std::vector<BigInt> km_series(int n_max) {
    if (n_max < 0 || n_max > 50) throw UsageError("km_series needs 0 <= N <= 50");
    std::vector<BigInt> out;
    for (int n = 0; n <= n_max; ++n)
        out.push_back(coefficient({3}, 4 * n, 2 * n + 1, SpletMethod::Gauss));

    // Closed form (1 + t^2 + 2t^4 + t^6 + t^8) / ((1-t^3)(1-t^6)), expanded
    // in the z slot of a FactoredRational with trivial q-dependence.
    ZQPoly num = ZQPoly::one();
    num.add_term(2, QLaurent::one());
    num.add_term(4, QLaurent::one() * 2);
    num.add_term(6, QLaurent::one());
    num.add_term(8, QLaurent::one());
    FactoredRational closed(std::move(num), {{0, 3, 1}, {0, 6, 1}});
    QSeries s = series_expand(closed, static_cast<std::size_t>(n_max));
    for (int n = 0; n <= n_max; ++n) {
        if (s[static_cast<std::size_t>(n)].coeff(0) != out[static_cast<std::size_t>(n)]) {
            std::ostringstream msg;
            msg << "km_series mismatch at index " << n;
            throw VerificationError(msg.str());
        }
    }
    return out;
}

}  // namespace plethygen
