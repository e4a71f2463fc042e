#include "plethygen/glnp.hpp"

#include "plethygen/errors.hpp"
#include "plethygen/sl2.hpp"

#include <algorithm>
#include <numeric>

namespace plethygen {

namespace {

void check_gl_bounds(const Partition& nu, const Partition& mu, int n) {
    if (n < 1 || n > 4) throw ResourceError("plethysm limited to 1 <= n <= 4 variables");
    if (partition_size(nu) * partition_size(mu) > 12)
        throw ResourceError("plethysm limited to |nu|*|mu| <= 12");
}

}  // namespace

SymPoly schur_poly(const Partition& lambda, int n) {
    validate_partition(lambda);
    if (n < 1 || n > 4) throw ResourceError("schur_poly limited to 1 <= n <= 4 variables");
    if (partition_size(lambda) > 12)
        throw ResourceError("schur_poly limited to |lambda| <= 12");
    SymPoly p;
    p.n = n;
    if (static_cast<int>(lambda.size()) > n) return p;  // zero in n variables
    ssyt_enumerate(lambda, n - 1, [&](const std::vector<std::vector<int>>& t) {
        std::vector<int> exp(static_cast<std::size_t>(n), 0);
        for (const auto& row : t)
            for (int x : row) ++exp[static_cast<std::size_t>(x)];
        p.terms[std::move(exp)] += 1;
        return true;
    });
    if (lambda.empty()) p.terms[std::vector<int>(static_cast<std::size_t>(n), 0)] = 1;
    return p;
}

SymPoly plethysm_poly(const Partition& nu, const Partition& mu, int n) {
    validate_partition(nu);
    validate_partition(mu);
    check_gl_bounds(nu, mu, n);
    // The ordered alphabet: monomials of s_mu with multiplicity, largest
    // exponent vector first.
    std::vector<std::vector<int>> alphabet;
    for (const auto& [exp, c] : schur_poly(mu, n).terms)
        for (BigInt i = 0; i < c; ++i) alphabet.push_back(exp);
    std::sort(alphabet.begin(), alphabet.end(), std::greater<>());

    SymPoly p;
    p.n = n;
    if (alphabet.empty()) {
        if (nu.empty()) p.terms[std::vector<int>(static_cast<std::size_t>(n), 0)] = 1;
        return p;
    }
    int max_entry = static_cast<int>(alphabet.size()) - 1;
    ssyt_enumerate(nu, max_entry, [&](const std::vector<std::vector<int>>& t) {
        std::vector<int> exp(static_cast<std::size_t>(n), 0);
        for (const auto& row : t)
            for (int letter : row)
                for (int i = 0; i < n; ++i)
                    exp[static_cast<std::size_t>(i)] +=
                        alphabet[static_cast<std::size_t>(letter)][static_cast<std::size_t>(i)];
        p.terms[std::move(exp)] += 1;
        return true;
    });
    if (nu.empty()) p.terms[std::vector<int>(static_cast<std::size_t>(n), 0)] = 1;
    return p;
}

SchurExpansion schur_decompose(SymPoly p) {
    SchurExpansion out;
    while (!p.terms.empty()) {
        // Lex-greatest exponent vector; must be a partition shape.
        auto it = p.terms.rbegin();
        std::vector<int> exp = it->first;
        BigInt c = it->second;
        for (std::size_t i = 1; i < exp.size(); ++i)
            if (exp[i] > exp[i - 1])
                throw VerificationError("leading exponent is not a partition; input not symmetric");
        if (c < 0) throw VerificationError("negative multiplicity; input not Schur-positive");
        Partition lambda;
        for (int e : exp)
            if (e > 0) lambda.push_back(e);
        out[lambda] += c;
        for (const auto& [e2, c2] : schur_poly(lambda, p.n).terms) {
            auto jt = p.terms.find(e2);
            BigInt updated = (jt == p.terms.end() ? BigInt(0) : jt->second) - c * c2;
            if (updated == 0) {
                if (jt != p.terms.end()) p.terms.erase(jt);
            } else {
                p.terms[e2] = updated;
            }
        }
    }
    return out;
}

BigInt gl_coefficient(const Partition& nu, const Partition& mu, const Partition& lambda,
                      int n) {
    validate_partition(lambda);
    if (static_cast<int>(lambda.size()) > n)
        throw UsageError("gl_coefficient needs n >= length of lambda");
    if (partition_size(lambda) != partition_size(nu) * partition_size(mu))
        throw UsageError("gl_coefficient needs |lambda| = |nu|*|mu|");
    SchurExpansion e = schur_decompose(plethysm_poly(nu, mu, n));
    auto it = e.find(lambda);
    return it == e.end() ? BigInt(0) : it->second;
}

std::map<std::pair<Partition, Partition>, BigInt> bbA_truncated(const Partition& mu,
                                                                int n, int m, int dmax) {
    std::map<std::pair<Partition, Partition>, BigInt> table;
    for (int dv = 0; dv <= dmax; ++dv) {
        for (const auto& nu : partitions_of(dv, m)) {
            SchurExpansion e = schur_decompose(plethysm_poly(nu, mu, n));
            for (const auto& [lambda, c] : e)
                if (c != 0) table[{lambda, nu}] = c;
        }
    }
    return table;
}

namespace {

Partition scale_partition(const Partition& mu, int r) {
    Partition out;
    for (int part : mu) out.push_back(part * r);
    return out;
}

}  // namespace

std::vector<BigInt> kirillov_series(const Partition& lambda, const Partition& mu,
                                    const Partition& nu, int n_max) {
    validate_partition(lambda);
    validate_partition(mu);
    validate_partition(nu);
    if (partition_size(lambda) != partition_size(mu) * partition_size(nu))
        throw UsageError("kirillov_series needs |lambda| = |mu|*|nu|");
    std::vector<BigInt> out;
    bool sl2_path = nu.size() <= 1 && lambda.size() <= 2;
    for (int r = 0; r <= n_max; ++r) {
        if (r == 0) {
            out.push_back(1);
            continue;
        }
        if (sl2_path) {
            int h = nu.empty() ? 0 : nu[0];
            std::int64_t l1 = lambda.empty() ? 0 : static_cast<std::int64_t>(lambda[0]) * r;
            std::int64_t l2 = lambda.size() > 1 ? static_cast<std::int64_t>(lambda[1]) * r : 0;
            out.push_back(coefficient(scale_partition(mu, r), h, l1 - l2 + 1));
        } else {
            int n = std::max<int>(2, static_cast<int>(lambda.size()));
            out.push_back(gl_coefficient(scale_partition(mu, r), nu,
                                         scale_partition(lambda, r), n));
        }
    }
    return out;
}

std::optional<std::vector<BigRat>> fit_recurrence(const std::vector<BigInt>& seq,
                                                  int max_order) {
    for (int r = 1; r <= max_order; ++r) {
        if (static_cast<int>(seq.size()) < 2 * r + 1) break;
        // Solve s_n = c_1 s_{n-1} + ... + c_r s_{n-r} for all n >= r by
        // Gaussian elimination over the rationals.
        std::vector<std::vector<BigRat>> rows;
        for (std::size_t n = static_cast<std::size_t>(r); n < seq.size(); ++n) {
            std::vector<BigRat> row;
            for (int i = 1; i <= r; ++i) row.emplace_back(seq[n - static_cast<std::size_t>(i)]);
            row.emplace_back(seq[n]);
            rows.push_back(std::move(row));
        }
        std::size_t cols = static_cast<std::size_t>(r);
        std::vector<std::size_t> pivot_col;
        std::size_t lead = 0;
        for (std::size_t col = 0; col < cols && lead < rows.size(); ++col) {
            std::size_t sel = lead;
            while (sel < rows.size() && rows[sel][col] == 0) ++sel;
            if (sel == rows.size()) continue;
            std::swap(rows[lead], rows[sel]);
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i == lead || rows[i][col] == 0) continue;
                BigRat f = rows[i][col] / rows[lead][col];
                for (std::size_t j = col; j <= cols; ++j)
                    rows[i][j] -= f * rows[lead][j];
            }
            pivot_col.push_back(col);
            ++lead;
        }
        bool consistent = true;
        for (std::size_t i = lead; i < rows.size(); ++i)
            if (rows[i][cols] != 0) consistent = false;
        if (!consistent) continue;
        std::vector<BigRat> c(cols, BigRat(0));
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            c[pivot_col[i]] = rows[i][cols] / rows[i][pivot_col[i]];
        // Verify against every term (free variables were set to zero).
        bool ok = true;
        for (std::size_t n = static_cast<std::size_t>(r); n < seq.size() && ok; ++n) {
            BigRat s = 0;
            for (int i = 1; i <= r; ++i)
                s += c[static_cast<std::size_t>(i - 1)] * BigRat(seq[n - static_cast<std::size_t>(i)]);
            if (s != BigRat(seq[n])) ok = false;
        }
        if (ok) return c;
    }
    return std::nullopt;
}

}  // namespace plethygen
