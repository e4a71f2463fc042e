#include "plethygen/combinat.hpp"

#include "plethygen/errors.hpp"

#include <algorithm>
#include <numeric>

namespace plethygen {

void validate_partition(const Partition& mu) {
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] <= 0) throw UsageError("partition parts must be positive");
        if (i > 0 && mu[i] > mu[i - 1])
            throw UsageError("partition parts must be weakly decreasing");
    }
}

int partition_size(const Partition& mu) {
    return std::accumulate(mu.begin(), mu.end(), 0);
}

Partition conjugate_partition(const Partition& mu) {
    Partition c;
    if (mu.empty()) return c;
    c.resize(static_cast<std::size_t>(mu[0]));
    for (int part : mu)
        for (int j = 0; j < part; ++j) ++c[static_cast<std::size_t>(j)];
    return c;
}

namespace {

void partitions_rec(int remaining, int max_part, int max_parts, Partition& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    if (max_parts == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, max_parts - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int w, int max_parts) {
    if (w < 0) throw UsageError("partitions_of needs w >= 0");
    std::vector<Partition> out;
    Partition cur;
    partitions_rec(w, w, max_parts, cur, out);
    return out;
}

std::vector<std::vector<int>> hook_lengths(const Partition& mu) {
    Partition c = conjugate_partition(mu);
    std::vector<std::vector<int>> h(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) {
        h[i].resize(static_cast<std::size_t>(mu[i]));
        for (int j = 0; j < mu[i]; ++j)
            h[i][static_cast<std::size_t>(j)] =
                (mu[i] - j) + (c[static_cast<std::size_t>(j)] - static_cast<int>(i)) - 1;
    }
    return h;
}

BigInt syt_count(const Partition& mu) {
    validate_partition(mu);
    int n = partition_size(mu);
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    for (const auto& row : hook_lengths(mu))
        for (int h : row) f /= h;
    return f;
}

std::vector<int> tableau_descents(const Tableau& t) {
    int n = 0;
    std::vector<int> row_of;
    for (std::size_t r = 0; r < t.rows.size(); ++r)
        for (int v : t.rows[r]) {
            n = std::max(n, v);
            if (static_cast<std::size_t>(v) >= row_of.size()) row_of.resize(v + 1);
            row_of[static_cast<std::size_t>(v)] = static_cast<int>(r);
        }
    std::vector<int> des;
    for (int i = 1; i < n; ++i)
        if (row_of[static_cast<std::size_t>(i + 1)] > row_of[static_cast<std::size_t>(i)])
            des.push_back(i);
    return des;
}

int tableau_maj(const Tableau& t) {
    int m = 0;
    for (int d : tableau_descents(t)) m += d;
    return m;
}

namespace {

void syt_rec(const Partition& mu, int next, int n, std::vector<std::vector<int>>& fill,
             std::vector<int>& row_len, std::vector<Tableau>& out) {
    if (next > n) {
        out.push_back({fill});
        return;
    }
    for (std::size_t r = 0; r < mu.size(); ++r) {
        int j = row_len[r];
        if (j >= mu[r]) continue;
        if (r > 0 && row_len[r - 1] <= j) continue;
        fill[r].push_back(next);
        ++row_len[r];
        syt_rec(mu, next + 1, n, fill, row_len, out);
        --row_len[r];
        fill[r].pop_back();
    }
}

}  // namespace

std::vector<Tableau> syt_enumerate(const Partition& mu) {
    validate_partition(mu);
    int n = partition_size(mu);
    std::vector<std::vector<int>> fill(mu.size());
    std::vector<int> row_len(mu.size(), 0);
    std::vector<Tableau> out;
    syt_rec(mu, 1, n, fill, row_len, out);
    return out;
}

namespace {

// Fill cells in row-reading order, so the stream is lexicographic in the
// reading word.
bool ssyt_rec(const Partition& mu, int max_entry, std::size_t r, int j,
              std::vector<std::vector<int>>& fill,
              const std::function<bool(const std::vector<std::vector<int>>&)>& visit) {
    if (r == mu.size()) return visit(fill);
    if (j == mu[r]) return ssyt_rec(mu, max_entry, r + 1, 0, fill, visit);
    int lo = 0;
    if (j > 0) lo = std::max(lo, fill[r][static_cast<std::size_t>(j - 1)]);
    if (r > 0) lo = std::max(lo, fill[r - 1][static_cast<std::size_t>(j)] + 1);
    for (int v = lo; v <= max_entry; ++v) {
        fill[r].push_back(v);
        bool keep_going = ssyt_rec(mu, max_entry, r, j + 1, fill, visit);
        fill[r].pop_back();
        if (!keep_going) return false;
    }
    return true;
}

}  // namespace

bool ssyt_enumerate(const Partition& mu, int max_entry,
                    const std::function<bool(const std::vector<std::vector<int>>&)>& visit) {
    validate_partition(mu);
    if (max_entry < 0) return true;
    std::vector<std::vector<int>> fill(mu.size());
    return ssyt_rec(mu, max_entry, 0, 0, fill, visit);
}

RSKPair rsk(const std::vector<int>& word) {
    RSKPair out;
    for (std::size_t k = 0; k < word.size(); ++k) {
        int x = word[k];
        std::size_t r = 0;
        while (true) {
            if (r == out.p.size()) {
                out.p.emplace_back();
                out.q.emplace_back();
            }
            auto& row = out.p[r];
            auto it = std::upper_bound(row.begin(), row.end(), x);
            if (it == row.end()) {
                row.push_back(x);
                out.q[r].push_back(static_cast<int>(k) + 1);
                break;
            }
            std::swap(*it, x);
            ++r;
        }
    }
    return out;
}

std::vector<int> inverse_rsk(const RSKPair& pair) {
    auto p = pair.p;
    auto q = pair.q;
    std::size_t n = 0;
    for (const auto& row : q) n += row.size();
    std::vector<int> word(n);
    for (std::size_t k = n; k-- > 0;) {
        // Entry k+1 of the recording tableau sits at an outer corner.
        std::size_t r = q.size();
        while (r-- > 0) {
            if (!q[r].empty() && q[r].back() == static_cast<int>(k) + 1) break;
        }
        q[r].pop_back();
        int x = p[r].back();
        p[r].pop_back();
        while (r-- > 0) {
            // Reverse bump: the rightmost entry strictly below x moves down.
            auto it = std::lower_bound(p[r].begin(), p[r].end(), x);
            if (it == p[r].begin()) throw InternalError("inverse_rsk: invalid pair");
            --it;
            std::swap(*it, x);
        }
        word[k] = x;
        while (!p.empty() && p.back().empty()) {
            p.pop_back();
            q.pop_back();
        }
    }
    return word;
}

std::vector<std::vector<int>> permutations_of(int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<int> position_descents(const std::vector<int>& word) {
    std::vector<int> des;
    for (std::size_t i = 1; i < word.size(); ++i)
        if (word[i - 1] > word[i]) des.push_back(static_cast<int>(i));
    return des;
}

std::vector<int> letter_descents(const std::vector<int>& perm) {
    std::vector<int> pos(perm.size() + 1);
    for (std::size_t i = 0; i < perm.size(); ++i)
        pos[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
    std::vector<int> des;
    for (std::size_t v = 1; v < perm.size(); ++v)
        if (pos[v + 1] < pos[v]) des.push_back(static_cast<int>(v));
    return des;
}

std::vector<int> descent_composition(const std::vector<int>& word) {
    std::vector<int> comp;
    if (word.empty()) return comp;
    int run = 1;
    for (std::size_t i = 1; i < word.size(); ++i) {
        if (word[i - 1] > word[i]) {
            comp.push_back(run);
            run = 1;
        } else {
            ++run;
        }
    }
    comp.push_back(run);
    return comp;
}

int word_maj(const std::vector<int>& word) {
    int m = 0;
    for (int d : position_descents(word)) m += d;
    return m;
}

QLaurent q_binomial_centered(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return QLaurent::zero();
    // Gaussian polynomial in t, built by multiplying in (1 - t^{n-k+i}) and
    // dividing out (1 - t^i) exactly, i = 1..k.
    std::vector<BigInt> g{BigInt(1)};
    for (std::int64_t i = 1; i <= k; ++i) {
        std::int64_t e = n - k + i;
        std::vector<BigInt> h(g.size() + static_cast<std::size_t>(e), BigInt(0));
        for (std::size_t j = 0; j < g.size(); ++j) {
            h[j] += g[j];
            h[j + static_cast<std::size_t>(e)] -= g[j];
        }
        // Divide by (1 - t^i): u_j = h_j + u_{j-i}, then the top i entries
        // must vanish.
        std::vector<BigInt> u(h.size(), BigInt(0));
        for (std::size_t j = 0; j < h.size(); ++j) {
            u[j] = h[j];
            if (j >= static_cast<std::size_t>(i)) u[j] += u[j - static_cast<std::size_t>(i)];
        }
        for (std::size_t j = h.size() - static_cast<std::size_t>(i); j < h.size(); ++j)
            if (u[j] != 0) throw InternalError("q_binomial_centered: inexact division");
        u.resize(h.size() - static_cast<std::size_t>(i));
        g = std::move(u);
    }
    QLaurent out;
    std::int64_t center = k * (n - k);
    for (std::size_t j = 0; j < g.size(); ++j)
        out.add_term(2 * static_cast<std::int64_t>(j) - center, g[j]);
    return out;
}

}  // namespace plethygen
