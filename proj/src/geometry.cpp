#include "plethygen/geometry.hpp"

#include "plethygen/errors.hpp"

#include <algorithm>
#include <numeric>

namespace plethygen {

namespace {

void check_bounds(int w, int h) {
    if (w < 0 || h < 0) throw UsageError("dimension and dilation must be nonnegative");
    if (w > 6 || h > 10)
        throw ResourceError("lattice enumeration limited to w <= 6, h <= 10");
}

std::vector<std::vector<int>> grid_points(int w, int h) {
    std::vector<std::vector<int>> out;
    std::vector<int> v(static_cast<std::size_t>(w), 0);
    while (true) {
        out.push_back(v);
        int i = w - 1;
        while (i >= 0 && v[static_cast<std::size_t>(i)] == h) {
            v[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++v[static_cast<std::size_t>(i)];
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

LatticePointSet face_points(const OrderedSetPartition& gamma, int h) {
    int w = 0;
    for (const auto& block : gamma) {
        if (block.empty()) throw UsageError("empty block in ordered set partition");
        w += static_cast<int>(block.size());
    }
    check_bounds(w, h);
    LatticePointSet out{w, h, {}};
    int k = static_cast<int>(gamma.size());
    // Choose strictly increasing block values 0 <= i_1 < ... < i_k <= h.
    std::vector<int> vals(static_cast<std::size_t>(k));
    auto emit = [&] {
        std::vector<int> v(static_cast<std::size_t>(w), 0);
        for (std::size_t b = 0; b < gamma.size(); ++b)
            for (int idx : gamma[b]) v[static_cast<std::size_t>(idx - 1)] = vals[b];
        out.points.push_back(std::move(v));
    };
    auto rec = [&](auto&& self, int pos, int lo) -> void {
        if (pos == k) {
            emit();
            return;
        }
        for (int x = lo; x <= h - (k - 1 - pos); ++x) {
            vals[static_cast<std::size_t>(pos)] = x;
            self(self, pos + 1, x + 1);
        }
    };
    if (k == 0) {
        if (w == 0) out.points.push_back({});
    } else {
        rec(rec, 0, 0);
    }
    std::sort(out.points.begin(), out.points.end());
    return out;
}

LatticePointSet chamber_points(const std::vector<int>& pi, int h) {
    int w = static_cast<int>(pi.size());
    check_bounds(w, h);
    LatticePointSet out{w, h, {}};
    std::vector<int> v(static_cast<std::size_t>(w), 0);
    auto rec = [&](auto&& self, int i, int lo) -> void {
        if (i == w) {
            out.points.push_back(v);
            return;
        }
        for (int x = lo; x <= h; ++x) {
            v[static_cast<std::size_t>(pi[static_cast<std::size_t>(i)] - 1)] = x;
            int next_lo = (i + 1 < w && pi[static_cast<std::size_t>(i)] >
                                            pi[static_cast<std::size_t>(i + 1)])
                              ? x + 1
                              : x;
            // For the last position next_lo is unused.
            self(self, i + 1, next_lo);
        }
    };
    if (w == 0)
        out.points.push_back({});
    else
        rec(rec, 0, 0);
    std::sort(out.points.begin(), out.points.end());
    return out;
}

LatticePointSet coarse_points(const Tableau& q, int h) {
    int w = 0;
    for (const auto& row : q.rows) w += static_cast<int>(row.size());
    check_bounds(w, h);
    LatticePointSet out{w, h, {}};
    for (auto& v : grid_points(w, h))
        if (rsk(v).q == q.rows) out.points.push_back(std::move(v));
    return out;
}

MonomialTable ipe(const LatticePointSet& points) {
    MonomialTable table;
    for (const auto& v : points.points) {
        std::vector<int> exp(static_cast<std::size_t>(points.h) + 1, 0);
        for (int x : v) ++exp[static_cast<std::size_t>(x)];
        auto [it, inserted] = table.emplace(std::move(exp), BigInt(1));
        if (!inserted) ++it->second;
    }
    return table;
}

QLaurent quantum_ehrhart_direct(const Tableau& q, int h) {
    int w = 0;
    for (const auto& row : q.rows) w += static_cast<int>(row.size());
    QLaurent out;
    for (const auto& v : coarse_points(q, h).points) {
        int s = std::accumulate(v.begin(), v.end(), 0);
        out.add_term(2 * s - static_cast<std::int64_t>(w) * h, 1);
    }
    return out;
}

std::vector<int> chamber_of_point(const std::vector<int>& v) {
    std::vector<int> pi(v.size());
    std::iota(pi.begin(), pi.end(), 1);
    std::stable_sort(pi.begin(), pi.end(), [&](int i, int j) {
        return v[static_cast<std::size_t>(i - 1)] < v[static_cast<std::size_t>(j - 1)];
    });
    return pi;
}

OrderedSetPartition face_of_point(const std::vector<int>& v) {
    std::vector<int> pi = chamber_of_point(v);
    OrderedSetPartition gamma;
    for (int idx : pi) {
        int val = v[static_cast<std::size_t>(idx - 1)];
        if (gamma.empty() ||
            v[static_cast<std::size_t>(gamma.back().front() - 1)] != val)
            gamma.emplace_back();
        gamma.back().push_back(idx);
    }
    return gamma;
}

std::vector<int> chamber_min_vertex(const std::vector<int>& pi) {
    std::vector<int> p(pi.size(), 0);
    for (std::size_t i = 1; i < pi.size(); ++i) {
        int prev = p[static_cast<std::size_t>(pi[i - 1] - 1)];
        p[static_cast<std::size_t>(pi[i] - 1)] = prev + (pi[i - 1] > pi[i] ? 1 : 0);
    }
    return p;
}

MonomialTable monomial_qsym(const std::vector<int>& alpha, int h) {
    MonomialTable table;
    int k = static_cast<int>(alpha.size());
    std::vector<int> idx(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, int pos, int lo) -> void {
        if (pos == k) {
            std::vector<int> exp(static_cast<std::size_t>(h) + 1, 0);
            for (int j = 0; j < k; ++j)
                exp[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])] =
                    alpha[static_cast<std::size_t>(j)];
            table[std::move(exp)] += 1;
            return;
        }
        for (int x = lo; x <= h - (k - 1 - pos); ++x) {
            idx[static_cast<std::size_t>(pos)] = x;
            self(self, pos + 1, x + 1);
        }
    };
    if (k == 0) {
        table[std::vector<int>(static_cast<std::size_t>(h) + 1, 0)] = 1;
    } else {
        rec(rec, 0, 0);
    }
    return table;
}

namespace {

/// All compositions of n, in a deterministic order.
std::vector<std::vector<int>> compositions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = 1; p <= rem; ++p) {
            cur.push_back(p);
            self(self, rem - p);
            cur.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

}  // namespace

MonomialTable fundamental_qsym(const std::vector<int>& alpha, int h) {
    // Refinements of alpha: split each part independently into a composition.
    std::vector<std::vector<std::vector<int>>> splits;
    for (int part : alpha) splits.push_back(compositions_of(part));
    MonomialTable table;
    std::vector<int> beta;
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == splits.size()) {
            for (const auto& [exp, c] : monomial_qsym(beta, h)) table[exp] += c;
            return;
        }
        for (const auto& piece : splits[pos]) {
            std::size_t before = beta.size();
            beta.insert(beta.end(), piece.begin(), piece.end());
            self(self, pos + 1);
            beta.resize(before);
        }
    };
    rec(rec, 0);
    for (auto it = table.begin(); it != table.end();)
        it = it->second == 0 ? table.erase(it) : std::next(it);
    return table;
}

MonomialTable schur_table(const Partition& mu, int h) {
    MonomialTable table;
    ssyt_enumerate(mu, h, [&](const std::vector<std::vector<int>>& t) {
        std::vector<int> exp(static_cast<std::size_t>(h) + 1, 0);
        for (const auto& row : t)
            for (int x : row) ++exp[static_cast<std::size_t>(x)];
        table[std::move(exp)] += 1;
        return true;
    });
    return table;
}

}  // namespace plethygen
