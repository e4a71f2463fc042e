#include "plethygen/sl2.hpp"

#include "plethygen/errors.hpp"
#include "plethygen/qehr.hpp"

#include <mutex>
#include <tuple>

namespace plethygen {

namespace {

QLaurent splet_ssyt(const Partition& mu, int h) {
    int w = partition_size(mu);
    QLaurent out;
    ssyt_enumerate(mu, h, [&](const std::vector<std::vector<int>>& t) {
        std::int64_t s = 0;
        for (const auto& row : t)
            for (int x : row) s += x;
        out.add_term(2 * s - static_cast<std::int64_t>(w) * h, 1);
        return true;
    });
    return out;
}

}  // namespace

QLaurent splet(const Partition& mu, int h, SpletMethod method) {
    validate_partition(mu);
    if (h < 0) throw UsageError("splet needs h >= 0");
    int w = partition_size(mu);
    if (method == SpletMethod::Auto)
        method = (mu.size() <= 1) ? SpletMethod::Gauss : SpletMethod::Ssyt;
    switch (method) {
        case SpletMethod::Ssyt:
            if (static_cast<std::int64_t>(w) * (h + 1) > 200)
                throw ResourceError("splet ssyt work bound exceeded");
            return splet_ssyt(mu, h);
        case SpletMethod::Qehr: {
            QSeries s = series_expand(qehr_mu(mu), static_cast<std::size_t>(h));
            return s[static_cast<std::size_t>(h)];
        }
        case SpletMethod::Gauss:
            if (mu.size() > 1)
                throw UsageError("gauss method applies to single-row mu only");
            return q_binomial_centered(w + h, w);
        default:
            throw InternalError("unreachable splet method");
    }
}

QintDecomposition decompose_qint(const QLaurent& f) {
    if (!f.is_symmetric())
        throw UsageError("decompose_qint needs a q <-> 1/q symmetric input");
    QintDecomposition out;
    QLaurent rest = f;
    while (!rest.is_zero()) {
        std::int64_t e = rest.max_exp();
        BigInt c = rest.coeff(e);
        if (c < 0)
            throw UsageError("not a nonnegative combination of q-integers");
        std::int64_t k = e + 1;
        out[k] = c;
        rest -= QLaurent::q_integer(k) * c;
    }
    return out;
}

BigInt coefficient(const Partition& mu, int h, std::int64_t k, SpletMethod method) {
    if (k <= 0) return 0;
    QintDecomposition d = decompose_qint(splet(mu, h, method));
    auto it = d.find(k);
    return it == d.end() ? BigInt(0) : it->second;
}

namespace {

using MemoKey = std::tuple<int, int, std::int64_t>;

bool out_of_range(int w, int h, std::int64_t k) {
    return k <= 0 || k > static_cast<std::int64_t>(w) * h + 1 ||
           (k - (static_cast<std::int64_t>(w) * h + 1)) % 2 != 0;
}

BigInt a_by_w(int w, int h, std::int64_t k) {
    if (out_of_range(w, h, k)) return 0;
    if (w == 0 || h == 0) return k == 1 ? 1 : 0;
    static std::map<MemoKey, BigInt> memo;
    static std::mutex mutex;
    MemoKey key{w, h, k};
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    BigInt val;
    if (k <= h)
        val = a_by_w(w, h - 1, k + w) - a_by_w(w - 1, h, h - k);
    else if (k > static_cast<std::int64_t>(w) * h + 1 - 2 * w)
        val = a_by_w(w - 1, h, k - h);
    else
        val = a_by_w(w - 1, h, k - h) + a_by_w(w, h - 1, k + w);
    std::lock_guard<std::mutex> lock(mutex);
    memo.emplace(key, val);
    return val;
}

BigInt a_by_h(int w, int h, std::int64_t k) {
    if (out_of_range(w, h, k)) return 0;
    if (w == 0 || h == 0) return k == 1 ? 1 : 0;
    static std::map<MemoKey, BigInt> memo;
    static std::mutex mutex;
    MemoKey key{w, h, k};
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    BigInt val;
    if (k <= w)
        val = a_by_h(w - 1, h, k + h) - a_by_h(w, h - 1, w - k);
    else if (k > static_cast<std::int64_t>(w) * h + 1 - 2 * h)
        val = a_by_h(w, h - 1, k - w);
    else
        val = a_by_h(w, h - 1, k - w) + a_by_h(w - 1, h, k + h);
    std::lock_guard<std::mutex> lock(mutex);
    memo.emplace(key, val);
    return val;
}

void check_recurrence_args(int w, int h, std::int64_t k) {
    if (w < 1 || h < 1) throw UsageError("recurrence needs w, h >= 1");
    if (k < 1 || k > static_cast<std::int64_t>(w) * h + 1)
        throw UsageError("recurrence needs 1 <= k <= wh+1");
    if ((k - (static_cast<std::int64_t>(w) * h + 1)) % 2 != 0)
        throw UsageError("recurrence needs k == wh+1 (mod 2)");
}

}  // namespace

BigInt recurrence_w(int w, int h, std::int64_t k) {
    check_recurrence_args(w, h, k);
    return a_by_w(w, h, k);
}

BigInt recurrence_h(int w, int h, std::int64_t k) {
    check_recurrence_args(w, h, k);
    return a_by_h(w, h, k);
}

std::int64_t pi3_count(int h, std::int64_t k) {
    std::int64_t count = 0;
    for (int m1 = 0; m1 <= h; ++m1)
        for (int m2 = 0; m2 <= m1; m2 += 2) {
            if (m1 < 2 * m2 || m1 == 2 * m2 + 1) continue;
            if (3 * static_cast<std::int64_t>(h) - 2 * (m1 + m2) + 1 == k) ++count;
        }
    return count;
}

std::int64_t cone_count(Cone which, int h, std::int64_t k) {
    std::int64_t p1 = which == Cone::B1 ? h : h - 3;
    std::int64_t rest = which == Cone::B1 ? k - 1 : k - 4;
    if (p1 < 0 || rest < 0) return 0;
    // p = a(4,0,0,0) + b(2,0,2,0) + c(1,0,0,3): need 4a+2b+c = p1 and
    // 2b+3c = rest with a,b,c >= 0.
    std::int64_t count = 0;
    for (std::int64_t c = 0; 3 * c <= rest; ++c) {
        if ((rest - 3 * c) % 2 != 0) continue;
        std::int64_t b = (rest - 3 * c) / 2;
        std::int64_t num = p1 - 2 * b - c;
        if (num >= 0 && num % 4 == 0) ++count;
    }
    return count;
}

}  // namespace plethygen
