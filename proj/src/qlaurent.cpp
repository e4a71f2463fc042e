#include "plethygen/qlaurent.hpp"

#include "plethygen/errors.hpp"

#include <sstream>

namespace plethygen {

QLaurent QLaurent::monomial(std::int64_t exp, BigInt coeff) {
    QLaurent r;
    if (coeff != 0) r.terms_[exp] = std::move(coeff);
    return r;
}

QLaurent QLaurent::q_integer(std::int64_t n) {
    QLaurent r;
    for (std::int64_t e = 1 - n; e <= n - 1; e += 2) r.terms_[e] = 1;
    return r;
}

BigInt QLaurent::coeff(std::int64_t exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? BigInt(0) : it->second;
}

std::int64_t QLaurent::min_exp() const {
    if (terms_.empty()) throw InternalError("min_exp of zero QLaurent");
    return terms_.begin()->first;
}

std::int64_t QLaurent::max_exp() const {
    if (terms_.empty()) throw InternalError("max_exp of zero QLaurent");
    return terms_.rbegin()->first;
}

void QLaurent::add_term(std::int64_t exp, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

QLaurent& QLaurent::operator+=(const QLaurent& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

QLaurent QLaurent::operator+(const QLaurent& rhs) const {
    QLaurent r = *this;
    r += rhs;
    return r;
}

QLaurent QLaurent::operator-(const QLaurent& rhs) const {
    QLaurent r = *this;
    r -= rhs;
    return r;
}

QLaurent QLaurent::operator*(const QLaurent& rhs) const {
    QLaurent r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : rhs.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

QLaurent QLaurent::operator*(const BigInt& c) const {
    QLaurent r;
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

QLaurent QLaurent::operator-() const {
    QLaurent r;
    for (const auto& [e, v] : terms_) r.terms_[e] = -v;
    return r;
}

QLaurent QLaurent::inverted() const {
    QLaurent r;
    for (const auto& [e, v] : terms_) r.terms_[-e] = v;
    return r;
}

QLaurent QLaurent::shifted(std::int64_t shift) const {
    QLaurent r;
    for (const auto& [e, v] : terms_) r.terms_[e + shift] = v;
    return r;
}

QLaurent QLaurent::positive_part() const {
    QLaurent r;
    for (auto it = terms_.lower_bound(0); it != terms_.end(); ++it)
        r.terms_[it->first] = it->second;
    return r;
}

BigInt QLaurent::at_one() const {
    BigInt s = 0;
    for (const auto& [e, v] : terms_) s += v;
    return s;
}

std::string QLaurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Highest power first, to match the usual handwritten form.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        BigInt a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (e == 0) {
            out << a;
        } else {
            if (a != 1) out << a << "*";
            out << "q";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

}  // namespace plethygen
