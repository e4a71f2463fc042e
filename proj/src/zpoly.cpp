#include "plethygen/zpoly.hpp"

#include "plethygen/errors.hpp"

#include <algorithm>
#include <sstream>

namespace plethygen {

ZPoly::ZPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::monomial(std::size_t exp, BigInt coeff) {
    ZPoly r;
    if (coeff != 0) {
        r.coeffs_.assign(exp + 1, BigInt(0));
        r.coeffs_[exp] = std::move(coeff);
    }
    return r;
}

ZPoly ZPoly::one_minus_power(std::size_t b) {
    ZPoly r;
    r.coeffs_.assign(b + 1, BigInt(0));
    r.coeffs_[0] = 1;
    r.coeffs_[b] = -1;
    return r;
}

ZPoly ZPoly::ones(std::size_t d) {
    ZPoly r;
    r.coeffs_.assign(d, BigInt(1));
    r.trim();
    return r;
}

void ZPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t ZPoly::degree() const {
    return static_cast<std::int64_t>(coeffs_.size()) - 1;
}

BigInt ZPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

BigInt ZPoly::leading() const {
    if (coeffs_.empty()) throw InternalError("leading of zero ZPoly");
    return coeffs_.back();
}

ZPoly ZPoly::operator+(const ZPoly& rhs) const {
    std::vector<BigInt> c(std::max(coeffs_.size(), rhs.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) c[i] += rhs.coeffs_[i];
    return ZPoly(std::move(c));
}

ZPoly ZPoly::operator-(const ZPoly& rhs) const { return *this + (-rhs); }

ZPoly ZPoly::operator*(const ZPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return {};
    std::vector<BigInt> c(coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    return ZPoly(std::move(c));
}

ZPoly ZPoly::operator*(const BigInt& c) const {
    if (c == 0) return {};
    ZPoly r = *this;
    for (auto& v : r.coeffs_) v *= c;
    return r;
}

ZPoly ZPoly::operator-() const {
    ZPoly r = *this;
    for (auto& v : r.coeffs_) v = -v;
    return r;
}

std::optional<ZPoly> ZPoly::divided_exactly_by(const ZPoly& d) const {
    if (d.is_zero()) throw UsageError("division by zero polynomial");
    if (is_zero()) return ZPoly{};
    if (degree() < d.degree()) return std::nullopt;
    std::vector<BigInt> rem = coeffs_;
    std::vector<BigInt> quo(coeffs_.size() - d.coeffs_.size() + 1, BigInt(0));
    for (std::size_t k = quo.size(); k-- > 0;) {
        BigInt top = rem[k + d.coeffs_.size() - 1];
        if (top == 0) continue;
        if (top % d.leading() != 0) return std::nullopt;
        BigInt q = top / d.leading();
        quo[k] = q;
        for (std::size_t j = 0; j < d.coeffs_.size(); ++j)
            rem[k + j] -= q * d.coeffs_[j];
    }
    for (const auto& v : rem)
        if (v != 0) return std::nullopt;
    return ZPoly(std::move(quo));
}

BigInt ZPoly::content() const {
    BigInt g = 0;
    for (const auto& v : coeffs_) g = boost::multiprecision::gcd(g, v);
    return g;
}

ZPoly ZPoly::primitive() const {
    if (is_zero()) return {};
    BigInt g = content();
    ZPoly r = *this;
    for (auto& v : r.coeffs_) v /= g;
    return r;
}

bool ZPoly::is_palindromic() const {
    if (is_zero()) return true;
    // Palindromic over the support window: a leading power of the variable
    // only shifts the coefficient word.
    std::size_t lo = 0;
    while (coeffs_[lo] == 0) ++lo;
    std::size_t n = coeffs_.size();
    for (std::size_t i = lo; i < n; ++i)
        if (coeffs_[i] != coeffs_[n - 1 - (i - lo)]) return false;
    return true;
}

std::string ZPoly::str(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i] == 0) continue;
        BigInt a = coeffs_[i];
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
        if (i == 0) {
            out << a;
        } else {
            if (a != 1) out << a << "*";
            out << var;
            if (i != 1) out << "^" << i;
        }
    }
    return out.str();
}

namespace {

// Pseudo-remainder of a by b (deg a >= deg b > -1).
ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
    while (!a.is_zero() && a.degree() >= b.degree()) {
        std::int64_t shift = a.degree() - b.degree();
        ZPoly t = ZPoly::monomial(static_cast<std::size_t>(shift), a.leading()) * b;
        a = a * b.leading() - t;
    }
    return a;
}

}  // namespace

ZPoly zpoly_gcd(ZPoly a, ZPoly b) {
    if (a.is_zero()) std::swap(a, b);
    if (b.is_zero()) {
        if (a.is_zero()) return a;
        a = a.primitive();
        return a.leading() < 0 ? -a : a;
    }
    a = a.primitive();
    b = b.primitive();
    while (!b.is_zero()) {
        if (a.degree() < b.degree()) std::swap(a, b);
        ZPoly r = pseudo_rem(a, b).primitive();
        a = std::move(b);
        b = std::move(r);
    }
    return a.leading() < 0 ? -a : a;
}

}  // namespace plethygen
