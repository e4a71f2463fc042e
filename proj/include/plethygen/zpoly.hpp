#pragma once

#include "plethygen/qlaurent.hpp"  // for BigInt

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace plethygen {

/// Univariate polynomial in z over arbitrary-precision integers.
/// coeff(i) is the coefficient of z^i; trailing zeros are trimmed.
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(std::vector<BigInt> coeffs);
    static ZPoly zero() { return ZPoly{}; }
    static ZPoly one() { return monomial(0, 1); }
    static ZPoly monomial(std::size_t exp, BigInt coeff);
    /// 1 - z^b.
    static ZPoly one_minus_power(std::size_t b);
    /// 1 + z + ... + z^{d-1}.
    static ZPoly ones(std::size_t d);

    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t degree() const;  // -1 for zero
    BigInt coeff(std::size_t i) const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    BigInt leading() const;

    ZPoly operator+(const ZPoly& rhs) const;
    ZPoly operator-(const ZPoly& rhs) const;
    ZPoly operator*(const ZPoly& rhs) const;
    ZPoly operator*(const BigInt& c) const;
    ZPoly operator-() const;
    bool operator==(const ZPoly& rhs) const = default;

    /// Exact quotient, or nullopt when the division has a remainder or a
    /// non-integer coefficient.
    std::optional<ZPoly> divided_exactly_by(const ZPoly& d) const;

    BigInt content() const;     // gcd of coefficients, nonnegative
    ZPoly primitive() const;    // divided by content (sign of leading kept)
    bool is_palindromic() const;

    std::string str(const char* var = "z") const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// Polynomial gcd over the integers (primitive, positive leading
/// coefficient). gcd(0, p) = +/- p made primitive.
ZPoly zpoly_gcd(ZPoly a, ZPoly b);

}  // namespace plethygen
