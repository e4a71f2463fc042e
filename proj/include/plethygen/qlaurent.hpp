#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <string>

namespace plethygen {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Exact Laurent polynomial in q with arbitrary-precision integer
/// coefficients. Canonical: no zero coefficients are ever stored, so equal
/// values have identical term maps.
class QLaurent {
public:
    QLaurent() = default;

    static QLaurent zero() { return QLaurent{}; }
    static QLaurent one() { return monomial(0, 1); }
    static QLaurent monomial(std::int64_t exp, BigInt coeff);
    /// [n]_q = q^{n-1} + q^{n-3} + ... + q^{1-n}; zero for n <= 0.
    static QLaurent q_integer(std::int64_t n);

    bool is_zero() const { return terms_.empty(); }
    const std::map<std::int64_t, BigInt>& terms() const { return terms_; }
    BigInt coeff(std::int64_t exp) const;
    std::int64_t min_exp() const;  // requires nonzero
    std::int64_t max_exp() const;  // requires nonzero

    void add_term(std::int64_t exp, const BigInt& c);

    QLaurent operator+(const QLaurent& rhs) const;
    QLaurent operator-(const QLaurent& rhs) const;
    QLaurent operator*(const QLaurent& rhs) const;
    QLaurent operator*(const BigInt& c) const;
    QLaurent operator-() const;
    QLaurent& operator+=(const QLaurent& rhs);
    QLaurent& operator-=(const QLaurent& rhs);
    bool operator==(const QLaurent& rhs) const = default;

    /// Substitute q -> q^{-1}.
    QLaurent inverted() const;
    /// Multiply by q^{shift}.
    QLaurent shifted(std::int64_t shift) const;
    /// Drop all terms with negative q-exponent (the PT^q operator on a
    /// single coefficient).
    QLaurent positive_part() const;
    /// Invariant under q <-> q^{-1}?
    bool is_symmetric() const { return *this == inverted(); }
    /// Sum of coefficients, i.e. the value at q = 1.
    BigInt at_one() const;

    std::string str() const;

private:
    std::map<std::int64_t, BigInt> terms_;
};

}  // namespace plethygen
