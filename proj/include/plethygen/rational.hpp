#pragma once

#include "plethygen/qlaurent.hpp"
#include "plethygen/zpoly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace plethygen {

/// Polynomial in z (nonnegative exponents) with QLaurent coefficients.
class ZQPoly {
public:
    ZQPoly() = default;
    static ZQPoly zero() { return ZQPoly{}; }
    static ZQPoly one() { return term(0, QLaurent::one()); }
    static ZQPoly term(std::int64_t zexp, QLaurent c);

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<std::int64_t, QLaurent>& coeffs() const { return coeffs_; }
    QLaurent coeff(std::int64_t zexp) const;
    std::int64_t z_degree() const;  // -1 for zero
    std::int64_t min_q_exp() const;

    void add_term(std::int64_t zexp, const QLaurent& c);

    ZQPoly operator+(const ZQPoly& rhs) const;
    ZQPoly operator-(const ZQPoly& rhs) const;
    ZQPoly operator*(const ZQPoly& rhs) const;
    ZQPoly operator-() const;
    bool operator==(const ZQPoly& rhs) const = default;

    /// Multiply by z^{shift}; shift >= 0.
    ZQPoly z_shifted(std::int64_t shift) const;
    /// Substitute z -> 1/z, q -> 1/q, then multiply by z^{z_degree()} so
    /// exponents are nonnegative again.
    ZQPoly reversed() const;
    /// Multiply every coefficient by q^{shift}.
    ZQPoly q_shifted(std::int64_t shift) const;
    /// Specialize q = 1.
    ZPoly at_q1() const;

    std::string str() const;

private:
    std::map<std::int64_t, QLaurent> coeffs_;
};

/// One denominator factor (1 - q^a z^b)^m.
struct DenFactor {
    std::int64_t a = 0;  // q-exponent, may be negative
    std::int64_t b = 1;  // z-exponent, >= 1
    std::int64_t m = 1;  // multiplicity, >= 1

    friend bool operator==(const DenFactor&, const DenFactor&) = default;
};

/// ZQPoly numerator over a canonical multiset of factors (1 - q^a z^b)^m,
/// sorted by (b, a). No automatic cancellation is performed.
class FactoredRational {
public:
    FactoredRational() = default;  // zero
    FactoredRational(ZQPoly numerator, std::vector<DenFactor> factors);

    static FactoredRational zero() { return FactoredRational{}; }
    static FactoredRational constant(QLaurent c);

    const ZQPoly& numerator() const { return num_; }
    const std::vector<DenFactor>& factors() const { return factors_; }
    bool is_zero() const { return num_.is_zero(); }

    /// The denominator expanded as a polynomial.
    ZQPoly denominator_poly() const;
    std::int64_t denominator_z_degree() const;

    bool operator==(const FactoredRational& rhs) const = default;

    std::string str() const;

private:
    ZQPoly num_;
    std::vector<DenFactor> factors_;
};

/// Truncated power series in z: coefficient of z^h for h = 0..order().
class QSeries {
public:
    QSeries() : coeffs_(1) {}
    explicit QSeries(std::size_t order) : coeffs_(order + 1) {}
    explicit QSeries(std::vector<QLaurent> coeffs);

    std::size_t order() const { return coeffs_.size() - 1; }
    const QLaurent& operator[](std::size_t h) const { return coeffs_[h]; }
    QLaurent& operator[](std::size_t h) { return coeffs_[h]; }
    const std::vector<QLaurent>& coeffs() const { return coeffs_; }

    QSeries truncated(std::size_t order) const;
    bool operator==(const QSeries& rhs) const = default;

private:
    std::vector<QLaurent> coeffs_;
};

// --- operations ---------------------------------------------------------

/// Product with numerators multiplied and factor multisets merged.
FactoredRational rational_mul(const FactoredRational& r1, const FactoredRational& r2);

/// Sum over a common denominator (multiplicity-wise max of the factor
/// multisets).
FactoredRational rational_add(const FactoredRational& r1, const FactoredRational& r2);

/// Equality as rational functions, by cross-multiplication. Factors common
/// to both sides are cancelled first.
bool rational_equal(const FactoredRational& r1, const FactoredRational& r2);

/// Equality of sign1 * z^{zshift1} * r1 and sign2 * z^{zshift2} * r2 as
/// rational functions; the shifts may be negative.
bool shifted_rational_equal(int sign1, std::int64_t zshift1, const FactoredRational& r1,
                            int sign2, std::int64_t zshift2, const FactoredRational& r2);

/// Power series coefficients of z^0..z^m.
QSeries series_expand(const FactoredRational& r, std::size_t m);

/// Truncated Cauchy product.
QSeries series_mul(const QSeries& s1, const QSeries& s2, std::size_t m);
QSeries series_mul(const QSeries& s, const ZQPoly& p, std::size_t m);

/// r(1/z, 1/q) in the normal form sign * z^{zshift} * rational, where the
/// rational component keeps nonnegative z-exponents. Powers of q are folded
/// into the (Laurent) numerator, so qshift is always 0.
struct InvertedRational {
    int sign = 1;
    std::int64_t qshift = 0;
    std::int64_t zshift = 0;
    FactoredRational rational;
};
InvertedRational invert_variables(const FactoredRational& r);

/// r at q = 1, reduced to lowest terms; den(0) > 0.
struct ZRational {
    ZPoly num;
    ZPoly den;
};
ZRational specialize_q1(const FactoredRational& r);

// --- JSON ----------------------------------------------------------------

std::string rational_to_json(const FactoredRational& r);
FactoredRational rational_from_json(const std::string& json);

}  // namespace plethygen
