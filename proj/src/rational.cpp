#include "plethygen/rational.hpp"

#include "plethygen/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace plethygen {

// --- ZQPoly ----------------------------------------------------------------

ZQPoly ZQPoly::term(std::int64_t zexp, QLaurent c) {
    ZQPoly r;
    if (zexp < 0) throw InternalError("negative z-exponent in ZQPoly");
    if (!c.is_zero()) r.coeffs_[zexp] = std::move(c);
    return r;
}

QLaurent ZQPoly::coeff(std::int64_t zexp) const {
    auto it = coeffs_.find(zexp);
    return it == coeffs_.end() ? QLaurent::zero() : it->second;
}

std::int64_t ZQPoly::z_degree() const {
    return coeffs_.empty() ? -1 : coeffs_.rbegin()->first;
}

std::int64_t ZQPoly::min_q_exp() const {
    if (coeffs_.empty()) throw InternalError("min_q_exp of zero ZQPoly");
    std::int64_t m = coeffs_.begin()->second.min_exp();
    for (const auto& [z, c] : coeffs_) m = std::min(m, c.min_exp());
    return m;
}

void ZQPoly::add_term(std::int64_t zexp, const QLaurent& c) {
    if (c.is_zero()) return;
    if (zexp < 0) throw InternalError("negative z-exponent in ZQPoly");
    auto [it, inserted] = coeffs_.emplace(zexp, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

ZQPoly ZQPoly::operator+(const ZQPoly& rhs) const {
    ZQPoly r = *this;
    for (const auto& [z, c] : rhs.coeffs_) r.add_term(z, c);
    return r;
}

ZQPoly ZQPoly::operator-(const ZQPoly& rhs) const { return *this + (-rhs); }

ZQPoly ZQPoly::operator*(const ZQPoly& rhs) const {
    ZQPoly r;
    for (const auto& [z1, c1] : coeffs_)
        for (const auto& [z2, c2] : rhs.coeffs_) r.add_term(z1 + z2, c1 * c2);
    return r;
}

ZQPoly ZQPoly::operator-() const {
    ZQPoly r;
    for (const auto& [z, c] : coeffs_) r.coeffs_[z] = -c;
    return r;
}

ZQPoly ZQPoly::z_shifted(std::int64_t shift) const {
    if (shift < 0) throw InternalError("negative shift in ZQPoly::z_shifted");
    ZQPoly r;
    for (const auto& [z, c] : coeffs_) r.coeffs_[z + shift] = c;
    return r;
}

ZQPoly ZQPoly::reversed() const {
    ZQPoly r;
    std::int64_t d = z_degree();
    for (const auto& [z, c] : coeffs_) r.coeffs_[d - z] = c.inverted();
    return r;
}

ZQPoly ZQPoly::q_shifted(std::int64_t shift) const {
    ZQPoly r;
    for (const auto& [z, c] : coeffs_) r.coeffs_[z] = c.shifted(shift);
    return r;
}

ZPoly ZQPoly::at_q1() const {
    if (coeffs_.empty()) return {};
    std::vector<BigInt> c(static_cast<std::size_t>(z_degree()) + 1, BigInt(0));
    for (const auto& [z, q] : coeffs_) c[static_cast<std::size_t>(z)] = q.at_one();
    return ZPoly(std::move(c));
}

std::string ZQPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [z, c] : coeffs_) {
        if (!first) out << " + ";
        first = false;
        bool wrap = c.terms().size() > 1;
        if (z == 0) {
            out << c.str();
            continue;
        }
        if (c == QLaurent::one()) {
            // coefficient 1: just the z-power
        } else if (wrap) {
            out << "(" << c.str() << ")*";
        } else {
            out << c.str() << "*";
        }
        out << "z";
        if (z != 1) out << "^" << z;
    }
    return out.str();
}

// --- FactoredRational -------------------------------------------------------

namespace {

bool factor_less(const DenFactor& f1, const DenFactor& f2) {
    return std::tie(f1.b, f1.a, f1.m) < std::tie(f2.b, f2.a, f2.m);
}

/// Sort by (b, a) and merge multiplicities of equal (a, b).
std::vector<DenFactor> normalize_factors(std::vector<DenFactor> factors) {
    for (const auto& f : factors) {
        if (f.b < 1) throw UsageError("denominator factor needs z-exponent >= 1");
        if (f.m < 1) throw UsageError("denominator factor needs multiplicity >= 1");
    }
    std::sort(factors.begin(), factors.end(), factor_less);
    std::vector<DenFactor> merged;
    for (const auto& f : factors) {
        if (!merged.empty() && merged.back().a == f.a && merged.back().b == f.b)
            merged.back().m += f.m;
        else
            merged.push_back(f);
    }
    return merged;
}

ZQPoly factor_poly(const DenFactor& f) {
    ZQPoly p = ZQPoly::one() - ZQPoly::term(f.b, QLaurent::monomial(f.a, 1));
    ZQPoly r = ZQPoly::one();
    for (std::int64_t i = 0; i < f.m; ++i) r = r * p;
    return r;
}

}  // namespace

FactoredRational::FactoredRational(ZQPoly numerator, std::vector<DenFactor> factors)
    : num_(std::move(numerator)), factors_(normalize_factors(std::move(factors))) {
    if (num_.is_zero()) factors_.clear();
}

FactoredRational FactoredRational::constant(QLaurent c) {
    return FactoredRational(ZQPoly::term(0, std::move(c)), {});
}

ZQPoly FactoredRational::denominator_poly() const {
    ZQPoly d = ZQPoly::one();
    for (const auto& f : factors_) d = d * factor_poly(f);
    return d;
}

std::int64_t FactoredRational::denominator_z_degree() const {
    std::int64_t d = 0;
    for (const auto& f : factors_) d += f.b * f.m;
    return d;
}

std::string FactoredRational::str() const {
    std::ostringstream out;
    bool wrap_num = num_.coeffs().size() > 1;
    if (wrap_num) out << "(";
    out << num_.str();
    if (wrap_num) out << ")";
    if (factors_.empty()) return out.str();
    out << " / ";
    if (factors_.size() > 1 || factors_[0].m > 1) out << "(";
    bool first = true;
    for (const auto& f : factors_) {
        for (std::int64_t i = 0; i < f.m; ++i) {
            if (!first) out << "*";
            first = false;
            out << "(1-";
            if (f.a != 0) {
                out << "q";
                if (f.a != 1) out << "^" << f.a;
                out << "*";
            }
            out << "z";
            if (f.b != 1) out << "^" << f.b;
            out << ")";
        }
    }
    if (factors_.size() > 1 || factors_[0].m > 1) out << ")";
    return out.str();
}

// --- QSeries ----------------------------------------------------------------

QSeries::QSeries(std::vector<QLaurent> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.resize(1);
}

QSeries QSeries::truncated(std::size_t order) const {
    QSeries r(order);
    for (std::size_t h = 0; h <= std::min(order, this->order()); ++h) r[h] = coeffs_[h];
    return r;
}

// --- operations ---------------------------------------------------------

FactoredRational rational_mul(const FactoredRational& r1, const FactoredRational& r2) {
    std::vector<DenFactor> factors = r1.factors();
    factors.insert(factors.end(), r2.factors().begin(), r2.factors().end());
    return FactoredRational(r1.numerator() * r2.numerator(), std::move(factors));
}

namespace {

/// Multiplicity-wise set operations on normalized factor lists, keyed by
/// (a, b).
std::vector<DenFactor> factor_union(const std::vector<DenFactor>& f1,
                                    const std::vector<DenFactor>& f2) {
    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> mult;
    for (const auto& f : f1) mult[{f.a, f.b}] = f.m;
    for (const auto& f : f2) {
        auto& m = mult[{f.a, f.b}];
        m = std::max(m, f.m);
    }
    std::vector<DenFactor> r;
    for (const auto& [key, m] : mult) r.push_back({key.first, key.second, m});
    return r;
}

std::vector<DenFactor> factor_difference(const std::vector<DenFactor>& f1,
                                         const std::vector<DenFactor>& f2) {
    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> mult;
    for (const auto& f : f1) mult[{f.a, f.b}] = f.m;
    for (const auto& f : f2) {
        auto it = mult.find({f.a, f.b});
        if (it != mult.end()) it->second -= f.m;
    }
    std::vector<DenFactor> r;
    for (const auto& [key, m] : mult)
        if (m > 0) r.push_back({key.first, key.second, m});
    return r;
}

ZQPoly factors_product(const std::vector<DenFactor>& factors) {
    ZQPoly p = ZQPoly::one();
    for (const auto& f : factors) p = p * factor_poly(f);
    return p;
}

}  // namespace

FactoredRational rational_add(const FactoredRational& r1, const FactoredRational& r2) {
    std::vector<DenFactor> common = factor_union(r1.factors(), r2.factors());
    ZQPoly n1 = r1.numerator() * factors_product(factor_difference(common, r1.factors()));
    ZQPoly n2 = r2.numerator() * factors_product(factor_difference(common, r2.factors()));
    return FactoredRational(n1 + n2, std::move(common));
}

bool rational_equal(const FactoredRational& r1, const FactoredRational& r2) {
    // Cancel factors common to both denominators, then cross-multiply.
    std::vector<DenFactor> extra1 = factor_difference(r1.factors(), r2.factors());
    std::vector<DenFactor> extra2 = factor_difference(r2.factors(), r1.factors());
    return r1.numerator() * factors_product(extra2) ==
           r2.numerator() * factors_product(extra1);
}

bool shifted_rational_equal(int sign1, std::int64_t zshift1, const FactoredRational& r1,
                            int sign2, std::int64_t zshift2, const FactoredRational& r2) {
    ZQPoly n1 = r1.numerator();
    ZQPoly n2 = r2.numerator();
    if (sign1 * sign2 < 0) n2 = -n2;
    std::int64_t s = zshift1 - zshift2;
    if (s >= 0)
        n1 = n1.z_shifted(s);
    else
        n2 = n2.z_shifted(-s);
    return rational_equal(FactoredRational(std::move(n1), r1.factors()),
                          FactoredRational(std::move(n2), r2.factors()));
}

QSeries series_expand(const FactoredRational& r, std::size_t m) {
    QSeries s(m);
    for (const auto& [z, c] : r.numerator().coeffs())
        if (z <= static_cast<std::int64_t>(m)) s[static_cast<std::size_t>(z)] = c;
    // Divide by each factor via the recurrence s'_j = s_j + q^a s'_{j-b}.
    for (const auto& f : r.factors()) {
        QLaurent qa = QLaurent::monomial(f.a, 1);
        for (std::int64_t rep = 0; rep < f.m; ++rep)
            for (std::size_t j = static_cast<std::size_t>(f.b); j <= m; ++j)
                s[j] += qa * s[j - static_cast<std::size_t>(f.b)];
    }
    return s;
}

QSeries series_mul(const QSeries& s1, const QSeries& s2, std::size_t m) {
    QSeries r(m);
    for (std::size_t i = 0; i <= std::min(m, s1.order()); ++i) {
        if (s1[i].is_zero()) continue;
        for (std::size_t j = 0; j + i <= m && j <= s2.order(); ++j)
            r[i + j] += s1[i] * s2[j];
    }
    return r;
}

QSeries series_mul(const QSeries& s, const ZQPoly& p, std::size_t m) {
    QSeries r(m);
    for (const auto& [z, c] : p.coeffs()) {
        for (std::size_t j = 0; j <= s.order(); ++j) {
            std::int64_t k = z + static_cast<std::int64_t>(j);
            if (k > static_cast<std::int64_t>(m)) break;
            if (!s[j].is_zero()) r[static_cast<std::size_t>(k)] += c * s[j];
        }
    }
    return r;
}

InvertedRational invert_variables(const FactoredRational& r) {
    InvertedRational out;
    if (r.is_zero()) return out;
    // Each factor obeys 1 - q^{-a} z^{-b} = -q^{-a} z^{-b} (1 - q^a z^b), so
    // the inverted denominator equals (-1)^M q^{-A} z^{-B} times the original
    // one, where M, A, B sum multiplicity, a*m and b*m over the factors.
    std::int64_t total_m = 0, total_a = 0, total_b = 0;
    for (const auto& f : r.factors()) {
        total_m += f.m;
        total_a += f.a * f.m;
        total_b += f.b * f.m;
    }
    out.sign = (total_m % 2 == 0) ? 1 : -1;
    out.zshift = total_b - r.numerator().z_degree();
    out.qshift = 0;
    out.rational = FactoredRational(r.numerator().reversed().q_shifted(total_a),
                                    r.factors());
    return out;
}

ZRational specialize_q1(const FactoredRational& r) {
    ZPoly num = r.numerator().at_q1();
    ZPoly den = ZPoly::one();
    for (const auto& f : r.factors())
        for (std::int64_t i = 0; i < f.m; ++i)
            den = den * ZPoly::one_minus_power(static_cast<std::size_t>(f.b));
    if (num.is_zero()) return {ZPoly::zero(), ZPoly::one()};
    ZPoly g = zpoly_gcd(num, den);
    while (g.degree() > 0 || g.coeff(0) > 1) {
        num = *num.divided_exactly_by(g);
        den = *den.divided_exactly_by(g);
        g = zpoly_gcd(num, den);
    }
    // Lowest terms now; make the constant term of the denominator positive.
    std::size_t low = 0;
    while (den.coeff(low) == 0) ++low;
    if (den.coeff(low) < 0) {
        num = -num;
        den = -den;
    }
    return {std::move(num), std::move(den)};
}

// --- JSON ----------------------------------------------------------------

std::string rational_to_json(const FactoredRational& r) {
    nlohmann::ordered_json j;
    j["numerator"] = nlohmann::ordered_json::array();
    for (const auto& [z, c] : r.numerator().coeffs()) {
        for (const auto& [q, v] : c.terms()) {
            nlohmann::ordered_json t;
            t["z"] = z;
            t["q"] = q;
            t["c"] = v.str();
            j["numerator"].push_back(std::move(t));
        }
    }
    j["denominator"] = nlohmann::ordered_json::array();
    for (const auto& f : r.factors()) {
        nlohmann::ordered_json t;
        t["a"] = f.a;
        t["b"] = f.b;
        t["m"] = f.m;
        j["denominator"].push_back(std::move(t));
    }
    return j.dump();
}

FactoredRational rational_from_json(const std::string& json) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("numerator") || !j.contains("denominator"))
        throw UsageError("JSON must have numerator and denominator arrays");
    ZQPoly num;
    for (const auto& t : j.at("numerator")) {
        std::int64_t z = t.at("z").get<std::int64_t>();
        std::int64_t q = t.at("q").get<std::int64_t>();
        BigInt c(t.at("c").get<std::string>());
        if (z < 0) throw UsageError("numerator z-exponent must be nonnegative");
        if (c == 0) throw UsageError("numerator coefficient must be nonzero");
        num.add_term(z, QLaurent::monomial(q, c));
    }
    std::vector<DenFactor> factors;
    for (const auto& t : j.at("denominator"))
        factors.push_back({t.at("a").get<std::int64_t>(), t.at("b").get<std::int64_t>(),
                           t.at("m").get<std::int64_t>()});
    return FactoredRational(std::move(num), std::move(factors));
}

}  // namespace plethygen
