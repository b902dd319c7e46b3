#pragma once

// Truncated formal power series with exact rational coefficients, and the
// catalog of generating functions for the five weak-sorting classes.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "weaksort/bigint.hpp"

namespace weaksort {

class SeriesError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline constexpr int kDefaultOrder = 40;

/// c_0 + c_1 x + ... + c_N x^N + O(x^{N+1}).
class PowerSeries {
public:
    PowerSeries() = default;
    /// Zero series of truncation order N.
    explicit PowerSeries(int order);
    explicit PowerSeries(std::vector<Rational> coefficients);

    static PowerSeries constant(const Rational& c, int order);
    static PowerSeries one(int order) { return constant(1, order); }
    /// x^k
    static PowerSeries monomial(int k, int order, const Rational& c = 1);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& operator[](std::size_t n) const { return coeffs_[n]; }
    Rational& operator[](std::size_t n) { return coeffs_[n]; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    /// Coefficients as integers; throws SeriesError naming the first
    /// non-integral coefficient.
    std::vector<BigInt> integer_coefficients() const;
    bool is_zero() const;

    PowerSeries truncated(int order) const;
    /// Multiply by x^k (shifting up and dropping terms past the order).
    PowerSeries shifted(int k) const;
    PowerSeries pow(unsigned e) const;

    PowerSeries& operator+=(const PowerSeries& g);
    PowerSeries& operator-=(const PowerSeries& g);
    PowerSeries& operator*=(const Rational& c);

    friend PowerSeries operator+(PowerSeries f, const PowerSeries& g) { return f += g; }
    friend PowerSeries operator-(PowerSeries f, const PowerSeries& g) { return f -= g; }
    friend PowerSeries operator-(const PowerSeries& f);
    friend PowerSeries operator*(const PowerSeries& f, const PowerSeries& g);
    friend PowerSeries operator*(PowerSeries f, const Rational& c) { return f *= c; }
    friend PowerSeries operator*(const Rational& c, PowerSeries f) { return f *= c; }
    friend PowerSeries operator/(const PowerSeries& f, const PowerSeries& g);

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// f / g truncated to min(order f, order g); `divisor_name` is used in the
/// error raised when g has zero constant term.
PowerSeries divide(const PowerSeries& f, const PowerSeries& g, std::string_view divisor_name = "divisor");

/// sqrt(1-4x): 1, then -2 C_{n-1}.
PowerSeries sqrt_one_minus_4x(int order);

BigInt catalan(long n);
/// C_{n,k} = (k+1)/(2n+k+1) binom(2n+k+1, n), the coefficient of x^n in
/// C(x)^{k+1}; C_{0,-1} = 1 and zero for n < 0, k < -1 or (k = -1, n > 0).
BigInt gen_catalan(long n, long k);
/// C(x) = (1 - sqrt(1-4x)) / (2x).
PowerSeries catalan_series(int order);

/// 1 / (1 - f); f must have zero constant term.
PowerSeries invert_transform(const PowerSeries& f);

/// Polynomial in y with rational coefficients, lowest degree first.
using YPolynomial = std::vector<Rational>;

/// Truncated in x, exact in y: coefficient of x^n is a polynomial in y.
class BivariateSeries {
public:
    BivariateSeries() = default;
    explicit BivariateSeries(int order);
    static BivariateSeries from_series(const PowerSeries& f);
    /// y^k as a series of order N.
    static BivariateSeries y_power(int k, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const YPolynomial& operator[](std::size_t n) const { return coeffs_[n]; }
    /// Coefficient of x^n y^k.
    Rational coefficient(std::size_t n, std::size_t k) const;
    PowerSeries at_y_equals_one() const;

    BivariateSeries& operator+=(const BivariateSeries& g);
    BivariateSeries& operator-=(const BivariateSeries& g);
    friend BivariateSeries operator+(BivariateSeries f, const BivariateSeries& g) { return f += g; }
    friend BivariateSeries operator-(BivariateSeries f, const BivariateSeries& g) { return f -= g; }
    friend BivariateSeries operator*(const BivariateSeries& f, const BivariateSeries& g);
    /// Requires the x^0 coefficient of g to be a nonzero constant in y.
    friend BivariateSeries operator/(const BivariateSeries& f, const BivariateSeries& g);

    friend bool operator==(const BivariateSeries& f, const BivariateSeries& g);

private:
    std::vector<YPolynomial> coeffs_;
};

/// Names accepted by gf_catalog.
const std::vector<std::string>& gf_names();
bool is_bivariate_gf(std::string_view name);

using CatalogSeries = std::variant<PowerSeries, BivariateSeries>;

/// main                      (1-5x+(1+x)s)/(1-5x+(1-x)s), s = sqrt(1-4x)
/// indec_le1peak             (1 + x + x/s - s)/2
/// schroder_le1peak_per_comp 2s/(1-5x+(1-x)s)
/// pi4_nonempty              2xs/(1-5x+(1-x)s)
/// class5_F                  1 + x + 2x^2 + 3 sum_{n>=3} C_{n-1} x^n + G(x),
///                           G = sum_{k>=3} x^k (C^k - 1)(1 + C)^{k-2}
/// class5_F_rationalized     1 + (2x^2 + x(1-5x)C)/(1-4x-x^2)
/// class5_indec              x/(1 - x/s), indexed by length
/// class5_bivariate          2xys/(y - 2x - 3xy + (2 - xy - y)s)
CatalogSeries gf_catalog(std::string_view name, int order = kDefaultOrder);
PowerSeries univariate_gf(std::string_view name, int order = kDefaultOrder);
BivariateSeries bivariate_gf(std::string_view name, int order = kDefaultOrder);

} // namespace weaksort
