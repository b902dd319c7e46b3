#include "weaksort/series.hpp"

#include <algorithm>

namespace weaksort {

BigInt binomial(long n, long k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

PowerSeries::PowerSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1, Rational(0))
{
    if (order < 0)
        throw SeriesError("truncation order must be nonnegative");
}

PowerSeries::PowerSeries(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients))
{
    if (coeffs_.empty())
        throw SeriesError("a power series needs at least one coefficient");
    for (auto& c : coeffs_)
        c.canonicalize();
}

PowerSeries PowerSeries::constant(const Rational& c, int order)
{
    PowerSeries f(order);
    f.coeffs_[0] = c;
    return f;
}

PowerSeries PowerSeries::monomial(int k, int order, const Rational& c)
{
    PowerSeries f(order);
    if (k >= 0 && k <= order)
        f.coeffs_[static_cast<std::size_t>(k)] = c;
    return f;
}

std::vector<BigInt> PowerSeries::integer_coefficients() const
{
    std::vector<BigInt> out;
    out.reserve(coeffs_.size());
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        if (coeffs_[n].get_den() != 1)
            throw SeriesError("coefficient " + std::to_string(n) + " is not an integer: " + coeffs_[n].get_str());
        out.push_back(coeffs_[n].get_num());
    }
    return out;
}

bool PowerSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

PowerSeries PowerSeries::truncated(int order) const
{
    PowerSeries f(order);
    for (int n = 0; n <= std::min(order, this->order()); ++n)
        f.coeffs_[static_cast<std::size_t>(n)] = coeffs_[static_cast<std::size_t>(n)];
    return f;
}

PowerSeries PowerSeries::shifted(int k) const
{
    PowerSeries f(order());
    for (int n = 0; n + k <= order(); ++n)
        f.coeffs_[static_cast<std::size_t>(n + k)] = coeffs_[static_cast<std::size_t>(n)];
    return f;
}

PowerSeries PowerSeries::pow(unsigned e) const
{
    PowerSeries result = one(order());
    PowerSeries base = *this;
    while (e) {
        if (e & 1u)
            result = result * base;
        e >>= 1u;
        if (e)
            base = base * base;
    }
    return result;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& g)
{
    const auto n = std::min(coeffs_.size(), g.coeffs_.size());
    coeffs_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        coeffs_[i] += g.coeffs_[i];
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& g)
{
    const auto n = std::min(coeffs_.size(), g.coeffs_.size());
    coeffs_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        coeffs_[i] -= g.coeffs_[i];
    return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& c)
{
    for (auto& x : coeffs_)
        x *= c;
    return *this;
}

PowerSeries operator-(const PowerSeries& f)
{
    PowerSeries g = f;
    g *= Rational(-1);
    return g;
}

PowerSeries operator*(const PowerSeries& f, const PowerSeries& g)
{
    const int order = std::min(f.order(), g.order());
    PowerSeries h(order);
    for (int i = 0; i <= order; ++i) {
        if (sgn(f.coeffs_[static_cast<std::size_t>(i)]) == 0)
            continue;
        for (int j = 0; i + j <= order; ++j)
            h.coeffs_[static_cast<std::size_t>(i + j)] +=
                f.coeffs_[static_cast<std::size_t>(i)] * g.coeffs_[static_cast<std::size_t>(j)];
    }
    return h;
}

PowerSeries divide(const PowerSeries& f, const PowerSeries& g, std::string_view divisor_name)
{
    if (sgn(g[0]) == 0)
        throw SeriesError("cannot divide by series '" + std::string(divisor_name) + "': constant term is zero");
    const int order = std::min(f.order(), g.order());
    PowerSeries q(order);
    for (int n = 0; n <= order; ++n) {
        Rational acc = f[static_cast<std::size_t>(n)];
        for (int j = 1; j <= n; ++j)
            acc -= g[static_cast<std::size_t>(j)] * q[static_cast<std::size_t>(n - j)];
        q[static_cast<std::size_t>(n)] = acc / g[0];
    }
    return q;
}

PowerSeries operator/(const PowerSeries& f, const PowerSeries& g)
{
    return divide(f, g);
}

BigInt catalan(long n)
{
    if (n < 0)
        return 0;
    return binomial(2 * n, n) / (n + 1);
}

BigInt gen_catalan(long n, long k)
{
    if (n < 0 || k < -1)
        return 0;
    if (k == -1)
        return n == 0 ? 1 : 0;
    const long top = 2 * n + k + 1;
    BigInt v = binomial(top, n) * (k + 1);
    return v / top; // exact
}

PowerSeries sqrt_one_minus_4x(int order)
{
    PowerSeries s(order);
    s[0] = 1;
    for (int n = 1; n <= order; ++n)
        s[static_cast<std::size_t>(n)] = Rational(-2 * catalan(n - 1));
    return s;
}

PowerSeries catalan_series(int order)
{
    PowerSeries c(order);
    for (int n = 0; n <= order; ++n)
        c[static_cast<std::size_t>(n)] = Rational(catalan(n));
    return c;
}

PowerSeries invert_transform(const PowerSeries& f)
{
    if (sgn(f[0]) != 0)
        throw SeriesError("invert transform needs a zero constant term, got " + f[0].get_str());
    return divide(PowerSeries::one(f.order()), PowerSeries::one(f.order()) - f, "1 - f");
}

namespace {

void trim(YPolynomial& p)
{
    while (!p.empty() && sgn(p.back()) == 0)
        p.pop_back();
}

YPolynomial poly_add(const YPolynomial& a, const YPolynomial& b, int sign)
{
    YPolynomial out(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] += sign > 0 ? b[i] : Rational(-b[i]);
    trim(out);
    return out;
}

YPolynomial poly_mul(const YPolynomial& a, const YPolynomial& b)
{
    if (a.empty() || b.empty())
        return {};
    YPolynomial out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

} // namespace

BivariateSeries::BivariateSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1)
{
    if (order < 0)
        throw SeriesError("truncation order must be nonnegative");
}

BivariateSeries BivariateSeries::from_series(const PowerSeries& f)
{
    BivariateSeries b(f.order());
    for (int n = 0; n <= f.order(); ++n) {
        b.coeffs_[static_cast<std::size_t>(n)] = {f[static_cast<std::size_t>(n)]};
        trim(b.coeffs_[static_cast<std::size_t>(n)]);
    }
    return b;
}

BivariateSeries BivariateSeries::y_power(int k, int order)
{
    BivariateSeries b(order);
    b.coeffs_[0].assign(static_cast<std::size_t>(k) + 1, Rational(0));
    b.coeffs_[0][static_cast<std::size_t>(k)] = 1;
    return b;
}

Rational BivariateSeries::coefficient(std::size_t n, std::size_t k) const
{
    const auto& p = coeffs_.at(n);
    return k < p.size() ? p[k] : Rational(0);
}

PowerSeries BivariateSeries::at_y_equals_one() const
{
    PowerSeries f(order());
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
        for (const auto& c : coeffs_[n])
            f[n] += c;
    return f;
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& g)
{
    coeffs_.resize(std::min(coeffs_.size(), g.coeffs_.size()));
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
        coeffs_[n] = poly_add(coeffs_[n], g.coeffs_[n], 1);
    return *this;
}

BivariateSeries& BivariateSeries::operator-=(const BivariateSeries& g)
{
    coeffs_.resize(std::min(coeffs_.size(), g.coeffs_.size()));
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
        coeffs_[n] = poly_add(coeffs_[n], g.coeffs_[n], -1);
    return *this;
}

BivariateSeries operator*(const BivariateSeries& f, const BivariateSeries& g)
{
    const int order = std::min(f.order(), g.order());
    BivariateSeries h(order);
    for (int i = 0; i <= order; ++i)
        for (int j = 0; i + j <= order; ++j)
            h.coeffs_[static_cast<std::size_t>(i + j)] =
                poly_add(h.coeffs_[static_cast<std::size_t>(i + j)],
                         poly_mul(f.coeffs_[static_cast<std::size_t>(i)], g.coeffs_[static_cast<std::size_t>(j)]), 1);
    return h;
}

BivariateSeries operator/(const BivariateSeries& f, const BivariateSeries& g)
{
    const auto& lead = g.coeffs_[0];
    if (lead.size() != 1)
        throw SeriesError("bivariate division needs a nonzero constant x^0 coefficient in the divisor");
    const int order = std::min(f.order(), g.order());
    BivariateSeries q(order);
    for (int n = 0; n <= order; ++n) {
        YPolynomial acc = f.coeffs_[static_cast<std::size_t>(n)];
        for (int j = 1; j <= n; ++j)
            acc = poly_add(acc, poly_mul(g.coeffs_[static_cast<std::size_t>(j)], q.coeffs_[static_cast<std::size_t>(n - j)]), -1);
        for (auto& c : acc)
            c /= lead[0];
        q.coeffs_[static_cast<std::size_t>(n)] = std::move(acc);
    }
    return q;
}

bool operator==(const BivariateSeries& f, const BivariateSeries& g)
{
    return f.coeffs_ == g.coeffs_;
}

const std::vector<std::string>& gf_names()
{
    static const std::vector<std::string> names = {
        "main",         "indec_le1peak",         "schroder_le1peak_per_comp", "pi4_nonempty",
        "class5_F",     "class5_F_rationalized", "class5_indec",              "class5_bivariate",
    };
    return names;
}

bool is_bivariate_gf(std::string_view name)
{
    return name == "class5_bivariate";
}

namespace {

// 1 - 5x + (1 - x) s, the denominator shared by several catalog entries.
PowerSeries main_denominator(int order, const PowerSeries& s)
{
    const auto x = PowerSeries::monomial(1, order);
    const auto one = PowerSeries::one(order);
    return one - 5 * x + (one - x) * s;
}

PowerSeries class5_from_key_sum(int order)
{
    const auto one = PowerSeries::one(order);
    const auto c = catalan_series(order);

    PowerSeries f = one + PowerSeries::monomial(1, order) + PowerSeries::monomial(2, order, 2);
    for (int n = 3; n <= order; ++n)
        f[static_cast<std::size_t>(n)] += Rational(3 * catalan(n - 1));

    // G(x) = sum_{k>=3} x^k (C^k - 1)(1 + C)^{k-2}; terms with k > order vanish.
    PowerSeries c_power = c.pow(3);
    PowerSeries one_plus_c_power = one + c;
    for (int k = 3; k <= order; ++k) {
        f += ((c_power - one) * one_plus_c_power).shifted(k);
        c_power = c_power * c;
        one_plus_c_power = one_plus_c_power * (one + c);
    }
    return f;
}

} // namespace

PowerSeries univariate_gf(std::string_view name, int order)
{
    const auto one = PowerSeries::one(order);
    const auto x = PowerSeries::monomial(1, order);
    const auto s = sqrt_one_minus_4x(order);

    if (name == "main") {
        const auto numerator = one - 5 * x + (one + x) * s;
        return divide(numerator, main_denominator(order, s), "1-5x+(1-x)sqrt(1-4x)");
    }
    if (name == "indec_le1peak") {
        const auto x_over_s = divide(x, s, "sqrt(1-4x)");
        return Rational(1, 2) * (one + x + x_over_s - s);
    }
    if (name == "schroder_le1peak_per_comp")
        return divide(2 * s, main_denominator(order, s), "1-5x+(1-x)sqrt(1-4x)");
    if (name == "pi4_nonempty")
        return divide(2 * x * s, main_denominator(order, s), "1-5x+(1-x)sqrt(1-4x)");
    if (name == "class5_F")
        return class5_from_key_sum(order);
    if (name == "class5_F_rationalized") {
        const auto c = catalan_series(order);
        const auto numerator = 2 * x.pow(2) + x * (one - 5 * x) * c;
        return one + divide(numerator, one - 4 * x - x.pow(2), "1-4x-x^2");
    }
    if (name == "class5_indec") {
        const auto x_over_s = divide(x, s, "sqrt(1-4x)");
        return x * divide(one, one - x_over_s, "1-x/sqrt(1-4x)");
    }
    if (is_bivariate_gf(name))
        throw SeriesError("generating function '" + std::string(name) + "' is bivariate");
    throw SeriesError("unknown generating function '" + std::string(name) + "'");
}

BivariateSeries bivariate_gf(std::string_view name, int order)
{
    if (name != "class5_bivariate")
        throw SeriesError("unknown bivariate generating function '" + std::string(name) + "'");
    const auto one = BivariateSeries::from_series(PowerSeries::one(order));
    const auto x = BivariateSeries::from_series(PowerSeries::monomial(1, order));
    const auto y = BivariateSeries::y_power(1, order);
    const auto s = BivariateSeries::from_series(sqrt_one_minus_4x(order));
    const auto two = BivariateSeries::from_series(PowerSeries::constant(2, order));

    const auto numerator = two * x * y * s;
    const auto denominator = y - two * x - BivariateSeries::from_series(PowerSeries::constant(3, order)) * x * y +
                             (two - x * y - y) * s;
    return numerator / denominator;
}

CatalogSeries gf_catalog(std::string_view name, int order)
{
    if (is_bivariate_gf(name))
        return bivariate_gf(name, order);
    return univariate_gf(name, order);
}

} // namespace weaksort
