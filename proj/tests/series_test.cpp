#include <doctest.h>

#include <variant>

#include "weaksort/schroder.hpp"
#include "weaksort/series.hpp"

using namespace weaksort;

namespace {

PowerSeries x_series(int order)
{
    return PowerSeries::monomial(1, order);
}

// Ballot-style count of lattice words: [x^n] C(x)^(k+1) by repeated
// convolution of Catalan numbers.
BigInt catalan_power_coefficient(long n, long power)
{
    std::vector<BigInt> acc(static_cast<std::size_t>(n) + 1, 0);
    acc[0] = 1;
    for (long p = 0; p < power; ++p) {
        std::vector<BigInt> next(acc.size(), 0);
        for (std::size_t i = 0; i < acc.size(); ++i)
            for (std::size_t j = 0; i + j < acc.size(); ++j)
                next[i + j] += acc[i] * catalan(static_cast<long>(j));
        acc = std::move(next);
    }
    return acc.back();
}

} // namespace

TEST_CASE("arithmetic")
{
    const auto one = PowerSeries::one(6);
    const auto x = x_series(6);
    const auto geometric = one / (one - x);
    for (int n = 0; n <= 6; ++n)
        CHECK(geometric[static_cast<std::size_t>(n)] == 1);
    CHECK((geometric * (one - x)) == one);
    CHECK(one.shifted(2) == (x * x) / (one - x) - (x * x * x) / (one - x));
    CHECK(geometric.truncated(3).order() == 3);
    CHECK((one + x).pow(3)[2] == 3);
    CHECK((Rational(1, 2) * x)[1] == Rational(1, 2));
    CHECK_THROWS_AS((Rational(1, 2) * x).integer_coefficients(), SeriesError);
}

TEST_CASE("division by a series without constant term names the divisor")
{
    const auto x = x_series(5);
    try {
        divide(PowerSeries::one(5), x, "kernel");
        FAIL("expected SeriesError");
    } catch (const SeriesError& e) {
        CHECK(std::string(e.what()).find("kernel") != std::string::npos);
    }
    CHECK_THROWS_AS(invert_transform(PowerSeries::one(5)), SeriesError);
}

TEST_CASE("square root and Catalan numbers")
{
    const auto s = sqrt_one_minus_4x(20);
    CHECK(s * s == PowerSeries::one(20) - 4 * x_series(20));
    const auto c = catalan_series(20).integer_coefficients();
    const std::vector<long> first = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
    for (std::size_t n = 0; n < first.size(); ++n) {
        CHECK(c[n] == first[n]);
        CHECK(catalan(static_cast<long>(n)) == first[n]);
    }
    CHECK(catalan(30) == BigInt("3814986502092304"));
}

TEST_CASE("generalized Catalan numbers are coefficients of Catalan powers")
{
    for (long n = 0; n <= 10; ++n)
        for (long k = 0; k <= 6; ++k)
            CHECK(gen_catalan(n, k) == catalan_power_coefficient(n, k + 1));
    CHECK(gen_catalan(0, -1) == 1);
    CHECK(gen_catalan(3, -1) == 0);
    CHECK(gen_catalan(-1, 2) == 0);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(-1, 0) == 0);
}

TEST_CASE("catalog series agree with each other")
{
    const int order = 40;
    const auto main = univariate_gf("main", order);
    CHECK(main.integer_coefficients()[9] == 20626);
    CHECK(univariate_gf("class5_F", order) == main);
    CHECK(univariate_gf("class5_F_rationalized", order) == main);
    CHECK(univariate_gf("pi4_nonempty", order) == main - PowerSeries::one(order));
    CHECK(invert_transform(univariate_gf("indec_le1peak", order)) == univariate_gf("schroder_le1peak_per_comp", order));
    CHECK(univariate_gf("schroder_le1peak_per_comp", order).shifted(1) == univariate_gf("pi4_nonempty", order));
}

TEST_CASE("path-count series match path censuses")
{
    const auto indec = univariate_gf("indec_le1peak", 9).integer_coefficients();
    const auto per_comp = univariate_gf("schroder_le1peak_per_comp", 9).integer_coefficients();
    for (int n = 1; n <= 9; ++n) {
        const auto census = peak_census(n);
        CHECK(indec[static_cast<std::size_t>(n)] ==
              census.indecomposable_by_peaks[0] + census.indecomposable_by_peaks[1]);
        CHECK(per_comp[static_cast<std::size_t>(n)] == census.at_most_one_peak_per_component);
    }
}

TEST_CASE("bivariate series")
{
    const auto f = bivariate_gf("class5_bivariate", 12);
    CHECK(f.at_y_equals_one() == univariate_gf("pi4_nonempty", 12));
    CHECK(f.coefficient(4, 1) == 11);
    CHECK(f.coefficient(4, 4) == 1);
    CHECK(f.coefficient(4, 7) == 0);
    const auto y = BivariateSeries::y_power(1, 3);
    CHECK((y * y).coefficient(0, 2) == 1);
    CHECK((y + y).coefficient(0, 1) == 2);
    CHECK_THROWS_AS(BivariateSeries::from_series(PowerSeries::one(3)) / (y - y), SeriesError);
}

TEST_CASE("catalog lookup")
{
    CHECK(gf_names().size() == 8);
    CHECK(is_bivariate_gf("class5_bivariate"));
    CHECK_FALSE(is_bivariate_gf("main"));
    CHECK(std::holds_alternative<BivariateSeries>(gf_catalog("class5_bivariate", 5)));
    CHECK_THROWS_AS(univariate_gf("class5_bivariate"), SeriesError);
    CHECK_THROWS_AS(univariate_gf("nope"), SeriesError);
    CHECK_THROWS_AS(bivariate_gf("main"), SeriesError);
}
