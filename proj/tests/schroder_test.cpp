#include <doctest.h>

#include <set>

#include "weaksort/enumerate.hpp"
#include "weaksort/schroder.hpp"
#include "weaksort/series.hpp"

using namespace weaksort;

namespace {

// Large Schröder numbers by dynamic programming over lattice points (x, y),
// y >= x, from (0,0) to (n,n).
BigInt schroder_dp(int n)
{
    std::vector<std::vector<BigInt>> ways(static_cast<std::size_t>(n) + 1,
                                          std::vector<BigInt>(static_cast<std::size_t>(n) + 1, 0));
    ways[0][0] = 1;
    for (int y = 0; y <= n; ++y)
        for (int x = 0; x <= y; ++x) {
            auto& here = ways[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
            if (y > 0 && x <= y - 1)
                here += ways[static_cast<std::size_t>(x)][static_cast<std::size_t>(y - 1)];
            if (x > 0)
                here += ways[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(y)];
            if (x > 0 && y > 0)
                here += ways[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(y - 1)];
        }
    return ways[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)];
}

// Schröder n-paths with k peaks: binom(n,k) binom(2n-k,n) / (n-k+1).
BigInt paths_with_peaks(long n, long k)
{
    return binomial(n, k) * binomial(2 * n - k, n) / (n - k + 1);
}

std::size_t path_error_position(const std::string& steps)
{
    try {
        validate_path(steps);
    } catch (const PathError& e) {
        return e.position();
    }
    return std::string::npos;
}

} // namespace

TEST_CASE("path validation reports the offending step")
{
    CHECK(validate_path("").size() == 0);
    CHECK(validate_path("NE").size() == 1);
    CHECK(validate_path("NDE").size() == 2);
    CHECK(path_error_position("E") == 0);
    CHECK(path_error_position("NEEN") == 2);
    CHECK(path_error_position("NXE") == 1);
    CHECK(path_error_position("NNE") != std::string::npos);
    CHECK_THROWS_AS(SchroderPath("DN"), PathError);
}

TEST_CASE("path statistics")
{
    const auto s = stats(SchroderPath("NENDEDNNEE"));
    CHECK(s.size == 6);
    CHECK(s.peaks == 2);
    CHECK(s.components == 4);
    CHECK_FALSE(s.indecomposable);
    CHECK(s.peaks_per_component == std::vector<int>{1, 0, 0, 1});
    CHECK(at_most_one_peak_per_component(SchroderPath("NENDEDNNEE")));
    CHECK_FALSE(at_most_one_peak_per_component(SchroderPath("NNENEE")));
    CHECK(stats(SchroderPath("NNENEE")).indecomposable);
}

TEST_CASE("path enumeration counts large Schröder numbers")
{
    for (int n = 0; n <= 8; ++n) {
        const auto paths = enumerate_paths(n);
        CHECK(BigInt(static_cast<unsigned long>(paths.size())) == schroder_dp(n));
        CHECK(std::is_sorted(paths.begin(), paths.end()));
        CHECK(std::set<SchroderPath>(paths.begin(), paths.end()).size() == paths.size());
    }
    std::uint64_t ten = 0;
    for_each_path(10, [&](const SchroderPath&) { ++ten; });
    CHECK(ten == 1037718);
    CHECK(schroder_dp(10) == 1037718);
    CHECK_THROWS(enumerate_paths(11));
}

TEST_CASE("peak census agrees with the closed-form triangle")
{
    for (int n = 1; n <= 9; ++n) {
        const auto census = peak_census(n);
        CHECK(BigInt(static_cast<unsigned long>(census.total)) == schroder_dp(n));
        for (int k = 0; k <= n; ++k) {
            const auto have = k < static_cast<int>(census.by_peaks.size()) ? census.by_peaks[static_cast<std::size_t>(k)] : 0;
            CHECK(BigInt(static_cast<unsigned long>(have)) == paths_with_peaks(n, k));
        }
    }
    const auto one = peak_census(1);
    CHECK(one.indecomposable_by_peaks[0] == 1);
    CHECK(one.indecomposable_by_peaks[1] == 1);
}

TEST_CASE("bounding staircase of a sample permutation")
{
    const auto p = Permutation::parse("5 1 4 9 6 8 10 2 7 3");
    const auto staircase = perm_to_staircase(p);
    CHECK(staircase.steps() == "NNNNNEEENNNNEEENESSSEESSSSESSS");
    CHECK(staircase.column_heights() == std::vector<int>{5, 5, 5, 9, 9, 9, 10, 7, 7, 3});
    CHECK(staircase_to_schroder(staircase).steps() == "NNDNNEEENDENNEEE");
    CHECK(schroder_to_staircase(SchroderPath("NNDNNEEENDENNEEE")) == staircase);
    CHECK(perm_to_staircase(staircase_to_perm(staircase)) == staircase);
}

TEST_CASE("staircase validation")
{
    CHECK_NOTHROW(BoundingStaircase("NES"));
    CHECK_THROWS_AS(BoundingStaircase(""), PathError);
    CHECK_THROWS_AS(BoundingStaircase("NE"), PathError);
    CHECK_THROWS_AS(BoundingStaircase("NSE"), PathError);
    CHECK_THROWS_AS(BoundingStaircase("NNEESS"), PathError);
}

TEST_CASE("staircase round trips for every permutation")
{
    for (int n = 1; n <= 7; ++n) {
        std::set<BoundingStaircase> seen;
        for (const auto& p : all_permutations(n)) {
            const auto st = perm_to_staircase(p);
            seen.insert(st);
            const auto q = staircase_to_perm(st);
            CHECK(perm_to_staircase(q) == st);
            CHECK(q <= p);
            CHECK(schroder_to_staircase(staircase_to_schroder(st)) == st);
        }
        CHECK(BigInt(static_cast<unsigned long>(seen.size())) == schroder_dp(n - 1));
    }
}

TEST_CASE("phi is a bijection onto Schröder paths")
{
    const auto forbidden = schroder_patterns();
    CHECK(forbidden.to_string() == "{3214,4213}");
    for (int n = 1; n <= 7; ++n) {
        std::set<SchroderPath> image;
        for (const auto& p : enumerate_avoiders(n, forbidden)) {
            const auto path = phi(p);
            CHECK(phi_inverse(path) == p);
            image.insert(path);
        }
        CHECK(BigInt(static_cast<unsigned long>(image.size())) == schroder_dp(n - 1));
    }
    CHECK(phi(Permutation{3, 1, 4, 2}).steps() == "NDNEE");
    CHECK(phi_inverse(SchroderPath("NDE")) == Permutation{3, 1, 2});
}

TEST_CASE("phi rejects permutations containing a forbidden pattern")
{
    try {
        phi(Permutation{3, 2, 1, 4});
        FAIL("expected PermutationError");
    } catch (const PermutationError& e) {
        CHECK(std::string(e.what()).find("3214") != std::string::npos);
    }
    CHECK_THROWS_AS(phi(Permutation{5, 1, 4, 9, 6, 8, 10, 2, 7, 3}), PermutationError);
}
