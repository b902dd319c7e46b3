#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "weaksort/enumerate.hpp"
#include "weaksort/perm.hpp"

using namespace weaksort;

namespace {

// Containment by trying every set of positions.
bool contains_naive(const Permutation& p, const Permutation& tau)
{
    const int n = p.size();
    const int k = tau.size();
    if (k > n)
        return false;
    std::vector<bool> pick(static_cast<std::size_t>(n), false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
        std::vector<int> word;
        for (int i = 0; i < n; ++i)
            if (pick[static_cast<std::size_t>(i)])
                word.push_back(p(i + 1));
        if (standardize(word) == tau)
            return true;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return false;
}

} // namespace

TEST_CASE("parse accepts spaced, comma separated and compact forms")
{
    const Permutation expected{3, 1, 4, 2};
    CHECK(Permutation::parse("3 1 4 2") == expected);
    CHECK(Permutation::parse("3,1,4,2") == expected);
    CHECK(Permutation::parse("3142") == expected);
    CHECK(Permutation::parse("10 1 2 3 4 5 6 7 8 9").size() == 10);
    CHECK(expected.to_string() == "3 1 4 2");
    CHECK(expected.compact() == "3142");
}

TEST_CASE("parse rejects non-permutations")
{
    CHECK_THROWS_AS(Permutation::parse("1 1 2"), PermutationError);
    CHECK_THROWS_AS(Permutation::parse("0 1"), PermutationError);
    CHECK_THROWS_AS(Permutation::parse("1 3"), PermutationError);
    CHECK_THROWS_AS(Permutation::parse("1 x"), PermutationError);
}

TEST_CASE("basic symmetries")
{
    const Permutation p{2, 3, 1};
    CHECK(reverse(p) == Permutation{1, 3, 2});
    CHECK(complement(p) == Permutation{2, 1, 3});
    CHECK(inverse(p) == Permutation{3, 1, 2});
    for (const auto& q : all_permutations(5)) {
        CHECK(inverse(inverse(q)) == q);
        CHECK(reverse(reverse(q)) == q);
        CHECK(complement(complement(q)) == q);
    }
}

TEST_CASE("symmetry group composition and inverses act correctly")
{
    const auto group = Symmetry::all();
    REQUIRE(group.size() == 8);
    CHECK(group.front() == Symmetry::identity());
    const auto sample = all_permutations(4);

    std::set<std::vector<Permutation>> actions;
    for (const auto& g : group) {
        std::vector<Permutation> images;
        for (const auto& p : sample)
            images.push_back(apply_symmetry(g, p));
        actions.insert(images);
    }
    CHECK(actions.size() == 8);

    for (const auto& g : group) {
        for (const auto& h : group) {
            const auto gh = compose(g, h);
            for (const auto& p : sample)
                CHECK(apply_symmetry(gh, p) == apply_symmetry(g, apply_symmetry(h, p)));
        }
        for (const auto& p : sample)
            CHECK(apply_symmetry(group_inverse(g), apply_symmetry(g, p)) == p);
    }
}

TEST_CASE("containment agrees with exhaustive position search")
{
    const std::vector<Permutation> patterns = {{1, 3, 2}, {2, 1, 3}, {3, 2, 1, 4}, {2, 4, 1, 3}, {1}};
    for (int n = 0; n <= 6; ++n)
        for (const auto& p : all_permutations(n))
            for (const auto& tau : patterns)
                CHECK(contains(p, tau) == contains_naive(p, tau));
}

TEST_CASE("find_occurrence returns matching positions")
{
    const auto p = Permutation::parse("5 1 4 9 6 8 10 2 7 3");
    const auto occ = find_occurrence(p.values(), Permutation{3, 2, 1, 4});
    REQUIRE(occ.has_value());
    std::vector<int> word;
    for (int pos : *occ)
        word.push_back(p(pos));
    CHECK(standardize(word) == Permutation{3, 2, 1, 4});
    CHECK_FALSE(find_occurrence(Permutation{1, 2, 3}.values(), Permutation{2, 1}).has_value());
}

TEST_CASE("containment is invariant under every symmetry")
{
    const auto group = Symmetry::all();
    for (const auto& tau : all_permutations(3))
        for (const auto& p : all_permutations(6))
            for (const auto& g : group)
                REQUIRE(contains(p, tau) == contains(apply_symmetry(g, p), apply_symmetry(g, tau)));
}

TEST_CASE("pattern sets are sorted and deduplicated")
{
    const auto t = PatternSet::parse("1342,1234,1243,1234");
    CHECK(t.size() == 3);
    CHECK(t.to_string() == "{1234,1243,1342}");
    CHECK(avoids(Permutation{2, 1, 3}, t));
    CHECK_FALSE(avoids(Permutation{1, 2, 3, 4}, t));
}

TEST_CASE("orbits of 4-letter triples have sizes dividing 8 and cover all 2024 triples")
{
    const auto triples = all_four_letter_triples();
    REQUIRE(triples.size() == 2024);
    std::set<PatternSet> reps;
    std::size_t total = 0;
    for (const auto& t : triples) {
        const auto o = orbit(t);
        CHECK(8 % o.size() == 0);
        CHECK(std::find(o.begin(), o.end(), t) != o.end());
        CHECK(canonical(t) == o.front());
        if (reps.insert(canonical(t)).second)
            total += o.size();
    }
    CHECK(total == 2024);
}

TEST_CASE("direct sums and components")
{
    CHECK(direct_sum(Permutation{2, 1}, Permutation{1, 3, 2}) == Permutation{2, 1, 3, 5, 4});
    CHECK(components(Permutation{2, 1, 3, 5, 4}).size() == 3);
    CHECK(components(Permutation{}).empty());

    // indecomposable permutations: 1, 1, 3, 13, 71, 461, 3447
    const std::vector<int> indecomposable = {1, 1, 3, 13, 71, 461, 3447};
    for (int n = 1; n <= 7; ++n) {
        int count = 0;
        for (const auto& p : all_permutations(n)) {
            const auto parts = components(p);
            Permutation rebuilt;
            for (const auto& c : parts) {
                CHECK(is_indecomposable(c));
                rebuilt = direct_sum(rebuilt, c);
            }
            CHECK(rebuilt == p);
            count += is_indecomposable(p);
        }
        CHECK(count == indecomposable[static_cast<std::size_t>(n - 1)]);
    }
}

TEST_CASE("extrema of a sample permutation")
{
    const auto e = extrema(Permutation::parse("5 1 4 9 6 8 10 2 7 3"));
    CHECK(e.lr_max_positions == std::vector<int>{1, 4, 7});
    CHECK(e.rl_max_positions == std::vector<int>{7, 9, 10});
    CHECK(e.lr_min_positions == std::vector<int>{1, 2});
}

TEST_CASE("all_permutations is lexicographic and complete")
{
    std::size_t factorial = 1;
    for (int n = 0; n <= 6; ++n) {
        factorial *= std::max(n, 1);
        const auto perms = all_permutations(n);
        CHECK(perms.size() == factorial);
        CHECK(std::is_sorted(perms.begin(), perms.end()));
    }
    CHECK(standardize(std::vector<int>{30, 10, 20}) == Permutation{3, 1, 2});
}
