#include "weaksort/class5.hpp"

#include <algorithm>
#include <stdexcept>

#include "weaksort/enumerate.hpp"
#include "weaksort/series.hpp"

namespace weaksort {

namespace {

const Permutation& pattern_213()
{
    static const Permutation p{2, 1, 3};
    return p;
}

const Permutation& pattern_321()
{
    static const Permutation p{3, 2, 1};
    return p;
}

bool avoids_pattern(std::span<const int> word, const Permutation& tau)
{
    return !find_occurrence(word, tau).has_value();
}

// All weak compositions of `total` into `parts` nonnegative parts.
void weak_compositions(int total, int parts, std::vector<int>& current, std::vector<std::vector<int>>& out)
{
    if (parts == 1) {
        current.push_back(total);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (int first = 0; first <= total; ++first) {
        current.push_back(first);
        weak_compositions(total - first, parts - 1, current, out);
        current.pop_back();
    }
}

bool tail_increasing(const Permutation& p, int i)
{
    for (int pos = p.size() - i + 1; pos < p.size(); ++pos)
        if (p(pos) > p(pos + 1))
            return false;
    return true;
}

} // namespace

PatternSet class5_patterns()
{
    return pattern_class(5);
}

std::vector<int> key_indices(std::span<const int> a)
{
    std::vector<int> keys;
    if (a.empty())
        return keys;
    const auto top = static_cast<int>(std::max_element(a.begin(), a.end()) - a.begin());
    for (int t = 0; t <= top; ++t)
        keys.push_back(t);
    int lowest = 0;
    for (int t = top + 1; t < static_cast<int>(a.size()); ++t) {
        if (t == top + 1 || a[static_cast<std::size_t>(t)] < lowest) {
            lowest = a[static_cast<std::size_t>(t)];
            keys.push_back(t);
        }
    }
    return keys;
}

Class5Decomposition decompose(const Permutation& p)
{
    const int n = p.size();
    if (n == 0)
        throw std::invalid_argument("decompose: permutation must be nonempty");
    Class5Decomposition d;
    const int last = p(n);
    std::vector<int> a_positions;
    int first_a_position = 0;
    for (int pos = 1; pos <= n; ++pos) {
        if (p(pos) >= last) {
            d.A.push_back(p(pos));
            a_positions.push_back(pos);
            if (first_a_position == 0)
                first_a_position = pos;
        } else {
            d.B.push_back(p(pos));
            if (first_a_position != 0)
                d.B2.push_back(p(pos));
        }
    }

    const auto top = static_cast<std::size_t>(std::find(d.A.begin(), d.A.end(), n) - d.A.begin());
    d.A1.assign(d.A.begin(), d.A.begin() + static_cast<std::ptrdiff_t>(top) + 1);
    d.A2.assign(d.A.begin() + static_cast<std::ptrdiff_t>(top) + 1, d.A.end());
    for (int t : key_indices(d.A)) {
        d.key_positions.push_back(a_positions[static_cast<std::size_t>(t)]);
        d.key_values.push_back(d.A[static_cast<std::size_t>(t)]);
    }

    std::vector<int> run;
    for (int pos = 1; pos <= n; ++pos) {
        if (p(pos) < last) {
            run.push_back(p(pos));
        } else if (!run.empty()) {
            d.blocks.push_back(std::move(run));
            run.clear();
        }
    }

    d.params.n = n;
    d.params.a = static_cast<int>(d.A.size());
    d.params.k = static_cast<int>(d.key_positions.size());
    d.params.i = static_cast<int>(d.B2.size());
    d.params.j = static_cast<int>(d.A1.size());
    return d;
}

StructureCheck check_structure(const Permutation& p)
{
    const auto d = decompose(p);
    auto fail = [](int property, std::string detail) { return StructureCheck{false, property, std::move(detail)}; };

    if (!avoids_pattern(d.A, pattern_213()))
        return fail(1, "St(A) contains 213");
    if (!avoids_pattern(d.B, pattern_321()))
        return fail(2, "B contains 321");
    if (!std::is_sorted(d.B2.begin(), d.B2.end()))
        return fail(3, "B2 is not increasing");

    const int last = p(p.size());
    for (int pos = 1; pos < p.size(); ++pos) {
        if (p(pos) >= last)
            continue;
        const int right = pos + 1;
        const bool in_b = p(right) < last;
        const bool key = std::find(d.key_positions.begin(), d.key_positions.end(), right) != d.key_positions.end();
        if (!in_b && !key)
            return fail(4, "entry " + std::to_string(p(pos)) + " of B is followed by the non-key entry " +
                               std::to_string(p(right)));
    }
    return {};
}

BigInt w(long n, long k)
{
    BigInt total = 0;
    for (long j = 1; j <= n - 1; ++j)
        total += binomial(k - 2, j - 1) * gen_catalan(n - k, k - 2 - j);
    return total;
}

BigInt count_key_213_at_position(int n, int j, int k)
{
    BigInt count = 0;
    for (const auto& p : enumerate_avoiders(n, PatternSet{pattern_213()})) {
        if (p(n) != 1)
            continue;
        if (j > 0 && p(j) != n)
            continue;
        if (static_cast<int>(key_indices(p.values()).size()) == k)
            ++count;
    }
    return count;
}

BigInt count_key_213_oracle(int n, int k)
{
    return count_key_213_at_position(n, 0, k);
}

BigInt count_keys_fixed_order(long n, long j, long k)
{
    return gen_catalan(n - k, k - 2 - j);
}

BigInt count_321_tail(long n, long i)
{
    if (i < 0 || i > n)
        throw std::invalid_argument("count_321_tail: need 0 <= i <= n");
    return gen_catalan(n - i, i);
}

BigInt count_class5(long n)
{
    if (n < 0)
        return 0;
    if (n <= 2)
        return n == 2 ? 2 : 1;
    BigInt total = 3 * catalan(n - 1);
    for (long a = 3; a <= n - 1; ++a)
        for (long k = 3; k <= a; ++k)
            for (long j = 1; j <= a - 1; ++j)
                total += binomial(k - 2, j - 1) * gen_catalan(a - k, k - j - 2) * gen_catalan(n - a, k - 1);
    return total;
}

BigInt count_class5_expanded(long n)
{
    if (n < 0)
        return 0;
    if (n <= 2)
        return n == 2 ? 2 : 1;
    BigInt total = 3 * catalan(n - 1);
    for (long a = 3; a <= n - 1; ++a) {
        const long b = n - a;
        for (long k = 3; k <= a; ++k)
            for (long i = 0; i <= b; ++i)
                total += w(a, k) * gen_catalan(b - i, i) * binomial(i + k - 2, i);
    }
    return total;
}

BigInt count_class5_indec(long n)
{
    if (n <= 0)
        return 0;
    if (n <= 2)
        return 1;
    // a = 1 never (p ends in n), a = 2 gives C_{n-2}, a = n gives C_{n-1}.
    BigInt total = catalan(n - 2) + catalan(n - 1);
    for (long a = 3; a <= n - 1; ++a) {
        const long b = n - a;
        for (long k = 3; k <= a; ++k)
            for (long i = 0; i <= b; ++i)
                total += w(a, k) * gen_catalan(b - i, i - 1) * binomial(i + k - 2, i);
    }
    return total;
}

BigInt count_a_cases(int n, int a)
{
    if (n < 3)
        throw std::invalid_argument("count_a_cases: n must be at least 3");
    if (a != 1 && a != 2 && a != n)
        throw std::invalid_argument("count_a_cases: a must be 1, 2 or n");
    BigInt count = 0;
    for (const auto& p : enumerate_avoiders(n, class5_patterns()))
        if (n - p(n) + 1 == a) // |A| = number of entries >= the last one
            ++count;
    return count;
}

Permutation construct(const Class5Params& params, const Permutation& a_choice, const Permutation& b_choice,
                      const std::vector<int>& distribution)
{
    const int n = params.n;
    const int a = params.a;
    const int b = n - a;
    const int i = params.i;
    auto reject = [](const std::string& why) { throw std::invalid_argument("construct: " + why); };

    if (a < 3 || a > n - 1)
        reject("need 3 <= a <= n - 1");
    if (a_choice.size() != a || a_choice(a) != 1 || contains(a_choice, pattern_213()))
        reject("A choice must be a 213-avoider of length a ending in 1");
    const auto keys = key_indices(a_choice.values());
    if (static_cast<int>(keys.size()) != params.k)
        reject("A choice has " + std::to_string(keys.size()) + " key entries, expected " + std::to_string(params.k));
    if (b_choice.size() != b || contains(b_choice, pattern_321()))
        reject("B choice must be a 321-avoider of length n - a");
    if (i < 0 || i > b || !tail_increasing(b_choice, i))
        reject("the last i entries of the B choice must increase");
    if (static_cast<int>(distribution.size()) != params.k - 1 ||
        std::any_of(distribution.begin(), distribution.end(), [](int x) { return x < 0; }))
        reject("distribution must have k - 1 nonnegative parts");
    long parts_total = 0;
    for (int x : distribution)
        parts_total += x;
    if (parts_total != i)
        reject("distribution must sum to i");

    const auto bv = b_choice.values();
    std::vector<int> out(bv.begin(), bv.begin() + (b - i));
    std::size_t next_b = static_cast<std::size_t>(b - i);
    std::size_t key_ordinal = 0;
    for (int t = 0; t < a; ++t) {
        const bool is_key = std::find(keys.begin(), keys.end(), t) != keys.end();
        if (is_key && key_ordinal > 0) {
            const auto size = static_cast<std::size_t>(distribution[key_ordinal - 1]);
            out.insert(out.end(), bv.begin() + static_cast<std::ptrdiff_t>(next_b),
                       bv.begin() + static_cast<std::ptrdiff_t>(next_b + size));
            next_b += size;
        }
        if (is_key)
            ++key_ordinal;
        out.push_back(a_choice(t + 1) + b);
    }
    return Permutation(std::move(out));
}

std::vector<Construction> all_constructions(int n)
{
    std::vector<Construction> out;
    for (int a = 3; a <= n - 1; ++a) {
        const int b = n - a;
        std::vector<Permutation> a_choices;
        for (auto& p : enumerate_avoiders(a, PatternSet{pattern_213()}))
            if (p(a) == 1)
                a_choices.push_back(std::move(p));
        const auto b_choices = enumerate_avoiders(b, PatternSet{pattern_321()});

        for (const auto& a_choice : a_choices) {
            const int k = static_cast<int>(key_indices(a_choice.values()).size());
            for (const auto& b_choice : b_choices) {
                for (int i = 0; i <= b; ++i) {
                    if (!tail_increasing(b_choice, i))
                        continue;
                    std::vector<std::vector<int>> distributions;
                    std::vector<int> scratch;
                    weak_compositions(i, k - 1, scratch, distributions);
                    for (auto& dist : distributions) {
                        Class5Params params{n, a, k, i, 0};
                        params.j = static_cast<int>(std::find(a_choice.values().begin(), a_choice.values().end(), a) -
                                                    a_choice.values().begin()) + 1;
                        auto result = construct(params, a_choice, b_choice, dist);
                        out.push_back({params, a_choice, b_choice, std::move(dist), std::move(result)});
                    }
                }
            }
        }
    }
    return out;
}

} // namespace weaksort
