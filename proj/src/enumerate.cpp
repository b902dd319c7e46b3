#include "weaksort/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace weaksort {

namespace {

unsigned resolve_threads(unsigned requested)
{
    if (requested != 0)
        return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn)
{
    threads = std::min<unsigned>(resolve_threads(threads), static_cast<unsigned>(std::max<std::size_t>(count, 1)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++)
                fn(i);
        });
    }
}

// Depth-first extension of a prefix of a permutation of [n]. The visitor is
// called on every complete avoider in lexicographic order.
class PrefixSearch {
public:
    PrefixSearch(int n, const PatternSet& patterns) : n_(n), patterns_(patterns), used_(static_cast<std::size_t>(n + 1), false)
    {
        prefix_.reserve(static_cast<std::size_t>(n));
    }

    template <typename Visit>
    void run_from(int first, Visit&& visit)
    {
        if (!push(first))
            return;
        extend(visit);
        pop();
    }

    template <typename Visit>
    void run(Visit&& visit)
    {
        extend(visit);
    }

private:
    bool push(int v)
    {
        prefix_.push_back(v);
        used_[static_cast<std::size_t>(v)] = true;
        // A new occurrence must use the entry just appended.
        for (const auto& tau : patterns_.patterns()) {
            if (find_occurrence(prefix_, tau, true)) {
                pop();
                return false;
            }
        }
        return true;
    }

    void pop()
    {
        used_[static_cast<std::size_t>(prefix_.back())] = false;
        prefix_.pop_back();
    }

    template <typename Visit>
    void extend(Visit& visit)
    {
        if (static_cast<int>(prefix_.size()) == n_) {
            visit(prefix_);
            return;
        }
        for (int v = 1; v <= n_; ++v) {
            if (used_[static_cast<std::size_t>(v)])
                continue;
            if (!push(v))
                continue;
            extend(visit);
            pop();
        }
    }

    int n_;
    const PatternSet& patterns_;
    std::vector<bool> used_;
    std::vector<int> prefix_;
};

bool has_empty_pattern(const PatternSet& patterns)
{
    return std::any_of(patterns.patterns().begin(), patterns.patterns().end(),
                       [](const Permutation& p) { return p.empty(); });
}

} // namespace

PatternSet pattern_class(int j)
{
    switch (j) {
    case 1:
        return PatternSet::parse("1234,1243,1342");
    case 2:
        return PatternSet::parse("1243,1324,1342");
    case 3:
        return PatternSet::parse("1324,1342,1432");
    case 4:
        return PatternSet::parse("2314,3214,4213");
    case 5:
        return PatternSet::parse("3214,3241,4213");
    default:
        throw std::out_of_range("pattern class index must be 1..5, got " + std::to_string(j));
    }
}

PatternSet pattern_class_by_name(const std::string& name)
{
    if (name.size() == 3 && name.rfind("pi", 0) == 0 && name[2] >= '1' && name[2] <= '5')
        return pattern_class(name[2] - '0');
    return PatternSet::parse(name);
}

std::string CountingSequence::to_string(const char* sep) const
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += sep;
        out += values[i].get_str();
    }
    return out;
}

bool CountingSequence::matches_prefix(const CountingSequence& other, std::size_t length) const
{
    if (values.size() < length || other.values.size() < length)
        return false;
    return std::equal(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(length), other.values.begin());
}

CountingSequence make_sequence(std::initializer_list<long> values)
{
    CountingSequence s;
    for (long v : values)
        s.values.emplace_back(v);
    return s;
}

std::vector<Permutation> enumerate_avoiders(int n, const PatternSet& patterns, unsigned threads)
{
    if (n < 0)
        throw std::invalid_argument("enumerate_avoiders: n must be nonnegative");
    if (has_empty_pattern(patterns))
        return {};
    if (n == 0)
        return {Permutation{}};

    std::vector<std::vector<Permutation>> by_first(static_cast<std::size_t>(n));
    parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t idx) {
        PrefixSearch search(n, patterns);
        search.run_from(static_cast<int>(idx) + 1, [&](const std::vector<int>& perm) {
            by_first[idx].emplace_back(perm);
        });
    });

    std::vector<Permutation> out;
    for (auto& part : by_first)
        std::move(part.begin(), part.end(), std::back_inserter(out));
    return out;
}

BigInt count_avoiders(int n, const PatternSet& patterns, unsigned threads)
{
    if (n < 0)
        throw std::invalid_argument("count_avoiders: n must be nonnegative");
    if (has_empty_pattern(patterns))
        return 0;
    if (n == 0)
        return 1;
    std::vector<unsigned long long> by_first(static_cast<std::size_t>(n), 0);
    parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t idx) {
        PrefixSearch search(n, patterns);
        search.run_from(static_cast<int>(idx) + 1, [&](const std::vector<int>&) { ++by_first[idx]; });
    });
    BigInt total = 0;
    for (auto c : by_first)
        total += static_cast<unsigned long>(c);
    return total;
}

CountingSequence counting_sequence(const PatternSet& patterns, int nmax, const EnumerationLimits& limits)
{
    if (nmax < 0)
        throw std::invalid_argument("counting_sequence: nmax must be nonnegative");
    if (nmax > limits.max_n && !limits.override_limit)
        throw LimitExceeded("n = " + std::to_string(nmax) + " exceeds the enumeration limit " +
                            std::to_string(limits.max_n) + "; pass --limit-override to proceed");
    CountingSequence seq;
    for (int n = 0; n <= nmax; ++n)
        seq.values.push_back(count_avoiders(n, patterns, limits.threads));
    return seq;
}

std::vector<PatternSet> all_four_letter_triples()
{
    const auto letters = all_permutations(4);
    std::vector<PatternSet> triples;
    for (std::size_t a = 0; a < letters.size(); ++a)
        for (std::size_t b = a + 1; b < letters.size(); ++b)
            for (std::size_t c = b + 1; c < letters.size(); ++c)
                triples.push_back(PatternSet{letters[a], letters[b], letters[c]});
    return triples;
}

WilfSearchReport wilf_search(int nmax, const CountingSequence& target, const EnumerationLimits& limits)
{
    if (nmax < 6)
        throw std::invalid_argument("wilf_search: nmax must be at least 6");
    if (nmax > limits.max_n && !limits.override_limit)
        throw LimitExceeded("search at n = " + std::to_string(nmax) + " exceeds the default limit " +
                            std::to_string(limits.max_n) + "; pass --limit-override to proceed");

    WilfSearchReport report;
    report.nmax = nmax;
    report.target = target;

    std::map<PatternSet, std::size_t> orbit_sizes;
    const auto triples = all_four_letter_triples();
    report.triples_examined = triples.size();
    for (const auto& t : triples)
        ++orbit_sizes[canonical(t)];

    for (const auto& [rep, size] : orbit_sizes) {
        report.orbits.push_back({rep, size, {}});
        report.orbit_size_total += size;
    }
    report.orbit_count = report.orbits.size();

    // Orbits run in parallel; each orbit counts sequentially.
    parallel_for(report.orbits.size(), limits.threads, [&](std::size_t idx) {
        auto& orbit = report.orbits[idx];
        for (int n = 0; n <= nmax; ++n)
            orbit.sequence.values.push_back(count_avoiders(n, orbit.representative, 1));
    });

    const auto length = static_cast<std::size_t>(nmax) + 1;
    for (const auto& orbit : report.orbits)
        if (orbit.sequence.matches_prefix(target, length))
            report.matches.push_back(orbit.representative);
    return report;
}

} // namespace weaksort
