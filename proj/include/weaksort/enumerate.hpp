#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "weaksort/bigint.hpp"
#include "weaksort/perm.hpp"

namespace weaksort {

/// The five triples of 4-letter patterns, index 1..5.
PatternSet pattern_class(int j);
/// "pi1".."pi5" or an explicit comma separated pattern list.
PatternSet pattern_class_by_name(const std::string& name);

class LimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EnumerationLimits {
    int max_n = 10;
    bool override_limit = false;
    unsigned threads = 0; // 0: hardware concurrency
};

/// Values indexed from n = 0.
struct CountingSequence {
    std::vector<BigInt> values;

    std::size_t size() const { return values.size(); }
    const BigInt& operator[](std::size_t n) const { return values[n]; }
    std::string to_string(const char* sep = ",") const;
    /// Agreement on the first `length` terms; false when either side is shorter.
    bool matches_prefix(const CountingSequence& other, std::size_t length) const;

    friend bool operator==(const CountingSequence&, const CountingSequence&) = default;
};

CountingSequence make_sequence(std::initializer_list<long> values);

/// Sn(T) in lexicographic order, built by prefix backtracking that abandons any
/// prefix already containing a pattern. Work is split by first entry and
/// concatenated in order, so the result does not depend on the thread count.
std::vector<Permutation> enumerate_avoiders(int n, const PatternSet& patterns, unsigned threads = 1);

/// |Sn(T)| by the same backtracking, without materializing the permutations.
BigInt count_avoiders(int n, const PatternSet& patterns, unsigned threads = 1);

CountingSequence counting_sequence(const PatternSet& patterns, int nmax, const EnumerationLimits& limits = {});

struct OrbitSummary {
    PatternSet representative; // canonical (smallest) member
    std::size_t size = 0;
    CountingSequence sequence;
};

struct WilfSearchReport {
    CountingSequence target;
    int nmax = 0;
    std::vector<PatternSet> matches; // canonical representatives, sorted
    std::size_t orbit_count = 0;
    std::size_t triples_examined = 0;
    std::size_t orbit_size_total = 0;
    std::vector<OrbitSummary> orbits; // every orbit, sorted by representative
};

/// All triples of distinct 4-letter patterns, sorted.
std::vector<PatternSet> all_four_letter_triples();

/// Groups all C(24,3) triples into symmetry orbits and reports those whose
/// counting sequence agrees with `target` for n <= nmax.
WilfSearchReport wilf_search(int nmax, const CountingSequence& target, const EnumerationLimits& limits = {8, false, 0});

} // namespace weaksort
