#pragma once

// Permutations in one-line notation, classical pattern containment and the
// symmetry group generated by reverse, complement and inverse.
//
// Values and positions are 1-based throughout; the empty permutation is a
// valid value.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace weaksort {

class PermutationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class Permutation {
public:
    Permutation() = default;
    Permutation(std::initializer_list<int> values);
    explicit Permutation(std::vector<int> values);

    /// Parses space-separated one-line notation ("3 1 4 2"). A single token
    /// of digits, e.g. "3142", is read letter by letter.
    static Permutation parse(std::string_view text);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(values_.size()); }
    bool empty() const { return values_.empty(); }

    /// Entry at 1-based position `pos`.
    int operator()(int pos) const { return values_[static_cast<std::size_t>(pos - 1)]; }
    std::span<const int> values() const { return values_; }

    /// Space-separated one-line notation; "" for the empty permutation.
    std::string to_string() const;
    /// Concatenated digits ("3142"); only meaningful for n <= 9.
    std::string compact() const;

    friend auto operator<=>(const Permutation&, const Permutation&) = default;
    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> values_;
};

Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);
Permutation inverse(const Permutation& p);

/// Positions (1-based) of some occurrence of `pattern` in the sequence `word`
/// of distinct integers, or nullopt. With `anchor_last`, only occurrences that
/// use the final entry of `word` are considered.
std::optional<std::vector<int>> find_occurrence(std::span<const int> word, const Permutation& pattern,
                                                bool anchor_last = false);

bool contains(const Permutation& p, const Permutation& pattern);

class PatternSet {
public:
    PatternSet() = default;
    PatternSet(std::initializer_list<Permutation> patterns);
    explicit PatternSet(std::vector<Permutation> patterns);

    /// Comma separated list of patterns, e.g. "1234,1243,1342" or "3 2 1 4, 4 2 1 3".
    static PatternSet parse(std::string_view text);

    const std::vector<Permutation>& patterns() const { return patterns_; }
    std::size_t size() const { return patterns_.size(); }
    bool empty() const { return patterns_.empty(); }
    std::string to_string() const;

    friend auto operator<=>(const PatternSet&, const PatternSet&) = default;
    friend bool operator==(const PatternSet&, const PatternSet&) = default;

private:
    std::vector<Permutation> patterns_; // sorted, unique
};

bool avoids(const Permutation& p, const PatternSet& patterns);

/// An element c^complement r^reverse i^inverse of the dihedral group of order
/// eight, acting on a permutation by inverse first, then reverse, then
/// complement.
struct Symmetry {
    bool inverse = false;
    bool reverse = false;
    bool complement = false;

    static Symmetry identity() { return {}; }
    static Symmetry reverse_only() { return {false, true, false}; }
    static Symmetry complement_only() { return {false, false, true}; }
    static Symmetry inverse_only() { return {true, false, false}; }
    /// All eight group elements, identity first.
    static std::vector<Symmetry> all();

    std::string name() const;

    friend bool operator==(const Symmetry&, const Symmetry&) = default;
};

/// g∘h: apply h, then g.
Symmetry compose(const Symmetry& g, const Symmetry& h);
Symmetry group_inverse(const Symmetry& g);

Permutation apply_symmetry(const Symmetry& g, const Permutation& p);
PatternSet apply_symmetry(const Symmetry& g, const PatternSet& patterns);

/// Distinct images of `patterns` under the eight symmetries, sorted.
std::vector<PatternSet> orbit(const PatternSet& patterns);
/// Smallest member of the orbit.
PatternSet canonical(const PatternSet& patterns);

Permutation standardize(std::span<const int> word);

Permutation direct_sum(const Permutation& p, const Permutation& q);
/// Maximal decomposition p = c1 ⊕ ... ⊕ ck into indecomposables; empty for n = 0.
std::vector<Permutation> components(const Permutation& p);
bool is_indecomposable(const Permutation& p);

struct Extrema {
    std::vector<int> lr_max_positions;
    std::vector<int> rl_max_positions; // increasing positions
    std::vector<int> lr_min_positions;
};

Extrema extrema(const Permutation& p);

/// All permutations of length n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

} // namespace weaksort
