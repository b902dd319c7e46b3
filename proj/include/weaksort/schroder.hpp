#pragma once

// Schröder paths, bounding staircases of permutations, and the bijection
// phi: Sn(3214, 4213) -> Schröder (n-1)-paths through the staircase.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "weaksort/perm.hpp"

namespace weaksort {

class PathError : public std::invalid_argument {
public:
    PathError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at step " + std::to_string(position + 1)), position_(position)
    {
    }
    /// 0-based index of the first offending step.
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Steps N = (0,1), D = (1,1), E = (1,0) from the origin, never below y = x,
/// ending on the diagonal. Serialized as the concatenated step letters.
class SchroderPath {
public:
    SchroderPath() = default;
    /// Validates; throws PathError at the first violation.
    explicit SchroderPath(std::string steps);

    const std::string& steps() const { return steps_; }
    int size() const { return size_; }

    friend auto operator<=>(const SchroderPath&, const SchroderPath&) = default;
    friend bool operator==(const SchroderPath&, const SchroderPath&) = default;

private:
    std::string steps_;
    int size_ = 0;
};

SchroderPath validate_path(std::string_view steps);

struct PathStats {
    int size = 0;
    int peaks = 0; // adjacent NE pairs
    int components = 0;
    bool indecomposable = false;
    std::vector<int> peaks_per_component;
};

PathStats stats(const SchroderPath& path);
/// Each component has at most one peak.
bool at_most_one_peak_per_component(const SchroderPath& path);

inline constexpr int kDefaultPathLimit = 10;

/// Every Schröder n-path, in lexicographic order of the step string.
std::vector<SchroderPath> enumerate_paths(int n, int limit = kDefaultPathLimit);
void for_each_path(int n, const std::function<void(const SchroderPath&)>& visit, int limit = kDefaultPathLimit);

struct PeakCensus {
    int n = 0;
    std::uint64_t total = 0;
    std::vector<std::uint64_t> by_peaks;                // index = number of peaks
    std::vector<std::uint64_t> indecomposable_by_peaks; // same, one component only
    std::uint64_t at_most_one_peak_per_component = 0;
};

PeakCensus peak_census(int n, int limit = kDefaultPathLimit);

/// Lattice path of n steps each N, E, S outlining the LR maxima and RL maxima.
class BoundingStaircase {
public:
    BoundingStaircase() = default;
    /// Validates the three staircase properties; throws PathError.
    explicit BoundingStaircase(std::string steps);

    const std::string& steps() const { return steps_; }
    int size() const { return size_; }
    /// Height of the East step above column i, i = 1..n.
    std::vector<int> column_heights() const;

    friend auto operator<=>(const BoundingStaircase&, const BoundingStaircase&) = default;
    friend bool operator==(const BoundingStaircase&, const BoundingStaircase&) = default;

private:
    std::string steps_;
    int size_ = 0;
};

/// Defined on every permutation of length >= 1.
BoundingStaircase perm_to_staircase(const Permutation& p);
/// Lexicographically least permutation with the given staircase.
Permutation staircase_to_perm(const BoundingStaircase& staircase);

SchroderPath staircase_to_schroder(const BoundingStaircase& staircase);
BoundingStaircase schroder_to_staircase(const SchroderPath& path);

PatternSet schroder_patterns(); // {3214, 4213}

/// Throws PermutationError naming an occurrence when p contains 3214 or 4213.
SchroderPath phi(const Permutation& p);
Permutation phi_inverse(const SchroderPath& path);

} // namespace weaksort
