#pragma once

// Structure and direct counting of avoiders of Π5 = {3214, 3241, 4213}.
//
// Cut p below its last entry: A holds the entries >= p_n (in position order),
// B the rest. A1 is the part of A weakly left of n, A2 the remainder. Key
// entries are A1 together with the LR minima of A2. B2 is the part of B
// positioned after the first entry of A.

#include <optional>
#include <string>
#include <vector>

#include "weaksort/bigint.hpp"
#include "weaksort/perm.hpp"

namespace weaksort {

struct Class5Params {
    int n = 0;
    int a = 0; // |A|
    int k = 0; // number of key entries
    int i = 0; // entries of B after the first key entry
    int j = 0; // position of n within A (= |A1|)

    friend bool operator==(const Class5Params&, const Class5Params&) = default;
};

struct Class5Decomposition {
    std::vector<int> A, B, A1, A2, B2;   // entry values, in position order
    std::vector<int> key_positions;      // 1-based positions in p
    std::vector<int> key_values;
    std::vector<std::vector<int>> blocks; // maximal runs of B contiguous in p
    Class5Params params;
};

PatternSet class5_patterns();

/// 0-based indices of the key entries of a sequence whose last entry is its
/// minimum: everything up to and including the maximum, then the LR minima
/// of the rest.
std::vector<int> key_indices(std::span<const int> a);

Class5Decomposition decompose(const Permutation& p);

struct StructureCheck {
    bool holds = true;
    int violated = 0; // 1..4, first failing property
    std::string detail;
};

/// The four properties: St(A) avoids 213; B avoids 321; B2 increases; the
/// right neighbour of every B entry is in B or is a key entry.
StructureCheck check_structure(const Permutation& p);

/// Number of 213-avoiders on [n] ending in 1 with k key entries.
BigInt w(long n, long k);
/// The same count by enumeration.
BigInt count_key_213_oracle(int n, int k);
/// Same, restricted to n in position j.
BigInt count_key_213_at_position(int n, int j, int k);
/// C_{n-k, k-2-j}: 213-avoiders on [n] ending in 1 with n in position j and k
/// key entries, for one fixed relative order of the key entries.
BigInt count_keys_fixed_order(long n, long j, long k);

/// 321-avoiders on [n] whose last i entries increase: C_{n-i, i}.
BigInt count_321_tail(long n, long i);

/// |Sn(Π5)| by the direct formula (1, 1, 2 for n <= 2).
BigInt count_class5(long n);
/// The formula before collapsing the sum over i.
BigInt count_class5_expanded(long n);
/// Indecomposable members of Sn(Π5).
BigInt count_class5_indec(long n);

/// Members of Sn(Π5) with |A| = a, for a in {1, 2, n}, by enumeration.
BigInt count_a_cases(int n, int a);

/// Assembles the avoider with A = a_choice shifted up by b = n - a, B =
/// b_choice, the first b - i entries of B before the first key entry and the
/// last i entries split into blocks of the given sizes, one before each later
/// key entry.
Permutation construct(const Class5Params& params, const Permutation& a_choice, const Permutation& b_choice,
                      const std::vector<int>& distribution);

struct Construction {
    Class5Params params;
    Permutation a_choice;
    Permutation b_choice;
    std::vector<int> distribution;
    Permutation result;
};

/// Every valid construct() input of length n with 3 <= a <= n - 1.
std::vector<Construction> all_constructions(int n);

} // namespace weaksort
