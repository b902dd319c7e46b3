#pragma once

// First-entry refinement tables for the classes Π1, Π2, Π3.
//
// a_n(i) counts avoiders of length n that start with i. b_n(i) refines a_n(i)
// by the second entry:
//   Π1: second entry n-1      Π2: second entry i+1      Π3: second entry n
// All three classes share the recurrence, for 1 <= i <= n-3,
//   a_n(i) = a_{n-1}(1) + ... + a_{n-1}(i) + b_n(i)
//   b_n(i) = b_{n-1}(1) + ... + b_{n-1}(i)
// with a_n(n-2) = a_n(n-1) = a_n(n) = a_{n-1}, and boundary values of b that
// differ between Π1 and Π2/Π3.

#include <string>
#include <vector>

#include "weaksort/bigint.hpp"
#include "weaksort/enumerate.hpp"
#include "weaksort/series.hpp"

namespace weaksort {

enum class RecurrenceClass { pi1, pi2, pi3 };

RecurrenceClass recurrence_class_from_name(const std::string& name);
std::string name_of(RecurrenceClass cls);
int class_index(RecurrenceClass cls);

struct RecurrenceTable {
    int n = 0;
    RecurrenceClass cls = RecurrenceClass::pi1;
    std::vector<BigInt> a; // a[i-1] = a_n(i)
    std::vector<BigInt> b; // b[i-1] = b_n(i)

    BigInt a_total() const;
    BigInt b_total() const;
    /// |Sn(Π)|: a_total(), except 1 for the empty permutation at n = 0.
    BigInt count() const { return n == 0 ? BigInt(1) : a_total(); }

    friend bool operator==(const RecurrenceTable&, const RecurrenceTable&) = default;
};

/// Directly computed tables for n = 0, 1, 2.
RecurrenceTable seed_table(RecurrenceClass cls, int n);

/// Level n+1 from level n and the total a_{n-1}. Rejects n+1 < 3.
RecurrenceTable advance(const RecurrenceTable& current, const BigInt& previous_total);

/// Tables for n = 0..nmax, keeping only two levels in memory at a time; the
/// callback sees every level in order.
template <typename Visit>
void run_recurrence(RecurrenceClass cls, int nmax, Visit&& visit);

CountingSequence count_via_recurrence(RecurrenceClass cls, int nmax);

/// The same tables computed by enumerating Sn(Π).
RecurrenceTable empirical_tables(int n, RecurrenceClass cls);

struct KernelCheck {
    bool holds = false;
    PowerSeries a_series;   // sum_n a_n x^n for Π1
    PowerSeries b_series;   // sum_n (sum_i b_n(i)) x^n
    PowerSeries residual;   // b_series - right-hand side
};

/// Checks, to order nmax, the kernel-root relation between the Π1 series
///   B(x,1) = x(s - 1)/2 + (2x^2 + x - x s)/2 · A(x,1),  s = sqrt(1-4x).
KernelCheck verify_kernel_identity(int nmax);

template <typename Visit>
void run_recurrence(RecurrenceClass cls, int nmax, Visit&& visit)
{
    if (nmax < 0)
        return;
    RecurrenceTable older = seed_table(cls, 0);
    visit(older);
    if (nmax == 0)
        return;
    RecurrenceTable current = seed_table(cls, 1);
    visit(current);
    if (nmax == 1)
        return;
    RecurrenceTable next = seed_table(cls, 2);
    visit(next);
    BigInt older_total = current.count();
    current = std::move(next);
    for (int n = 3; n <= nmax; ++n) {
        RecurrenceTable level = advance(current, older_total);
        visit(level);
        older_total = current.count();
        current = std::move(level);
    }
}

} // namespace weaksort
