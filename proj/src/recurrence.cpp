#include "weaksort/recurrence.hpp"

#include <stdexcept>

namespace weaksort {

RecurrenceClass recurrence_class_from_name(const std::string& name)
{
    if (name == "pi1" || name == "1")
        return RecurrenceClass::pi1;
    if (name == "pi2" || name == "2")
        return RecurrenceClass::pi2;
    if (name == "pi3" || name == "3")
        return RecurrenceClass::pi3;
    throw std::invalid_argument("recurrence class must be pi1, pi2 or pi3, got '" + name + "'");
}

std::string name_of(RecurrenceClass cls)
{
    return "pi" + std::to_string(class_index(cls));
}

int class_index(RecurrenceClass cls)
{
    switch (cls) {
    case RecurrenceClass::pi1:
        return 1;
    case RecurrenceClass::pi2:
        return 2;
    case RecurrenceClass::pi3:
        return 3;
    }
    return 0;
}

BigInt RecurrenceTable::a_total() const
{
    BigInt t = 0;
    for (const auto& v : a)
        t += v;
    return t;
}

BigInt RecurrenceTable::b_total() const
{
    BigInt t = 0;
    for (const auto& v : b)
        t += v;
    return t;
}

RecurrenceTable seed_table(RecurrenceClass cls, int n)
{
    RecurrenceTable t;
    t.cls = cls;
    t.n = n;
    switch (n) {
    case 0:
        break;
    case 1:
        t.a = {1};
        t.b = {0};
        break;
    case 2:
        t.a = {1, 1};
        if (cls == RecurrenceClass::pi1)
            t.b = {0, 1}; // only 21 has second entry n-1 = 1
        else
            t.b = {1, 0}; // only 12 has second entry i+1 (Π2) or n (Π3)
        break;
    default:
        throw std::invalid_argument("seed tables exist only for n <= 2");
    }
    return t;
}

RecurrenceTable advance(const RecurrenceTable& current, const BigInt& previous_total)
{
    const int m = current.n + 1;
    if (m < 3)
        throw std::invalid_argument("advance: levels below 3 come from seed_table");
    if (static_cast<int>(current.a.size()) != current.n || static_cast<int>(current.b.size()) != current.n)
        throw std::invalid_argument("advance: malformed table at n = " + std::to_string(current.n));

    RecurrenceTable next;
    next.cls = current.cls;
    next.n = m;
    next.a.assign(static_cast<std::size_t>(m), 0);
    next.b.assign(static_cast<std::size_t>(m), 0);

    BigInt a_prefix = 0;
    BigInt b_prefix = 0;
    for (int i = 1; i <= m - 3; ++i) {
        const auto idx = static_cast<std::size_t>(i - 1);
        a_prefix += current.a[idx];
        b_prefix += current.b[idx];
        next.b[idx] = b_prefix;
        next.a[idx] = a_prefix + next.b[idx];
    }

    const BigInt total = current.count();
    for (int i = m - 2; i <= m; ++i)
        next.a[static_cast<std::size_t>(i - 1)] = total;

    auto b_at = [&](int i) -> BigInt& { return next.b[static_cast<std::size_t>(i - 1)]; };
    if (current.cls == RecurrenceClass::pi1) {
        b_at(m - 2) = previous_total;
        b_at(m - 1) = 0;
        b_at(m) = previous_total;
    } else {
        b_at(m - 2) = previous_total;
        b_at(m - 1) = previous_total;
        b_at(m) = 0;
    }
    return next;
}

CountingSequence count_via_recurrence(RecurrenceClass cls, int nmax)
{
    if (nmax < 0)
        throw std::invalid_argument("count_via_recurrence: nmax must be nonnegative");
    CountingSequence seq;
    run_recurrence(cls, nmax, [&](const RecurrenceTable& t) { seq.values.push_back(t.count()); });
    return seq;
}

RecurrenceTable empirical_tables(int n, RecurrenceClass cls)
{
    RecurrenceTable t;
    t.cls = cls;
    t.n = n;
    t.a.assign(static_cast<std::size_t>(n), 0);
    t.b.assign(static_cast<std::size_t>(n), 0);
    for (const auto& p : enumerate_avoiders(n, pattern_class(class_index(cls)))) {
        const int first = p(1);
        t.a[static_cast<std::size_t>(first - 1)] += 1;
        if (n < 2)
            continue;
        const int second = p(2);
        bool refined = false;
        switch (cls) {
        case RecurrenceClass::pi1:
            refined = second == n - 1;
            break;
        case RecurrenceClass::pi2:
            refined = second == first + 1;
            break;
        case RecurrenceClass::pi3:
            refined = second == n;
            break;
        }
        if (refined)
            t.b[static_cast<std::size_t>(first - 1)] += 1;
    }
    return t;
}

KernelCheck verify_kernel_identity(int nmax)
{
    if (nmax < 2)
        throw std::invalid_argument("verify_kernel_identity: nmax must be at least 2");
    KernelCheck check{false, PowerSeries(nmax), PowerSeries(nmax), PowerSeries(nmax)};
    run_recurrence(RecurrenceClass::pi1, nmax, [&](const RecurrenceTable& t) {
        check.a_series[static_cast<std::size_t>(t.n)] = Rational(t.count());
        check.b_series[static_cast<std::size_t>(t.n)] = Rational(t.b_total());
    });

    const auto one = PowerSeries::one(nmax);
    const auto x = PowerSeries::monomial(1, nmax);
    const auto s = sqrt_one_minus_4x(nmax);
    const auto rhs = Rational(1, 2) * (x * (s - one)) +
                     Rational(1, 2) * ((2 * x.pow(2) + x - x * s) * check.a_series);
    check.residual = check.b_series - rhs;
    check.holds = check.residual.is_zero();
    return check;
}

} // namespace weaksort
