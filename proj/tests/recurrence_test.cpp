#include <doctest.h>

#include "weaksort/recurrence.hpp"

using namespace weaksort;

namespace {

// a_n(i) and b_n(i) counted straight from the definition over all of S_n.
RecurrenceTable brute_tables(int n, RecurrenceClass cls)
{
    const auto t = pattern_class(class_index(cls));
    RecurrenceTable table;
    table.n = n;
    table.cls = cls;
    table.a.assign(static_cast<std::size_t>(n), 0);
    table.b.assign(static_cast<std::size_t>(n), 0);
    for (const auto& p : all_permutations(n)) {
        if (!avoids(p, t))
            continue;
        const int i = p(1);
        table.a[static_cast<std::size_t>(i - 1)] += 1;
        const int second = p(2);
        const bool refined = cls == RecurrenceClass::pi1   ? second == n - 1
                             : cls == RecurrenceClass::pi2 ? second == i + 1
                                                           : second == n;
        if (refined)
            table.b[static_cast<std::size_t>(i - 1)] += 1;
    }
    return table;
}

const RecurrenceClass kClasses[] = {RecurrenceClass::pi1, RecurrenceClass::pi2, RecurrenceClass::pi3};

} // namespace

TEST_CASE("class names")
{
    CHECK(recurrence_class_from_name("pi2") == RecurrenceClass::pi2);
    CHECK(name_of(RecurrenceClass::pi3) == "pi3");
    CHECK_THROWS_AS(recurrence_class_from_name("pi4"), std::invalid_argument);
}

TEST_CASE("seeds")
{
    CHECK(seed_table(RecurrenceClass::pi1, 0).count() == 1);
    const auto one = seed_table(RecurrenceClass::pi1, 1);
    CHECK(one.a == std::vector<BigInt>{1});
    CHECK(one.b == std::vector<BigInt>{0});
    CHECK(seed_table(RecurrenceClass::pi1, 2).b == std::vector<BigInt>{0, 1});
    CHECK(seed_table(RecurrenceClass::pi2, 2).b == std::vector<BigInt>{1, 0});
    CHECK(seed_table(RecurrenceClass::pi3, 2).b == std::vector<BigInt>{1, 0});
    CHECK_THROWS_AS(seed_table(RecurrenceClass::pi1, 3), std::invalid_argument);
    CHECK_THROWS_AS(advance(seed_table(RecurrenceClass::pi1, 1), 1), std::invalid_argument);
}

TEST_CASE("recurrence tables match the definition")
{
    for (auto cls : kClasses) {
        for (int n = 3; n <= 8; ++n) {
            const auto expected = brute_tables(n, cls);
            CHECK(empirical_tables(n, cls) == expected);
        }
        run_recurrence(cls, 8, [&](const RecurrenceTable& t) {
            if (t.n >= 1)
                CHECK(t == brute_tables(t.n, cls));
        });
    }
}

TEST_CASE("advance from enumerated levels")
{
    for (auto cls : kClasses)
        for (int n = 3; n <= 7; ++n)
            CHECK(advance(brute_tables(n - 1, cls), brute_tables(n - 2, cls).count()) == brute_tables(n, cls));
}

TEST_CASE("recurrence counts")
{
    const auto expected = make_sequence({1, 1, 2, 6, 21, 79, 309, 1237, 5026, 20626, 85242});
    for (auto cls : kClasses)
        CHECK(count_via_recurrence(cls, 10) == expected);
    const auto long_run = count_via_recurrence(RecurrenceClass::pi1, 60);
    CHECK(long_run.size() == 61);
    CHECK(long_run.values == univariate_gf("main", 60).integer_coefficients());
}

TEST_CASE("kernel identity holds and its residual is zero")
{
    const auto check = verify_kernel_identity(30);
    CHECK(check.holds);
    CHECK(check.residual.is_zero());
    CHECK(check.a_series.integer_coefficients()[8] == 5026);
    CHECK_THROWS_AS(verify_kernel_identity(1), std::invalid_argument);
}
