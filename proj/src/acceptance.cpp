#include "weaksort/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "weaksort/class5.hpp"
#include "weaksort/enumerate.hpp"
#include "weaksort/recurrence.hpp"
#include "weaksort/schroder.hpp"
#include "weaksort/series.hpp"

namespace weaksort {

namespace {

// Collects failure messages; a criterion passes when none were recorded.
class Tally {
public:
    void expect(bool ok, const std::string& message)
    {
        if (!ok && failures_.size() < 8)
            failures_.push_back(message);
        failed_ |= !ok;
    }
    bool ok() const { return !failed_; }
    std::string summary(const std::string& success) const
    {
        if (!failed_)
            return success;
        std::string out;
        for (const auto& f : failures_)
            out += (out.empty() ? "" : "; ") + f;
        return out;
    }

private:
    bool failed_ = false;
    std::vector<std::string> failures_;
};

struct Outcome {
    bool passed;
    std::string detail;
};

const CountingSequence& weak_sorting_prefix()
{
    static const auto seq = make_sequence({1, 1, 2, 6, 21, 79, 309, 1237, 5026});
    return seq;
}

Outcome five_class_agreement(const AcceptanceOptions& opt)
{
    Tally t;
    EnumerationLimits limits{10, false, opt.threads};
    for (int j = 1; j <= 5; ++j) {
        const auto seq = counting_sequence(pattern_class(j), 8, limits);
        t.expect(seq == weak_sorting_prefix(), "Π" + std::to_string(j) + " gives " + seq.to_string());
    }
    return {t.ok(), t.summary("Π1..Π5 all give " + weak_sorting_prefix().to_string() + " for n <= 8")};
}

Outcome generating_function_agreement(const AcceptanceOptions& opt)
{
    Tally t;
    const auto main = univariate_gf("main", 100).integer_coefficients();
    const auto brute = counting_sequence(pattern_class(1), 8, {10, false, opt.threads});
    for (int n = 0; n <= 8; ++n)
        t.expect(main[static_cast<std::size_t>(n)] == brute[static_cast<std::size_t>(n)],
                 "coefficient " + std::to_string(n) + " differs from brute force");
    for (auto cls : {RecurrenceClass::pi1, RecurrenceClass::pi2, RecurrenceClass::pi3}) {
        const auto rec = count_via_recurrence(cls, 100);
        for (int n = 0; n <= 100; ++n)
            t.expect(main[static_cast<std::size_t>(n)] == rec[static_cast<std::size_t>(n)],
                     name_of(cls) + " recurrence differs at n = " + std::to_string(n));
    }
    return {t.ok(), t.summary("main GF = brute force (n <= 8) = recurrences Π1, Π2, Π3 (n <= 100)")};
}

Outcome wilf_classification(const AcceptanceOptions& opt)
{
    Tally t;
    const auto report = wilf_search(8, weak_sorting_prefix(), {8, false, opt.threads});
    t.expect(report.triples_examined == 2024, "examined " + std::to_string(report.triples_examined) + " triples");
    t.expect(report.orbit_size_total == 2024, "orbit sizes sum to " + std::to_string(report.orbit_size_total));
    t.expect(report.matches.size() == 5, std::to_string(report.matches.size()) + " matching orbits");
    std::set<PatternSet> matches(report.matches.begin(), report.matches.end());
    for (int j = 1; j <= 5; ++j)
        t.expect(matches.count(canonical(pattern_class(j))) == 1, "orbit of Π" + std::to_string(j) + " missing");
    return {t.ok(), t.summary(std::to_string(report.orbit_count) + " orbits, sizes sum to 2024, exactly the 5 orbits of Π1..Π5 match")};
}

Outcome recurrence_fidelity(const AcceptanceOptions&)
{
    Tally t;
    for (auto cls : {RecurrenceClass::pi1, RecurrenceClass::pi2, RecurrenceClass::pi3}) {
        run_recurrence(cls, 8, [&](const RecurrenceTable& table) {
            if (table.n >= 3)
                t.expect(table == empirical_tables(table.n, cls),
                         name_of(cls) + " table differs from enumeration at n = " + std::to_string(table.n));
        });
    }
    std::vector<RecurrenceTable> pi2;
    run_recurrence(RecurrenceClass::pi2, 50, [&](const RecurrenceTable& table) { pi2.push_back(table); });
    std::size_t level = 0;
    run_recurrence(RecurrenceClass::pi3, 50, [&](const RecurrenceTable& table) {
        const auto& other = pi2[level++];
        t.expect(table.a == other.a && table.b == other.b,
                 "Π2 and Π3 tables differ at n = " + std::to_string(table.n));
    });
    return {t.ok(), t.summary("recurrence = enumeration for 3 <= n <= 8; Π2 and Π3 tables identical for n <= 50")};
}

Outcome kernel_identity(const AcceptanceOptions&)
{
    const auto check = verify_kernel_identity(40);
    return {check.holds, check.holds ? "residual vanishes through x^40" : "nonzero residual"};
}

Outcome bijection_suite(const AcceptanceOptions& opt)
{
    Tally t;
    const std::vector<std::size_t> schroder_numbers = {1, 2, 6, 22, 90, 394, 1806};
    for (int n = 1; n <= 7; ++n) {
        const auto avoiders = enumerate_avoiders(n, schroder_patterns(), opt.threads);
        std::set<SchroderPath> image;
        for (const auto& p : avoiders) {
            const auto path = phi(p);
            t.expect(path.size() == n - 1, "phi changes size by other than 1");
            t.expect(phi_inverse(path) == p, "phi does not roundtrip on " + p.to_string());
            image.insert(path);
        }
        t.expect(image.size() == schroder_numbers[static_cast<std::size_t>(n - 1)],
                 "image size " + std::to_string(image.size()) + " at n = " + std::to_string(n));
        const auto all = enumerate_paths(n - 1);
        t.expect(std::set<SchroderPath>(all.begin(), all.end()) == image,
                 "phi is not onto the Schröder " + std::to_string(n - 1) + "-paths");

        std::set<SchroderPath> pi4_image;
        for (const auto& p : enumerate_avoiders(n, pattern_class(4), opt.threads))
            pi4_image.insert(phi(p));
        std::set<SchroderPath> low_peak;
        for (const auto& path : all)
            if (at_most_one_peak_per_component(path))
                low_peak.insert(path);
        t.expect(pi4_image == low_peak, "image of Sn(Π4) differs at n = " + std::to_string(n));
    }
    return {t.ok(), t.summary("phi roundtrips, image sizes 1,2,6,22,90,394,1806, Π4 image = <=1 peak per component (n <= 7)")};
}

Outcome peak_censuses(const AcceptanceOptions&)
{
    Tally t;
    for (int n = 1; n <= 9; ++n) {
        const auto census = peak_census(n);
        const auto tag = " at n = " + std::to_string(n);
        t.expect(BigInt(static_cast<unsigned long>(census.by_peaks[0])) == catalan(n), "no-peak count" + tag);
        t.expect(BigInt(static_cast<unsigned long>(census.by_peaks[1])) == binomial(2 * n - 1, n - 1), "one-peak count" + tag);
        if (n >= 2) {
            t.expect(BigInt(static_cast<unsigned long>(census.indecomposable_by_peaks[0])) == catalan(n - 1),
                     "indecomposable no-peak count" + tag);
            t.expect(BigInt(static_cast<unsigned long>(census.indecomposable_by_peaks[1])) ==
                         binomial(2 * n - 3, n - 2),
                     "indecomposable one-peak count" + tag);
        }
    }
    return {t.ok(), t.summary("C_n, binom(2n-1,n-1) for n <= 9; C_{n-1}, binom(2n-3,n-2) indecomposable for 2 <= n <= 9")};
}

Outcome class5_formula(const AcceptanceOptions& opt)
{
    Tally t;
    const auto patterns = class5_patterns();
    for (int n = 3; n <= 9; ++n)
        t.expect(count_class5(n) == count_avoiders(n, patterns, opt.threads),
                 "direct count differs from brute force at n = " + std::to_string(n));
    for (int n = 1; n <= 8; ++n) {
        for (const auto& p : all_permutations(n)) {
            if (check_structure(p).holds != avoids(p, patterns)) {
                t.expect(false, "structure test disagrees with avoidance on " + p.to_string());
                break;
            }
        }
    }
    for (int n = 3; n <= 7; ++n) {
        std::set<Permutation> stratum;
        for (const auto& p : enumerate_avoiders(n, patterns, opt.threads)) {
            const int a = n - p(n) + 1;
            if (a >= 3 && a <= n - 1)
                stratum.insert(p);
        }
        std::set<Permutation> built;
        std::size_t total = 0;
        for (const auto& c : all_constructions(n)) {
            ++total;
            built.insert(c.result);
            const auto d = decompose(c.result);
            t.expect(d.params.a == c.params.a && d.params.k == c.params.k && d.params.i == c.params.i,
                     "decompose does not recover the parameters of " + c.result.to_string());
        }
        t.expect(total == built.size(), "construct is not injective at n = " + std::to_string(n));
        t.expect(built == stratum, "construct is not onto the 3 <= a <= n-1 stratum at n = " + std::to_string(n));
    }
    return {t.ok(), t.summary("direct formula = brute force for 3 <= n <= 9; 4-property structure test = avoidance for n <= 8; construct bijective n <= 7")};
}

Outcome indecomposable_and_bivariate(const AcceptanceOptions& opt)
{
    Tally t;
    const std::vector<long> indec = {1, 1, 3, 11, 43, 173, 707};
    for (int n = 1; n <= 7; ++n)
        t.expect(count_class5_indec(n) == indec[static_cast<std::size_t>(n - 1)],
                 "indecomposable count at n = " + std::to_string(n));

    const auto bivariate = bivariate_gf("class5_bivariate", 40);
    for (int n = 1; n <= 8; ++n) {
        std::map<int, long> by_components;
        for (const auto& p : enumerate_avoiders(n, class5_patterns(), opt.threads))
            ++by_components[static_cast<int>(components(p).size())];
        for (int k = 0; k <= n; ++k)
            t.expect(bivariate.coefficient(static_cast<std::size_t>(n), static_cast<std::size_t>(k)) ==
                         Rational(by_components[k]),
                     "x^" + std::to_string(n) + " y^" + std::to_string(k) + " coefficient");
    }
    t.expect(bivariate.at_y_equals_one() == univariate_gf("pi4_nonempty", 40),
             "bivariate at y = 1 differs from the nonempty Π4 series");
    return {t.ok(), t.summary("indecomposable counts 1,1,3,11,43,173,707; bivariate = component census n <= 8; y = 1 gives the Π4 series to x^40")};
}

Outcome catalan_identity(const AcceptanceOptions&)
{
    Tally t;
    for (long b = 0; b <= 12; ++b) {
        for (long k = 3; k <= 12; ++k) {
            BigInt lhs = 0;
            for (long i = 0; i <= b; ++i)
                lhs += binomial(i + k - 2, i) * gen_catalan(b - i, i);
            t.expect(lhs == gen_catalan(b, k - 1), "b = " + std::to_string(b) + ", k = " + std::to_string(k));
        }
    }
    return {t.ok(), t.summary("sum_i binom(i+k-2,i) C_{b-i,i} = C_{b,k-1} for 0 <= b <= 12, 3 <= k <= 12")};
}

struct Criterion {
    int id;
    const char* title;
    double limit_seconds;
    Outcome (*run)(const AcceptanceOptions&);
};

const std::vector<Criterion>& criteria()
{
    static const std::vector<Criterion> list = {
        {1, "five-class agreement", 300, five_class_agreement},
        {2, "generating function agreement", 60, generating_function_agreement},
        {3, "Wilf classification of 4-letter triples", 1800, wilf_classification},
        {4, "recurrence fidelity", 0, recurrence_fidelity},
        {5, "kernel identity", 0, kernel_identity},
        {6, "bijection suite", 600, bijection_suite},
        {7, "peak censuses", 0, peak_censuses},
        {8, "class-5 direct formula and structure", 0, class5_formula},
        {9, "indecomposable and bivariate checks", 0, indecomposable_and_bivariate},
        {10, "generalized Catalan identity", 0, catalan_identity},
    };
    return list;
}

} // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result)
{
    std::vector<CriterionResult> results;
    for (const auto& c : criteria()) {
        if (!options.only.empty() && options.only.count(c.id) == 0)
            continue;
        CriterionResult r;
        r.id = c.id;
        r.title = c.title;
        r.time_limit_seconds = c.limit_seconds;
        const auto start = std::chrono::steady_clock::now();
        try {
            const auto outcome = c.run(options);
            r.passed = outcome.passed;
            r.detail = outcome.detail;
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (r.time_limit_seconds > 0 && r.seconds > r.time_limit_seconds) {
            r.passed = false;
            r.detail += " (took longer than the " + std::to_string(static_cast<int>(r.time_limit_seconds)) + " s limit)";
        }
        if (on_result)
            on_result(r);
        results.push_back(std::move(r));
    }
    return results;
}

std::string format_result_line(const CriterionResult& r, bool with_timing)
{
    std::ostringstream out;
    out << (r.passed ? "[PASS] " : "[FAIL] ") << "AC" << r.id << " " << r.title;
    if (with_timing) {
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", r.seconds);
        out << " (" << timing << ")";
    }
    out << ": " << r.detail;
    return out.str();
}

} // namespace weaksort
