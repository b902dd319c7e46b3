#include "cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "weaksort/acceptance.hpp"
#include "weaksort/class5.hpp"
#include "weaksort/enumerate.hpp"
#include "weaksort/oeis.hpp"
#include "weaksort/recurrence.hpp"
#include "weaksort/schroder.hpp"
#include "weaksort/series.hpp"

namespace weaksort::cli {

namespace {

enum class Format { table, csv, json };

struct Globals {
    std::string format;
    unsigned threads = 0;
    bool limit_override = false;
    bool offline = false;
    bool online = false;

    Format resolve(Format fallback) const
    {
        if (format.empty())
            return fallback;
        return format == "csv" ? Format::csv : format == "json" ? Format::json : Format::table;
    }
    EnumerationLimits limits(int max_n = 10) const { return {max_n, limit_override, threads}; }
    OeisSource source() const { return online && !offline ? OeisSource::online : OeisSource::offline; }
};

// Usage errors detected after parsing.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::string quote(const std::string& s)
{
    return nlohmann::json(s).dump();
}

template <typename Range>
std::string json_number_array(const Range& values)
{
    std::string out = "[";
    bool first = true;
    for (const auto& v : values) {
        out += first ? "" : ",";
        out += v.get_str();
        first = false;
    }
    return out + "]";
}

struct NamedSequence {
    std::string name;
    std::vector<BigInt> terms; // from n = offset
    long offset = 0;
};

void write_sequences(std::ostream& out, const std::vector<NamedSequence>& rows, Format format)
{
    switch (format) {
    case Format::table: {
        std::size_t width = 0;
        for (const auto& r : rows)
            width = std::max(width, r.name.size());
        for (const auto& r : rows) {
            out << r.name << std::string(width - r.name.size() + 2, ' ');
            for (std::size_t i = 0; i < r.terms.size(); ++i)
                out << (i ? "," : "") << r.terms[i].get_str();
            out << '\n';
        }
        break;
    }
    case Format::csv:
        out << (rows.size() == 1 ? "n,value\n" : "name,n,value\n");
        for (const auto& r : rows)
            for (std::size_t i = 0; i < r.terms.size(); ++i)
                out << (rows.size() == 1 ? "" : r.name + ",") << static_cast<long>(i) + r.offset << ','
                    << r.terms[i].get_str() << '\n';
        break;
    case Format::json:
        if (rows.size() != 1)
            out << '[';
        for (std::size_t k = 0; k < rows.size(); ++k)
            out << (k ? "," : "") << "{\"name\":" << quote(rows[k].name) << ",\"terms\":" << json_number_array(rows[k].terms)
                << '}';
        out << (rows.size() != 1 ? "]\n" : "\n");
        break;
    }
}

std::vector<std::pair<std::string, PatternSet>> parse_classes(const std::vector<std::string>& specs)
{
    std::vector<std::pair<std::string, PatternSet>> out;
    for (const auto& spec : specs) {
        if (spec == "all") {
            for (int j = 1; j <= 5; ++j)
                out.emplace_back("pi" + std::to_string(j), pattern_class(j));
            continue;
        }
        const auto set = pattern_class_by_name(spec);
        out.emplace_back(spec.rfind("pi", 0) == 0 ? spec : set.to_string(), set);
    }
    return out;
}

CountingSequence resolve_target(const std::string& target, const Globals& g)
{
    if (is_valid_oeis_id(target)) {
        CountingSequence seq;
        const auto fetched = oeis_get(target, g.source());
        if (fetched.offset != 0)
            throw UsageError(target + " does not start at n = 0");
        seq.values = fetched.terms;
        return seq;
    }
    CountingSequence seq;
    std::stringstream in(target);
    std::string item;
    while (std::getline(in, item, ',')) {
        BigInt v;
        if (v.set_str(item, 10) != 0)
            throw UsageError("target must be an OEIS id or a comma separated list of integers");
        seq.values.push_back(v);
    }
    return seq;
}

int cmd_count(const Globals& g, const std::vector<std::string>& classes, int n, std::ostream& out)
{
    const auto limits = g.limits();
    if (n > limits.max_n && !limits.override_limit)
        throw LimitExceeded("n = " + std::to_string(n) + " exceeds the enumeration limit " +
                            std::to_string(limits.max_n) + "; pass --limit-override to proceed");
    std::vector<NamedSequence> rows;
    for (const auto& [name, set] : parse_classes(classes))
        rows.push_back({name, {count_avoiders(n, set, g.threads)}, n});
    write_sequences(out, rows, g.resolve(Format::table));
    return ok;
}

int cmd_sequence(const Globals& g, const std::vector<std::string>& classes, int n, std::ostream& out)
{
    std::vector<NamedSequence> rows;
    for (const auto& [name, set] : parse_classes(classes))
        rows.push_back({name, counting_sequence(set, n, g.limits()).values, 0});
    write_sequences(out, rows, g.resolve(Format::table));
    return ok;
}

int cmd_search(const Globals& g, const std::string& target_text, int n, bool all_orbits, std::ostream& out)
{
    const auto target = resolve_target(target_text, g);
    if (target.size() < static_cast<std::size_t>(n) + 1)
        throw UsageError("target has only " + std::to_string(target.size()) + " terms; need n + 1");
    const auto report = wilf_search(n, target, g.limits(8));

    std::vector<const OrbitSummary*> shown;
    for (const auto& o : report.orbits)
        if (all_orbits || std::binary_search(report.matches.begin(), report.matches.end(), o.representative))
            shown.push_back(&o);

    switch (g.resolve(Format::table)) {
    case Format::table:
        out << "triples " << report.triples_examined << ", orbits " << report.orbit_count << ", matching "
            << report.matches.size() << " (n <= " << n << ")\n";
        for (const auto* o : shown)
            out << o->representative.to_string() << "  size " << o->size << "  " << o->sequence.to_string() << '\n';
        break;
    case Format::csv:
        out << "representative,size,matches,terms\n";
        for (const auto* o : shown)
            out << '"' << o->representative.to_string() << "\"," << o->size << ','
                << (o->sequence.matches_prefix(target, static_cast<std::size_t>(n) + 1) ? 1 : 0) << ",\""
                << o->sequence.to_string() << "\"\n";
        break;
    case Format::json:
        out << "{\"target\":" << json_number_array(std::vector<BigInt>(target.values.begin(),
                                                                       target.values.begin() + n + 1))
            << ",\"n\":" << n << ",\"triples\":" << report.triples_examined << ",\"orbits\":" << report.orbit_count
            << ",\"matches\":[";
        for (std::size_t k = 0; k < report.matches.size(); ++k)
            out << (k ? "," : "") << quote(report.matches[k].to_string());
        out << "],\"" << (all_orbits ? "all_orbits" : "matching_orbits") << "\":[";
        for (std::size_t k = 0; k < shown.size(); ++k)
            out << (k ? "," : "") << "{\"representative\":" << quote(shown[k]->representative.to_string())
                << ",\"size\":" << shown[k]->size << ",\"terms\":" << json_number_array(shown[k]->sequence.values)
                << '}';
        out << "]}\n";
        break;
    }
    return ok;
}

int cmd_series(const Globals& g, const std::string& name, int n, std::ostream& out)
{
    if (std::find(gf_names().begin(), gf_names().end(), name) == gf_names().end()) {
        std::string known;
        for (const auto& s : gf_names())
            known += (known.empty() ? "" : ", ") + s;
        throw UsageError("unknown series '" + name + "' (known: " + known + ")");
    }
    const auto format = g.resolve(Format::table);
    if (!is_bivariate_gf(name)) {
        const auto f = univariate_gf(name, n);
        write_sequences(out, {{name, f.integer_coefficients(), 0}}, format);
        return ok;
    }

    const auto f = bivariate_gf(name, n);
    auto row = [&](int i) {
        std::vector<BigInt> r;
        for (const auto& c : f[static_cast<std::size_t>(i)]) {
            if (c.get_den() != 1)
                throw SeriesError("coefficient of x^" + std::to_string(i) + " is not integral");
            r.push_back(c.get_num());
        }
        while (r.size() > 1 && r.back() == 0)
            r.pop_back();
        if (r.empty())
            r.emplace_back(0);
        return r;
    };
    switch (format) {
    case Format::table:
        for (int i = 0; i <= n; ++i) {
            const auto r = row(i);
            out << "x^" << i << ": ";
            for (std::size_t k = 0; k < r.size(); ++k)
                out << (k ? "," : "") << r[k].get_str();
            out << '\n';
        }
        break;
    case Format::csv:
        out << "n,k,value\n";
        for (int i = 0; i <= n; ++i) {
            const auto r = row(i);
            for (std::size_t k = 0; k < r.size(); ++k)
                out << i << ',' << k << ',' << r[k].get_str() << '\n';
        }
        break;
    case Format::json:
        out << "{\"name\":" << quote(name) << ",\"terms\":[";
        for (int i = 0; i <= n; ++i)
            out << (i ? "," : "") << json_number_array(row(i));
        out << "]}\n";
        break;
    }
    return ok;
}

int cmd_bijection(const Globals& g, const std::string& map, const std::string& input, bool inverse,
                  const std::string& path, std::ostream& out)
{
    if (map != "phi" && map != "staircase")
        throw UsageError("unknown map '" + map + "' (known: phi, staircase)");
    std::string in_text;
    std::string out_text;
    if (inverse) {
        if (path.empty())
            throw UsageError("--inverse needs --path");
        in_text = path;
        out_text = map == "phi" ? phi_inverse(validate_path(path)).to_string()
                                : staircase_to_perm(BoundingStaircase(path)).to_string();
    } else {
        if (input.empty())
            throw UsageError("--input is required unless --inverse is given");
        const auto p = Permutation::parse(input);
        in_text = p.to_string();
        out_text = map == "phi" ? phi(p).steps() : perm_to_staircase(p).steps();
    }
    switch (g.resolve(Format::table)) {
    case Format::table:
        out << out_text << '\n';
        break;
    case Format::csv:
        out << "input,output\n\"" << in_text << "\",\"" << out_text << "\"\n";
        break;
    case Format::json:
        out << "{\"map\":" << quote(map) << ",\"inverse\":" << (inverse ? "true" : "false")
            << ",\"input\":" << quote(in_text) << ",\"output\":" << quote(out_text) << "}\n";
        break;
    }
    return ok;
}

nlohmann::json decomposition_json(const Permutation& p)
{
    const auto d = decompose(p);
    const auto check = check_structure(p);
    nlohmann::json j;
    j["permutation"] = p.to_string();
    j["A"] = d.A;
    j["B"] = d.B;
    j["A1"] = d.A1;
    j["A2"] = d.A2;
    j["B2"] = d.B2;
    j["key_positions"] = d.key_positions;
    j["key_values"] = d.key_values;
    j["blocks"] = d.blocks;
    j["params"] = {{"n", d.params.n}, {"a", d.params.a}, {"k", d.params.k}, {"i", d.params.i}, {"j", d.params.j}};
    j["avoids"] = avoids(p, class5_patterns());
    j["structure_holds"] = check.holds;
    if (!check.holds)
        j["violated_property"] = check.violated;
    return j;
}

int cmd_class5(const Globals& g, int count_n, const std::string& decompose_input, int indec_n, std::ostream& out)
{
    const int chosen = (count_n >= 0) + !decompose_input.empty() + (indec_n >= 0);
    if (chosen != 1)
        throw UsageError("class5 needs exactly one of --count, --decompose, --indec");
    if (!decompose_input.empty()) {
        const auto p = Permutation::parse(decompose_input);
        const auto j = decomposition_json(p);
        if (g.resolve(Format::json) == Format::json) {
            out << j.dump() << '\n';
        } else {
            for (const auto& key : {"A", "B", "A1", "A2", "B2", "key_positions", "key_values"}) {
                out << key << ':';
                for (int v : j[key])
                    out << ' ' << v;
                out << '\n';
            }
            const auto& prm = j["params"];
            out << "n=" << prm["n"] << " a=" << prm["a"] << " k=" << prm["k"] << " i=" << prm["i"]
                << " j=" << prm["j"] << '\n';
            out << "structure " << (j["structure_holds"].get<bool>() ? "holds" : "fails") << '\n';
        }
        return ok;
    }
    const bool indec = indec_n >= 0;
    const int n = indec ? indec_n : count_n;
    std::vector<BigInt> terms;
    for (int m = 0; m <= n; ++m)
        terms.push_back(indec ? count_class5_indec(m) : count_class5(m));
    write_sequences(out, {{indec ? "class5_indec" : "class5", terms, 0}}, g.resolve(Format::table));
    return ok;
}

int cmd_recurrence(const Globals& g, const std::string& cls_name, int n, std::ostream& out)
{
    const auto cls = recurrence_class_from_name(cls_name);
    write_sequences(out, {{name_of(cls), count_via_recurrence(cls, n).values, 0}}, g.resolve(Format::csv));
    return ok;
}

int cmd_verify(const Globals& g, const std::vector<int>& only, std::ostream& out, std::ostream& err)
{
    AcceptanceOptions options;
    options.threads = g.threads;
    options.only.insert(only.begin(), only.end());
    const auto format = g.resolve(Format::table);
    const auto results = run_acceptance(options, [&](const CriterionResult& r) {
        if (format == Format::table)
            out << format_result_line(r, false) << std::endl;
        err << "AC" << r.id << (r.passed ? " passed" : " failed") << " in " << static_cast<long>(r.seconds * 1000)
            << " ms\n";
    });
    bool all_passed = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
    if (format == Format::csv) {
        out << "id,title,passed,detail\n";
        for (const auto& r : results)
            out << r.id << ",\"" << r.title << "\"," << (r.passed ? 1 : 0) << ',' << quote(r.detail) << '\n';
    } else if (format == Format::json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : results)
            j.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
        out << nlohmann::json{{"passed", all_passed}, {"criteria", j}}.dump() << '\n';
    } else {
        out << (all_passed ? "all criteria passed" : "some criteria failed") << '\n';
    }
    return all_passed ? ok : check_failed;
}

int cmd_oeis(const Globals& g, const std::string& id, int n, std::ostream& out)
{
    if (!is_valid_oeis_id(id))
        throw UsageError("invalid OEIS id '" + id + "' (expected A followed by 6 digits)");
    const auto seq = oeis_get(id, g.source());
    auto terms = seq.terms;
    if (n >= 0 && static_cast<std::size_t>(n) + 1 < terms.size())
        terms.resize(static_cast<std::size_t>(n) + 1);
    write_sequences(out, {{id, terms, seq.offset}}, g.resolve(Format::table));
    return ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Pattern classes counted by the weak sorting sequence: enumeration, series, bijections"};
    app.name("weaksort");
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));
    app.add_option("--threads", g.threads, "Worker threads (0: all cores)");
    app.add_flag("--limit-override", g.limit_override, "Allow enumeration beyond the default size limits");
    auto* offline = app.add_flag("--offline", g.offline, "Read OEIS data from the bundled fixtures (default)");
    app.add_flag("--online", g.online, "Fetch OEIS b-files over HTTP, using the local cache")->excludes(offline);

    std::vector<std::string> classes{"pi1"};
    int n = 8;

    auto* count = app.add_subcommand("count", "Number of avoiders of length n");
    count->add_option("--classes", classes, "all, pi1..pi5, or a pattern list such as 1234,1243,1342");
    count->add_option("--n", n, "Length")->check(CLI::NonNegativeNumber);

    auto* sequence = app.add_subcommand("sequence", "Counting sequences for n = 0..N");
    sequence->add_option("--classes", classes, "all, pi1..pi5, or a pattern list such as 1234,1243,1342");
    sequence->add_option("--n", n, "Largest length")->check(CLI::NonNegativeNumber);

    std::string target = "A111279";
    bool all_orbits = false;
    auto* search = app.add_subcommand("search", "Symmetry orbits of 4-letter triples matching a target sequence");
    search->add_option("--target", target, "OEIS id or comma separated terms from n = 0");
    search->add_option("--n", n, "Compare terms for lengths up to n")->check(CLI::Range(6, 12));
    search->add_flag("--all", all_orbits, "List every orbit, not only the matches");

    std::string series_name = "main";
    auto* series = app.add_subcommand("series", "Coefficients of a generating function");
    series->add_option("--name", series_name, "Series name");
    series->add_option("--n", n, "Highest power of x")->check(CLI::NonNegativeNumber);

    std::string map = "phi";
    std::string input;
    std::string path;
    bool inverse = false;
    auto* bijection = app.add_subcommand("bijection", "Permutation to Schröder path (or staircase) and back");
    bijection->add_option("--map", map, "phi or staircase");
    bijection->add_option("--input", input, "Permutation, e.g. \"3 1 4 2\"");
    bijection->add_flag("--inverse", inverse, "Map a path back to a permutation");
    bijection->add_option("--path", path, "Step string, e.g. NDE");

    int count_n = -1;
    int indec_n = -1;
    std::string decompose_input;
    auto* class5 = app.add_subcommand("class5", "Direct counts and decompositions for {3214, 3241, 4213}");
    class5->add_option("--count", count_n, "Counts for n = 0..N from the direct formula")->check(CLI::NonNegativeNumber);
    class5->add_option("--indec", indec_n, "Indecomposable counts for n = 0..N")->check(CLI::NonNegativeNumber);
    class5->add_option("--decompose", decompose_input, "Permutation to decompose");

    std::string cls = "pi1";
    auto* recurrence = app.add_subcommand("recurrence", "Counting sequence from the first-entry recurrence");
    recurrence->add_option("--class", cls, "pi1, pi2 or pi3");
    recurrence->add_option("--n", n, "Largest length")->check(CLI::NonNegativeNumber);

    std::vector<int> only;
    auto* verify = app.add_subcommand("verify", "Run the acceptance checks");
    verify->add_option("--only", only, "Criterion numbers to run")->check(CLI::Range(1, 10));

    std::string id;
    int oeis_n = -1;
    auto* oeis = app.add_subcommand("oeis", "Read an OEIS b-file");
    oeis->add_option("--id", id, "Sequence id, e.g. A006318")->required();
    oeis->add_option("--n", oeis_n, "Show terms up to index n");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    try {
        if (count->parsed())
            return cmd_count(g, classes, n, out);
        if (sequence->parsed())
            return cmd_sequence(g, classes, n, out);
        if (search->parsed())
            return cmd_search(g, target, n, all_orbits, out);
        if (series->parsed())
            return cmd_series(g, series_name, n, out);
        if (bijection->parsed())
            return cmd_bijection(g, map, input, inverse, path, out);
        if (class5->parsed())
            return cmd_class5(g, count_n, decompose_input, indec_n, out);
        if (recurrence->parsed())
            return cmd_recurrence(g, cls, n, out);
        if (verify->parsed())
            return cmd_verify(g, only, out, err);
        if (oeis->parsed())
            return cmd_oeis(g, id, oeis_n, out);
    } catch (const std::invalid_argument& e) {
        err << "weaksort: " << e.what() << '\n';
        return usage;
    } catch (const LimitExceeded& e) {
        err << "weaksort: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        err << "weaksort: " << e.what() << '\n';
        return check_failed;
    }
    return usage;
}

} // namespace weaksort::cli
