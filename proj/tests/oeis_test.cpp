#include <doctest.h>

#include <atomic>
#include <chrono>
#include <filesystem>
#include <thread>

#include <httplib.h>

#include "weaksort/class5.hpp"
#include "weaksort/oeis.hpp"
#include "weaksort/schroder.hpp"
#include "weaksort/series.hpp"

using namespace weaksort;
namespace fs = std::filesystem;

namespace {

OeisOptions fixture_options()
{
    OeisOptions o;
    o.fixture_dir = WEAKSORT_FIXTURE_DIR;
    o.cache_dir = fs::temp_directory_path() / "weaksort-test-unused-cache";
    return o;
}

fs::path fresh_dir(const std::string& name)
{
    const auto dir = fs::temp_directory_path() / (name + "-" + std::to_string(::getpid()));
    fs::remove_all(dir);
    return dir;
}

std::size_t parse_error_line(const std::string& text)
{
    try {
        parse_bfile(text, "A000001");
    } catch (const BFileParseError& e) {
        return e.line();
    }
    return 0;
}

} // namespace

TEST_CASE("ids and file names")
{
    CHECK(is_valid_oeis_id("A111279"));
    CHECK_FALSE(is_valid_oeis_id("A11127"));
    CHECK_FALSE(is_valid_oeis_id("B111279"));
    CHECK_FALSE(is_valid_oeis_id("A11127x"));
    CHECK(bfile_name("A006318") == "b006318.txt");
    CHECK_THROWS_AS(bfile_name("6318"), OeisError);
}

TEST_CASE("b-file parsing")
{
    const auto seq = parse_bfile("# comment\n\n3 5\n4 -7\r\n5 123456789012345678901234567890\n", "A000001");
    CHECK(seq.offset == 3);
    REQUIRE(seq.terms.size() == 3);
    CHECK(seq.terms[1] == -7);
    CHECK(seq.terms[2] == BigInt("123456789012345678901234567890"));
    CHECK(*seq.term(5) == seq.terms[2]);
    CHECK_FALSE(seq.term(2).has_value());
    CHECK_FALSE(seq.term(6).has_value());
}

TEST_CASE("malformed b-file lines report their line number")
{
    CHECK(parse_error_line("0 1\n1 2\n3 4\n") == 3);
    CHECK(parse_error_line("# header\n0 1\n1 x\n") == 3);
    CHECK(parse_error_line("0 1\n1\n") == 2);
    CHECK(parse_error_line("0 1 2\n") == 1);
    CHECK(parse_error_line("a 1\n") == 1);
    CHECK_THROWS_AS(parse_bfile("# nothing\n", "A000001"), OeisError);
}

TEST_CASE("offline lookup of an unknown id fails")
{
    CHECK_THROWS_AS(oeis_get("A000000", OeisSource::offline, fixture_options()), OeisError);
    CHECK_THROWS_AS(oeis_get("X1", OeisSource::offline, fixture_options()), OeisError);
}

TEST_CASE("fixture A111279 matches the main series")
{
    const auto seq = oeis_get("A111279", OeisSource::offline, fixture_options());
    CHECK(seq.offset == 0);
    const auto main = univariate_gf("main", static_cast<int>(seq.terms.size()) - 1).integer_coefficients();
    CHECK(seq.terms == main);
}

TEST_CASE("fixture A006318 matches counted Schröder paths")
{
    const auto seq = oeis_get("A006318", OeisSource::offline, fixture_options());
    for (int n = 0; n <= 8; ++n)
        CHECK(*seq.term(n) == static_cast<unsigned long>(enumerate_paths(n).size()));
    // beyond brute force: r_n = sum over peak counts
    for (long n = 9; n < static_cast<long>(seq.terms.size()); ++n) {
        BigInt total = 0;
        for (long k = 0; k <= n; ++k)
            total += binomial(n, k) * binomial(2 * n - k, n) / (n - k + 1);
        CHECK(*seq.term(n) == total);
    }
}

TEST_CASE("fixture A026671 matches indecomposable class-5 counts")
{
    const auto seq = oeis_get("A026671", OeisSource::offline, fixture_options());
    for (long n = 0; n < static_cast<long>(seq.terms.size()); ++n)
        CHECK(*seq.term(n) == count_class5_indec(n + 1));
}

TEST_CASE("fixture A060693 matches the peak census")
{
    const auto seq = oeis_get("A060693", OeisSource::offline, fixture_options());
    std::size_t index = 0;
    for (int n = 0; n <= 9; ++n) {
        const auto census = peak_census(n);
        for (int k = 0; k <= n; ++k, ++index) {
            const std::uint64_t expected =
                k < static_cast<int>(census.by_peaks.size()) ? census.by_peaks[static_cast<std::size_t>(k)] : 0;
            CHECK(seq.terms.at(index) == static_cast<unsigned long>(expected));
        }
    }
}

TEST_CASE("online fetch stores the b-file in the cache and reuses it")
{
    httplib::Server server;
    std::atomic<int> hits{0};
    server.Get("/A111279/b111279.txt", [&](const httplib::Request&, httplib::Response& res) {
        ++hits;
        res.set_content("# served\n0 1\n1 1\n2 2\n3 6\n", "text/plain");
    });
    const int port = server.bind_to_any_port("127.0.0.1");
    REQUIRE(port > 0);
    std::thread worker([&] { server.listen_after_bind(); });
    server.wait_until_ready();

    OeisOptions options;
    options.cache_dir = fresh_dir("weaksort-cache");
    options.base_url = "http://127.0.0.1:" + std::to_string(port);

    const auto first = oeis_get("A111279", OeisSource::online, options);
    const auto second = oeis_get("A111279", OeisSource::online, options);
    server.stop();
    worker.join();

    CHECK(hits == 1);
    CHECK(fs::exists(options.cache_dir / "b111279.txt"));
    CHECK(first.terms == second.terms);
    CHECK(first.offset == second.offset);
    CHECK(first.terms.size() == 4);

    fs::remove_all(options.cache_dir);
}

TEST_CASE("network failure suggests offline mode")
{
    OeisOptions options;
    options.cache_dir = fresh_dir("weaksort-cache-miss");
    // port 1 on loopback refuses connections
    options.base_url = "http://127.0.0.1:1";
    try {
        oeis_get("A006318", OeisSource::online, options);
        FAIL("expected OeisError");
    } catch (const OeisError& e) {
        CHECK(std::string(e.what()).find("--offline") != std::string::npos);
    }
    CHECK_FALSE(fs::exists(options.cache_dir / "b006318.txt"));
}

TEST_CASE("environment overrides")
{
    ::setenv("WEAKSORT_OEIS_CACHE", "/tmp/weaksort-env-cache", 1);
    ::setenv("WEAKSORT_OEIS_URL", "http://127.0.0.1:9", 1);
    const auto o = default_oeis_options();
    CHECK(o.cache_dir == fs::path("/tmp/weaksort-env-cache"));
    CHECK(o.base_url == "http://127.0.0.1:9");
    ::unsetenv("WEAKSORT_OEIS_CACHE");
    ::unsetenv("WEAKSORT_OEIS_URL");
    CHECK(default_oeis_options().base_url == "https://oeis.org");
}
