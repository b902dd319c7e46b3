#include "weaksort/oeis.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <httplib.h>

#ifndef WEAKSORT_FIXTURE_DIR
#define WEAKSORT_FIXTURE_DIR "data/oeis"
#endif

namespace weaksort {

namespace fs = std::filesystem;

namespace {

std::string env_or(const char* name, const std::string& fallback)
{
    const char* v = std::getenv(name);
    return v && *v ? std::string(v) : fallback;
}

std::optional<std::string> read_file(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

std::optional<BigInt> OeisSequence::term(long n) const
{
    const long idx = n - offset;
    if (idx < 0 || idx >= static_cast<long>(terms.size()))
        return std::nullopt;
    return terms[static_cast<std::size_t>(idx)];
}

OeisOptions default_oeis_options()
{
    OeisOptions o;
    o.fixture_dir = env_or("WEAKSORT_FIXTURES", WEAKSORT_FIXTURE_DIR);
    std::string cache_root = env_or("XDG_CACHE_HOME", "");
    if (cache_root.empty())
        cache_root = env_or("HOME", ".") + "/.cache";
    o.cache_dir = env_or("WEAKSORT_OEIS_CACHE", cache_root + "/weaksort/oeis");
    o.base_url = env_or("WEAKSORT_OEIS_URL", o.base_url);
    return o;
}

bool is_valid_oeis_id(std::string_view id)
{
    if (id.size() != 7 || id[0] != 'A')
        return false;
    for (std::size_t i = 1; i < id.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(id[i])))
            return false;
    return true;
}

std::string bfile_name(std::string_view id)
{
    if (!is_valid_oeis_id(id))
        throw OeisError("invalid OEIS id '" + std::string(id) + "' (expected A followed by 6 digits)");
    return "b" + std::string(id.substr(1)) + ".txt";
}

OeisSequence parse_bfile(std::string_view text, const std::string& id)
{
    OeisSequence seq;
    seq.id = id;
    std::optional<long> expected;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string line(text.substr(0, nl));
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#')
            continue;

        std::istringstream fields(line);
        std::string index_text;
        std::string value_text;
        std::string extra;
        if (!(fields >> index_text >> value_text) || (fields >> extra))
            throw BFileParseError("expected \"n a(n)\", got \"" + line + "\"", line_no);
        long index = 0;
        BigInt value;
        try {
            std::size_t used = 0;
            index = std::stol(index_text, &used);
            if (used != index_text.size())
                throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw BFileParseError("bad index \"" + index_text + "\"", line_no);
        }
        if (value.set_str(value_text, 10) != 0)
            throw BFileParseError("bad value \"" + value_text + "\"", line_no);
        if (!expected) {
            seq.offset = index;
        } else if (index != *expected) {
            throw BFileParseError("index " + std::to_string(index) + " breaks contiguity (expected " +
                                      std::to_string(*expected) + ")",
                                  line_no);
        }
        expected = index + 1;
        seq.terms.push_back(std::move(value));
    }
    if (seq.terms.empty())
        throw OeisError("b-file for " + id + " has no terms");
    return seq;
}

OeisSequence oeis_get(const std::string& id, OeisSource source, const OeisOptions& options)
{
    const auto file = bfile_name(id);

    if (source == OeisSource::offline) {
        const auto text = read_file(options.fixture_dir / file);
        if (!text)
            throw OeisError("no offline fixture for " + id + " in " + options.fixture_dir.string());
        return parse_bfile(*text, id);
    }

    const auto cached = options.cache_dir / file;
    if (auto text = read_file(cached))
        return parse_bfile(*text, id);

    const std::string path = "/" + id + "/" + file;
    std::string body;
    try {
        httplib::Client client(options.base_url);
        client.set_connection_timeout(10);
        client.set_read_timeout(30);
        client.set_follow_location(true);
        auto res = client.Get(path);
        if (!res)
            throw OeisError(httplib::to_string(res.error()));
        if (res->status != 200)
            throw OeisError("HTTP status " + std::to_string(res->status));
        body = std::move(res->body);
    } catch (const std::exception& e) {
        throw OeisError("fetching " + options.base_url + path + " failed (" + e.what() +
                        "); use --offline to read the bundled fixtures");
    }

    auto seq = parse_bfile(body, id);
    std::error_code ec;
    fs::create_directories(options.cache_dir, ec);
    std::ofstream out(cached, std::ios::binary);
    if (out)
        out << body;
    return seq;
}

} // namespace weaksort
