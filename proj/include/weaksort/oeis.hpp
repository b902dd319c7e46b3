#pragma once

// Minimal OEIS b-file client: bundled offline fixtures, or an HTTP fetch
// stored in a local cache directory.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "weaksort/bigint.hpp"

namespace weaksort {

class OeisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BFileParseError : public OeisError {
public:
    BFileParseError(const std::string& what, std::size_t line)
        : OeisError("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct OeisSequence {
    std::string id;
    long offset = 0; // index of terms[0]
    std::vector<BigInt> terms;

    /// a(n), if present.
    std::optional<BigInt> term(long n) const;
};

enum class OeisSource { offline, online };

struct OeisOptions {
    std::filesystem::path fixture_dir;
    std::filesystem::path cache_dir;
    std::string base_url = "https://oeis.org";
};

/// Fixture directory from WEAKSORT_FIXTURES (else the bundled data/oeis),
/// cache from WEAKSORT_OEIS_CACHE (else $XDG_CACHE_HOME/weaksort/oeis or
/// ~/.cache/weaksort/oeis), base URL from WEAKSORT_OEIS_URL.
OeisOptions default_oeis_options();

bool is_valid_oeis_id(std::string_view id);
/// "A111279" -> "b111279.txt"
std::string bfile_name(std::string_view id);

/// Lines "n a(n)"; blank lines and '#' comments are skipped. Indices must be
/// contiguous.
OeisSequence parse_bfile(std::string_view text, const std::string& id);

OeisSequence oeis_get(const std::string& id, OeisSource source, const OeisOptions& options = default_oeis_options());

} // namespace weaksort
