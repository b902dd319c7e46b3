#include "weaksort/perm.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

namespace weaksort {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

void check_rearrangement(const std::vector<int>& values)
{
    const auto n = values.size();
    std::vector<bool> seen(n + 1, false);
    for (int v : values) {
        if (v < 1 || static_cast<std::size_t>(v) > n)
            throw PermutationError("value " + std::to_string(v) + " out of range 1.." + std::to_string(n));
        if (seen[static_cast<std::size_t>(v)])
            throw PermutationError("value " + std::to_string(v) + " repeated");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

} // namespace

Permutation::Permutation(std::initializer_list<int> values) : Permutation(std::vector<int>(values)) {}

Permutation::Permutation(std::vector<int> values) : values_(std::move(values))
{
    check_rearrangement(values_);
}

Permutation Permutation::parse(std::string_view text)
{
    text = trim(text);
    std::vector<int> values;
    if (text.empty())
        return Permutation{};
    const bool compact = text.find_first_of(" \t,") == std::string_view::npos;
    if (compact) {
        for (char ch : text) {
            if (ch < '0' || ch > '9')
                throw PermutationError("invalid character '" + std::string(1, ch) + "' in permutation");
            values.push_back(ch - '0');
        }
        return Permutation(std::move(values));
    }
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ','))
            ++i;
        if (i == text.size())
            break;
        int v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
        if (ec != std::errc())
            throw PermutationError("invalid token in permutation \"" + std::string(text) + "\"");
        i = static_cast<std::size_t>(ptr - text.data());
        values.push_back(v);
    }
    return Permutation(std::move(values));
}

Permutation Permutation::identity(int n)
{
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

std::string Permutation::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i)
            out += ' ';
        out += std::to_string(values_[i]);
    }
    return out;
}

std::string Permutation::compact() const
{
    std::string out;
    for (int v : values_)
        out += std::to_string(v);
    return out;
}

Permutation reverse(const Permutation& p)
{
    std::vector<int> v(p.values().rbegin(), p.values().rend());
    return Permutation(std::move(v));
}

Permutation complement(const Permutation& p)
{
    const int n = p.size();
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(n));
    for (int x : p.values())
        v.push_back(n + 1 - x);
    return Permutation(std::move(v));
}

Permutation inverse(const Permutation& p)
{
    std::vector<int> v(static_cast<std::size_t>(p.size()));
    for (int pos = 1; pos <= p.size(); ++pos)
        v[static_cast<std::size_t>(p(pos) - 1)] = pos;
    return Permutation(std::move(v));
}

std::optional<std::vector<int>> find_occurrence(std::span<const int> word, const Permutation& pattern,
                                                bool anchor_last)
{
    const int n = static_cast<int>(word.size());
    const int k = pattern.size();
    if (k == 0)
        return anchor_last && n > 0 ? std::nullopt : std::optional<std::vector<int>>(std::vector<int>{});
    if (k > n)
        return std::nullopt;

    const auto tau = pattern.values();
    std::vector<int> chosen(static_cast<std::size_t>(k)); // 0-based positions

    // Depth-first over pattern letters; a partial choice is extended only if it
    // is order-isomorphic to the corresponding prefix of the pattern.
    auto consistent = [&](int depth, int pos) {
        for (int l = 0; l < depth; ++l) {
            const bool word_less = word[static_cast<std::size_t>(chosen[static_cast<std::size_t>(l)])] <
                                   word[static_cast<std::size_t>(pos)];
            const bool tau_less = tau[static_cast<std::size_t>(l)] < tau[static_cast<std::size_t>(depth)];
            if (word_less != tau_less)
                return false;
        }
        return true;
    };

    auto search = [&](auto&& self, int depth, int start) -> bool {
        if (depth == k)
            return true;
        const int last_allowed = n - (k - depth);
        int from = start;
        if (anchor_last && depth == k - 1)
            from = std::max(start, n - 1);
        for (int pos = from; pos <= last_allowed; ++pos) {
            if (anchor_last && depth < k - 1 && pos >= n - 1)
                break;
            if (!consistent(depth, pos))
                continue;
            chosen[static_cast<std::size_t>(depth)] = pos;
            if (self(self, depth + 1, pos + 1))
                return true;
        }
        return false;
    };

    if (!search(search, 0, 0))
        return std::nullopt;
    std::vector<int> positions;
    positions.reserve(chosen.size());
    for (int c : chosen)
        positions.push_back(c + 1);
    return positions;
}

bool contains(const Permutation& p, const Permutation& pattern)
{
    return find_occurrence(p.values(), pattern).has_value();
}

PatternSet::PatternSet(std::initializer_list<Permutation> patterns)
    : PatternSet(std::vector<Permutation>(patterns))
{
}

PatternSet::PatternSet(std::vector<Permutation> patterns) : patterns_(std::move(patterns))
{
    std::sort(patterns_.begin(), patterns_.end());
    patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
}

PatternSet PatternSet::parse(std::string_view text)
{
    std::vector<Permutation> patterns;
    text = trim(text);
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto token = trim(text.substr(0, comma));
        if (token.empty())
            throw PermutationError("empty pattern in pattern list");
        patterns.push_back(Permutation::parse(token));
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    return PatternSet(std::move(patterns));
}

std::string PatternSet::to_string() const
{
    std::string out = "{";
    for (std::size_t i = 0; i < patterns_.size(); ++i) {
        if (i)
            out += ',';
        out += patterns_[i].size() <= 9 ? patterns_[i].compact() : patterns_[i].to_string();
    }
    return out + "}";
}

bool avoids(const Permutation& p, const PatternSet& patterns)
{
    return std::none_of(patterns.patterns().begin(), patterns.patterns().end(),
                        [&](const Permutation& tau) { return contains(p, tau); });
}

std::vector<Symmetry> Symmetry::all()
{
    std::vector<Symmetry> out;
    for (int bits = 0; bits < 8; ++bits)
        out.push_back({(bits & 4) != 0, (bits & 2) != 0, (bits & 1) != 0});
    return out;
}

std::string Symmetry::name() const
{
    std::string out;
    auto add = [&](bool on, const char* part) {
        if (!on)
            return;
        if (!out.empty())
            out += "∘";
        out += part;
    };
    add(complement, "complement");
    add(reverse, "reverse");
    add(inverse, "inverse");
    return out.empty() ? "identity" : out;
}

// Relations used: i∘r = c∘i and i∘c = r∘i, with r and c commuting involutions.
Symmetry compose(const Symmetry& g, const Symmetry& h)
{
    if (g.inverse) {
        // c^a1 r^b1 i · c^a2 r^b2 i^d2 = c^(a1+b2) r^(b1+a2) i^(1+d2)
        return {g.inverse != h.inverse, g.reverse != h.complement, g.complement != h.reverse};
    }
    return {h.inverse, g.reverse != h.reverse, g.complement != h.complement};
}

Symmetry group_inverse(const Symmetry& g)
{
    if (!g.inverse)
        return g;
    return {true, g.complement, g.reverse};
}

Permutation apply_symmetry(const Symmetry& g, const Permutation& p)
{
    Permutation out = p;
    if (g.inverse)
        out = inverse(out);
    if (g.reverse)
        out = reverse(out);
    if (g.complement)
        out = complement(out);
    return out;
}

PatternSet apply_symmetry(const Symmetry& g, const PatternSet& patterns)
{
    std::vector<Permutation> images;
    images.reserve(patterns.size());
    for (const auto& tau : patterns.patterns())
        images.push_back(apply_symmetry(g, tau));
    return PatternSet(std::move(images));
}

std::vector<PatternSet> orbit(const PatternSet& patterns)
{
    std::set<PatternSet> images;
    for (const auto& g : Symmetry::all())
        images.insert(apply_symmetry(g, patterns));
    return {images.begin(), images.end()};
}

PatternSet canonical(const PatternSet& patterns)
{
    return orbit(patterns).front();
}

Permutation standardize(std::span<const int> word)
{
    std::vector<int> order(word.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return word[static_cast<std::size_t>(a)] < word[static_cast<std::size_t>(b)];
    });
    std::vector<int> out(word.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
        if (rank > 0 && word[static_cast<std::size_t>(order[rank])] == word[static_cast<std::size_t>(order[rank - 1])])
            throw PermutationError("standardize: repeated entry");
        out[static_cast<std::size_t>(order[rank])] = static_cast<int>(rank) + 1;
    }
    return Permutation(std::move(out));
}

Permutation direct_sum(const Permutation& p, const Permutation& q)
{
    std::vector<int> v(p.values().begin(), p.values().end());
    const int m = p.size();
    for (int x : q.values())
        v.push_back(x + m);
    return Permutation(std::move(v));
}

std::vector<Permutation> components(const Permutation& p)
{
    std::vector<Permutation> out;
    const auto v = p.values();
    int start = 0;
    int running_max = 0;
    for (int i = 0; i < p.size(); ++i) {
        running_max = std::max(running_max, v[static_cast<std::size_t>(i)]);
        // Prefix p_1..p_{i+1} is {1..i+1} exactly when its maximum is i+1.
        if (running_max == i + 1) {
            out.push_back(standardize(v.subspan(static_cast<std::size_t>(start), static_cast<std::size_t>(i + 1 - start))));
            start = i + 1;
        }
    }
    return out;
}

bool is_indecomposable(const Permutation& p)
{
    return components(p).size() == 1;
}

Extrema extrema(const Permutation& p)
{
    Extrema e;
    const int n = p.size();
    int best = 0;
    for (int pos = 1; pos <= n; ++pos) {
        if (p(pos) > best) {
            best = p(pos);
            e.lr_max_positions.push_back(pos);
        }
    }
    best = n + 1;
    for (int pos = 1; pos <= n; ++pos) {
        if (p(pos) < best) {
            best = p(pos);
            e.lr_min_positions.push_back(pos);
        }
    }
    best = 0;
    for (int pos = n; pos >= 1; --pos) {
        if (p(pos) > best) {
            best = p(pos);
            e.rl_max_positions.push_back(pos);
        }
    }
    std::reverse(e.rl_max_positions.begin(), e.rl_max_positions.end());
    return e;
}

std::vector<Permutation> all_permutations(int n)
{
    std::vector<Permutation> out;
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

} // namespace weaksort
