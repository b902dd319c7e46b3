#include "weaksort/schroder.hpp"

#include <algorithm>
#include <set>

#include "weaksort/enumerate.hpp"

namespace weaksort {

SchroderPath::SchroderPath(std::string steps) : steps_(std::move(steps))
{
    int x = 0;
    int y = 0;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        switch (steps_[i]) {
        case 'N':
            ++y;
            ++size_;
            break;
        case 'D':
            ++x;
            ++y;
            ++size_;
            break;
        case 'E':
            ++x;
            break;
        default:
            throw PathError(std::string("unknown step '") + steps_[i] + "'", i);
        }
        if (y < x)
            throw PathError("path drops below the diagonal", i);
    }
    if (x != y)
        throw PathError("path does not end on the diagonal", steps_.empty() ? 0 : steps_.size() - 1);
}

SchroderPath validate_path(std::string_view steps)
{
    return SchroderPath(std::string(steps));
}

PathStats stats(const SchroderPath& path)
{
    PathStats s;
    s.size = path.size();
    const auto& steps = path.steps();
    int x = 0;
    int y = 0;
    int current_peaks = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const char c = steps[i];
        if (c == 'N' && i + 1 < steps.size() && steps[i + 1] == 'E') {
            ++s.peaks;
            ++current_peaks;
        }
        x += c != 'N';
        y += c != 'E';
        if (x == y) {
            s.peaks_per_component.push_back(current_peaks);
            current_peaks = 0;
        }
    }
    s.components = static_cast<int>(s.peaks_per_component.size());
    s.indecomposable = s.components == 1;
    return s;
}

bool at_most_one_peak_per_component(const SchroderPath& path)
{
    const auto s = stats(path);
    return std::all_of(s.peaks_per_component.begin(), s.peaks_per_component.end(), [](int k) { return k <= 1; });
}

namespace {

void check_path_limit(int n, int limit)
{
    if (n < 0)
        throw std::invalid_argument("path size must be nonnegative");
    if (n > limit)
        throw LimitExceeded("Schröder path size " + std::to_string(n) + " exceeds the limit " + std::to_string(limit));
}

// Steps in ASCII order D < E < N so paths come out lexicographically sorted.
void generate(int n, int x, int y, std::string& steps, const std::function<void(const SchroderPath&)>& visit)
{
    if (x == n && y == n) {
        visit(SchroderPath(steps));
        return;
    }
    if (y < n) {
        steps.push_back('D');
        generate(n, x + 1, y + 1, steps, visit);
        steps.pop_back();
    }
    if (x < y) {
        steps.push_back('E');
        generate(n, x + 1, y, steps, visit);
        steps.pop_back();
    }
    if (y < n) {
        steps.push_back('N');
        generate(n, x, y + 1, steps, visit);
        steps.pop_back();
    }
}

} // namespace

void for_each_path(int n, const std::function<void(const SchroderPath&)>& visit, int limit)
{
    check_path_limit(n, limit);
    std::string steps;
    generate(n, 0, 0, steps, visit);
}

std::vector<SchroderPath> enumerate_paths(int n, int limit)
{
    std::vector<SchroderPath> out;
    for_each_path(n, [&](const SchroderPath& p) { out.push_back(p); }, limit);
    return out;
}

PeakCensus peak_census(int n, int limit)
{
    PeakCensus census;
    census.n = n;
    census.by_peaks.assign(static_cast<std::size_t>(n) + 1, 0);
    census.indecomposable_by_peaks.assign(static_cast<std::size_t>(n) + 1, 0);
    for_each_path(
        n,
        [&](const SchroderPath& p) {
            const auto s = stats(p);
            ++census.total;
            ++census.by_peaks[static_cast<std::size_t>(s.peaks)];
            if (s.indecomposable)
                ++census.indecomposable_by_peaks[static_cast<std::size_t>(s.peaks)];
            if (std::all_of(s.peaks_per_component.begin(), s.peaks_per_component.end(), [](int k) { return k <= 1; }))
                ++census.at_most_one_peak_per_component;
        },
        limit);
    return census;
}

BoundingStaircase::BoundingStaircase(std::string steps) : steps_(std::move(steps))
{
    const auto count = [&](char c) { return static_cast<int>(std::count(steps_.begin(), steps_.end(), c)); };
    size_ = count('N');
    if (count('E') != size_ || count('S') != size_ ||
        static_cast<std::size_t>(3 * size_) != steps_.size())
        throw PathError("a staircase has equally many N, E and S steps and nothing else", 0);
    if (size_ == 0)
        throw PathError("a staircase has size at least 1", 0);

    // north_x[h] / south_x[h]: x-coordinate of the N step into height h and of
    // the S step out of height h.
    std::vector<int> north_x(static_cast<std::size_t>(size_) + 1, -1);
    std::vector<int> south_x(static_cast<std::size_t>(size_) + 1, -1);
    std::set<int> run_heights;
    bool seen_south = false;
    int x = 0;
    int y = 0;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        switch (steps_[i]) {
        case 'N':
            if (seen_south)
                throw PathError("N step after an S step", i);
            ++y;
            north_x[static_cast<std::size_t>(y)] = x;
            break;
        case 'S':
            seen_south = true;
            south_x[static_cast<std::size_t>(y)] = x;
            --y;
            break;
        case 'E':
            if (i == 0 || steps_[i - 1] != 'E') {
                if (!run_heights.insert(y).second)
                    throw PathError("two East runs at height " + std::to_string(y), i);
            }
            ++x;
            break;
        default:
            throw PathError(std::string("unknown staircase step '") + steps_[i] + "'", i);
        }
    }
    for (int i = 1; i <= size_; ++i) {
        const int h = size_ - i + 1;
        const int width = south_x[static_cast<std::size_t>(h)] - north_x[static_cast<std::size_t>(h)];
        if (i == 1 ? width != 1 : width < i)
            throw PathError("N/S pair " + std::to_string(i) + " from the top is " + std::to_string(width) +
                                " units apart",
                            0);
    }
}

std::vector<int> BoundingStaircase::column_heights() const
{
    std::vector<int> heights;
    heights.reserve(static_cast<std::size_t>(size_));
    int y = 0;
    for (char c : steps_) {
        if (c == 'N')
            ++y;
        else if (c == 'S')
            --y;
        else
            heights.push_back(y);
    }
    return heights;
}

BoundingStaircase perm_to_staircase(const Permutation& p)
{
    const int n = p.size();
    if (n == 0)
        throw std::invalid_argument("perm_to_staircase: empty permutation");
    std::vector<int> prefix_max(static_cast<std::size_t>(n));
    std::vector<int> suffix_max(static_cast<std::size_t>(n));
    for (int i = 0, m = 0; i < n; ++i)
        prefix_max[static_cast<std::size_t>(i)] = m = std::max(m, p(i + 1));
    for (int i = n - 1, m = 0; i >= 0; --i)
        suffix_max[static_cast<std::size_t>(i)] = m = std::max(m, p(i + 1));

    std::string steps;
    int y = 0;
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
        const int h = std::min(prefix_max[i], suffix_max[i]);
        steps.append(static_cast<std::size_t>(std::max(h - y, 0)), 'N');
        steps.append(static_cast<std::size_t>(std::max(y - h, 0)), 'S');
        steps.push_back('E');
        y = h;
    }
    steps.append(static_cast<std::size_t>(y), 'S');
    return BoundingStaircase(std::move(steps));
}

Permutation staircase_to_perm(const BoundingStaircase& staircase)
{
    const auto h = staircase.column_heights();
    const int n = staircase.size();
    const auto top = static_cast<std::size_t>(std::find(h.begin(), h.end(), n) - h.begin());

    std::vector<int> values(static_cast<std::size_t>(n), 0);
    std::set<int> available;
    for (int v = 1; v <= n; ++v)
        available.insert(v);
    // LR maxima where the outline rises, RL maxima where it falls.
    for (std::size_t i = 0; i < h.size(); ++i) {
        const bool rises = i <= top && (i == 0 || h[i] > h[i - 1]);
        const bool falls = i >= top && (i + 1 == h.size() || h[i] > h[i + 1]);
        if (rises || falls) {
            values[i] = h[i];
            available.erase(h[i]);
        }
    }
    // Remaining slots right to left, each with the largest unused value that
    // stays below the outline (so no new LR or RL maximum appears).
    for (std::size_t i = h.size(); i-- > 0;) {
        if (values[i] != 0)
            continue;
        auto it = available.lower_bound(h[i]);
        if (it == available.begin())
            throw std::invalid_argument("staircase admits no permutation");
        --it;
        values[i] = *it;
        available.erase(it);
    }
    return Permutation(std::move(values));
}

SchroderPath staircase_to_schroder(const BoundingStaircase& staircase)
{
    const int n = staircase.size();
    // rise_run[h]: East steps taken at height h before the first S step;
    // fall_run[h]: East steps at height h after it.
    std::vector<int> rise_run(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> fall_run(static_cast<std::size_t>(n) + 1, 0);
    bool falling = false;
    int y = 0;
    for (char c : staircase.steps()) {
        if (c == 'N') {
            ++y;
        } else if (c == 'S') {
            falling = true;
            --y;
        } else {
            ++(falling ? fall_run : rise_run)[static_cast<std::size_t>(y)];
        }
    }
    // A falling run moves up beside its matching N steps; the resulting NE
    // corner becomes a D step. The final N E S^n is dropped.
    std::string steps;
    for (int level = 1; level < n; ++level) {
        const auto lv = static_cast<std::size_t>(level);
        if (fall_run[lv] > 0) {
            steps.push_back('D');
            steps.append(static_cast<std::size_t>(fall_run[lv] - 1), 'E');
        } else {
            steps.push_back('N');
            steps.append(static_cast<std::size_t>(rise_run[lv]), 'E');
        }
    }
    return SchroderPath(std::move(steps));
}

BoundingStaircase schroder_to_staircase(const SchroderPath& path)
{
    const int n = path.size() + 1;
    std::vector<int> rise_run(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> fall_run(static_cast<std::size_t>(n) + 1, 0);
    int level = 0;
    bool diagonal = false;
    for (char c : path.steps()) {
        if (c == 'E') {
            ++(diagonal ? fall_run : rise_run)[static_cast<std::size_t>(level)];
            continue;
        }
        ++level;
        diagonal = c == 'D';
        if (diagonal)
            fall_run[static_cast<std::size_t>(level)] = 1;
    }

    std::string steps;
    for (int h = 1; h < n; ++h) {
        steps.push_back('N');
        steps.append(static_cast<std::size_t>(rise_run[static_cast<std::size_t>(h)]), 'E');
    }
    steps += "NE";
    for (int h = n - 1; h >= 1; --h) {
        steps.push_back('S');
        steps.append(static_cast<std::size_t>(fall_run[static_cast<std::size_t>(h)]), 'E');
    }
    steps.push_back('S');
    return BoundingStaircase(std::move(steps));
}

PatternSet schroder_patterns()
{
    return PatternSet::parse("3214,4213");
}

SchroderPath phi(const Permutation& p)
{
    if (p.empty())
        throw std::invalid_argument("phi: permutation must be nonempty");
    const auto forbidden = schroder_patterns();
    for (const auto& tau : forbidden.patterns()) {
        if (auto occ = find_occurrence(p.values(), tau)) {
            std::string where;
            for (int pos : *occ)
                where += (where.empty() ? "" : " ") + std::to_string(p(pos));
            throw PermutationError("phi: " + p.to_string() + " contains " + tau.compact() + " at entries " + where);
        }
    }
    return staircase_to_schroder(perm_to_staircase(p));
}

Permutation phi_inverse(const SchroderPath& path)
{
    return staircase_to_perm(schroder_to_staircase(path));
}

} // namespace weaksort
