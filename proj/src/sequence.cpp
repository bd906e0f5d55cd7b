#include "diskdecomp/sequence.hpp"

#include "diskdecomp/error.hpp"

#include <algorithm>

namespace diskdecomp {

CircularSequence::CircularSequence(std::vector<Level> values) : values_(std::move(values))
{
    if (values_.empty()) {
        throw Error("empty sequence");
    }
}

bool operator==(const CircularSequence& a, const CircularSequence& b)
{
    return canonical_rotation(a).values_ == canonical_rotation(b).values_;
}

std::size_t least_rotation_index(std::span<const Level> values)
{
    // Booth's failure-function scan over the doubled string.
    const std::size_t n = values.size();
    if (n == 0) {
        return 0;
    }
    std::vector<long> failure(2 * n, -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
        const Level sj = values[j % n];
        long i = failure[j - k - 1];
        while (i != -1 && sj != values[(k + static_cast<std::size_t>(i) + 1) % n]) {
            if (sj < values[(k + static_cast<std::size_t>(i) + 1) % n]) {
                k = j - static_cast<std::size_t>(i) - 1;
            }
            i = failure[static_cast<std::size_t>(i)];
        }
        if (i == -1 && sj != values[(k + static_cast<std::size_t>(i) + 1) % n]) {
            if (sj < values[(k + static_cast<std::size_t>(i) + 1) % n]) {
                k = j;
            }
            failure[j - k] = -1;
        } else {
            failure[j - k] = i + 1;
        }
    }
    return k % n;
}

CircularSequence canonical_rotation(const CircularSequence& s)
{
    std::vector<Level> v = s.values();
    std::rotate(v.begin(), v.begin() + static_cast<long>(least_rotation_index(v)), v.end());
    return CircularSequence(std::move(v));
}

CanonicalFunction::CanonicalFunction(std::vector<Level> values) : values_(std::move(values))
{
    if (values_.empty()) {
        throw Error("empty sequence");
    }
    if (values_.size() > 1) {
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (jump_into(i) == 0) {
                throw Error("canonical function has equal neighbours");
            }
        }
    }
}

long CanonicalFunction::jump_into(std::size_t i) const
{
    const std::size_t prev = (i + values_.size() - 1) % values_.size();
    return static_cast<long>(values_[i]) - static_cast<long>(values_[prev]);
}

CanonicalFunction canonicalize(const CircularSequence& s)
{
    const auto& v = s.values();
    const auto differs = std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>());
    if (differs == v.end()) {
        return CanonicalFunction({v.front()});
    }

    // Start right after a change so the first run is not split by the wrap.
    const std::size_t n = v.size();
    std::size_t start = 0;
    while (v[start] == v[(start + n - 1) % n]) {
        ++start;
    }
    std::vector<Level> merged;
    for (std::size_t k = 0; k < n; ++k) {
        const Level x = v[(start + k) % n];
        if (merged.empty() || merged.back() != x) {
            merged.push_back(x);
        }
    }
    std::rotate(merged.begin(), merged.begin() + static_cast<long>(least_rotation_index(merged)),
                merged.end());
    return CanonicalFunction(std::move(merged));
}

SequenceStats stats(const CanonicalFunction& c)
{
    SequenceStats st;
    const auto& v = c.values();
    st.f_sup = *std::max_element(v.begin(), v.end());
    st.f_inf = *std::min_element(v.begin(), v.end());

    // An upward step a → b crosses every level in (a, b].
    std::vector<Level> crossings(st.f_sup + 1, 0);
    if (v.size() > 1) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            const long jump = c.jump_into(i);
            if (jump > 0) {
                for (Level k = v[i] - static_cast<Level>(jump) + 1; k <= v[i]; ++k) {
                    ++crossings[k];
                }
            }
            if (jump != 1 && jump != -1) {
                st.unit_jumps = false;
            }
        }
    }

    for (Level k = st.f_inf + 1; k <= st.f_sup; ++k) {
        st.tau_k[k] = crossings[k] - 1;
        st.tau += crossings[k] - 1;
    }
    st.L = st.f_sup - st.f_inf + st.tau;
    return st;
}

Level excursion_components(const CanonicalFunction& c, Level k)
{
    const auto& v = c.values();
    const std::size_t n = v.size();
    const auto above = [&](std::size_t i) { return v[i % n] >= k; };

    std::size_t count_above = 0;
    for (std::size_t i = 0; i < n; ++i) {
        count_above += above(i) ? 1 : 0;
    }
    if (count_above == 0) {
        return 0;
    }
    if (count_above == n) {
        return 1;
    }

    // Walk once around from an entry below k, counting run starts.
    std::size_t first_below = 0;
    while (above(first_below)) {
        ++first_below;
    }
    Level runs = 0;
    bool in_run = false;
    for (std::size_t step = 1; step <= n; ++step) {
        const bool a = above(first_below + step);
        if (a && !in_run) {
            ++runs;
        }
        in_run = a;
    }
    return runs;
}

bool admits_robust(const CanonicalFunction& c)
{
    return c.size() == 1 || stats(c).unit_jumps;
}

} // namespace diskdecomp
