#pragma once

// Permutations, descent statistics, pattern involvement, and the brute-force
// oracles for d-minimality and the DES_h family.
//
// Positions are 1-based throughout, as in the usual word notation
// sigma(1) ... sigma(n).

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "limits.hpp"

namespace minperm {

class Permutation {
public:
    explicit Permutation(std::vector<int> word) : word_(std::move(word))
    {
        if (word_.empty())
            throw std::invalid_argument("Permutation: length must be at least 1");
        std::vector<bool> seen(word_.size() + 1, false);
        for (int v : word_) {
            if (v < 1 || v > static_cast<int>(word_.size()) || seen[v])
                throw std::invalid_argument("Permutation: word is not a bijection on 1..n");
            seen[v] = true;
        }
    }
    Permutation(std::initializer_list<int> word) : Permutation(std::vector<int>(word)) {}

    static Permutation identity(std::size_t n)
    {
        std::vector<int> w(n);
        for (std::size_t i = 0; i < n; ++i)
            w[i] = static_cast<int>(i + 1);
        return Permutation(std::move(w));
    }

    std::size_t size() const { return word_.size(); }
    std::span<int const> word() const { return word_; }
    // 1-based
    int operator()(std::size_t pos) const { return word_.at(pos - 1); }

    friend bool operator==(Permutation const&, Permutation const&) = default;
    friend auto operator<=>(Permutation const&, Permutation const&) = default;

private:
    std::vector<int> word_;
};

inline std::ostream& operator<<(std::ostream& os, Permutation const& p)
{
    bool first = true;
    for (int v : p.word()) {
        os << (first ? "" : " ") << v;
        first = false;
    }
    return os;
}

inline std::string to_string(Permutation const& p)
{
    std::string s;
    for (int v : p.word()) {
        if (!s.empty())
            s += ' ';
        s += std::to_string(v);
    }
    return s;
}

// Visits all of S_n in lexicographic order.
template <typename Visit>
void for_each_permutation(std::size_t n, Visit&& visit)
{
    std::vector<int> w(n);
    for (std::size_t i = 0; i < n; ++i)
        w[i] = static_cast<int>(i + 1);
    do {
        visit(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
}

// Descent count of any sequence of distinct values; invariant under
// order-isomorphism, so a subsequence need not be standardized first.
inline int count_descents(std::span<int const> w)
{
    int c = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        c += w[i] > w[i + 1];
    return c;
}

inline std::vector<std::size_t> descents_of(Permutation const& p)
{
    std::vector<std::size_t> out;
    auto w = p.word();
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1])
            out.push_back(i + 1);
    return out;
}

inline std::vector<std::size_t> ascents_of(Permutation const& p)
{
    std::vector<std::size_t> out;
    auto w = p.word();
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] < w[i + 1])
            out.push_back(i + 1);
    return out;
}

// Maximal strictly decreasing factors, left to right.
inline std::vector<std::vector<int>> descending_runs(Permutation const& p)
{
    std::vector<std::vector<int>> runs;
    auto w = p.word();
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i == 0 || w[i - 1] < w[i])
            runs.emplace_back();
        runs.back().push_back(w[i]);
    }
    return runs;
}

// Ranks of a sequence of distinct integers.
inline std::vector<int> standardize_values(std::span<int const> values)
{
    std::vector<int> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> out;
    out.reserve(values.size());
    for (int v : values)
        out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1);
    return out;
}

inline Permutation standardize(Permutation const& p, std::vector<std::size_t> keep)
{
    if (keep.empty())
        throw std::invalid_argument("standardize: empty selection");
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<int> sub;
    sub.reserve(keep.size());
    for (std::size_t pos : keep) {
        if (pos < 1 || pos > p.size())
            throw std::invalid_argument("standardize: position out of range");
        sub.push_back(p(pos));
    }
    return Permutation(standardize_values(sub));
}

namespace detail {

inline bool involves_from(std::span<int const> host, std::span<int const> pat, std::size_t start,
                          std::vector<int>& chosen)
{
    std::size_t const k = chosen.size();
    if (k == pat.size())
        return true;
    // Not enough host entries left to finish the occurrence.
    if (host.size() - start < pat.size() - k)
        return false;
    for (std::size_t i = start; i < host.size(); ++i) {
        bool consistent = true;
        for (std::size_t j = 0; j < k && consistent; ++j)
            consistent = (pat[j] < pat[k]) == (chosen[j] < host[i]);
        if (!consistent)
            continue;
        chosen.push_back(host[i]);
        if (involves_from(host, pat, i + 1, chosen))
            return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace detail

inline bool involves(Permutation const& host, Permutation const& pat)
{
    if (pat.size() > host.size())
        throw std::invalid_argument("involves: pattern longer than host");
    std::vector<int> chosen;
    chosen.reserve(pat.size());
    return detail::involves_from(host.word(), pat.word(), 0, chosen);
}

// Diamond characterization: exactly d descents, and every ascent i has
// 2 <= i <= n-2 with sigma(i-1..i+2) an occurrence of 2143 or 3142.
inline bool is_d_minimal(Permutation const& p, int d)
{
    if (count_descents(p.word()) != d)
        return false;
    std::size_t const n = p.size();
    for (std::size_t i : ascents_of(p)) {
        if (i < 2 || i + 2 > n)
            return false;
        auto s = standardize_values(p.word().subspan(i - 2, 4));
        bool const diamond = s == std::vector<int>{2, 1, 4, 3} || s == std::vector<int>{3, 1, 4, 2};
        if (!diamond)
            return false;
    }
    return true;
}

enum class DesMethod { definition, pattern };

namespace detail {

// Every deletion of exactly `remove` entries must leave `target` descents.
inline bool all_deletions_have(std::span<int const> w, int remove, int target)
{
    std::size_t const n = w.size();
    std::vector<bool> drop(n, false);
    std::fill(drop.end() - remove, drop.end(), true);
    std::vector<int> rest;
    rest.reserve(n);
    do {
        rest.clear();
        for (std::size_t i = 0; i < n; ++i)
            if (!drop[i])
                rest.push_back(w[i]);
        if (count_descents(rest) != target)
            return false;
    } while (std::next_permutation(drop.begin(), drop.end()));
    return true;
}

inline bool des_h_by_definition(std::span<int const> w, int d, int h)
{
    if (count_descents(w) != d)
        return false;
    // Deletions must leave a nonempty permutation.
    int const max_remove = std::min<int>(h - 1, static_cast<int>(w.size()) - 1);
    for (int i = 1; i <= max_remove; ++i)
        if (!all_deletions_have(w, i, d - i))
            return false;
    return true;
}

inline bool des_h_by_pattern(std::span<int const> w, int d, int h)
{
    if (count_descents(w) != d)
        return false;
    auto const n = static_cast<long>(w.size());
    for (long i = 0; i + 1 < n; ++i) {
        if (w[i] > w[i + 1])
            continue;
        // Ascent between 0-based i and i+1: need w[i-h+1..i] and w[i+1..i+h].
        long const lo = i - h + 1;
        long const hi = i + h;
        if (lo < 0 || hi >= n)
            return false;
        for (long t = 0; t < h; ++t) {
            if (t + 1 < h && (w[lo + t] < w[lo + t + 1] || w[i + 1 + t] < w[i + 2 + t]))
                return false;
            if (w[lo + t] > w[i + 1 + t])
                return false;
        }
    }
    return true;
}

} // namespace detail

inline bool satisfies_des_h(Permutation const& p, int d, int h, DesMethod method = DesMethod::definition)
{
    if (h < 1)
        throw std::invalid_argument("satisfies_des_h: h must be at least 1");
    return method == DesMethod::definition ? detail::des_h_by_definition(p.word(), d, h)
                                           : detail::des_h_by_pattern(p.word(), d, h);
}

struct BruteForceOptions {
    int oracle_limit = default_oracle_limit;
    unsigned threads = 1;
    DesMethod method = DesMethod::definition;
};

/* Number of permutations of length n with exactly d descents satisfying
 * DES_h, by scanning all of S_n. The scan is split by the first letter
 * across worker threads.
 */
inline std::uint64_t brute_force_count(int n, int d, int h, BruteForceOptions const& opts = {})
{
    if (n < 1)
        throw std::invalid_argument("brute_force_count: n must be at least 1");
    if (h < 1)
        throw std::invalid_argument("brute_force_count: h must be at least 1");
    if (n > opts.oracle_limit)
        throw resource_error("brute_force_count: n = " + std::to_string(n) + " exceeds the oracle limit "
                             + std::to_string(opts.oracle_limit));
    if (d < 0 || d > n - 1)
        return 0;

    auto scan_prefix = [&](int first) {
        std::vector<int> w;
        w.reserve(n);
        w.push_back(first);
        for (int v = 1; v <= n; ++v)
            if (v != first)
                w.push_back(v);
        std::uint64_t count = 0;
        do {
            if (count_descents(w) != d)
                continue;
            bool ok = opts.method == DesMethod::definition ? detail::des_h_by_definition(w, d, h)
                                                           : detail::des_h_by_pattern(w, d, h);
            count += ok;
        } while (std::next_permutation(w.begin() + 1, w.end()));
        return count;
    };

    unsigned const workers = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(n)));
    if (workers == 1) {
        std::uint64_t total = 0;
        for (int first = 1; first <= n; ++first)
            total += scan_prefix(first);
        return total;
    }
    std::atomic<int> next{1};
    std::atomic<std::uint64_t> total{0};
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < workers; ++t)
            pool.emplace_back([&] {
                for (int first = next++; first <= n; first = next++)
                    total += scan_prefix(first);
            });
    }
    return total.load();
}

} // namespace minperm
