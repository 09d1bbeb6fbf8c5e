#pragma once

// Counting formulas for SkYT_h(n, k), the tableaux with n cells and k rows
// whose consecutive rows share exactly h columns:
//
//   h = 2  minimal permutations with n - k descents (matrix A),
//   h = 1  Eulerian numbers (matrix B),
//   h = 0  surjections onto k boxes (triangular matrix C),
//   h >= 3 Aitken's matrix of each composition shape.
//
// Every count is a sum over compositions a_1 + ... + a_k = n of
// n! * det(matrix(a)), each summand being the tableau count of one shape.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "exact_linalg.hpp"
#include "limits.hpp"
#include "shapes.hpp"

namespace minperm {

/* Compositions of n into exactly k parts, each at least min_part, in
 * lexicographic order of (a_1, ..., a_k).
 */
inline void for_each_composition(int n, int k, int min_part, std::function<void(std::vector<int> const&)> const& visit)
{
    if (k < 1 || min_part < 1 || n < k * min_part)
        return;
    std::vector<int> a(static_cast<std::size_t>(k), min_part);
    // a[0..i) fixed, remaining sum spread over a[i..k)
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
        if (i + 1 == a.size()) {
            a[i] = remaining;
            visit(a);
            return;
        }
        int const rest = static_cast<int>(a.size() - i - 1) * min_part;
        for (int v = min_part; v <= remaining - rest; ++v) {
            a[i] = v;
            rec(i + 1, remaining - v);
        }
    };
    rec(0, n);
}

inline std::vector<Composition> compositions(int n, int k, int min_part)
{
    std::vector<Composition> out;
    for_each_composition(n, k, min_part, [&](std::vector<int> const& a) { out.emplace_back(a); });
    return out;
}

// Matrix A (h = 2), B (h = 1) or C (h = 0) of a composition.
inline ExactMatrix theorem_matrix(Composition const& a, int h, FactorialTable& fact)
{
    if (h < 0 || h > 2)
        throw std::invalid_argument("theorem_matrix: only h = 0, 1, 2 have a specialized matrix; use aitken_matrix");
    check_composition(a, h);
    std::size_t const k = a.length();
    ExactMatrix m(k);
    for (std::size_t i = 0; i < k; ++i) {
        long long partial = 0;
        for (std::size_t j = i; j < k; ++j) {
            partial += a[j];
            long long const span = static_cast<long long>(j - i);
            long long const arg = h == 2 ? partial - span : h == 1 ? partial : partial + span;
            m.at(i, j) = fact.reciprocal(arg);
        }
        if (h >= 1 && i >= 1)
            m.at(i, i - 1) = 1;
        if (h == 2 && i >= 2 && a[i - 1] == 2)
            m.at(i, i - 2) = 1;
    }
    return m;
}

inline ExactMatrix theorem_matrix(Composition const& a, int h)
{
    FactorialTable fact;
    return theorem_matrix(a, h, fact);
}

enum class CountMethod { determinant_sum, closed_form, brute_force, tableau_oracle };

inline char const* to_string(CountMethod m)
{
    switch (m) {
    case CountMethod::determinant_sum: return "determinant_sum";
    case CountMethod::closed_form: return "closed_form";
    case CountMethod::brute_force: return "brute_force";
    case CountMethod::tableau_oracle: return "tableau_oracle";
    }
    return "?";
}

struct CountResult {
    BigInt value;
    CountMethod method;
    int n = 0;
    int k = 0;
    int h = 0;
    std::string diagnostic;
};

struct Summand {
    Composition composition;
    BigInt value;
};

/* One summand n! * det(M(a)) per composition. M is theorem_matrix for
 * h <= 2 and the Aitken matrix of shape_from_composition(a, h) otherwise.
 * Each summand must be a nonnegative integer; anything else is a bug.
 */
inline std::vector<Summand> determinant_summands(int n, int k, int h, unsigned threads = 1)
{
    if (k < 1)
        throw std::invalid_argument("determinant_summands: k must be at least 1");
    if (h < 0)
        throw std::invalid_argument("determinant_summands: h must be nonnegative");
    std::vector<Composition> comps = compositions(n, k, min_part_for(h, static_cast<std::size_t>(k)));
    std::vector<BigInt> values(comps.size());

    auto evaluate = [&](std::size_t idx, FactorialTable& fact) {
        Composition const& a = comps[idx];
        ExactMatrix m = h <= 2 ? theorem_matrix(a, h, fact) : aitken_matrix(shape_from_composition(a, h), fact);
        Rational v = Rational(fact(static_cast<unsigned>(n))) * det_exact(std::move(m));
        if (!is_integer(v) || v < 0) {
            std::ostringstream os;
            os << "determinant summand for " << a << " (h = " << h << ") is not a nonnegative integer: " << v;
            throw std::logic_error(os.str());
        }
        values[idx] = to_integer(v);
    };

    unsigned const workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(comps.size())));
    if (workers <= 1) {
        FactorialTable fact;
        for (std::size_t i = 0; i < comps.size(); ++i)
            evaluate(i, fact);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errors(workers);
        {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < workers; ++t)
                pool.emplace_back([&, t] {
                    FactorialTable fact;
                    try {
                        for (std::size_t i = next++; i < comps.size(); i = next++)
                            evaluate(i, fact);
                    } catch (...) {
                        errors[t] = std::current_exception();
                    }
                });
        }
        for (auto const& e : errors)
            if (e)
                std::rethrow_exception(e);
    }

    std::vector<Summand> out;
    out.reserve(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i)
        out.push_back({std::move(comps[i]), std::move(values[i])});
    return out;
}

inline CountResult count_by_determinants(int n, int k, int h, unsigned threads = 1)
{
    CountResult r{BigInt(0), CountMethod::determinant_sum, n, k, h, {}};
    int const lo = min_part_for(h, static_cast<std::size_t>(std::max(k, 1)));
    if (k < 1 || n < k * lo) {
        r.diagnostic = "no composition of " + std::to_string(n) + " into " + std::to_string(k) + " parts each >= "
                     + std::to_string(lo) + "; count is 0";
        return r;
    }
    for (auto const& s : determinant_summands(n, k, h, threads))
        r.value += s.value;
    return r;
}

// Sum over composition shapes of exhaustively generated tableau counts.
inline CountResult count_by_tableaux(int n, int k, int h, int cell_limit = default_tableau_cell_limit)
{
    CountResult r{BigInt(0), CountMethod::tableau_oracle, n, k, h, {}};
    if (n > cell_limit)
        throw resource_error("count_by_tableaux: " + std::to_string(n) + " cells exceeds the limit "
                             + std::to_string(cell_limit));
    if (k < 1)
        return r;
    for_each_composition(n, k, min_part_for(h, static_cast<std::size_t>(k)), [&](std::vector<int> const& a) {
        r.value += count_tableaux(shape_from_composition(Composition(a), h), cell_limit);
    });
    return r;
}

namespace detail {

inline Rational pow_rational(int base, int e)
{
    BigInt r = 1;
    for (int i = 0; i < e; ++i)
        r *= base;
    return Rational(r);
}

} // namespace detail

/* The k = 3 polynomial as it survives a check against the determinant sum:
 * 3^{d+3} - (d^2+4d+7) 2^{d+2} + d^4/2 + 5d^3/2 + 5d^2 + 6d + 1.
 */
inline Rational length_d_plus_3_polynomial(int d)
{
    Rational const x = d;
    return detail::pow_rational(3, d + 3) - (x * x + 4 * x + 7) * detail::pow_rational(2, d + 2)
         + x * x * x * x / 2 + 5 * x * x * x / 2 + 5 * x * x + 6 * x + 1;
}

/* The same polynomial with the wrong tail 33/4 d^2 + 6d - 8, kept only so
 * the erratum stays checkable: at d = 3 it is 25.25, not an integer.
 */
inline Rational length_d_plus_3_polynomial_misprint(int d)
{
    Rational const x = d;
    return detail::pow_rational(3, d + 3) - (x * x + 4 * x + 7) * detail::pow_rational(2, d + 2)
         + x * x * x * x / 2 + 5 * x * x * x / 2 + Rational(33, 4) * x * x + 6 * x - 8;
}

// Minimal permutations with d descents and length d + k, k in {1, 2, 3}.
inline CountResult closed_formula(int d, int k)
{
    if (k < 1 || k > 3)
        throw std::invalid_argument("closed_formula: only k = 1, 2, 3 have a closed form");
    if (d < k)
        throw std::invalid_argument("closed_formula: needs d >= k");
    CountResult r{BigInt(0), CountMethod::closed_form, d + k, k, 2, {}};
    if (k == 1) {
        r.value = 1;
    } else if (k == 2) {
        r.value = to_integer(detail::pow_rational(2, d + 2)) - BigInt(d + 1) * (d + 2) - 2;
    } else {
        Rational v = length_d_plus_3_polynomial(d);
        if (!is_integer(v))
            throw std::logic_error("closed_formula: k = 3 polynomial is not integral at d = " + std::to_string(d));
        r.value = to_integer(v);
    }
    return r;
}

/* (2d)! times the determinant of the d x d band matrix with 1/(j-i+2)! on
 * and above the diagonal and ones on the two subdiagonals. Equals C_d.
 */
inline BigInt catalan_det(int d)
{
    if (d < 1)
        throw std::invalid_argument("catalan_det: d must be at least 1");
    FactorialTable fact;
    auto const n = static_cast<std::size_t>(d);
    ExactMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j)
            m.at(i, j) = fact.reciprocal(static_cast<long long>(j - i) + 2);
        if (i >= 1)
            m.at(i, i - 1) = 1;
        if (i >= 2)
            m.at(i, i - 2) = 1;
    }
    return to_integer(Rational(fact(2 * static_cast<unsigned>(d))) * det_exact(std::move(m)));
}

enum class DMethod { determinant, recursive, linear_partition };

namespace detail {

// Both routes work with the integer E(a) = |a|! D(a), the number of
// permutations with descent composition a.
inline BigInt binomial(int n, int r, FactorialTable& fact)
{
    return fact(static_cast<unsigned>(n)) / (fact(static_cast<unsigned>(r)) * fact(static_cast<unsigned>(n - r)));
}

// E(a) = C(n, a_1) E(a_2..a_k) - E(a_1 + a_2, a_3..a_k)
inline BigInt d_recursive(std::vector<int> const& a, int n, FactorialTable& fact)
{
    if (a.size() == 1)
        return 1;
    std::vector<int> tail(a.begin() + 1, a.end());
    std::vector<int> merged(a.begin() + 1, a.end());
    merged[0] += a[0];
    return binomial(n, a[0], fact) * d_recursive(tail, n - a[0], fact) - d_recursive(merged, n, fact);
}

// Sum over the 2^{k-1} ways to cut (a_1..a_k) into consecutive blocks of
// (-1)^{k - blocks} n! / prod |block|!.
inline BigInt d_linear_partitions(std::vector<int> const& a, int n, FactorialTable& fact)
{
    std::size_t const k = a.size();
    BigInt total = 0;
    for (std::uint64_t cuts = 0; cuts < (std::uint64_t{1} << (k - 1)); ++cuts) {
        BigInt term = fact(static_cast<unsigned>(n));
        int block = a[0];
        std::size_t blocks = 1;
        for (std::size_t i = 1; i < k; ++i) {
            if (cuts >> (i - 1) & 1) {
                term /= fact(static_cast<unsigned>(block));
                block = a[i];
                ++blocks;
            } else {
                block += a[i];
            }
        }
        term /= fact(static_cast<unsigned>(block));
        total += (k - blocks) % 2 ? -term : term;
    }
    return total;
}

} // namespace detail

// D(a) = det B(a), by any of three routes that must agree.
inline Rational D_eval(Composition const& a, DMethod method)
{
    FactorialTable fact;
    switch (method) {
    case DMethod::determinant: return det_exact(theorem_matrix(a, 1, fact));
    case DMethod::recursive:
        return Rational(detail::d_recursive(a.rows(), a.total(), fact), fact(static_cast<unsigned>(a.total())));
    case DMethod::linear_partition:
        return Rational(detail::d_linear_partitions(a.rows(), a.total(), fact),
                        fact(static_cast<unsigned>(a.total())));
    }
    throw std::invalid_argument("D_eval: unknown method");
}

// k! S(n, k) from S(n, k) = k S(n-1, k) + S(n-1, k-1).
inline BigInt stirling_surjections(int n, int k)
{
    if (n < 0 || k < 0)
        throw std::invalid_argument("stirling_surjections: arguments must be nonnegative");
    if (k > n)
        return 0;
    std::vector<BigInt> row(static_cast<std::size_t>(k) + 1, 0);
    row[0] = 1; // S(0, 0)
    for (int m = 1; m <= n; ++m)
        for (int j = std::min(m, k); j >= 0; --j)
            row[j] = j == 0 ? BigInt(0) : BigInt(j) * row[j] + row[j - 1];
    return factorial(static_cast<unsigned>(k)) * row[k];
}

// Sum of multinomials n! / (a_1! ... a_k!) over compositions with a_i >= 1.
inline BigInt multinomial_surjections(int n, int k)
{
    BigInt total = 0;
    FactorialTable fact;
    for_each_composition(n, k, 1, [&](std::vector<int> const& a) {
        BigInt q = fact(static_cast<unsigned>(n));
        for (int x : a)
            q /= fact(static_cast<unsigned>(x));
        total += q;
    });
    return total;
}

// Surjections {1..n} -> {1..k} by scanning all k^n maps.
inline std::uint64_t brute_force_surjections(int n, int k, int oracle_limit = default_oracle_limit)
{
    if (n > oracle_limit)
        throw resource_error("brute_force_surjections: n = " + std::to_string(n) + " exceeds the oracle limit "
                             + std::to_string(oracle_limit));
    if (k < 1 || k > n)
        return 0;
    std::vector<int> f(static_cast<std::size_t>(n), 0);
    std::vector<int> hits(static_cast<std::size_t>(k), 0);
    std::uint64_t count = 0;
    for (;;) {
        std::fill(hits.begin(), hits.end(), 0);
        for (int v : f)
            hits[v] = 1;
        count += std::all_of(hits.begin(), hits.end(), [](int x) { return x != 0; });
        std::size_t i = 0;
        while (i < f.size() && ++f[i] == k)
            f[i++] = 0;
        if (i == f.size())
            break;
    }
    return count;
}

} // namespace minperm
