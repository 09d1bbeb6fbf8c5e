#pragma once

// Self-verification: every cross-method identity of the toolkit, run at a
// chosen size limit. Each check reports the first failing instance.

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "bijection.hpp"
#include "enumeration.hpp"
#include "exact_linalg.hpp"
#include "permutation.hpp"
#include "report.hpp"
#include "shapes.hpp"

namespace minperm {

struct CheckOutcome {
    std::string module;
    std::string name;
    bool passed = true;
    std::uint64_t cases = 0;
    std::string witness;
    std::int64_t micros = 0;

    template <typename Witness>
    void expect(bool ok, Witness&& witness_fn)
    {
        ++cases;
        if (!ok && passed) {
            passed = false;
            witness = witness_fn();
        }
    }
};

struct VerifyConfig {
    std::string suite = "small";
    int max_n = 7;          // permutation length bound for S_n scans
    int tableau_cells = 10; // cell bound for exhaustive tableau generation
    unsigned threads = 1;
    std::function<BigInt(int d, int k)> closed = [](int d, int k) { return closed_formula(d, k).value; };
};

inline VerifyConfig suite_config(std::string_view suite)
{
    VerifyConfig c;
    if (suite == "small") {
        c.suite = "small";
        c.max_n = 7;
        c.tableau_cells = 10;
    } else if (suite == "standard") {
        c.suite = "standard";
        c.max_n = 9;
        c.tableau_cells = 12;
    } else {
        throw std::invalid_argument("unknown verification suite \"" + std::string(suite) + "\"");
    }
    return c;
}

namespace detail {

template <typename T>
std::string str(T const& x)
{
    std::ostringstream os;
    os << x;
    return os.str();
}

inline ExactMatrix random_matrix(std::mt19937& rng, std::size_t order)
{
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    ExactMatrix m(order);
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = 0; j < order; ++j)
            m.at(i, j) = Rational(num(rng), den(rng));
    return m;
}

// Compositions with k <= max_rows parts of every total up to max_cells,
// each part at least the minimum for overlap h.
template <typename Visit>
void for_each_small_composition(int max_cells, int max_rows, int h, Visit&& visit)
{
    for (int k = 1; k <= max_rows; ++k)
        for (int n = 1; n <= max_cells; ++n)
            for_each_composition(n, k, min_part_for(h, static_cast<std::size_t>(k)),
                                 [&](std::vector<int> const& a) { visit(Composition(a)); });
}

inline bool is_increasing_tableau(SkewTableau const& t)
{
    return is_valid_tableau(complement(t));
}

} // namespace detail

inline std::vector<CheckOutcome> run_verification(VerifyConfig const& cfg)
{
    std::vector<CheckOutcome> out;
    auto run = [&](std::string module, std::string name, auto&& body) {
        CheckOutcome c;
        c.module = std::move(module);
        c.name = std::move(name);
        Stopwatch sw;
        try {
            body(c);
        } catch (std::exception const& e) {
            c.passed = false;
            c.witness = std::string("exception: ") + e.what();
        }
        c.micros = sw.micros();
        out.push_back(std::move(c));
    };
    int const perm_n = cfg.max_n;
    std::mt19937 rng(20090417u);

    // exact_linalg
    run("exact_linalg", "det_transpose", [&](CheckOutcome& c) {
        for (int t = 0; t < 200; ++t) {
            auto m = detail::random_matrix(rng, 1 + t % 6);
            c.expect(det_exact(m) == det_exact(m.transposed()), [&] { return detail::str(m); });
        }
    });
    run("exact_linalg", "det_upper_triangular", [&](CheckOutcome& c) {
        for (int t = 0; t < 100; ++t) {
            auto m = detail::random_matrix(rng, 1 + t % 7);
            Rational diag = 1;
            for (std::size_t i = 0; i < m.order(); ++i) {
                for (std::size_t j = 0; j < i; ++j)
                    m.at(i, j) = 0;
                diag *= m.at(i, i);
            }
            c.expect(det_exact(m) == diag, [&] { return detail::str(m); });
        }
    });
    run("exact_linalg", "det_row_scaling", [&](CheckOutcome& c) {
        std::uniform_int_distribution<int> num(-7, 7), den(1, 5);
        for (int t = 0; t < 100; ++t) {
            auto m = detail::random_matrix(rng, 1 + t % 6);
            Rational const factor(num(rng), den(rng));
            auto scaled = m;
            std::size_t const row = static_cast<std::size_t>(t) % m.order();
            for (std::size_t j = 0; j < m.order(); ++j)
                scaled.at(row, j) *= factor;
            c.expect(det_exact(scaled) == factor * det_exact(m), [&] { return detail::str(m); });
        }
    });
    run("exact_linalg", "factorial_recurrence", [&](CheckOutcome& c) {
        FactorialTable fact;
        for (unsigned n = 1; n <= 60; ++n)
            c.expect(factorial(n) == n * factorial(n - 1) && fact(n) == factorial(n),
                     [&] { return "n = " + std::to_string(n); });
    });

    // permutations
    run("permutations", "minimality_equivalence", [&](CheckOutcome& c) {
        for (int n = 1; n <= perm_n; ++n)
            for_each_permutation(static_cast<std::size_t>(n), [&](Permutation const& p) {
                int const d = count_descents(p.word());
                bool const a = is_d_minimal(p, d);
                c.expect(a == satisfies_des_h(p, d, 2, DesMethod::definition)
                             && a == satisfies_des_h(p, d, 2, DesMethod::pattern),
                         [&] { return to_string(p); });
            });
    });
    run("permutations", "des_h_methods_agree", [&](CheckOutcome& c) {
        for (int n = 1; n <= perm_n; ++n)
            for (int h = 1; h <= 3; ++h)
                for_each_permutation(static_cast<std::size_t>(n), [&](Permutation const& p) {
                    int const d = count_descents(p.word());
                    c.expect(satisfies_des_h(p, d, h, DesMethod::definition)
                                 == satisfies_des_h(p, d, h, DesMethod::pattern),
                             [&] { return to_string(p) + " h=" + std::to_string(h); });
                });
    });
    run("permutations", "single_deletion_oracle", [&](CheckOutcome& c) {
        for (int n = 2; n <= perm_n; ++n)
            for_each_permutation(static_cast<std::size_t>(n), [&](Permutation const& p) {
                int const d = count_descents(p.word());
                bool all_drop = true;
                for (std::size_t skip = 1; skip <= p.size(); ++skip) {
                    std::vector<std::size_t> keep;
                    for (std::size_t i = 1; i <= p.size(); ++i)
                        if (i != skip)
                            keep.push_back(i);
                    all_drop = all_drop && count_descents(standardize(p, keep).word()) == d - 1;
                }
                c.expect(is_d_minimal(p, d) == all_drop, [&] { return to_string(p); });
            });
    });
    run("permutations", "runs_equal_ascents_plus_one", [&](CheckOutcome& c) {
        for (int n = 1; n <= perm_n; ++n)
            for_each_permutation(static_cast<std::size_t>(n), [&](Permutation const& p) {
                c.expect(descending_runs(p).size() == ascents_of(p).size() + 1, [&] { return to_string(p); });
            });
    });
    run("permutations", "h1_counts_sum_to_factorial", [&](CheckOutcome& c) {
        for (int n = 1; n <= cfg.max_n; ++n) {
            std::uint64_t total = 0;
            for (int d = 0; d < n; ++d)
                total += brute_force_count(n, d, 1, {.threads = cfg.threads});
            c.expect(BigInt(total) == factorial(static_cast<unsigned>(n)), [&] { return "n = " + std::to_string(n); });
        }
    });

    // shapes_tableaux
    run("shapes_tableaux", "aitken_equals_generation", [&](CheckOutcome& c) {
        FactorialTable fact;
        for (int h = 0; h <= 3; ++h)
            detail::for_each_small_composition(cfg.tableau_cells, 4, h, [&](Composition const& a) {
                auto s = shape_from_composition(a, h);
                c.expect(aitken_count(s, fact) == count_tableaux(s), [&] { return to_text(s); });
            });
    });
    run("shapes_tableaux", "composition_shape_roundtrip", [&](CheckOutcome& c) {
        for (int h = 0; h <= 3; ++h)
            detail::for_each_small_composition(12, 5, h, [&](Composition const& a) {
                c.expect(composition_from_shape(shape_from_composition(a, h), h) == a,
                         [&] { return detail::str(a) + " h=" + std::to_string(h); });
            });
    });
    run("shapes_tableaux", "overlap_is_exact", [&](CheckOutcome& c) {
        for (int h = 0; h <= 3; ++h)
            detail::for_each_small_composition(12, 5, h, [&](Composition const& a) {
                auto s = shape_from_composition(a, h);
                bool ok = true;
                for (std::size_t i = 0; i + 1 < s.rows(); ++i)
                    ok = ok && s.overlap(i) == h;
                c.expect(ok, [&] { return to_text(s); });
            });
    });
    run("shapes_tableaux", "composition_shapes_connected", [&](CheckOutcome& c) {
        FactorialTable fact;
        for (int h = 1; h <= 3; ++h)
            detail::for_each_small_composition(std::min(cfg.tableau_cells, 10), 4, h, [&](Composition const& a) {
                auto s = shape_from_composition(a, h);
                c.expect(s.is_connected() && aitken_count(s, fact) >= 1, [&] { return to_text(s); });
            });
    });
    run("shapes_tableaux", "complement_symmetry", [&](CheckOutcome& c) {
        for (int h = 0; h <= 3; ++h)
            detail::for_each_small_composition(std::min(cfg.tableau_cells, 8), 3, h, [&](Composition const& a) {
                auto s = shape_from_composition(a, h);
                std::set<std::vector<std::vector<int>>> images;
                bool ok = true;
                for (auto const& t : generate_tableaux(s)) {
                    auto u = complement(t);
                    ok = ok && detail::is_increasing_tableau(u) && complement(u) == t;
                    images.insert(u.rows);
                }
                c.expect(ok && images.size() == count_tableaux(s), [&] { return to_text(s); });
            });
    });

    // bijection
    run("bijection", "perm_roundtrip", [&](CheckOutcome& c) {
        for (int n = 1; n <= perm_n; ++n)
            for (int h = 1; h <= 3; ++h)
                for_each_permutation(static_cast<std::size_t>(n), [&](Permutation const& p) {
                    int const d = count_descents(p.word());
                    if (!satisfies_des_h(p, d, h, DesMethod::definition))
                        return;
                    auto t = perm_to_tableau(p, h);
                    c.expect(is_valid_tableau(t) && tableau_to_perm(t, h) == p,
                             [&] { return to_string(p) + " h=" + std::to_string(h); });
                });
    });
    run("bijection", "tableau_roundtrip", [&](CheckOutcome& c) {
        for (int h = 1; h <= 3; ++h)
            detail::for_each_small_composition(std::min(cfg.tableau_cells, 10), 10, h, [&](Composition const& a) {
                auto s = shape_from_composition(a, h);
                for_each_tableau(s, [&](SkewTableau const& t) {
                    c.expect(perm_to_tableau(tableau_to_perm(t, h), h) == t, [&] { return detail::str(t); });
                });
            });
    });
    run("bijection", "row_lengths_are_reversed_runs", [&](CheckOutcome& c) {
        for (int n = 1; n <= perm_n; ++n)
            for (int h = 1; h <= 3; ++h)
                for_each_permutation(static_cast<std::size_t>(n), [&](Permutation const& p) {
                    int const d = count_descents(p.word());
                    if (!satisfies_des_h(p, d, h, DesMethod::pattern))
                        return;
                    auto runs = descending_runs(p);
                    auto t = perm_to_tableau(p, h);
                    bool ok = t.rows.size() == runs.size();
                    for (std::size_t i = 0; ok && i < runs.size(); ++i)
                        ok = t.shape.row_length(i) == static_cast<int>(runs[runs.size() - 1 - i].size());
                    c.expect(ok, [&] { return to_string(p); });
                });
    });
    run("bijection", "cardinality_transport", [&](CheckOutcome& c) {
        for (int n = 1; n <= perm_n; ++n)
            for (int h = 1; h <= 3; ++h)
                for (int d = 0; d < n; ++d) {
                    BigInt const brute = brute_force_count(n, d, h, {.threads = cfg.threads});
                    c.expect(brute == count_by_tableaux(n, n - d, h).value, [&] {
                        return "n=" + std::to_string(n) + " d=" + std::to_string(d) + " h=" + std::to_string(h);
                    });
                }
    });

    // enumeration
    auto nkh = [](int n, int k, int h) {
        return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " h=" + std::to_string(h);
    };
    run("enumeration", "determinants_match_brute_force_h2", [&](CheckOutcome& c) {
        for (int n = 1; n <= cfg.max_n; ++n)
            for (int k = 1; k <= n; ++k)
                c.expect(count_by_determinants(n, k, 2, cfg.threads).value
                             == brute_force_count(n, n - k, 2, {.threads = cfg.threads}),
                         [&] { return nkh(n, k, 2); });
    });
    run("enumeration", "determinants_match_brute_force_h1", [&](CheckOutcome& c) {
        for (int n = 1; n <= perm_n; ++n)
            for (int k = 1; k <= n; ++k)
                c.expect(count_by_determinants(n, k, 1, cfg.threads).value
                             == brute_force_count(n, n - k, 1, {.threads = cfg.threads}),
                         [&] { return nkh(n, k, 1); });
    });
    run("enumeration", "eulerian_row_sums", [&](CheckOutcome& c) {
        for (int n = 1; n <= perm_n; ++n) {
            BigInt total = 0;
            for (int k = 1; k <= n; ++k)
                total += count_by_determinants(n, k, 1, cfg.threads).value;
            c.expect(total == factorial(static_cast<unsigned>(n)), [&] { return "n=" + std::to_string(n); });
        }
    });
    run("enumeration", "eulerian_symmetry", [&](CheckOutcome& c) {
        for (int n = 1; n <= perm_n; ++n)
            for (int k = 1; k <= n; ++k)
                c.expect(count_by_determinants(n, k, 1).value == count_by_determinants(n, n + 1 - k, 1).value,
                         [&] { return nkh(n, k, 1); });
    });
    run("enumeration", "summands_equal_aitken_counts", [&](CheckOutcome& c) {
        FactorialTable fact;
        for (int h = 0; h <= 3; ++h)
            for (int n = 1; n <= cfg.max_n; ++n)
                for (int k = 1; k <= n; ++k)
                    for (auto const& s : determinant_summands(n, k, h, cfg.threads))
                        c.expect(s.value >= 0 && s.value == aitken_count(shape_from_composition(s.composition, h), fact),
                                 [&] { return nkh(n, k, h) + " a=" + detail::str(s.composition); });
    });
    run("enumeration", "D_eval_methods_agree", [&](CheckOutcome& c) {
        for (int k = 1; k <= 6; ++k) {
            std::vector<int> a(static_cast<std::size_t>(k), 1);
            for (;;) {
                Composition comp(a);
                Rational const det = D_eval(comp, DMethod::determinant);
                c.expect(det == D_eval(comp, DMethod::recursive) && det == D_eval(comp, DMethod::linear_partition),
                         [&] { return detail::str(comp); });
                std::size_t i = 0;
                while (i < a.size() && ++a[i] > 5)
                    a[i++] = 1;
                if (i == a.size())
                    break;
            }
        }
    });
    run("enumeration", "closed_formula", [&](CheckOutcome& c) {
        for (int k = 1; k <= 3; ++k)
            for (int d = k; d <= 12; ++d)
                c.expect(cfg.closed(d, k) == count_by_determinants(d + k, k, 2, cfg.threads).value,
                         [&] { return "d=" + std::to_string(d) + " k=" + std::to_string(k); });
    });
    run("enumeration", "catalan_determinant", [&](CheckOutcome& c) {
        for (int d = 1; d <= 8; ++d) {
            BigInt const cat = catalan_det(d);
            std::vector<int> rect(static_cast<std::size_t>(d), 2);
            c.expect(cat == count_by_determinants(2 * d, d, 2).value
                         && cat == count_tableaux(SkewShape(rect), 2 * d),
                     [&] { return "d=" + std::to_string(d); });
        }
    });
    run("enumeration", "surjections", [&](CheckOutcome& c) {
        for (int n = 1; n <= perm_n; ++n)
            for (int k = 1; k <= n; ++k) {
                BigInt const s = stirling_surjections(n, k);
                c.expect(s == count_by_determinants(n, k, 0).value && s == multinomial_surjections(n, k)
                             && s == brute_force_surjections(n, k),
                         [&] { return nkh(n, k, 0); });
            }
    });
    return out;
}

inline RunReport verification_report(VerifyConfig const& cfg, std::vector<CheckOutcome> const& checks)
{
    RunReport r;
    r.command = "verify";
    r.parameters = {{"suite", cfg.suite}, {"max_n", cfg.max_n}, {"tableau_cells", cfg.tableau_cells}};
    for (auto const& c : checks) {
        r.results.push_back({{"module", c.module},
                             {"check", c.name},
                             {"passed", c.passed},
                             {"cases", c.cases},
                             {"witness", c.witness}});
        r.durations.push_back({c.module + "." + c.name, c.micros});
        r.agreement = r.agreement && c.passed;
    }
    return r;
}

} // namespace minperm
