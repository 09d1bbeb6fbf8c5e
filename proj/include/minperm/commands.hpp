#pragma once

// The count, table and verify commands behind the minperm executable,
// kept free of argument parsing so they can be driven from tests.
//
// Exit codes: 0 agreement, 1 disagreement or failed check, 2 usage error,
// 3 resource limit.

#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "enumeration.hpp"
#include "limits.hpp"
#include "permutation.hpp"
#include "report.hpp"
#include "verify.hpp"

namespace minperm {

enum ExitCode : int { exit_ok = 0, exit_disagreement = 1, exit_usage = 2, exit_resource = 3 };

class usage_error : public std::invalid_argument {
public:
    explicit usage_error(std::string const& what) : std::invalid_argument(what) {}
};

enum class OutputFormat { json, csv };

inline OutputFormat parse_format(std::string const& s)
{
    if (s == "json")
        return OutputFormat::json;
    if (s == "csv")
        return OutputFormat::csv;
    throw usage_error("unknown format \"" + s + "\" (expected csv or json)");
}

struct MethodOptions {
    int oracle_limit = default_oracle_limit;
    int tableau_cell_limit = default_tableau_cell_limit;
    unsigned threads = 1;
};

inline std::vector<std::string> parse_methods(std::string const& list)
{
    std::vector<std::string> out;
    std::stringstream ss(list);
    std::string m;
    while (std::getline(ss, m, ',')) {
        if (m != "det" && m != "closed" && m != "brute" && m != "tableaux")
            throw usage_error("unknown method \"" + m + "\" (expected det, closed, brute, tableaux)");
        out.push_back(m);
    }
    if (out.empty())
        throw usage_error("no methods given");
    return out;
}

inline char const* method_label(std::string const& m)
{
    if (m == "det")
        return to_string(CountMethod::determinant_sum);
    if (m == "closed")
        return to_string(CountMethod::closed_form);
    if (m == "brute")
        return to_string(CountMethod::brute_force);
    return to_string(CountMethod::tableau_oracle);
}

/* |SkYT_h(n, k)| by one method. For h = 0 the brute-force route scans maps
 * onto k boxes; for h >= 1 it scans S_n for DES_h with n - k descents.
 */
inline BigInt evaluate_method(std::string const& method, int n, int k, int h, MethodOptions const& opts,
                              std::string* diagnostic = nullptr)
{
    if (method == "det") {
        auto r = count_by_determinants(n, k, h, opts.threads);
        if (diagnostic)
            *diagnostic = r.diagnostic;
        return r.value;
    }
    if (method == "closed") {
        int const d = n - k;
        if (h != 2 || k < 1 || k > 3 || d < k)
            throw usage_error("closed form exists only for h = 2, k in {1,2,3} and d >= k");
        return closed_formula(d, k).value;
    }
    if (method == "brute") {
        if (h == 0)
            return brute_force_surjections(n, k, opts.oracle_limit);
        return brute_force_count(n, n - k, h, {.oracle_limit = opts.oracle_limit, .threads = opts.threads});
    }
    return count_by_tableaux(n, k, h, opts.tableau_cell_limit).value;
}

struct CountRequest {
    std::optional<int> n, d, k;
    int h = 2;
    std::vector<std::string> methods{"det"};
    MethodOptions options;
};

// Resolves (n, k) from any two of n, d, k with n = d + k.
inline std::pair<int, int> resolve_size(std::optional<int> n, std::optional<int> d, std::optional<int> k)
{
    int given = n.has_value() + d.has_value() + k.has_value();
    if (given < 2)
        throw usage_error("give two of --n, --d, --k");
    int const nn = n ? *n : *d + *k;
    int const kk = k ? *k : nn - *d;
    if (given == 3 && *n != *d + *k)
        throw usage_error("--n must equal --d + --k");
    if (nn < 1)
        throw usage_error("n must be at least 1");
    if (kk < 1 || kk > nn)
        throw usage_error("k must satisfy 1 <= k <= n (k is the number of descending runs)");
    return {nn, kk};
}

inline RunReport cmd_count(CountRequest const& req, std::ostream& diag)
{
    if (req.h < 0)
        throw usage_error("h must be nonnegative");
    auto [n, k] = resolve_size(req.n, req.d, req.k);
    RunReport r;
    r.command = "count";
    r.parameters = {{"n", n}, {"d", n - k}, {"k", k}, {"h", req.h}, {"methods", req.methods}};
    std::optional<BigInt> first;
    for (auto const& m : req.methods) {
        Stopwatch sw;
        std::string note;
        BigInt v = evaluate_method(m, n, k, req.h, req.options, &note);
        if (!note.empty())
            diag << "note: " << note << "\n";
        r.results.push_back({{"method", method_label(m)}, {"value", to_decimal(v)}});
        r.durations.push_back({method_label(m), sw.micros()});
        if (first && *first != v)
            r.agreement = false;
        if (!first)
            first = v;
    }
    return r;
}

struct TableRequest {
    int max_d = 0;
    std::optional<int> min_d;
    std::optional<int> k; // empty: rectangle mode, k = d
    int h = 2;
    std::vector<std::string> methods{"det"};
    MethodOptions options;
};

inline RunReport cmd_table(TableRequest const& req, std::ostream& diag)
{
    if (req.h < 0)
        throw usage_error("h must be nonnegative");
    if (req.k && *req.k < 1)
        throw usage_error("k must be at least 1");
    // Minimal permutations need k <= d; other overlaps start at d = 0.
    int const min_d = req.min_d.value_or(!req.k ? 1 : req.h >= 2 ? *req.k : 0);
    RunReport r;
    r.command = "table";
    r.parameters = {{"k", req.k ? ordered_json(*req.k) : ordered_json("d")},
                    {"h", req.h},
                    {"min_d", min_d},
                    {"max_d", req.max_d},
                    {"methods", req.methods}};
    for (int d = min_d; d <= req.max_d; ++d) {
        int const k = req.k ? *req.k : d;
        int const n = d + k;
        ordered_json row = {{"d", d}, {"n", n}, {"k", k}};
        std::optional<BigInt> first;
        bool agree = true;
        Stopwatch sw;
        for (auto const& m : req.methods) {
            BigInt v = evaluate_method(m, n, k, req.h, req.options);
            row[method_label(m)] = to_decimal(v);
            if (first && *first != v)
                agree = false;
            if (!first)
                first = v;
        }
        row["agree"] = agree;
        r.agreement = r.agreement && agree;
        r.results.push_back(row);
        r.durations.push_back({"d=" + std::to_string(d), sw.micros()});
        diag << "d = " << d << " done\n";
    }
    return r;
}

inline std::string to_csv(RunReport const& r)
{
    std::ostringstream os;
    if (r.command == "count") {
        os << "method,value\n";
        for (auto const& row : r.results)
            os << row["method"].get<std::string>() << ',' << row["value"].get<std::string>() << '\n';
    } else if (r.command == "table") {
        os << "d,n,k";
        auto const& methods = r.parameters["methods"];
        for (auto const& m : methods)
            os << ',' << method_label(m.get<std::string>());
        os << ",agree\n";
        for (auto const& row : r.results) {
            os << row["d"].get<int>() << ',' << row["n"].get<int>() << ',' << row["k"].get<int>();
            for (auto const& m : methods)
                os << ',' << row[method_label(m.get<std::string>())].get<std::string>();
            os << ',' << (row["agree"].get<bool>() ? "true" : "false") << '\n';
        }
    } else {
        os << "module,check,passed,cases,witness\n";
        for (auto const& row : r.results)
            os << row["module"].get<std::string>() << ',' << row["check"].get<std::string>() << ','
               << (row["passed"].get<bool>() ? "true" : "false") << ',' << row["cases"].get<std::uint64_t>() << ",\""
               << row["witness"].get<std::string>() << "\"\n";
    }
    return os.str();
}

inline std::string render(RunReport const& r, OutputFormat f)
{
    return f == OutputFormat::json ? r.dump() : to_csv(r);
}

struct VerifyRequest {
    std::string suite = "small";
    unsigned threads = 1;
    // Testing hook: replaces one routine with a deliberately wrong one.
    std::optional<std::string> inject_fault;
};

inline RunReport cmd_verify(VerifyRequest const& req, std::ostream& diag)
{
    VerifyConfig cfg = suite_config(req.suite);
    cfg.threads = req.threads;
    if (req.inject_fault) {
        if (*req.inject_fault != "closed_formula")
            throw usage_error("unknown fault \"" + *req.inject_fault + "\" (supported: closed_formula)");
        cfg.closed = [](int d, int k) {
            BigInt v = closed_formula(d, k).value;
            return k == 3 ? v + 1 : v;
        };
    }
    auto checks = run_verification(cfg);
    for (auto const& c : checks)
        if (!c.passed)
            diag << "FAILED " << c.module << "." << c.name << ": " << c.witness << "\n";
    return verification_report(cfg, checks);
}

inline int exit_status(RunReport const& r)
{
    return r.agreement ? exit_ok : exit_disagreement;
}

} // namespace minperm
