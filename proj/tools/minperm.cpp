// minperm: count minimal permutations and their overlap-h relatives by
// determinant sums, closed forms and exhaustive oracles.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "minperm/commands.hpp"

namespace {

void add_common(CLI::App* cmd, minperm::MethodOptions& opts, std::string& format)
{
    cmd->add_option("--format", format, "csv or json")->capture_default_str();
    cmd->add_option("--oracle-limit", opts.oracle_limit, "largest n for brute-force scans of S_n")
        ->capture_default_str();
    cmd->add_option("--tableau-limit", opts.tableau_cell_limit, "largest cell count for tableau generation")
        ->capture_default_str();
    cmd->add_option("--threads", opts.threads, "worker threads for composition sweeps and scans")
        ->capture_default_str();
}

} // namespace

int main(int argc, char** argv)
{
    using namespace minperm;

    CLI::App app{"minperm: exact enumeration of minimal permutations with d descents"};
    app.require_subcommand(1);
    // -h would clash with the --h overlap option.
    app.set_help_flag("--help", "print this help and exit");

    CountRequest count;
    std::string count_methods = "det";
    std::string count_format = "json";
    std::optional<int> n, d, k;
    auto* count_cmd = app.add_subcommand("count", "count |SkYT_h(n,k)| by one or more methods");
    count_cmd->add_option("--n", n, "permutation length / cell count");
    count_cmd->add_option("--d", d, "number of descents");
    count_cmd->add_option("--k", k, "number of descending runs / tableau rows");
    count_cmd->add_option("--h", count.h, "row overlap")->capture_default_str();
    count_cmd->add_option("--methods", count_methods, "comma list of det, closed, brute, tableaux")
        ->capture_default_str();
    add_common(count_cmd, count.options, count_format);

    TableRequest table;
    std::string table_k = "3";
    std::string table_methods = "det";
    std::string table_format = "json";
    auto* table_cmd = app.add_subcommand("table", "emit d -> count rows for fixed k (or k = d)");
    table_cmd->add_option("--k", table_k, "rows per tableau, or \"d\" for the 2-column rectangles")
        ->capture_default_str();
    table_cmd->add_option("--h", table.h, "row overlap")->capture_default_str();
    table_cmd->add_option("--max-d", table.max_d, "last d")->required();
    table_cmd->add_option("--min-d", table.min_d, "first d (default k for h >= 2, 0 otherwise)");
    table_cmd->add_option("--methods", table_methods, "comma list of det, closed, brute, tableaux")
        ->capture_default_str();
    add_common(table_cmd, table.options, table_format);

    VerifyRequest verify;
    std::string verify_format = "json";
    std::optional<std::string> fault;
    auto* verify_cmd = app.add_subcommand("verify", "run the cross-method verification suites");
    verify_cmd->add_option("--suite", verify.suite, "small (n <= 7) or standard (n <= 9)")->capture_default_str();
    verify_cmd->add_option("--format", verify_format, "csv or json")->capture_default_str();
    verify_cmd->add_option("--threads", verify.threads, "worker threads")->capture_default_str();
    verify_cmd->add_option("--inject-fault", fault, "deliberately break a routine (closed_formula)")
        ->group("Testing");

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        int const rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        RunReport report;
        OutputFormat format = OutputFormat::json;
        if (*count_cmd) {
            count.n = n;
            count.d = d;
            count.k = k;
            count.methods = parse_methods(count_methods);
            format = parse_format(count_format);
            report = cmd_count(count, std::cerr);
        } else if (*table_cmd) {
            if (table_k != "d") {
                try {
                    table.k = std::stoi(table_k);
                } catch (std::exception const&) {
                    throw usage_error("--k must be an integer or \"d\"");
                }
            }
            table.methods = parse_methods(table_methods);
            format = parse_format(table_format);
            report = cmd_table(table, std::cerr);
        } else {
            verify.inject_fault = fault;
            format = parse_format(verify_format);
            report = cmd_verify(verify, std::cerr);
        }
        std::cout << render(report, format);
        if (!report.agreement)
            std::cerr << "methods disagree or a check failed\n";
        return exit_status(report);
    } catch (resource_error const& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return exit_resource;
    } catch (std::invalid_argument const& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return exit_usage;
    } catch (std::exception const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_disagreement;
    }
}
