// pzeta: numerical and exact checks of prime-zeta identities.
//
//   pzeta check <claim> [--mode symbolic|numeric|probe] [--s <real>] [--max-n <int>]
//                       [--tol <real>] [--depth <int>] [--eps <range>]
//                       [--format text|structured]
//   pzeta table <selector> [--s <list>] [--n <a..b>] [--eps <range>] [--depth <int>]
//                          [--tol <real>] [--format text|structured]
//
// Exit status: 0 when the run completed (whatever the verdict), 2 on usage errors.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pzeta/commands.hpp"
#include "pzeta/errors.hpp"

namespace {

constexpr int kUsageExit = 2;

int usage_error(const std::string& message) {
    std::cerr << "pzeta: " << message << "\n";
    return kUsageExit;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and numerical checks of prime zeta function identities", "pzeta"};
    app.require_subcommand(1);

    std::string format = "text";
    const auto format_check = CLI::IsMember({"text", "structured"});

    // check
    auto* check = app.add_subcommand("check", "Run one claim check and emit a report");
    std::string claim_text;
    std::string mode_text;
    pzeta::CheckOptions check_opt;
    std::size_t max_n = 0;
    std::string check_eps;
    check->add_option("claim", claim_text, "claim2_3 | claim4 | migotti")->required();
    check->add_option("--mode", mode_text, "symbolic | numeric | probe");
    check->add_option("--s", check_opt.s, "Real s > 1 (default 2)");
    auto* max_n_opt = check->add_option("--max-n", max_n, "Series truncation / index bound");
    check->add_option("--tol", check_opt.tol, "Absolute tolerance (default 1e-12)");
    check->add_option("--depth", check_opt.depth, "Nested radical depth (default 20)");
    check->add_option("--eps", check_eps, "Probe grid, e.g. 1e-2..1e-5");
    check->add_option("--format", format, "text | structured")->check(format_check);

    // table
    auto* table = app.add_subcommand("table", "Print a table of computed values");
    pzeta::TableOptions table_opt;
    std::string s_list;
    std::string n_range;
    std::string table_eps;
    table->add_option("selector", table_opt.selector,
                      "zeta | prime-zeta | claim | cyclotomic-height | probe | radical")
        ->required();
    table->add_option("--s", s_list, "Comma-separated s values (default 2)");
    table->add_option("--n", n_range, "Index range a..b (default 1..120)");
    table->add_option("--eps", table_eps, "Probe grid, e.g. 1e-2..1e-5");
    table->add_option("--depth", table_opt.depth, "Maximum radical depth (default 20)");
    table->add_option("--tol", table_opt.tol, "Absolute tolerance (default 1e-12)");
    table->add_option("--format", format, "text | structured")->check(format_check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageExit;
    }

    const bool structured = format == "structured";
    try {
        if (*check) {
            const auto claim = pzeta::parse_claim_argument(claim_text);
            if (!claim) return usage_error("unknown claim '" + claim_text + "'");
            check_opt.claim = *claim;
            if (!mode_text.empty()) {
                const auto mode = pzeta::parse_mode_argument(mode_text);
                if (!mode) return usage_error("unknown mode '" + mode_text + "'");
                check_opt.mode = *mode;
            }
            if (max_n_opt->count() > 0) check_opt.max_n = max_n;
            if (!check_eps.empty()) check_opt.eps = pzeta::parse_eps_range(check_eps);

            const auto report = pzeta::run_check(check_opt);
            std::cout << (structured ? pzeta::to_structured(report) : pzeta::to_text(report));
            return 0;
        }

        if (!s_list.empty()) table_opt.s_values = pzeta::parse_real_list(s_list);
        if (!n_range.empty()) {
            const auto [first, last] = pzeta::parse_int_range(n_range);
            table_opt.n_first = first;
            table_opt.n_last = last;
        }
        if (!table_eps.empty()) table_opt.eps = pzeta::parse_eps_range(table_eps);
        const auto result = pzeta::run_table(table_opt);
        std::cout << (structured ? pzeta::to_structured(result) : pzeta::to_text(result));
        return 0;
    } catch (const pzeta::UsageError& e) {
        return usage_error(e.what());
    } catch (const pzeta::DomainError& e) {
        return usage_error(e.what());
    } catch (const std::exception& e) {
        std::cerr << "pzeta: internal error: " << e.what() << "\n";
        return 1;
    }
}
