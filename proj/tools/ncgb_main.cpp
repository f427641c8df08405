#include <CLI11.hpp>
#include <iostream>

#include "ncgb/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Noncommutative Groebner bases with cofactor certificates"};
    app.require_subcommand(1);

    ncgb::CmdOptions opts;
    std::string problem, document, fixtures_dir, filter;
    bool no_proofs = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--maxiter", opts.maxiter, "completion iteration budget");
        cmd->add_flag("--serial", opts.serial, "disable parallel batch reduction");
    };

    auto* certify = app.add_subcommand("certify", "prove claims from assumptions");
    certify->add_option("problem", problem)->required();
    certify->add_flag("--quiver-check", opts.quiver_check,
                      "check polynomials against the declared quiver");
    certify->add_option("--json", opts.json_out, "write the certificate document here");
    certify->add_flag("--no-proofs", no_proofs, "do not print cofactor representations");
    add_common(certify);

    auto* verify = app.add_subcommand("verify", "re-check a certificate document");
    verify->add_option("problem", problem)->required();
    verify->add_option("document", document)->required();

    auto* gb = app.add_subcommand("gb", "print a (partial) Groebner basis");
    gb->add_option("problem", problem)->required();
    add_common(gb);

    auto* reduce = app.add_subcommand("reduce", "normal forms of the reduce: targets");
    reduce->add_option("problem", problem)->required();
    add_common(reduce);

    auto* find = app.add_subcommand("find", "search for equivalent expressions");
    find->add_option("problem", problem)->required();
    find->add_option("--heuristic", opts.heuristic,
                     "naive | groebner | subalgebra | right-ideal | left-ideal");
    find->add_option("--degbound", opts.degbound, "degree bound for the search");
    find->add_flag("--pure", opts.pure, "drop candidates containing the target's variables");
    add_common(find);

    auto* cancel_left = app.add_subcommand("cancel-left", "apply left cancellability");
    cancel_left->add_option("problem", problem)->required();
    cancel_left->add_option("--heuristic", opts.heuristic, "subalgebra | one-sided | two-sided");
    cancel_left->add_option("--degbound", opts.degbound, "degree bound");
    add_common(cancel_left);

    auto* cancel_right = app.add_subcommand("cancel-right", "apply right cancellability");
    cancel_right->add_option("problem", problem)->required();
    cancel_right->add_option("--heuristic", opts.heuristic, "subalgebra | one-sided | two-sided");
    cancel_right->add_option("--degbound", opts.degbound, "degree bound");
    add_common(cancel_right);

    auto* prove = app.add_subcommand("prove", "semi-decide a forall-exists statement");
    prove->add_option("problem", problem)->required();
    prove->add_flag("--unbounded", opts.unbounded,
                    "keep enumerating past the budget (may not terminate)");
    add_common(prove);

    auto* fixtures = app.add_subcommand("run-fixtures", "run the bundled regression corpus");
    fixtures->add_option("dir", fixtures_dir)->required();
    fixtures->add_option("--filter", filter, "only fixtures whose name contains this");
    add_common(fixtures);

    CLI11_PARSE(app, argc, argv);
    opts.show_proofs = !no_proofs;

    if (certify->parsed()) return ncgb::cmd_certify(problem, opts, std::cout, std::cerr);
    if (verify->parsed()) return ncgb::cmd_verify(problem, document, std::cout, std::cerr);
    if (gb->parsed()) return ncgb::cmd_gb(problem, opts, std::cout, std::cerr);
    if (reduce->parsed()) return ncgb::cmd_reduce(problem, opts, std::cout, std::cerr);
    if (find->parsed()) return ncgb::cmd_find(problem, opts, std::cout, std::cerr);
    if (cancel_left->parsed()) return ncgb::cmd_cancel(problem, true, opts, std::cout, std::cerr);
    if (cancel_right->parsed())
        return ncgb::cmd_cancel(problem, false, opts, std::cout, std::cerr);
    if (prove->parsed()) return ncgb::cmd_prove(problem, opts, std::cout, std::cerr);
    if (fixtures->parsed())
        return ncgb::cmd_fixtures(fixtures_dir, filter, opts, std::cout, std::cerr);
    return 2;
}
