#include <cstdlib>
#include <string>

#include <CLI11.hpp>

#include "pqcurves/report.hpp"

using pqcurves::OutputFormat;
using pqcurves::RunConfig;
using pqcurves::Subcommand;

int main(int argc, char** argv) {
    CLI::App app{
        "pqcurves: exact 2-descent rank bounds, Q(i) torsion and quartic "
        "Diophantine verification for the curve families y^2 = x^3 +/- p*q*x"};
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char* env = std::getenv("PQCURVES_NORM_BOUND")) cfg.norm_bound = std::atol(env);

    long p = 0, q = 0;
    std::string sign = "both", format = "json", output;

    auto add_common = [&](CLI::App* sub, bool wants_pair) {
        if (wants_pair) {
            sub->add_option("--p", p, "first prime of the pair, p = 3 (mod 8)");
            sub->add_option("--q", q, "second prime of the pair, q = 1 (mod 8)");
            sub->add_option("--sign", sign, "curve family: +, - or both")
                ->check(CLI::IsMember({"+", "-", "both"}));
        }
        sub->add_option("--height", cfg.height, "quartic witness search height");
        sub->add_option("--moduli-bound", cfg.moduli_bound,
                        "largest prime modulus for obstruction search");
        sub->add_option("--output,-o", output, "write the report to this path");
        sub->add_option("--format", format, "json or text")
            ->check(CLI::IsMember({"json", "text"}));
    };

    auto* pairs = app.add_subcommand("pairs", "list prime pairs (p, q) up to a limit");
    pairs->add_option("--limit", cfg.limit, "upper bound for p and q")->required();
    add_common(pairs, false);

    auto* rank = app.add_subcommand("rank", "2-descent rank bounds over Q and Q(i)");
    add_common(rank, true);

    auto* torsion = app.add_subcommand("torsion", "torsion subgroup over Q(i)");
    add_common(torsion, true);

    auto* trace = app.add_subcommand("descent-trace",
                                     "per-class descent certificates for both curves");
    add_common(trace, true);

    auto* verify = app.add_subcommand(
        "verify", "exhaustive small-solution search for all quartic variants");
    verify->add_option("--norm-bound", cfg.norm_bound, "norm bound for x and y");
    add_common(verify, true);

    auto* all = app.add_subcommand("all", "rank, torsion and verification in one report");
    all->add_option("--norm-bound", cfg.norm_bound, "norm bound for x and y");
    add_common(all, true);

    CLI11_PARSE(app, argc, argv);

    if (pairs->parsed()) cfg.subcommand = Subcommand::Pairs;
    if (rank->parsed()) cfg.subcommand = Subcommand::Rank;
    if (torsion->parsed()) cfg.subcommand = Subcommand::Torsion;
    if (trace->parsed()) cfg.subcommand = Subcommand::DescentTrace;
    if (verify->parsed()) cfg.subcommand = Subcommand::Verify;
    if (all->parsed()) cfg.subcommand = Subcommand::All;

    if (p) cfg.p = p;
    if (q) cfg.q = q;
    cfg.sign = sign == "both" ? 'b' : sign[0];
    cfg.format = format == "text" ? OutputFormat::Text : OutputFormat::Json;
    if (!output.empty()) cfg.output_path = output;

    return pqcurves::run(cfg);
}
