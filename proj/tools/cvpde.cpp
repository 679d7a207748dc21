// cvpde - command-line front end for the spectral-filter toolkit.
//
// Subcommands map one-to-one onto the cmd_* functions in the core library;
// this file only parses flags, expands grid tokens and writes CSV.

#include "CLI11.hpp"

#include "cvpde/commands.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

// "lo:hi:n" -> GridSpec.  Used for --a/--r/--x (and --delta grid tokens).
cvpde::GridSpec parse_grid(const std::string& token, bool log_spaced,
                           const std::string& flag) {
    const auto bad = [&]() {
        throw CLI::ValidationError(flag, "expected lo:hi:n, got '" + token + "'");
    };
    const std::size_t p1 = token.find(':');
    const std::size_t p2 = (p1 == std::string::npos)
                               ? std::string::npos
                               : token.find(':', p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos) bad();
    cvpde::GridSpec grid;
    grid.log_spaced = log_spaced;
    try {
        std::size_t used = 0;
        grid.lo = std::stod(token.substr(0, p1), &used);
        if (used != p1) bad();
        grid.hi = std::stod(token.substr(p1 + 1, p2 - p1 - 1), &used);
        if (used != p2 - p1 - 1) bad();
        const std::string tail = token.substr(p2 + 1);
        grid.n = std::stoi(tail, &used);
        if (used != tail.size()) bad();
    } catch (const CLI::ValidationError&) {
        throw;
    } catch (const std::exception&) {
        bad();
    }
    return grid;
}

// --delta accepts plain values and lo:hi:n tokens (log-spaced, so the
// probability command can sweep window widths over decades).
std::vector<double> expand_reals(const std::vector<std::string>& tokens,
                                 const std::string& flag) {
    std::vector<double> out;
    for (const std::string& token : tokens) {
        if (token.find(':') != std::string::npos) {
            for (double v : parse_grid(token, true, flag).points())
                out.push_back(v);
            continue;
        }
        try {
            std::size_t used = 0;
            out.push_back(std::stod(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw CLI::ValidationError(flag, "expected a number, got '" +
                                                 token + "'");
        }
    }
    return out;
}

std::vector<cvpde::Variant> parse_variants(
    const std::vector<std::string>& tokens) {
    std::vector<cvpde::Variant> out;
    out.reserve(tokens.size());
    for (const std::string& token : tokens)
        out.push_back(cvpde::variant_from_token(token));
    return out;
}

void write_table(const cvpde::CurveTable& table, const std::string& out_path) {
    const std::string csv = table.to_csv();
    if (out_path.empty()) {
        std::fwrite(csv.data(), 1, csv.size(), stdout);
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + out_path + "'");
    out.write(csv.data(), static_cast<std::streamsize>(csv.size()));
    if (!out) throw std::runtime_error("write to '" + out_path + "' failed");
}

const char* const kVariantHelp =
    "Filter variant: exact, arrazola-inf, arrazola, prop1, prop2 "
    "(repeatable / comma-separated)";

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Spectral filters for solving nonhomogeneous linear PDEs on "
        "continuous-variable quantum hardware: filter curves, error curves, "
        "measurement success probabilities and worked example solutions."};
    app.require_subcommand(1);

    // ---- filter-curve ----
    auto* fc = app.add_subcommand(
        "filter-curve", "Tabulate the filter F(a) over an eigenvalue grid");
    std::vector<std::string> fc_variants;
    std::string fc_a = "1e-2:1e2:200";
    std::vector<std::string> fc_delta{"0"};
    cvpde::FilterCurveOptions fc_opt;
    std::string fc_out;
    fc->add_option("--variant", fc_variants, kVariantHelp)
        ->required()
        ->delimiter(',');
    fc->add_option("--a", fc_a, "Eigenvalue grid lo:hi:n (log-spaced)");
    fc->add_option("--delta", fc_delta, "Window width(s)")->delimiter(',');
    fc->add_option("--t", fc_opt.ts, "Evolution time(s) for the proposals")
        ->delimiter(',');
    fc->add_option("--L", fc_opt.L, "Barrier length");
    fc->add_option("--d", fc_opt.ds, "Barrier Fock cutoff(s)")->delimiter(',');
    fc->add_option("--M", fc_opt.Ms, "Proposal order(s)")->delimiter(',');
    fc->add_option("--out", fc_out, "Output CSV path (default: stdout)");

    // ---- error-curve ----
    auto* ec = app.add_subcommand(
        "error-curve", "Tabulate the relative filter error |1 - a F(a)|");
    std::vector<std::string> ec_variants{"arrazola", "prop1", "prop2"};
    std::string ec_a = "1e-2:1e2:200";
    std::vector<std::string> ec_delta{"0.1"};
    cvpde::ErrorCurveOptions ec_opt;
    std::string ec_out;
    ec->add_option("--variant", ec_variants, kVariantHelp)->delimiter(',');
    ec->add_option("--a", ec_a, "Eigenvalue grid lo:hi:n (log-spaced)");
    ec->add_option("--delta", ec_delta, "Window width(s)")->delimiter(',');
    ec->add_option("--t", ec_opt.ts, "Evolution time(s) for the proposals")
        ->delimiter(',');
    ec->add_option("--L", ec_opt.L, "Barrier length");
    ec->add_option("--d", ec_opt.ds, "Barrier Fock cutoff(s)")->delimiter(',');
    ec->add_option("--M", ec_opt.Ms, "Proposal order(s)")->delimiter(',');
    ec->add_option("--out", ec_out, "Output CSV path (default: stdout)");

    // ---- probability ----
    auto* pr = app.add_subcommand(
        "probability",
        "Success probability of the filter measurement vs window width, for "
        "the oscillator coherent-state source");
    std::vector<std::string> pr_variants{"arrazola", "prop1", "prop2"};
    std::vector<std::string> pr_delta{"1e-3:1:60"};
    cvpde::ProbabilityOptions pr_opt;
    std::string pr_out;
    pr->add_option("--variant", pr_variants, kVariantHelp)->delimiter(',');
    pr->add_option("--delta", pr_delta,
                   "Window width(s); accepts lo:hi:n log grids")
        ->delimiter(',');
    pr->add_option("--t", pr_opt.ts, "Evolution time(s) for the proposals")
        ->delimiter(',');
    pr->add_option("--L", pr_opt.L, "Barrier length");
    pr->add_option("--d", pr_opt.ds, "Barrier Fock cutoff(s)")->delimiter(',');
    pr->add_option("--M", pr_opt.Ms, "Proposal order(s)")->delimiter(',');
    pr->add_option("--alpha", pr_opt.alpha, "Coherent amplitude of the source");
    pr->add_flag("--fig9-scales", pr_opt.fig9_scales,
                 "Scale the arrazola column by 10 and prop1 by 1000 (the "
                 "presentation scaling of the reference comparison plot)");
    pr->add_option("--out", pr_out, "Output CSV path (default: stdout)");

    // ---- solve ----
    auto* so = app.add_subcommand(
        "solve", "Reconstruct a worked problem's solution on a spatial grid");
    std::vector<std::string> so_variants{"prop1", "prop2"};
    std::string so_r = "0.1:10:100";
    std::string so_x = "-1:5:100";
    std::vector<std::string> so_delta{"1"};
    cvpde::SolveOptions so_opt;
    std::string so_out;
    so->add_option("--problem", so_opt.problem, "poisson or qho")->required();
    so->add_option("--variant", so_variants, kVariantHelp)->delimiter(',');
    so->add_option("--r", so_r, "Radial grid lo:hi:n for poisson (linear)");
    so->add_option("--x", so_x, "Position grid lo:hi:n for qho (linear)");
    so->add_option("--delta", so_delta, "Window width(s)")->delimiter(',');
    so->add_option("--t", so_opt.ts, "Evolution time(s) for the proposals")
        ->delimiter(',');
    so->add_option("--L", so_opt.L, "Barrier length");
    so->add_option("--d", so_opt.ds, "Barrier Fock cutoff(s)")->delimiter(',');
    so->add_option("--M", so_opt.Ms, "Proposal order(s)")->delimiter(',');
    so->add_option("--sigma", so_opt.sigma, "Poisson source inverse width");
    so->add_option("--alpha", so_opt.alpha, "Oscillator coherent amplitude");
    so->add_option("--out", so_out, "Output CSV path (default: stdout)");

    // ---- coefficients ----
    auto* co = app.add_subcommand(
        "coefficients", "Dump one ancilla Fock expansion as CSV");
    std::string co_variant;
    cvpde::CoefficientsOptions co_opt;
    std::string co_out;
    co->add_option("--variant", co_variant, "arrazola, prop1 or prop2")
        ->required();
    co->add_option("--L", co_opt.L, "Barrier length (arrazola)");
    co->add_option("--d", co_opt.d, "Barrier Fock cutoff (arrazola)");
    co->add_option("--M", co_opt.M, "Proposal order (prop1/prop2)");
    co->add_option("--delta", co_opt.delta, "Window width (prop1/prop2)");
    co->add_option("--out", co_out, "Output CSV path (default: stdout)");

    try {
        app.parse(argc, argv);

        if (fc->parsed()) {
            fc_opt.variants = parse_variants(fc_variants);
            fc_opt.a_grid = parse_grid(fc_a, true, "--a");
            fc_opt.deltas = expand_reals(fc_delta, "--delta");
            write_table(cmd_filter_curve(fc_opt), fc_out);
        } else if (ec->parsed()) {
            ec_opt.variants = parse_variants(ec_variants);
            ec_opt.a_grid = parse_grid(ec_a, true, "--a");
            ec_opt.deltas = expand_reals(ec_delta, "--delta");
            write_table(cmd_error_curve(ec_opt), ec_out);
        } else if (pr->parsed()) {
            pr_opt.variants = parse_variants(pr_variants);
            pr_opt.deltas = expand_reals(pr_delta, "--delta");
            write_table(cmd_probability(pr_opt), pr_out);
        } else if (so->parsed()) {
            so_opt.variants = parse_variants(so_variants);
            so_opt.r_grid = parse_grid(so_r, false, "--r");
            so_opt.x_grid = parse_grid(so_x, false, "--x");
            so_opt.deltas = expand_reals(so_delta, "--delta");
            write_table(cmd_solve(so_opt), so_out);
        } else if (co->parsed()) {
            co_opt.variant = cvpde::variant_from_token(co_variant);
            write_table(cmd_coefficients(co_opt), co_out);
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
