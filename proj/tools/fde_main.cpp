// fde: solve the example problems, dump preconditioned spectra, reproduce the reference tables.

#include "fde/errors.hpp"
#include "fde/experiment.hpp"
#include "fde/report_io.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>

namespace {

fde::Stencil parse_stencil(int s)
{
    if (s == 1) {
        return fde::Stencil::FirstOrder;
    }
    if (s == 2) {
        return fde::Stencil::SecondOrder;
    }
    throw fde::InvalidArgument("--stencil must be 1 or 2");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Fractional diffusion solver and preconditioner benchmark"};
    app.require_subcommand(1);

    std::string problem = "ex1";
    double alpha = 1.5;
    std::vector<std::size_t> sizes;
    std::vector<std::string> precond{"symbol-tau"};
    int stencil = 1;
    double tol = 1e-7;
    std::size_t max_iter = 0;
    bool warm = false;
    bool kappa = false;
    std::size_t samples = 1;
    bool no_timing = false;
    std::uint64_t seed = fde::kAnalysisSeed;
    std::string out;

    auto* solve = app.add_subcommand("solve", "Time-step a problem and report GMRES statistics");
    solve->add_option("--problem", problem, "ex1, ex2 or ex3")->check(CLI::IsMember({"ex1", "ex2", "ex3"}));
    solve->add_option("--alpha", alpha, "fractional order (ex1)");
    solve->add_option("--n", sizes, "n1+1 for ex1, n1=n2 for ex2/ex3")->required()->expected(1, -1);
    solve->add_option("--precond", precond, "preconditioner kinds")->expected(1, -1);
    solve->add_option("--stencil", stencil, "1 or 2 (ex1)");
    solve->add_option("--tol", tol, "GMRES relative tolerance");
    solve->add_option("--max-iter", max_iter, "GMRES iteration cap (0: system order)");
    solve->add_flag("--warm-start", warm, "start each step from the previous solution");
    solve->add_flag("--kappa", kappa, "also compute the condition number of P^-1 M");
    solve->add_option("--samples", samples, "timing samples (minimum is reported)");
    solve->add_flag("--no-timing", no_timing, "omit wall-clock columns");
    solve->add_option("--seed", seed, "analysis seed");
    solve->add_option("--out", out, "CSV output (default: stdout)");

    std::size_t spec_n = 0;
    std::string spec_precond = "symbol-tau";
    auto* spectrum = app.add_subcommand("spectrum", "Write the spectrum of P^-1 M as CSV plus a JSON sidecar");
    spectrum->add_option("--problem", problem, "ex1, ex2 or ex3")->check(CLI::IsMember({"ex1", "ex2", "ex3"}));
    spectrum->add_option("--alpha", alpha, "fractional order (ex1)");
    spectrum->add_option("--n", spec_n, "n1+1 for ex1, n1=n2 for ex2/ex3")->required();
    spectrum->add_option("--precond", spec_precond, "preconditioner kind");
    spectrum->add_option("--stencil", stencil, "1 or 2 (ex1)");
    spectrum->add_option("--seed", seed, "enclosing-circle shuffle seed");
    spectrum->add_option("--out", out, "CSV output path")->required();

    int table_id = 1;
    bool full_2d = false;
    std::size_t table_samples = 10;
    auto* table = app.add_subcommand("table", "Reproduce a reference table next to the published values");
    table->add_option("--id", table_id, "table 1..4")->required()->check(CLI::Range(1, 4));
    table->add_option("--out", out, "CSV output path")->required();
    table->add_flag("--full-2d", full_2d, "include n = 128 for the 2D tables");
    table->add_option("--samples", table_samples, "timing samples (minimum is reported)");
    table->add_flag("--no-timing", no_timing, "omit wall-clock columns");
    table->add_option("--seed", seed, "analysis seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (*solve) {
            fde::ExperimentConfig cfg;
            cfg.problem = problem;
            cfg.alpha = problem == "ex1" ? std::optional<double>(alpha) : std::nullopt;
            cfg.sizes = sizes;
            for (const auto& name : precond) {
                cfg.kinds.push_back(fde::parse_kind(name));
            }
            cfg.stencil = parse_stencil(stencil);
            cfg.gmres.rel_tolerance = tol;
            if (max_iter > 0) {
                cfg.gmres.max_iterations = max_iter;
            }
            cfg.warm_start = warm;
            cfg.dense_analysis = kappa;
            cfg.timing = !no_timing;
            cfg.timing_samples = samples;
            cfg.seed = seed;
            const auto rows = fde::run_experiment(cfg);
            std::ostringstream os;
            fde::write_rows_csv(os, rows, cfg.timing);
            if (out.empty()) {
                std::cout << os.str();
            } else {
                fde::write_file(out, os.str());
            }
            bool ok = true;
            for (const auto& r : rows) {
                ok = ok && r.converged;
            }
            return ok ? 0 : 2;
        }
        if (*spectrum) {
            fde::SpectrumRequest req;
            req.problem = problem;
            req.alpha = problem == "ex1" ? std::optional<double>(alpha) : std::nullopt;
            req.size = spec_n;
            req.kind = fde::parse_kind(spec_precond);
            req.stencil = parse_stencil(stencil);
            req.seed = seed;
            const auto rep = fde::emit_spectrum(req, out);
            std::printf("eigenvalues %zu  center (%.6g, %.6g)  radius %.6g  kappa %.6g\n", rep.eigenvalues.size(),
                        rep.center.real(), rep.center.imag(), rep.radius, rep.kappa);
            return 0;
        }
        fde::TableOptions opt;
        opt.full_2d = full_2d;
        opt.samples = table_samples;
        opt.timing = !no_timing;
        opt.seed = seed;
        const auto rows = fde::reproduce_table(table_id, out, opt);
        bool ok = true;
        std::size_t it_pass = 0;
        std::size_t k_pass = 0;
        std::size_t k_total = 0;
        for (const auto& r : rows) {
            ok = ok && r.measured.converged;
            it_pass += r.it_pass ? 1 : 0;
            if (r.kappa_pass) {
                ++k_total;
                k_pass += *r.kappa_pass ? 1 : 0;
            }
        }
        std::printf("table %d: %zu rows, iterations within tolerance %zu/%zu, kappa within tolerance %zu/%zu\n",
                    table_id, rows.size(), it_pass, rows.size(), k_pass, k_total);
        return ok ? 0 : 2;
    } catch (const fde::InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
