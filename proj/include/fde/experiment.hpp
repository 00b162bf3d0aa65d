#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fde/analysis.hpp"
#include "fde/krylov.hpp"
#include "fde/preconditioners.hpp"
#include "fde/symbols.hpp"

namespace fde {

struct ExperimentConfig {
    std::string problem = "ex1";
    std::optional<double> alpha;  // ex1 only
    /// ex1: n1 + 1; ex2/ex3: n1 = n2.
    std::vector<std::size_t> sizes;
    std::vector<PreconditionerKind> kinds;
    Stencil stencil = Stencil::FirstOrder;  // ex1 only; 2D always uses the second-order stencil
    GmresConfig gmres;
    bool warm_start = false;
    bool dense_analysis = false;
    bool timing = true;
    std::size_t timing_samples = 1;
    std::uint64_t seed = kAnalysisSeed;
};

struct ResultRow {
    std::string problem;
    double alpha = 0.0;
    std::optional<double> beta;
    std::size_t size = 0;
    PreconditionerKind kind = PreconditionerKind::Identity;
    double avg_iterations = 0.0;
    std::optional<double> wall_ms;
    std::optional<double> kappa;
    double final_error_max = 0.0;
    bool converged = true;
    std::string note;  // reason a cell was flagged
};

ResultRow run_cell(const ExperimentConfig& cfg, std::size_t size, PreconditionerKind kind);
/// One row per (size, kind) in config order; failing cells are flagged, not thrown.
std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg);

struct SpectrumRequest {
    std::string problem = "ex1";
    std::optional<double> alpha;
    std::size_t size = 0;
    PreconditionerKind kind = PreconditionerKind::SymbolTau1D;
    Stencil stencil = Stencil::FirstOrder;
    std::uint64_t seed = kAnalysisSeed;
};

SpectrumReport compute_spectrum(const SpectrumRequest& req);
/// Writes the CSV at `path` and a JSON sidecar next to it.
SpectrumReport emit_spectrum(const SpectrumRequest& req, const std::string& path);

struct PublishedCell {
    int table;
    double alpha;
    std::optional<double> beta;
    std::size_t size;  // n1 + 1 (table 1, 2) or n (tables 3, 4)
    PreconditionerKind kind;
    double it;
    double ms;
    double kappa;
};

const std::vector<PublishedCell>& published_cells();

struct TableOptions {
    bool full_2d = false;
    std::size_t samples = 10;
    bool timing = true;
    std::uint64_t seed = kAnalysisSeed;
};

struct TableRow {
    ResultRow measured;
    PublishedCell published;
    bool it_pass = false;
    std::optional<bool> kappa_pass;  // absent when kappa was not computed
};

/// Iteration tolerance: +-10 % for the identity column, +-2 otherwise. Kappa tolerance: +-10 %.
bool iterations_within_tolerance(PreconditionerKind kind, double measured, double published);
bool kappa_within_tolerance(double measured, double published);

std::vector<TableRow> reproduce_table(int k, const TableOptions& opt = {});
std::vector<TableRow> reproduce_table(int k, const std::string& path, const TableOptions& opt = {});

}  // namespace fde
