#include "fde/report_io.hpp"

#include "fde/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

#include <json.hpp>

namespace fde {

namespace {

std::string fmt(const char* spec, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::string opt_fmt(const char* spec, const std::optional<double>& v) { return v ? fmt(spec, *v) : ""; }

std::string quote(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') {
            q += '"';
        }
        q += c;
    }
    return q + '"';
}

}  // namespace

void write_rows_csv(std::ostream& os, const std::vector<ResultRow>& rows, bool with_timing)
{
    os << "problem,alpha,beta,size,precond,avg_iterations,wall_ms,kappa,final_error_max,converged,note\n";
    for (const auto& r : rows) {
        os << quote(r.problem) << ',' << fmt("%.4g", r.alpha) << ',' << opt_fmt("%.4g", r.beta) << ',' << r.size
           << ',' << kind_name(r.kind) << ',' << fmt("%.1f", r.avg_iterations) << ','
           << (with_timing ? opt_fmt("%.3f", r.wall_ms) : "") << ',' << opt_fmt("%.6g", r.kappa) << ','
           << fmt("%.6e", r.final_error_max) << ',' << (r.converged ? "true" : "false") << ',' << quote(r.note)
           << '\n';
    }
}

void write_table_csv(std::ostream& os, int table, const std::vector<TableRow>& rows, bool with_timing)
{
    os << "table,alpha,beta,size,precond,it,ms,kappa,pub_it,pub_ms,pub_kappa,it_pass,kappa_pass\n";
    for (const auto& row : rows) {
        const auto& m = row.measured;
        const auto& p = row.published;
        os << table << ',' << fmt("%.4g", p.alpha) << ',' << opt_fmt("%.4g", p.beta) << ',' << p.size << ','
           << kind_name(p.kind) << ',' << fmt("%.1f", m.avg_iterations) << ','
           << (with_timing ? opt_fmt("%.1f", m.wall_ms) : "") << ',' << opt_fmt("%.2f", m.kappa) << ','
           << fmt("%.1f", p.it) << ',' << fmt("%.1f", p.ms) << ',' << fmt("%.1f", p.kappa) << ','
           << (row.it_pass ? "pass" : "fail") << ',' << (row.kappa_pass ? (*row.kappa_pass ? "pass" : "fail") : "n/a")
           << '\n';
    }
}

void write_spectrum_csv(std::ostream& os, const SpectrumReport& rep)
{
    std::vector<std::size_t> order(rep.eigenvalues.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& x = rep.eigenvalues[a];
        const auto& y = rep.eigenvalues[b];
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
    os << "re,im,re_scaled,im_scaled\n";
    for (std::size_t i : order) {
        const auto& l = rep.eigenvalues[i];
        const auto& s = rep.scaled_eigenvalues[i];
        os << fmt("%.17g", l.real()) << ',' << fmt("%.17g", l.imag()) << ',' << fmt("%.17g", s.real()) << ','
           << fmt("%.17g", s.imag()) << '\n';
    }
}

void write_spectrum_json(std::ostream& os, const SpectrumReport& rep)
{
    nlohmann::ordered_json j;
    j["center_re"] = rep.center.real();
    j["center_im"] = rep.center.imag();
    j["radius"] = rep.radius;
    j["kappa"] = rep.kappa;
    os << j.dump(2) << '\n';
}

std::string sidecar_path(const std::string& path)
{
    std::filesystem::path p(path);
    p.replace_extension(".json");
    if (p.string() == path) {
        return path + ".json";
    }
    return p.string();
}

void write_file(const std::string& path, const std::string& contents)
{
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw Error("cannot open '" + path + "' for writing");
    }
    f << contents;
    if (!f) {
        throw Error("failed writing '" + path + "'");
    }
}

}  // namespace fde
