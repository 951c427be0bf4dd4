// Command-line front end: reproduce the reference tables, solve custom
// coefficient systems, and dump spectra / wavefunction samples as CSV or
// JSON.  Exit codes: 0 success, 2 nonconvergence (partial results written),
// 3 input error, 1 internal error.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>
#include <json.hpp>

#include "aim/engine.hpp"
#include "aim/expr.hpp"
#include "aim/models.hpp"
#include "fixtures.hpp"

namespace {

using aim::wide_real;
using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNoConvergence = 2;
constexpr int kExitInputError = 3;
constexpr int kExitInternal = 1;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    if (out.empty()) throw aim::Error("empty list: '" + s + "'");
    return out;
}

std::optional<std::pair<double, double>> parse_window(const std::string& s) {
    if (s.empty()) return std::nullopt;
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw aim::Error("window must be lo:hi");
    return std::make_pair(std::stod(s.substr(0, colon)), std::stod(s.substr(colon + 1)));
}

int effective_max_iter(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("AIM_MAX_ITER")) return std::atoi(env);
    return 40;
}

// One output row of the spectrum table.  Empty strings mark inapplicable
// columns, matching the documented schema.
struct Row {
    std::string model, p1, p2, k, n, E, branch, iterations, drift, residual;
};

const char* kCsvHeader = "model,omega0|lambda,kappa|B,k,n,E,branch,iterations,drift,residual";

std::string branch_name(int b) { return b == 3 ? "both" : std::to_string(b); }

void write_rows(const std::vector<Row>& rows, const std::string& out_path,
                const std::string& format, const std::string& header) {
    std::ostringstream os;
    if (format == "json") {
        json arr = json::array();
        for (const Row& r : rows) {
            json o;
            o["model"] = r.model;
            if (!r.p1.empty()) o["omega0|lambda"] = std::stod(r.p1);
            if (!r.p2.empty()) o["kappa|B"] = std::stod(r.p2);
            if (!r.k.empty()) o["k"] = std::stoi(r.k);
            if (!r.n.empty()) o["n"] = std::stoi(r.n);
            if (!r.E.empty()) o["E"] = std::stod(r.E);
            o["branch"] = r.branch;
            if (!r.iterations.empty()) o["iterations"] = std::stoi(r.iterations);
            if (!r.drift.empty()) o["drift"] = std::stod(r.drift);
            if (!r.residual.empty()) o["residual"] = std::stod(r.residual);
            arr.push_back(std::move(o));
        }
        os << arr.dump(2) << "\n";
    } else {
        os << header << "\n";
        for (const Row& r : rows)
            os << r.model << ',' << r.p1 << ',' << r.p2 << ',' << r.k << ',' << r.n << ','
               << r.E << ',' << r.branch << ',' << r.iterations << ',' << r.drift << ','
               << r.residual << "\n";
    }
    if (out_path.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(out_path);
        if (!f) throw aim::Error("cannot write output file: " + out_path);
        f << os.str();
    }
}

struct SolveFlags {
    int nmax = 5;
    int max_iter_flag = 0;
    double conv_tol = 1e-8;
    std::string window;
    std::string out;
    std::string format = "csv";
    bool compare_paper = false;
};

void add_solve_flags(CLI::App* cmd, SolveFlags& f) {
    cmd->add_option("--nmax", f.nmax, "highest state index to report");
    cmd->add_option("--max-iter", f.max_iter_flag, "iteration cap (default 40 or AIM_MAX_ITER)");
    cmd->add_option("--conv-tol", f.conv_tol, "root drift tolerance for acceptance");
    cmd->add_option("--window", f.window, "energy search window lo:hi");
    cmd->add_option("--out,-o", f.out, "output path (default stdout)");
    cmd->add_option("--format", f.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_flag("--compare-paper", f.compare_paper,
                  "emit differences against the bundled reference tables");
}

aim::Spectrum solve_rabi(const aim::RabiParams& p, const SolveFlags& f) {
    const int max_iter = effective_max_iter(f.max_iter_flag);
    const auto c = aim::rabi_coefficients<wide_real>(p, max_iter + 2);
    aim::RootWindow w = aim::rabi_window(p, f.nmax);
    if (const auto ov = parse_window(f.window)) w = aim::RootWindow(ov->first, ov->second);
    aim::SolveOptions opts(w);
    opts.max_iter = max_iter;
    opts.conv_tol = f.conv_tol;
    return aim::solve_spectrum(c, opts);
}

aim::Spectrum solve_rashba(const aim::RashbaParams& p, const SolveFlags& f) {
    const int max_iter = effective_max_iter(f.max_iter_flag);
    const auto c = aim::rashba_coefficients<wide_real>(p, 2 * max_iter + 2);
    aim::RootWindow w = aim::rashba_window(p, f.nmax);
    if (const auto ov = parse_window(f.window)) w = aim::RootWindow(ov->first, ov->second);
    aim::SolveOptions opts(w);
    opts.max_iter = max_iter;
    opts.conv_tol = f.conv_tol;
    return aim::solve_spectrum(c, opts);
}

// ---------------------------------------------------------------- rabi ----

int cmd_rabi(const std::vector<double>& omega0s, const std::vector<double>& kappas,
             const SolveFlags& f) {
    struct Job {
        double omega0, kappa;
        aim::Spectrum sp;
        std::vector<double> exact;
        bool is_exact = false;
        std::string error;
    };
    std::vector<Job> jobs;
    for (double w0 : omega0s)
        for (double kap : kappas) jobs.push_back({w0, kap, {}, {}, false, ""});

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        Job& j = jobs[i];
        const aim::RabiParams p{j.omega0, j.kappa};
        try {
            if (j.kappa == 0.0) {
                if (auto ex = aim::rabi_exact_spectrum(p, f.nmax)) {
                    j.exact = *ex;
                    j.is_exact = true;
                } else {
                    j.error = "no exact path for kappa=0 with this omega0";
                }
            } else {
                j.sp = solve_rabi(p, f);
            }
        } catch (const std::exception& ex) {
            j.error = ex.what();
        }
    }

    bool nonconverged = false;
    std::vector<Row> rows;
    if (f.compare_paper) {
        for (const Job& j : jobs) {
            std::vector<double> computed =
                j.is_exact ? j.exact : std::vector<double>();
            if (!j.is_exact)
                for (const auto& e : j.sp.eigenvalues) computed.push_back(e.E);
            for (const auto& t : aim::fixtures::table1()) {
                if (t.omega0 != j.omega0 || t.kappa != j.kappa || t.n > f.nmax) continue;
                double best = 0.0, diff = -1.0;
                for (double v : computed) {
                    const double d = std::fabs(v - t.value);
                    if (diff < 0 || d < diff) {
                        diff = d;
                        best = v;
                    }
                }
                // compare schema: the last five columns are idx, computed_E,
                // paper_E, abs_diff, adjusted_diff
                Row r;
                r.model = "rabi";
                r.p1 = fmt(t.omega0);
                r.p2 = fmt(t.kappa);
                r.n = std::to_string(t.n);
                r.E = std::to_string(t.idx);  // sub-row index within the n block
                r.branch = diff < 0 ? "" : fmt(best);
                r.iterations = fmt(t.value);  // paper value
                r.drift = diff < 0 ? "" : fmt(diff);
                r.residual = diff < 0 ? "" : fmt(diff);  // no offset convention for this model
                rows.push_back(std::move(r));
                if (diff < 0) nonconverged = true;
            }
        }
        write_rows(rows, f.out, f.format,
                   "model,omega0|lambda,kappa|B,k,n,idx,computed_E,paper_E,abs_diff,adjusted_diff");
        return nonconverged ? kExitNoConvergence : kExitOk;
    }

    for (const Job& j : jobs) {
        if (!j.error.empty()) {
            Row r;
            r.model = "rabi";
            r.p1 = fmt(j.omega0);
            r.p2 = fmt(j.kappa);
            r.branch = "warning";
            r.residual = j.error;
            rows.push_back(std::move(r));
            nonconverged = true;
            continue;
        }
        if (j.is_exact) {
            for (std::size_t n = 0; n < j.exact.size(); ++n) {
                Row r;
                r.model = "rabi";
                r.p1 = fmt(j.omega0);
                r.p2 = fmt(j.kappa);
                r.n = std::to_string(n);
                r.E = fmt(j.exact[n]);
                r.branch = "exact";
                rows.push_back(std::move(r));
            }
            continue;
        }
        // the reference table lists two states per n block; at omega0 = 0 the
        // pair degenerates and is reported once
        const std::size_t wanted =
            (j.omega0 == 0.0 ? 1 : 2) * (static_cast<std::size_t>(f.nmax) + 1);
        const std::size_t count = std::min<std::size_t>(j.sp.eigenvalues.size(), wanted);
        for (std::size_t n = 0; n < count; ++n) {
            const auto& e = j.sp.eigenvalues[n];
            Row r;
            r.model = "rabi";
            r.p1 = fmt(j.omega0);
            r.p2 = fmt(j.kappa);
            r.n = std::to_string(n);
            r.E = fmt(e.E);
            r.branch = branch_name(e.branch);
            r.iterations = std::to_string(e.first_stable_iteration);
            r.drift = fmt(e.drift);
            r.residual = fmt(e.residual);
            rows.push_back(std::move(r));
        }
        if (count < wanted) {
            Row r;
            r.model = "rabi";
            r.p1 = fmt(j.omega0);
            r.p2 = fmt(j.kappa);
            r.branch = "warning";
            r.residual = "only " + std::to_string(count) + " states converged";
            rows.push_back(std::move(r));
            nonconverged = true;
        }
    }
    write_rows(rows, f.out, f.format, kCsvHeader);
    return nonconverged ? kExitNoConvergence : kExitOk;
}

// -------------------------------------------------------------- rashba ----

int cmd_rashba(const std::vector<int>& ks, const std::vector<double>& Bs,
               const std::vector<double>& lambdas, double gmu, double echarge,
               const SolveFlags& f) {
    struct Job {
        int k;
        double B, lambda;
        std::vector<double> computed;  // sorted eigenvalues (AIM or oracle)
        aim::Spectrum sp;
        bool is_exact = false;
        std::string error;
    };
    std::vector<Job> jobs;
    for (int k : ks)
        for (double B : Bs)
            for (double lam : lambdas) jobs.push_back({k, B, lam, {}, {}, false, ""});

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        Job& j = jobs[i];
        aim::RashbaParams p;
        p.lambdaR = j.lambda;
        p.B = j.B;
        p.k = j.k;
        p.gmu = gmu;
        p.echarge = echarge;
        try {
            if (j.lambda == 0.0) {
                j.computed = aim::rashba_decoupled_oracle(p, f.nmax);
                j.is_exact = true;
            } else {
                j.sp = solve_rashba(p, f);
                for (const auto& e : j.sp.eigenvalues) j.computed.push_back(e.E);
            }
        } catch (const std::exception& ex) {
            j.error = ex.what();
        }
    }

    bool nonconverged = false;
    std::vector<Row> rows;
    if (f.compare_paper) {
        for (const Job& j : jobs) {
            // collect this (k, B, lambda) block of the reference table
            std::vector<aim::fixtures::T2Entry> block;
            for (const auto& t : aim::fixtures::table2())
                if (t.k == j.k && t.B == j.B && t.lambda == j.lambda && t.n <= f.nmax)
                    block.push_back(t);
            if (block.empty()) continue;
            // the unresolved energy-reference convention: report raw nearest
            // differences plus differences adjusted by the signed n=0 offset
            double offset = 0.0;
            for (const auto& t : block) {
                if (t.n != 0) continue;
                double signed_diff = 0.0, best = -1.0;
                for (double v : j.computed) {
                    const double d = std::fabs(v - t.value);
                    if (best < 0 || d < best) {
                        best = d;
                        signed_diff = v - t.value;
                    }
                }
                if (best >= 0) offset = signed_diff;
            }
            for (const auto& t : block) {
                double best = 0.0, diff = -1.0;
                for (double v : j.computed) {
                    const double d = std::fabs(v - t.value);
                    if (diff < 0 || d < diff) {
                        diff = d;
                        best = v;
                    }
                }
                // compare schema: the last five columns are idx, computed_E,
                // paper_E, abs_diff, adjusted_diff (idx unused for this model)
                Row r;
                r.model = "rashba";
                r.p1 = fmt(t.lambda);
                r.p2 = fmt(t.B);
                r.k = std::to_string(t.k);
                r.n = std::to_string(t.n);
                r.E = "";
                r.branch = diff < 0 ? "" : fmt(best);
                r.iterations = fmt(t.value);  // paper value
                r.drift = diff < 0 ? "" : fmt(diff);
                r.residual = diff < 0 ? "" : fmt(std::fabs(best - t.value - offset));
                rows.push_back(std::move(r));
                if (diff < 0) nonconverged = true;
            }
        }
        write_rows(rows, f.out, f.format,
                   "model,omega0|lambda,kappa|B,k,n,idx,computed_E,paper_E,abs_diff,adjusted_diff");
        return nonconverged ? kExitNoConvergence : kExitOk;
    }

    for (const Job& j : jobs) {
        if (!j.error.empty()) {
            Row r;
            r.model = "rashba";
            r.p1 = fmt(j.lambda);
            r.p2 = fmt(j.B);
            r.k = std::to_string(j.k);
            r.branch = "warning";
            r.residual = j.error;
            rows.push_back(std::move(r));
            nonconverged = true;
            continue;
        }
        const std::size_t count =
            std::min<std::size_t>(j.computed.size(), static_cast<std::size_t>(f.nmax) + 1);
        for (std::size_t n = 0; n < count; ++n) {
            Row r;
            r.model = "rashba";
            r.p1 = fmt(j.lambda);
            r.p2 = fmt(j.B);
            r.k = std::to_string(j.k);
            r.n = std::to_string(n);
            r.E = fmt(j.computed[n]);
            if (j.is_exact) {
                r.branch = "exact";
            } else {
                const auto& e = j.sp.eigenvalues[n];
                r.branch = branch_name(e.branch);
                r.iterations = std::to_string(e.first_stable_iteration);
                r.drift = fmt(e.drift);
                r.residual = fmt(e.residual);
            }
            rows.push_back(std::move(r));
        }
        if (count < static_cast<std::size_t>(f.nmax) + 1) {
            Row r;
            r.model = "rashba";
            r.p1 = fmt(j.lambda);
            r.p2 = fmt(j.B);
            r.k = std::to_string(j.k);
            r.branch = "warning";
            r.residual = "only " + std::to_string(count) + " states converged";
            rows.push_back(std::move(r));
            nonconverged = true;
        }
    }
    write_rows(rows, f.out, f.format, kCsvHeader);
    return nonconverged ? kExitNoConvergence : kExitOk;
}

// -------------------------------------------------------------- custom ----

int cmd_custom(const std::string& model_path, const SolveFlags& f) {
    const auto mf = aim::expr::load_model_file(model_path);
    const int max_iter = effective_max_iter(f.max_iter_flag);
    const auto c = aim::expr::build_custom<wide_real>(mf, max_iter + 2);
    double lo = -5.0, hi = f.nmax + 5.0;
    if (const auto ov = parse_window(f.window)) {
        lo = ov->first;
        hi = ov->second;
    }
    aim::SolveOptions opts(aim::RootWindow{lo, hi});
    opts.max_iter = max_iter;
    opts.conv_tol = f.conv_tol;
    const aim::Spectrum sp = aim::solve_spectrum(c, opts);

    std::vector<Row> rows;
    const std::size_t count =
        std::min<std::size_t>(sp.eigenvalues.size(), static_cast<std::size_t>(f.nmax) + 1);
    for (std::size_t n = 0; n < count; ++n) {
        const auto& e = sp.eigenvalues[n];
        Row r;
        r.model = "custom";
        r.n = std::to_string(n);
        r.E = fmt(e.E);
        r.branch = branch_name(e.branch);
        r.iterations = std::to_string(e.first_stable_iteration);
        r.drift = fmt(e.drift);
        r.residual = fmt(e.residual);
        rows.push_back(std::move(r));
    }
    write_rows(rows, f.out, f.format, kCsvHeader);
    return count < static_cast<std::size_t>(f.nmax) + 1 ? kExitNoConvergence : kExitOk;
}

// -------------------------------------------------------- wavefunction ----

std::vector<double> parse_grid(const std::string& spec) {
    std::stringstream ss(spec);
    std::string part;
    std::vector<double> v;
    while (std::getline(ss, part, ':')) v.push_back(std::stod(part));
    if (v.size() != 3) throw aim::Error("grid must be lo:hi:step");
    const double lo = v[0], hi = v[1], step = v[2];
    if (!(step > 0) || !(hi > lo)) throw aim::Error("grid must satisfy lo < hi and step > 0");
    std::vector<double> g;
    for (double x = lo; x <= hi + 1e-12 * std::max(1.0, std::fabs(hi)); x += step) g.push_back(x);
    if (g.size() < 2) throw aim::Error("grid has fewer than two points");
    return g;
}

int cmd_wavefunction(const std::string& model, double omega0, double kappa,
                     const std::string& model_path, int state, int branch,
                     const std::string& grid_spec, const SolveFlags& f) {
    const std::vector<double> grid = parse_grid(grid_spec);
    const int max_iter = effective_max_iter(f.max_iter_flag);

    double E = 0.0;
    aim::CoefficientSetT<double> cd;
    if (model == "rabi") {
        const aim::RabiParams p{omega0, kappa};
        if (kappa == 0.0)
            throw aim::Error("wavefunction: kappa = 0 has the closed-form oscillator solution");
        const aim::Spectrum sp = solve_rabi(p, f);
        if (state >= static_cast<int>(sp.eigenvalues.size()))
            throw aim::Error("wavefunction: state " + std::to_string(state) +
                             " did not converge (got " +
                             std::to_string(sp.eigenvalues.size()) + " states)");
        E = sp.eigenvalues[state].E;
        cd = aim::rabi_coefficients<double>(p, 12);
    } else if (model == "custom") {
        const auto mf = aim::expr::load_model_file(model_path);
        const auto cw = aim::expr::build_custom<wide_real>(mf, max_iter + 2);
        double lo = -5.0, hi = f.nmax + 5.0;
        if (const auto ov = parse_window(f.window)) {
            lo = ov->first;
            hi = ov->second;
        }
        aim::SolveOptions opts(aim::RootWindow{lo, hi});
        opts.max_iter = max_iter;
        opts.conv_tol = f.conv_tol;
        const aim::Spectrum sp = aim::solve_spectrum(cw, opts);
        if (state >= static_cast<int>(sp.eigenvalues.size()))
            throw aim::Error("wavefunction: state did not converge");
        E = sp.eigenvalues[state].E;
        cd = aim::expr::build_custom<double>(mf, 12);
    } else {
        throw aim::Error("wavefunction: --model must be rabi or custom (the spin-orbit system "
                         "is singular at its expansion point)");
    }

    // a modest level suffices: gamma comes from the consistency condition and
    // only falls back to the level ratio in degenerate custom systems
    aim::AimLevelT<double> level = aim::init_level(cd);
    for (int i = 0; i < 8; ++i) level = aim::iterate(level, cd);
    const aim::WaveSample ws = aim::wavefunction_combination(cd, level, E, branch, grid);

    // normalize to 1 at the grid point nearest x0
    std::size_t anchor = 0;
    for (std::size_t i = 1; i < ws.grid.size(); ++i)
        if (std::fabs(ws.grid[i] - cd.x0) < std::fabs(ws.grid[anchor] - cd.x0)) anchor = i;
    const double norm = ws.values[anchor];

    std::ostringstream os;
    os << "x,value\n";
    for (std::size_t i = 0; i < ws.grid.size(); ++i)
        os << fmt(ws.grid[i]) << ',' << fmt(ws.values[i] / norm) << "\n";
    if (f.out.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream out(f.out);
        if (!out) throw aim::Error("cannot write output file: " + f.out);
        out << os.str();
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"AIM spectrum solver for 2x2 matrix Hamiltonians"};
    app.require_subcommand(1);

    // rabi
    auto* rabi = app.add_subcommand("rabi", "two-level model spectrum");
    std::string rabi_omega0 = "0.5", rabi_kappa = "0.5";
    SolveFlags rabi_flags;
    rabi->add_option("--omega0", rabi_omega0, "level splitting (comma list)");
    rabi->add_option("--kappa", rabi_kappa, "coupling strength (comma list)");
    add_solve_flags(rabi, rabi_flags);

    // rashba
    auto* rashba = app.add_subcommand("rashba", "spin-orbit dot spectrum");
    std::string rashba_k = "0", rashba_B = "0", rashba_lambda = "0.5";
    double gmu = 1.0, echarge = 1.0;
    SolveFlags rashba_flags;
    rashba->add_option("--k", rashba_k, "angular quantum number (comma list)");
    rashba->add_option("--B", rashba_B, "magnetic field magnitude (comma list)");
    rashba->add_option("--lambda", rashba_lambda, "spin-orbit strength (comma list)");
    rashba->add_option("--gmu", gmu, "combined Zeeman factor");
    rashba->add_option("--echarge", echarge, "charge entering omega_c");
    add_solve_flags(rashba, rashba_flags);

    // custom
    auto* custom = app.add_subcommand("custom", "solve a user-defined coefficient system");
    std::string model_path;
    SolveFlags custom_flags;
    custom->add_option("model_file", model_path, "model definition file")->required();
    add_solve_flags(custom, custom_flags);

    // wavefunction
    auto* wave = app.add_subcommand("wavefunction", "reconstruct an eigenfunction combination");
    std::string wf_model = "rabi", wf_grid, wf_file;
    double wf_omega0 = 0.0, wf_kappa = 0.5;
    int wf_state = 0, wf_branch = 1;
    SolveFlags wf_flags;
    wave->add_option("--model", wf_model, "rabi or custom");
    wave->add_option("--omega0", wf_omega0, "level splitting");
    wave->add_option("--kappa", wf_kappa, "coupling strength");
    wave->add_option("--file", wf_file, "model file for --model custom");
    wave->add_option("--state", wf_state, "eigenvalue index");
    wave->add_option("--branch", wf_branch, "combination branch, 1 or 2")
        ->check(CLI::IsMember({1, 2}));
    wave->add_option("--grid", wf_grid, "sample grid lo:hi:step")->required();
    add_solve_flags(wave, wf_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInputError;
    }

    try {
        if (rabi->parsed())
            return cmd_rabi(parse_list(rabi_omega0), parse_list(rabi_kappa), rabi_flags);
        if (rashba->parsed()) {
            std::vector<int> ks;
            for (double v : parse_list(rashba_k)) ks.push_back(static_cast<int>(v));
            return cmd_rashba(ks, parse_list(rashba_B), parse_list(rashba_lambda), gmu, echarge,
                              rashba_flags);
        }
        if (custom->parsed()) return cmd_custom(model_path, custom_flags);
        if (wave->parsed())
            return cmd_wavefunction(wf_model, wf_omega0, wf_kappa, wf_file, wf_state, wf_branch,
                                    wf_grid, wf_flags);
        return kExitInputError;
    } catch (const aim::LexError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const aim::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const aim::SingularCoefficient& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const aim::DecoupledSystem& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const aim::PoleOnGrid& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const aim::GammaSingular& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const aim::OrderExhausted& e) {
        std::cerr << "nonconvergence: " << e.what() << "\n";
        return kExitNoConvergence;
    } catch (const aim::Error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::out_of_range& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
