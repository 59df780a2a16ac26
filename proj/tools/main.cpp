// command-line front end: generate | design | simulate | verify | report

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gsc/filter.hpp"
#include "gsc/graph.hpp"
#include "gsc/io.hpp"
#include "gsc/random.hpp"
#include "gsc/simulate.hpp"
#include "gsc/spectral.hpp"
#include "gsc/uncertainty.hpp"
#include "svg_plot.hpp"

namespace fs = std::filesystem;
using gsc::json;

namespace {

struct Options {
    std::uint64_t seed = 0;
    std::string out = ".";
    bool quiet = false;

    // generate positionals
    std::string gen_kind;
    int gen_n = 0;

    // graph sources
    std::string graph_file;
    std::string kind;
    int nodes = 0;
    double edge_p = -1.0;  // < 0: not set

    // schedule sources / design parameters
    std::string schedule_file;
    std::string method;
    std::string eigs;
    double delta = 0.0;
    double dbar = 0.0;
    int t0 = 0;
    double target_ratio = 1e-6;

    // simulate
    std::string x0;
    std::string dist = "uniform";
    std::int64_t steps = -1;
    double target_error = -1.0;
    std::int64_t max_steps = 100000;
    std::int64_t stride = 1;
    std::string uncertainty_file;
    std::string form = "matrix";
    bool log_scale = false;

    // verify
    double alpha = 0.0;
    double lambda2 = 0.0;
    double tol = 1e-10;
};

void say(const Options& o, const std::string& line) {
    if (!o.quiet) std::cout << line << '\n';
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return json::parse(in);
}

fs::path out_path(const Options& o, const char* name) {
    fs::create_directories(o.out);
    return fs::path(o.out) / name;
}

void write_file(const fs::path& p, const std::string& content) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + p.string());
    out << content;
}

void write_json_file(const Options& o, const char* name, const json& j) {
    const fs::path p = out_path(o, name);
    write_file(p, j.dump(2) + "\n");
    say(o, "wrote " + p.string());
}

gsc::Vector parse_csv_doubles(const std::string& text) {
    gsc::Vector out;
    std::string_view rest = text;
    while (true) {
        const std::size_t comma = rest.find(',');
        std::string_view field = rest.substr(0, comma);
        while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
        while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
        out.push_back(gsc::parse_double(field));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return out;
}

std::string join_doubles(std::span<const double> values) {
    std::string r;
    for (double v : values) {
        if (!r.empty()) r += ", ";
        r += gsc::format_double(v);
    }
    return r;
}

// --- config file -----------------------------------------------------------
// Flat JSON object whose keys are the long option names. Loaded before the
// command line is parsed, so flags always win.

std::string find_config(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        const std::string_view arg = argv[i];
        if (arg == "--config") {
            if (i + 1 >= argc) throw std::invalid_argument("--config needs a file path");
            return argv[i + 1];
        }
        if (arg.rfind("--config=", 0) == 0) return std::string(arg.substr(9));
    }
    return {};
}

std::string list_or_string(const json& value) {
    if (value.is_string()) return value.get<std::string>();
    if (value.is_array()) {
        std::string r;
        for (const json& v : value) {
            if (!r.empty()) r += ",";
            r += gsc::format_double(v.get<double>());
        }
        return r;
    }
    throw std::invalid_argument("config list value must be a string or array");
}

void apply_config(const json& cfg, Options& o) {
    if (!cfg.is_object()) throw std::invalid_argument("config must be a JSON object");
    for (const auto& [key, value] : cfg.items()) {
        if (key == "seed")
            o.seed = value.get<std::uint64_t>();
        else if (key == "out")
            o.out = value.get<std::string>();
        else if (key == "quiet")
            o.quiet = value.get<bool>();
        else if (key == "graph")
            o.graph_file = value.get<std::string>();
        else if (key == "kind")
            o.kind = value.get<std::string>();
        else if (key == "nodes")
            o.nodes = value.get<int>();
        else if (key == "p")
            o.edge_p = value.get<double>();
        else if (key == "schedule")
            o.schedule_file = value.get<std::string>();
        else if (key == "method")
            o.method = value.get<std::string>();
        else if (key == "eigs")
            o.eigs = list_or_string(value);
        else if (key == "delta")
            o.delta = value.get<double>();
        else if (key == "dbar")
            o.dbar = value.get<double>();
        else if (key == "t0")
            o.t0 = value.get<int>();
        else if (key == "target-ratio")
            o.target_ratio = value.get<double>();
        else if (key == "x0")
            o.x0 = list_or_string(value);
        else if (key == "dist")
            o.dist = value.get<std::string>();
        else if (key == "steps")
            o.steps = value.get<std::int64_t>();
        else if (key == "target-error")
            o.target_error = value.get<double>();
        else if (key == "max-steps")
            o.max_steps = value.get<std::int64_t>();
        else if (key == "stride")
            o.stride = value.get<std::int64_t>();
        else if (key == "uncertainty")
            o.uncertainty_file = value.get<std::string>();
        else if (key == "form")
            o.form = value.get<std::string>();
        else if (key == "log-scale")
            o.log_scale = value.get<bool>();
        else if (key == "alpha")
            o.alpha = value.get<double>();
        else if (key == "lambda2")
            o.lambda2 = value.get<double>();
        else if (key == "tol")
            o.tol = value.get<double>();
        else
            throw std::invalid_argument("unknown config key: " + key);
    }
}

// --- graph plumbing ---------------------------------------------------------

gsc::Graph load_or_generate_graph(const Options& o) {
    const bool have_file = !o.graph_file.empty();
    const bool have_kind = !o.kind.empty();
    if (have_file == have_kind)
        throw std::invalid_argument("need exactly one graph source: --graph or --kind/--nodes");
    if (have_file) return gsc::graph_from_json(load_json_file(o.graph_file));
    gsc::GenerateOptions gopt;
    if (o.edge_p >= 0.0) gopt.edge_probability = o.edge_p;
    gopt.seed = o.seed;
    return gsc::generate(gsc::parse_graph_kind(o.kind), o.nodes, gopt).graph;
}

// --- commands ----------------------------------------------------------------

int cmd_generate(const Options& o) {
    const gsc::GraphKind kind = gsc::parse_graph_kind(o.gen_kind);
    if (o.edge_p >= 0.0 && kind != gsc::GraphKind::erdos_renyi)
        throw std::invalid_argument("edge probability only applies to er graphs");
    gsc::GenerateOptions gopt;
    if (o.edge_p >= 0.0) gopt.edge_probability = o.edge_p;
    gopt.seed = o.seed;
    const gsc::GeneratedGraph gg = gsc::generate(kind, o.gen_n, gopt);
    const gsc::Spectrum s = gsc::eig_sym(gsc::laplacian(gg.graph));

    say(o, "kind = " + gsc::to_string(kind));
    say(o, "n = " + std::to_string(gg.graph.size()));
    say(o, "edges = " + std::to_string(gg.graph.edges().size()));
    say(o, "max_degree = " + gsc::format_double(gsc::max_degree(gg.graph)));
    say(o, "lambda_2 = " + gsc::format_double(s.eigenvalues[1]));
    say(o, "lambda_max = " + gsc::format_double(s.eigenvalues.back()));
    say(o, std::string("connected = ") + (gsc::is_connected(gg.graph) ? "true" : "false"));
    if (kind == gsc::GraphKind::erdos_renyi) say(o, "attempts = " + std::to_string(gg.attempts));
    write_json_file(o, "graph.json", gsc::to_json(gg.graph));
    return 0;
}

int finish_design(const Options& o, const gsc::GainSchedule& sched, const gsc::BoundReport& rep) {
    say(o, "gains = " + join_doubles(sched.prefix()));
    if (sched.period())
        say(o, "period = " + std::to_string(*sched.period()));
    else
        say(o, "consensus_at = " + std::to_string(sched.length()));
    say(o, "phi = " + gsc::format_double(rep.phi));
    if (rep.psi) say(o, "psi = " + gsc::format_double(*rep.psi));
    say(o, std::string("contractive = ") + (rep.contractive ? "true" : "false"));
    say(o, "per_period_exponent = " + std::to_string(rep.per_period_exponent));
    write_json_file(o, "schedule.json", gsc::to_json(sched));
    write_json_file(o, "bounds.json", gsc::to_json(rep));
    if (!rep.contractive) {
        std::cerr << "requested bound is not contractive\n";
        return 2;
    }
    return 0;
}

int cmd_design_finite(const Options& o) {
    if (o.graph_file.empty()) throw std::invalid_argument("design finite needs --graph");
    const gsc::Graph g = gsc::graph_from_json(load_json_file(o.graph_file));
    const gsc::Spectrum s = gsc::eig_sym(gsc::laplacian(g));
    const gsc::GainSchedule sched = gsc::design_finite_time(gsc::distinct_nonzero_eigs(s));
    gsc::BoundReport rep;
    rep.phi = 0.0;
    rep.contractive = true;
    rep.per_period_exponent = gsc::periods_to_target(0.0, o.target_ratio);
    return finish_design(o, sched, rep);
}

int cmd_design_estimated(const Options& o) {
    if (o.eigs.empty() == o.graph_file.empty())
        throw std::invalid_argument("design estimated needs exactly one of --eigs or --graph");
    if (!(o.delta > 0.0)) throw std::invalid_argument("design estimated needs --delta > 0");
    const gsc::Vector eig = o.eigs.empty()
                                ? gsc::eig_sym(gsc::laplacian(gsc::graph_from_json(
                                      load_json_file(o.graph_file)))).eigenvalues
                                : parse_csv_doubles(o.eigs);
    const gsc::GainSchedule sched = gsc::design_estimated_periodic(eig);
    gsc::BoundReport rep;
    rep.phi = gsc::phi_bound(eig, o.delta);
    rep.contractive = rep.phi < 1.0;
    rep.per_period_exponent =
        rep.contractive ? gsc::periods_to_target(rep.phi, o.target_ratio) : 0;
    return finish_design(o, sched, rep);
}

int cmd_design_unknown(const Options& o) {
    if (!(o.dbar > 0.0) || o.t0 < 1)
        throw std::invalid_argument("design unknown needs --dbar > 0 and --t0 >= 1");
    const gsc::GainSchedule sched = gsc::design_unknown_topology(o.dbar, o.t0);
    const double psi = gsc::psi_bound(o.dbar, o.t0);
    gsc::BoundReport rep;
    rep.psi = psi;
    rep.phi = psi * psi;
    rep.contractive = psi < 1.0;
    rep.per_period_exponent =
        rep.contractive ? gsc::periods_to_target(rep.phi, o.target_ratio) : 0;
    return finish_design(o, sched, rep);
}

gsc::Trajectory run_to_target(const gsc::Vector& x0, const gsc::GainSchedule& sched,
                              const gsc::Matrix& sys, double target, std::int64_t cap,
                              std::int64_t stride) {
    // probe forward until the error dips under the target (or the cap bites),
    // then rerun to that horizon so the recorded trajectory is a normal run
    std::int64_t t = 0;
    gsc::Vector x = x0;
    double e = gsc::consensus_error(x, x0);
    while (e > target && t < cap) {
        x = gsc::step(x, sched.gain_at(t), sys);
        ++t;
        e = gsc::consensus_error(x, x0);
    }
    gsc::RunOptions ropt;
    ropt.stride = stride;
    return gsc::run_system(x0, sched, sys, t, ropt);
}

int cmd_simulate(const Options& o) {
    const int sources =
        (!o.graph_file.empty() ? 1 : 0) + (!o.kind.empty() ? 1 : 0) + (!o.uncertainty_file.empty() ? 1 : 0);
    if (sources != 1)
        throw std::invalid_argument(
            "need exactly one system source: --graph, --kind/--nodes or --uncertainty");

    std::optional<gsc::Graph> g;
    std::optional<gsc::LoadedUncertainty> lu;
    gsc::Matrix sys;
    if (!o.uncertainty_file.empty()) {
        lu = gsc::uncertainty_from_json(load_json_file(o.uncertainty_file));
        sys = gsc::perturb(lu->model, lu->seed);
        say(o, "system: perturbed (" + gsc::to_string(lu->model.mode) +
                   ", delta_bar = " + gsc::format_double(lu->model.delta_bar) +
                   ", seed = " + std::to_string(lu->seed) + ")");
    } else {
        g = load_or_generate_graph(o);
        sys = gsc::laplacian(*g);
    }
    const int n = sys.rows();
    say(o, "n = " + std::to_string(n));

    if (o.schedule_file.empty() == o.method.empty())
        throw std::invalid_argument("need exactly one schedule source: --schedule or --method");
    std::optional<gsc::GainSchedule> sched;
    if (!o.schedule_file.empty()) {
        sched = gsc::schedule_from_json(load_json_file(o.schedule_file));
    } else if (o.method == "finite") {
        const gsc::Spectrum base = lu ? lu->model.spectrum : gsc::eig_sym(sys);
        sched = gsc::design_finite_time(gsc::distinct_nonzero_eigs(base));
    } else if (o.method == "estimated") {
        const gsc::Vector eig = !o.eigs.empty()
                                    ? parse_csv_doubles(o.eigs)
                                    : (lu ? lu->model.spectrum.eigenvalues
                                          : gsc::eig_sym(sys).eigenvalues);
        sched = gsc::design_estimated_periodic(eig);
    } else if (o.method == "unknown") {
        if (o.t0 < 1) throw std::invalid_argument("--method unknown needs --t0");
        double dbar = o.dbar;
        if (!(dbar > 0.0)) {
            if (g) {
                dbar = gsc::max_degree(*g);
            } else {
                for (int i = 0; i < n; ++i) dbar = std::max(dbar, lu->model.estimated(i, i));
            }
        }
        sched = gsc::design_unknown_topology(dbar, o.t0);
    } else {
        throw std::invalid_argument("--method must be finite, estimated or unknown");
    }
    say(o, "gains = " + join_doubles(sched->prefix()) +
               (sched->period() ? " (period " + std::to_string(*sched->period()) + ")" : ""));

    gsc::Vector x0;
    if (!o.x0.empty()) {
        x0 = parse_csv_doubles(o.x0);
        if (static_cast<int>(x0.size()) != n)
            throw std::invalid_argument("--x0 must list exactly " + std::to_string(n) + " values");
        say(o, "x0: explicit");
    } else {
        gsc::Rng rng(o.seed);
        x0.resize(static_cast<std::size_t>(n));
        if (o.dist == "uniform") {
            for (double& v : x0) v = rng.uniform01();
        } else if (o.dist == "gaussian") {
            for (double& v : x0) v = rng.gaussian();
        } else {
            throw std::invalid_argument("--dist must be uniform or gaussian");
        }
        say(o, "x0: dist = " + o.dist + ", seed = " + std::to_string(o.seed));
    }
    double mean = 0.0;
    for (double v : x0) mean += v;
    mean /= static_cast<double>(n);
    say(o, "mean_x0 = " + gsc::format_double(mean));

    if ((o.steps >= 0) == (o.target_error >= 0.0))
        throw std::invalid_argument("need exactly one of --steps or --target-error");
    gsc::RunOptions ropt;
    ropt.stride = o.stride;
    std::optional<gsc::Trajectory> traj;
    int exit_code = 0;
    if (o.steps >= 0) {
        if (o.form == "matrix") {
            traj = gsc::run_system(x0, *sched, sys, o.steps, ropt);
        } else if (o.form == "local") {
            if (!g) throw std::invalid_argument("--form local needs a graph source");
            traj = gsc::run_local(x0, *sched, *g, o.steps, ropt);
        } else if (o.form == "spectral") {
            traj = gsc::run_spectral(x0, *sched, gsc::eig_sym(sys), o.steps, ropt);
        } else {
            throw std::invalid_argument("--form must be matrix, local or spectral");
        }
    } else {
        if (o.form != "matrix")
            throw std::invalid_argument("--target-error runs in matrix form only");
        if (!(o.target_error > 0.0))
            throw std::invalid_argument("--target-error must be positive");
        traj = run_to_target(x0, *sched, sys, o.target_error, o.max_steps, o.stride);
        if (traj->final_error() > o.target_error) {
            std::cerr << "target error " << gsc::format_double(o.target_error)
                      << " not reached within " << o.max_steps
                      << " steps (e = " << gsc::format_double(traj->final_error()) << ")\n";
            exit_code = 2;
        }
    }
    say(o, "T = " + std::to_string(traj->steps.back()));

    // period-end errors (capped listing for very long runs)
    std::vector<std::string> lines;
    lines.push_back("e(0) = " + gsc::format_double(traj->errors.front()));
    if (sched->period()) {
        const int p = *sched->period();
        for (std::size_t r = 0; r < traj->steps.size(); ++r)
            if (traj->steps[r] > 0 && traj->steps[r] % p == 0)
                lines.push_back("e(" + std::to_string(traj->steps[r]) +
                                ") = " + gsc::format_double(traj->errors[r]));
    } else if (traj->steps.back() > 0) {
        lines.push_back("e(" + std::to_string(traj->steps.back()) +
                        ") = " + gsc::format_double(traj->final_error()));
    }
    if (lines.size() > 12) {
        for (std::size_t i = 0; i < 5; ++i) say(o, lines[i]);
        say(o, "...");
        for (std::size_t i = lines.size() - 5; i < lines.size(); ++i) say(o, lines[i]);
    } else {
        for (const std::string& l : lines) say(o, l);
    }

    std::ostringstream csv;
    gsc::write_trajectory_csv(csv, *traj);
    const fs::path csv_path = out_path(o, "trajectory.csv");
    write_file(csv_path, csv.str());
    say(o, "wrote " + csv_path.string());

    std::vector<gsc::plot::Series> state_series(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        gsc::plot::Series& s = state_series[static_cast<std::size_t>(i)];
        s.label = "x_" + std::to_string(i);
        for (std::size_t r = 0; r < traj->steps.size(); ++r) {
            s.xs.push_back(static_cast<double>(traj->steps[r]));
            s.ys.push_back(traj->states[r][static_cast<std::size_t>(i)]);
        }
    }
    gsc::plot::PlotOptions sopt;
    sopt.title = "agent states";
    sopt.xlabel = "k";
    sopt.ylabel = "x_i(k)";
    const fs::path states_path = out_path(o, "states.svg");
    write_file(states_path, gsc::plot::render_line_plot(state_series, sopt));
    say(o, "wrote " + states_path.string());

    gsc::plot::Series err;
    err.label = "e";
    for (std::size_t r = 0; r < traj->steps.size(); ++r) {
        err.xs.push_back(static_cast<double>(traj->steps[r]));
        err.ys.push_back(traj->errors[r]);
    }
    gsc::plot::PlotOptions eopt;
    eopt.title = "consensus error";
    eopt.xlabel = "k";
    eopt.ylabel = "e(k)";
    eopt.log_y = o.log_scale;
    const fs::path err_path = out_path(o, "error.svg");
    write_file(err_path, gsc::plot::render_line_plot({err}, eopt));
    say(o, "wrote " + err_path.string());
    return exit_code;
}

int cmd_verify(const Options& o) {
    if (o.graph_file.empty() || o.schedule_file.empty())
        throw std::invalid_argument("verify needs --graph and --schedule");
    const gsc::Graph g = gsc::graph_from_json(load_json_file(o.graph_file));
    const gsc::Spectrum s = gsc::eig_sym(gsc::laplacian(g));
    const gsc::GainSchedule sched = gsc::schedule_from_json(load_json_file(o.schedule_file));
    const int t_eval = sched.length();
    const double scale = std::max(1.0, s.eigenvalues.back());

    json responses = json::array();
    bool all_zero = true;
    double hmax = 0.0;
    for (int i = 0; i < s.size(); ++i) {
        const double lambda = s.eigenvalues[static_cast<std::size_t>(i)];
        const double h = gsc::filter_response(sched, lambda, t_eval);
        const bool zero_mode = lambda <= 1e-9 * scale;
        const bool zero = std::fabs(h) <= o.tol;
        if (!zero_mode) {
            all_zero = all_zero && zero;
            hmax = std::max(hmax, std::fabs(h));
        }
        responses.push_back(
            {{"lambda", lambda}, {"h", h}, {"zero", zero}, {"consensus_mode", zero_mode}});
    }

    json rep;
    rep["eval_time"] = t_eval;
    rep["responses"] = std::move(responses);
    rep["consensus_at"] = all_zero ? json(t_eval) : json(nullptr);
    rep["max_nonzero_response"] = hmax;
    if (sched.period()) {
        rep["per_period_factor"] = hmax;
        rep["per_period_error_factor"] = hmax * hmax;
    } else {
        rep["per_period_factor"] = nullptr;
        rep["per_period_error_factor"] = nullptr;
    }

    say(o, "eval_time = " + std::to_string(t_eval));
    say(o, "max_nonzero_response = " + gsc::format_double(hmax));
    say(o, all_zero ? "consensus_at = " + std::to_string(t_eval) : "consensus_at = none");
    if (sched.period())
        say(o, "per_period_error_factor = " + gsc::format_double(hmax * hmax));

    if (!o.uncertainty_file.empty()) {
        const gsc::LoadedUncertainty lu =
            gsc::uncertainty_from_json(load_json_file(o.uncertainty_file));
        const gsc::BoundReport hyp = gsc::check_estimation_hypotheses(lu.model, gsc::laplacian(g));
        rep["hypotheses"] = gsc::to_json(hyp);
        say(o, "deviation = " + gsc::format_double(hyp.deviation) +
                   (hyp.deviation_ok ? " (within delta_bar)" : " (exceeds delta_bar)"));
        say(o, "phi = " + gsc::format_double(hyp.phi) +
                   (hyp.contractive ? " (contractive)" : " (not contractive)"));
    } else {
        rep["hypotheses"] = nullptr;
    }

    if (o.alpha > 0.0) {
        if (sched.provenance() != gsc::Provenance::unknown_topology)
            throw std::invalid_argument("--alpha applies to unknown-topology schedules");
        const int t0 = sched.length();
        const double dbar = 1.0 / (2.0 * sched.gain_at(0));  // eps_0 = 1/(2 dbar)
        const double required = 2.0 * dbar / (o.alpha * t0);
        const double l2 = o.lambda2 > 0.0 ? o.lambda2 : s.eigenvalues[1];
        json va;
        va["alpha"] = o.alpha;
        va["value"] = gsc::varphi_alpha_bound(t0, o.alpha);
        va["contractive"] = gsc::varphi_alpha_contractive(t0, o.alpha);
        va["lambda2_required"] = required;
        va["lambda2"] = l2;
        va["lambda2_ok"] = l2 >= required;
        say(o, "varphi_alpha = " + gsc::format_double(va["value"].get<double>()) +
                   (va["contractive"].get<bool>() ? " (contractive)" : " (not contractive)") +
                   (va["lambda2_ok"].get<bool>() ? ", lambda2 ok" : ", lambda2 below threshold"));
        rep["varphi_alpha"] = std::move(va);
    } else {
        rep["varphi_alpha"] = nullptr;
    }

    write_json_file(o, "verify.json", rep);
    return 0;
}

int cmd_report(const Options& o) {
    const gsc::Graph g = load_or_generate_graph(o);
    const gsc::Spectrum s = gsc::eig_sym(gsc::laplacian(g));
    say(o, "n = " + std::to_string(g.size()));
    say(o, "eigenvalues = " + join_doubles(s.eigenvalues));
    say(o, "lambda_2 = " + gsc::format_double(s.eigenvalues[1]));
    say(o, "lambda_max = " + gsc::format_double(s.eigenvalues.back()));
    write_json_file(o, "spectrum.json", gsc::to_json(s));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    std::string config_path;
    try {
        config_path = find_config(argc, argv);
        if (!config_path.empty()) apply_config(load_json_file(config_path), o);
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    }

    CLI::App app{"designs, simulates and verifies graph-spectral average-consensus protocols"};
    app.require_subcommand(1);
    app.add_option("--seed", o.seed, "seed for all randomness");
    app.add_option("--out", o.out, "output directory");
    app.add_option("--config", config_path, "JSON config file; flags take precedence");
    app.add_flag("--quiet", o.quiet, "suppress info output");

    CLI::App* gen = app.add_subcommand("generate", "generate a graph, write graph.json");
    gen->fallthrough();
    gen->add_option("kind", o.gen_kind, "cycle|path|complete|er")->required();
    gen->add_option("n", o.gen_n, "number of nodes")->required();
    gen->add_option("p", o.edge_p, "edge probability (er only)");

    CLI::App* design =
        app.add_subcommand("design", "design a gain schedule, write schedule.json + bounds.json");
    design->fallthrough();
    design->require_subcommand(1);
    design->add_option("--target-ratio", o.target_ratio,
                       "error ratio defining per_period_exponent");
    CLI::App* dfin = design->add_subcommand("finite", "finite-time design from a known graph");
    dfin->fallthrough();
    dfin->add_option("--graph", o.graph_file, "graph JSON file");
    CLI::App* dest =
        design->add_subcommand("estimated", "periodic design from an estimated spectrum");
    dest->fallthrough();
    dest->add_option("--eigs", o.eigs, "comma-separated ascending eigenvalues, lambda_1 = 0");
    dest->add_option("--graph", o.graph_file, "estimated graph JSON file");
    dest->add_option("--delta", o.delta, "eigenvalue deviation bound delta_bar");
    CLI::App* dunk = design->add_subcommand("unknown", "topology-blind periodic design");
    dunk->fallthrough();
    dunk->add_option("--dbar", o.dbar, "maximum-degree bound");
    dunk->add_option("--t0", o.t0, "period T0");

    CLI::App* sim =
        app.add_subcommand("simulate", "run the closed loop, write trajectory.csv + SVG plots");
    sim->fallthrough();
    sim->add_option("--graph", o.graph_file, "graph JSON file");
    sim->add_option("--kind", o.kind, "generate the graph: cycle|path|complete|er");
    sim->add_option("--nodes", o.nodes, "node count for --kind");
    sim->add_option("--p", o.edge_p, "edge probability for --kind er");
    sim->add_option("--uncertainty", o.uncertainty_file,
                    "uncertainty model JSON; simulates a perturbed system");
    sim->add_option("--schedule", o.schedule_file, "schedule JSON file");
    sim->add_option("--method", o.method, "design on the fly: finite|estimated|unknown");
    sim->add_option("--eigs", o.eigs, "eigenvalues for --method estimated");
    sim->add_option("--dbar", o.dbar, "degree bound for --method unknown");
    sim->add_option("--t0", o.t0, "period for --method unknown");
    sim->add_option("--x0", o.x0, "explicit initial state, comma separated");
    sim->add_option("--dist", o.dist, "x0 distribution: uniform|gaussian");
    sim->add_option("--steps", o.steps, "horizon T");
    sim->add_option("--target-error", o.target_error, "run until e(k) <= this value");
    sim->add_option("--max-steps", o.max_steps, "step cap for --target-error");
    sim->add_option("--stride", o.stride, "record every stride-th step");
    sim->add_option("--form", o.form, "simulator form: matrix|local|spectral");
    sim->add_flag("--log-scale", o.log_scale, "log-scale error plot");

    CLI::App* ver =
        app.add_subcommand("verify", "check filter conditions and bounds, write verify.json");
    ver->fallthrough();
    ver->add_option("--graph", o.graph_file, "graph JSON file");
    ver->add_option("--schedule", o.schedule_file, "schedule JSON file");
    ver->add_option("--uncertainty", o.uncertainty_file, "uncertainty model JSON");
    ver->add_option("--alpha", o.alpha, "averaged-bound alpha (unknown-topology schedules)");
    ver->add_option("--lambda2", o.lambda2, "claimed algebraic connectivity");
    ver->add_option("--tol", o.tol, "zero-response tolerance");

    CLI::App* repc = app.add_subcommand("report", "export the Laplacian spectrum JSON");
    repc->fallthrough();
    repc->add_option("--graph", o.graph_file, "graph JSON file");
    repc->add_option("--kind", o.kind, "generate the graph: cycle|path|complete|er");
    repc->add_option("--nodes", o.nodes, "node count for --kind");
    repc->add_option("--p", o.edge_p, "edge probability for --kind er");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed()) return cmd_generate(o);
        if (dfin->parsed()) return cmd_design_finite(o);
        if (dest->parsed()) return cmd_design_estimated(o);
        if (dunk->parsed()) return cmd_design_unknown(o);
        if (sim->parsed()) return cmd_simulate(o);
        if (ver->parsed()) return cmd_verify(o);
        if (repc->parsed()) return cmd_report(o);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
