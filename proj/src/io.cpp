#include "gsc/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace gsc {

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view s) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw std::invalid_argument("bad numeric field: '" + std::string(s) + "'");
    return v;
}

json to_json(const Graph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.i, e.j, e.weight});
    return json{{"n", g.size()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph json needs fields 'n' and 'edges'");
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const json& entry : j.at("edges")) {
        if (!entry.is_array() || entry.size() != 3) throw std::invalid_argument("graph edge must be [i, j, w]");
        Edge e{entry[0].get<int>(), entry[1].get<int>(), entry[2].get<double>()};
        if (e.i >= e.j) throw std::invalid_argument("graph edges must have i < j");
        edges.push_back(e);
    }
    return Graph::from_edges(n, edges);  // range, duplicate and weight checks
}

json to_json(const Spectrum& s) {
    json vecs = json::array();
    for (int i = 0; i < s.size(); ++i)
        for (int k = 0; k < s.size(); ++k) vecs.push_back(s.eigenvectors(i, k));
    return json{{"eigenvalues", s.eigenvalues}, {"eigenvectors", std::move(vecs)}};
}

json to_json(const GainSchedule& sched) {
    json j{{"prefix", std::vector<double>(sched.prefix().begin(), sched.prefix().end())},
           {"provenance", to_string(sched.provenance())}};
    if (sched.period())
        j["period"] = *sched.period();
    else
        j["period"] = nullptr;
    return j;
}

GainSchedule schedule_from_json(const json& j) {
    if (!j.is_object() || !j.contains("prefix")) throw std::invalid_argument("schedule json needs field 'prefix'");
    std::vector<double> prefix = j.at("prefix").get<std::vector<double>>();
    const Provenance prov = j.contains("provenance") ? parse_provenance(j.at("provenance").get<std::string>())
                                                     : Provenance::custom;
    if (j.contains("period") && !j.at("period").is_null()) {
        const int period = j.at("period").get<int>();
        if (period != static_cast<int>(prefix.size()))
            throw std::invalid_argument("schedule json: period must equal prefix length");
        return GainSchedule::periodic(std::move(prefix), prov);
    }
    return GainSchedule::finite(std::move(prefix), prov);
}

json to_json(const BoundReport& r) {
    json j{{"phi", r.phi},
           {"contractive", r.contractive},
           {"per_period_exponent", r.per_period_exponent},
           {"deviation_ok", r.deviation_ok},
           {"deviation", r.deviation}};
    if (r.psi)
        j["psi"] = *r.psi;
    else
        j["psi"] = nullptr;
    return j;
}

LoadedUncertainty uncertainty_from_json(const json& j) {
    for (const char* field : {"estimated_graph", "delta_bar", "mode"})
        if (!j.contains(field)) throw std::invalid_argument(std::string("uncertainty json needs field '") + field + "'");
    const double delta_bar = j.at("delta_bar").get<double>();
    const PerturbMode mode = parse_perturb_mode(j.at("mode").get<std::string>());
    const std::uint64_t seed = j.contains("seed") ? j.at("seed").get<std::uint64_t>() : 0;

    const json& est = j.at("estimated_graph");
    Matrix l0;
    if (est.is_array()) {
        l0 = synthesize_estimated(est.get<Vector>());
    } else {
        l0 = laplacian(graph_from_json(est));
    }
    return LoadedUncertainty{make_uncertainty_model(std::move(l0), delta_bar, mode), seed};
}

void write_trajectory_csv(std::ostream& out, const TrajectoryTable& table) {
    if (table.states.empty()) throw std::invalid_argument("trajectory csv: nothing to write");
    const std::size_t n = table.states.front().size();
    out << "k";
    for (std::size_t i = 0; i < n; ++i) out << ",x_" << i;
    out << ",e\n";
    for (std::size_t row = 0; row < table.steps.size(); ++row) {
        out << table.steps[row];
        for (double x : table.states[row]) out << ',' << format_double(x);
        out << ',' << format_double(table.errors[row]) << '\n';
    }
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
    write_trajectory_csv(out, TrajectoryTable{traj.steps, traj.states, traj.errors});
}

TrajectoryTable trajectory_table_from_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("trajectory csv: empty input");
    std::size_t n = 0;
    {
        // header: k,x_0,...,x_{N-1},e
        std::size_t fields = 1;
        for (char c : line) fields += (c == ',');
        if (fields < 3 || line.rfind("k,", 0) != 0 || line.substr(line.size() - 2) != ",e")
            throw std::invalid_argument("trajectory csv: bad header '" + line + "'");
        n = fields - 2;
    }
    TrajectoryTable table;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string_view> fields;
        std::string_view rest = line;
        while (true) {
            const std::size_t comma = rest.find(',');
            fields.push_back(rest.substr(0, comma));
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
        if (fields.size() != n + 2) throw std::invalid_argument("trajectory csv: bad row '" + line + "'");
        std::int64_t k = 0;
        const auto res = std::from_chars(fields[0].data(), fields[0].data() + fields[0].size(), k);
        if (res.ec != std::errc{} || res.ptr != fields[0].data() + fields[0].size())
            throw std::invalid_argument("trajectory csv: bad step index '" + std::string(fields[0]) + "'");
        Vector state(n);
        for (std::size_t i = 0; i < n; ++i) state[i] = parse_double(fields[i + 1]);
        table.steps.push_back(k);
        table.states.push_back(std::move(state));
        table.errors.push_back(parse_double(fields.back()));
    }
    if (table.steps.empty()) throw std::invalid_argument("trajectory csv: no data rows");
    return table;
}

}  // namespace gsc
