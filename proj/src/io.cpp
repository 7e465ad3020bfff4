#include "gspx/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace gspx {

using nlohmann::json;

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

void write_json(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    out << j.dump(2) << '\n';
}

}  // namespace

void save_graph(const Graph& g, const std::string& path) {
    json edges = json::array();
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (g.weights(i, j) != 0.0) edges.push_back({i, j, g.weights(i, j)});
    write_json({{"n", g.n}, {"edges", edges}}, path);
}

Graph load_graph(const std::string& path) {
    const json j = read_json(path);
    std::vector<std::tuple<int, int, double>> edges;
    for (const auto& e : j.at("edges"))
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<double>());
    return new_graph(j.at("n").get<int>(), edges);
}

void save_sampled_graph(const Graph& g, const SampleLabels& labels, const std::string& path) {
    json edges = json::array();
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (g.weights(i, j) != 0.0) edges.push_back({i, j, g.weights(i, j)});
    json lab = json::array();
    for (Eigen::Index i = 0; i < labels.u.size(); ++i) lab.push_back(labels.u(i));
    write_json({{"n", g.n},
                {"edges", edges},
                {"labels", lab},
                {"seed", labels.seed},
                {"stream", labels.stream}},
               path);
}

void save_signal(const Eigen::VectorXd& values, const std::string& path) {
    json j = json::array();
    for (Eigen::Index i = 0; i < values.size(); ++i) j.push_back(values(i));
    write_json(j, path);
}

Eigen::VectorXd load_signal(const std::string& path) {
    const json j = read_json(path);
    if (!j.is_array()) throw std::runtime_error("signal file must hold a JSON array: " + path);
    Eigen::VectorXd v(j.size());
    for (size_t i = 0; i < j.size(); ++i) v(i) = j[i].get<double>();
    return v;
}

void save_step_graphon(const StepGraphon& w, const std::string& path) {
    json values = json::array();
    for (int r = 0; r < w.block_count(); ++r) {
        json row = json::array();
        for (int c = 0; c < w.block_count(); ++c) row.push_back(w.values()(r, c));
        values.push_back(row);
    }
    write_json({{"N", w.block_count()},
                {"range", {w.range_lo(), w.range_hi()}},
                {"values", values}},
               path);
}

StepGraphon load_step_graphon(const std::string& path) {
    const json j = read_json(path);
    const int n = j.at("N").get<int>();
    Eigen::MatrixXd values(n, n);
    const auto& rows = j.at("values");
    if (static_cast<int>(rows.size()) != n)
        throw std::runtime_error("step graphon: values row count does not match N");
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) values(r, c) = rows[r].at(c).get<double>();
    return StepGraphon(std::move(values), j.at("range").at(0).get<double>(),
                       j.at("range").at(1).get<double>());
}

void save_motif(const Motif& f, const std::string& path) {
    json edges = json::array();
    for (const auto& [i, j] : f.edges) edges.push_back({i, j});
    write_json({{"n", f.n_prime}, {"edges", edges}}, path);
}

Motif load_motif(const std::string& path) {
    const json j = read_json(path);
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges"))
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return Motif(j.at("n").get<int>(), std::move(edges));
}

CoeffTable CoeffTable::from(const SignedSpectrum& s, const FourierCoefficients& c) {
    CoeffTable t;
    t.origin = c.origin == CoeffOrigin::GFT ? "GFT" : "WFT";
    t.size = c.source_size;
    for (const auto& [j, e] : s.entries) t.rows.push_back({j, e.sigma, c.at(j)});
    std::sort(t.rows.begin(), t.rows.end(), [](const Row& a, const Row& b) {
        const double ma = std::abs(a.sigma), mb = std::abs(b.sigma);
        if (ma != mb) return ma > mb;
        return a.j < b.j;
    });
    return t;
}

void save_coefficients_json(const CoeffTable& t, const std::string& path) {
    json rows = json::array();
    for (const auto& r : t.rows) rows.push_back({r.j, r.sigma, r.coeff});
    write_json({{"origin", t.origin}, {"size", t.size}, {"rows", rows}}, path);
}

CoeffTable load_coefficients_json(const std::string& path) {
    const json j = read_json(path);
    CoeffTable t;
    t.origin = j.at("origin").get<std::string>();
    t.size = j.at("size").get<int>();
    for (const auto& r : j.at("rows"))
        t.rows.push_back({r.at(0).get<int>(), r.at(1).get<double>(), r.at(2).get<double>()});
    return t;
}

void write_coefficients_csv(const CoeffTable& t, std::ostream& out) {
    out << "j,sigma,coeff\n";
    for (const auto& r : t.rows)
        out << r.j << ',' << fmt12(r.sigma) << ',' << fmt12(r.coeff) << '\n';
}

RatingTable parse_movielens(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open ratings file: " + path);
    RatingTable table;
    std::set<std::pair<int, int>> seen;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        long user, item;
        double rating;
        long timestamp;
        if (!(ls >> user >> item >> rating >> timestamp))
            throw std::runtime_error("malformed ratings line " + std::to_string(lineno) + ": " +
                                     line);
        if (user < 1 || item < 1)
            throw std::runtime_error("ratings line " + std::to_string(lineno) +
                                     ": ids must be 1-based positive");
        if (!(rating >= 1.0 && rating <= 5.0))
            throw std::runtime_error("ratings line " + std::to_string(lineno) +
                                     ": rating outside [1,5]");
        const int u = static_cast<int>(user - 1), it = static_cast<int>(item - 1);
        if (!seen.insert({u, it}).second)
            throw std::runtime_error("ratings line " + std::to_string(lineno) +
                                     ": duplicate (user,item) pair");
        table.entries.push_back({u, it, rating});
        table.num_users = std::max(table.num_users, u + 1);
        table.num_items = std::max(table.num_items, it + 1);
    }
    if (table.entries.empty()) throw std::runtime_error("no ratings found in " + path);
    return table;
}

void save_movielens(const RatingTable& r, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    for (const auto& e : r.entries)
        out << (e.user + 1) << '\t' << (e.item + 1) << '\t' << fmt12(e.rating) << "\t0\n";
}

void write_pollution_csv(const std::vector<QuantileRow>& rows, std::ostream& out) {
    out << "n,q68,q95,q997\n";
    for (const auto& r : rows)
        out << r.n << ',' << fmt12(r.q68) << ',' << fmt12(r.q95) << ',' << fmt12(r.q997) << '\n';
}

void write_movielens_csv(const std::vector<TransferRow>& rows, std::ostream& out) {
    out << "n,mean_rel_diff,std_rel_diff\n";
    for (const auto& r : rows)
        out << r.n << ',' << fmt12(r.mean_rel_diff) << ',' << fmt12(r.std_rel_diff) << '\n';
}

void write_theorem1_csv(const std::vector<Theorem1Row>& rows, std::ostream& out) {
    out << "n,median_error,non_derogatory\n";
    for (const auto& r : rows)
        out << r.n << ',' << fmt12(r.median_error) << ',' << (r.non_derogatory ? 1 : 0) << '\n';
}

void save_manifest(const std::string& command,
                   const std::vector<std::pair<std::string, std::string>>& config,
                   std::uint64_t seed, const std::string& path) {
    json cfg = json::object();
    for (const auto& [k, v] : config) cfg[k] = v;
    write_json({{"command", command}, {"config", cfg}, {"seed", seed}, {"version", "0.1.0"}},
               path);
}

}  // namespace gspx
