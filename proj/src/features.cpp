#include "qcprof/features.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "qcprof/density_repetition.hpp"
#include "qcprof/graph.hpp"

namespace qcprof {

Profile profile_from_string(const std::string& s) {
  if (s == "single-core" || s == "single_core") return Profile::single_core;
  if (s == "multi-core" || s == "multi_core") return Profile::multi_core;
  throw std::invalid_argument("unknown profile '" + s + "' (expected single-core or multi-core)");
}

std::string to_string(Profile p) {
  return p == Profile::single_core ? "single-core" : "multi-core";
}

namespace {

const std::vector<std::string> kSizeColumns = {
    "n_qubits",
    "n_gates",
    "two_qubit_gate_pct",
    "depth",
};

const std::vector<std::string> kIgSingle = {
    "avg_shortest_path",
    "adjacency_std",
};

const std::vector<std::string> kIgMulti = {
    "diameter",
    "central_point_of_dominance",
    "n_maximal_cliques",
    "max_clique_size",
    "clustering_coefficient",
    "vertex_connectivity",
    "edge_connectivity",
    "coreness_max",
    "coreness_mean",
    "pagerank_std",
};

const std::vector<std::string> kIgBoth = {
    "avg_degree",
};

const std::vector<std::string> kGdgColumns = {
    "critical_path_length",
    "n_paths",
    "log10_n_paths",
    "n_critical_paths",
    "log10_n_critical_paths",
    "path_length_mean",
    "path_length_std",
    "pct_gates_in_critical_path",
    "max_2q_in_critical",
    "n_critical_with_max_2q",
};

const std::vector<std::string> kTailColumns = {
    "density_score",
    "idling_score",
    "largest_repeat_len",
    "largest_repeat_count",
    "ig_disconnected",
};

std::vector<std::string> concat(std::initializer_list<const std::vector<std::string>*> parts) {
  std::vector<std::string> out;
  for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

}  // namespace

const std::vector<std::string>& canonical_columns() {
  static const std::vector<std::string> cols =
      concat({&kSizeColumns, &kIgSingle, &kIgMulti, &kIgBoth, &kGdgColumns, &kTailColumns});
  return cols;
}

std::vector<std::string> profile_columns(Profile p) {
  if (p == Profile::single_core)
    return concat({&kSizeColumns, &kIgSingle, &kIgBoth, &kGdgColumns, &kTailColumns});
  return concat({&kSizeColumns, &kIgMulti, &kIgBoth, &kGdgColumns, &kTailColumns});
}

const std::vector<std::string>& size_columns() { return kSizeColumns; }

std::vector<std::string> structure_columns(Profile p) {
  auto cols = profile_columns(p);
  std::vector<std::string> out;
  for (const auto& c : cols) {
    if (std::find(kSizeColumns.begin(), kSizeColumns.end(), c) != kSizeColumns.end()) continue;
    // Raw exponential path counts stay out of Euclidean space; their log10
    // companions carry the signal.
    if (c == "n_paths" || c == "n_critical_paths") continue;
    out.push_back(c);
  }
  return out;
}

CircuitProfile profile_circuit(const Circuit& c) {
  CircuitProfile p;
  FeatureVector& f = p.features;

  const auto layering = asap_layering(c);
  const auto size = size_features(c);
  f.set("n_qubits", size.n_qubits);
  f.set("n_gates", size.n_gates);
  f.set("two_qubit_gate_pct", size.two_qubit_gate_pct);
  f.set("depth", size.depth);

  const auto ig = build_interaction_graph(c);
  const auto igf = ig_features(ig);
  if (igf.avg_shortest_path) f.set("avg_shortest_path", *igf.avg_shortest_path);
  if (igf.adjacency_std) f.set("adjacency_std", *igf.adjacency_std);
  if (igf.diameter) f.set("diameter", *igf.diameter);
  f.set("central_point_of_dominance", igf.central_point_of_dominance);
  f.set("avg_degree", igf.avg_degree);
  f.set("n_maximal_cliques", static_cast<double>(igf.n_maximal_cliques));
  f.set("max_clique_size", igf.max_clique_size);
  f.set("clustering_coefficient", igf.clustering_coefficient);
  f.set("vertex_connectivity", igf.vertex_connectivity);
  f.set("edge_connectivity", igf.edge_connectivity);
  f.set("coreness_max", igf.coreness_max);
  f.set("coreness_mean", igf.coreness_mean);
  if (igf.pagerank_std) f.set("pagerank_std", *igf.pagerank_std);
  f.set("ig_disconnected", igf.disconnected ? 1.0 : 0.0);
  p.ig_disconnected = igf.disconnected;
  p.cliques_capped = igf.cliques_capped;

  const auto gdg = build_gdg(c);
  const auto gf = gdg_path_features(gdg);
  f.set("critical_path_length", static_cast<double>(gf.critical_path_length));
  f.set("n_paths", gf.n_paths.convert_to<double>());
  f.set("log10_n_paths", log10_big(gf.n_paths));
  f.set("n_critical_paths", gf.n_critical_paths.convert_to<double>());
  f.set("log10_n_critical_paths", log10_big(gf.n_critical_paths));
  f.set("path_length_mean", gf.path_length_mean);
  f.set("path_length_std", gf.path_length_std);
  if (gf.pct_gates_in_critical_path)
    f.set("pct_gates_in_critical_path", *gf.pct_gates_in_critical_path);
  f.set("max_2q_in_critical", static_cast<double>(gf.max_2q_in_critical));
  f.set("n_critical_with_max_2q", gf.n_critical_with_max_2q.convert_to<double>());
  p.n_paths_exact = gf.n_paths;
  p.n_critical_paths_exact = gf.n_critical_paths;
  p.n_critical_with_max_2q_exact = gf.n_critical_with_max_2q;

  if (auto d = density_score(c, layering)) f.set("density_score", *d);
  if (auto i = idling_score(c, layering)) f.set("idling_score", *i);

  const auto rep = longest_repeated_subcircuit(gate_token_sequence(c));
  f.set("largest_repeat_len", rep.largest_repeat_len);
  f.set("largest_repeat_count", static_cast<double>(rep.largest_repeat_count));
  return p;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "";
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string feature_table_to_csv(const FeatureTable& t) {
  std::ostringstream out;
  out << "name";
  for (const auto& c : t.columns) out << ',' << c;
  out << '\n';
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    out << t.names[i];
    for (const auto& c : t.columns) {
      out << ',';
      if (auto v = t.rows[i].try_get(c)) out << format_double(*v);
    }
    out << '\n';
  }
  return out.str();
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cell);
      cell.clear();
    } else if (ch != '\r') {
      cell += ch;
    }
  }
  out.push_back(cell);
  return out;
}

}  // namespace

FeatureTable feature_table_from_csv(const std::string& csv) {
  FeatureTable t;
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty feature CSV");
  auto header = split_csv_line(line);
  if (header.empty() || header[0] != "name")
    throw std::runtime_error("feature CSV must start with a 'name' column");
  t.columns.assign(header.begin() + 1, header.end());
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto cells = split_csv_line(line);
    if (cells.size() != header.size())
      throw std::runtime_error("feature CSV row for '" + cells[0] + "' has " +
                               std::to_string(cells.size()) + " cells, expected " +
                               std::to_string(header.size()));
    t.names.push_back(cells[0]);
    FeatureVector row;
    for (std::size_t i = 1; i < cells.size(); ++i) {
      if (cells[i].empty()) continue;
      try {
        row.set(t.columns[i - 1], std::stod(cells[i]));
      } catch (const std::exception&) {
        throw std::runtime_error("feature CSV: non-numeric cell '" + cells[i] + "' in column '" +
                                 t.columns[i - 1] + "'");
      }
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace qcprof
