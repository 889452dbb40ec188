#include "qcprof/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qcprof {

std::optional<double> pearson(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("pearson: series lengths differ");
  const std::size_t n = x.size();
  if (n < 2) return std::nullopt;
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return std::nullopt;
  return sxy / std::sqrt(sxx * syy);
}

CorrelationReport correlation_table(const FeatureTable& features, const ResultTable& results) {
  std::map<std::string, std::size_t> result_row;
  for (std::size_t i = 0; i < results.names.size(); ++i) result_row[results.names[i]] = i;

  std::vector<std::size_t> f_idx;
  std::vector<std::size_t> r_idx;
  for (std::size_t i = 0; i < features.names.size(); ++i) {
    auto it = result_row.find(features.names[i]);
    if (it != result_row.end()) {
      f_idx.push_back(i);
      r_idx.push_back(it->second);
    }
  }
  if (f_idx.empty())
    throw std::runtime_error("correlation: feature and result tables share no circuit names");

  CorrelationReport rep;
  rep.features = features.columns;
  rep.metrics = results.metrics;
  rep.cells.resize(rep.features.size());

  for (std::size_t fi = 0; fi < rep.features.size(); ++fi) {
    rep.cells[fi].resize(rep.metrics.size());
    for (std::size_t mi = 0; mi < rep.metrics.size(); ++mi) {
      // Pairwise deletion: only rows where both values exist and are finite.
      std::vector<double> xs, ys;
      for (std::size_t k = 0; k < f_idx.size(); ++k) {
        auto x = features.rows[f_idx[k]].try_get(rep.features[fi]);
        auto it = results.rows[r_idx[k]].find(rep.metrics[mi]);
        if (!x || !std::isfinite(*x)) continue;
        if (it == results.rows[r_idx[k]].end() || !std::isfinite(it->second)) continue;
        xs.push_back(*x);
        ys.push_back(it->second);
      }
      CorrelationEntry& cell = rep.cells[fi][mi];
      cell.feature = rep.features[fi];
      cell.metric = rep.metrics[mi];
      cell.n_samples = static_cast<int>(xs.size());
      if (xs.size() >= 3) cell.r = pearson(xs, ys);
    }
  }

  for (std::size_t mi = 0; mi < rep.metrics.size(); ++mi) {
    std::vector<std::pair<double, std::string>> ranked;
    for (std::size_t fi = 0; fi < rep.features.size(); ++fi)
      if (rep.cells[fi][mi].r) ranked.emplace_back(*rep.cells[fi][mi].r, rep.features[fi]);
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second < b.second;
    });
    auto& names = rep.ranking[rep.metrics[mi]];
    for (const auto& [r, f] : ranked) names.push_back(f);
  }
  return rep;
}

std::string correlation_report_to_csv(const CorrelationReport& rep) {
  std::ostringstream out;
  out << "metric,rank,feature,r,n_samples\n";
  for (const auto& metric : rep.metrics) {
    std::map<std::string, const CorrelationEntry*> by_feature;
    for (std::size_t fi = 0; fi < rep.features.size(); ++fi)
      for (const auto& cell : rep.cells[fi])
        if (cell.metric == metric) by_feature[cell.feature] = &cell;
    int rank = 1;
    for (const auto& feature : rep.ranking.at(metric)) {
      const auto* cell = by_feature.at(feature);
      out << metric << ',' << rank++ << ',' << feature << ',' << format_double(*cell->r) << ','
          << cell->n_samples << '\n';
    }
  }
  return out.str();
}

namespace {

std::string cell_color(double r) {
  r = std::clamp(r, -1.0, 1.0);
  int red = 255, green = 255, blue = 255;
  if (r >= 0.0) {
    green = blue = static_cast<int>(std::lround(255.0 * (1.0 - r)));
  } else {
    red = green = static_cast<int>(std::lround(255.0 * (1.0 + r)));
  }
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", red, green, blue);
  return buf;
}

}  // namespace

std::string correlation_report_to_svg(const CorrelationReport& rep) {
  // Rows sorted from the most positively to the most negatively correlated
  // (mean r over the metrics where it is defined).
  std::vector<std::size_t> order(rep.features.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto mean_r = [&](std::size_t fi) {
    double sum = 0.0;
    int n = 0;
    for (const auto& cell : rep.cells[fi])
      if (cell.r) {
        sum += *cell.r;
        ++n;
      }
    return n > 0 ? sum / n : -2.0;  // all-missing rows sink to the bottom
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double ra = mean_r(a), rb = mean_r(b);
    if (ra != rb) return ra > rb;
    return rep.features[a] < rep.features[b];
  });

  const int cell_w = 84, cell_h = 22, left = 230, top = 60;
  const int width = left + cell_w * static_cast<int>(rep.metrics.size()) + 10;
  const int height = top + cell_h * static_cast<int>(rep.features.size()) + 10;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" font-family=\"monospace\" font-size=\"11\">\n";
  for (std::size_t mi = 0; mi < rep.metrics.size(); ++mi) {
    svg << "  <text x=\"" << left + static_cast<int>(mi) * cell_w + cell_w / 2 << "\" y=\""
        << top - 8 << "\" text-anchor=\"middle\">" << rep.metrics[mi] << "</text>\n";
  }
  for (std::size_t row = 0; row < order.size(); ++row) {
    const std::size_t fi = order[row];
    const int y = top + static_cast<int>(row) * cell_h;
    svg << "  <text x=\"" << left - 6 << "\" y=\"" << y + cell_h - 7
        << "\" text-anchor=\"end\">" << rep.features[fi] << "</text>\n";
    for (std::size_t mi = 0; mi < rep.metrics.size(); ++mi) {
      const auto& cell = rep.cells[fi][mi];
      const int x = left + static_cast<int>(mi) * cell_w;
      const std::string fill = cell.r ? cell_color(*cell.r) : "#dddddd";
      svg << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell_w << "\" height=\""
          << cell_h << "\" fill=\"" << fill << "\" stroke=\"#888888\"/>\n";
      if (cell.r) {
        char label[16];
        std::snprintf(label, sizeof(label), "%.2f", *cell.r);
        svg << "  <text x=\"" << x + cell_w / 2 << "\" y=\"" << y + cell_h - 7
            << "\" text-anchor=\"middle\">" << label << "</text>\n";
      }
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string result_table_to_csv(const ResultTable& t) {
  std::ostringstream out;
  out << "name";
  for (const auto& m : t.metrics) out << ',' << m;
  out << '\n';
  for (std::size_t i = 0; i < t.names.size(); ++i) {
    out << t.names[i];
    for (const auto& m : t.metrics) {
      out << ',';
      auto it = t.rows[i].find(m);
      if (it != t.rows[i].end()) out << format_double(it->second);
    }
    out << '\n';
  }
  return out.str();
}

ResultTable result_table_from_csv(const std::string& csv) {
  ResultTable t;
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty result CSV");
  std::vector<std::string> header;
  {
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) {
      if (!cell.empty() && cell.back() == '\r') cell.pop_back();
      header.push_back(cell);
    }
  }
  if (header.empty() || header[0] != "name")
    throw std::runtime_error("result CSV must start with a 'name' column");
  t.metrics.assign(header.begin() + 1, header.end());
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) {
      if (!cell.empty() && cell.back() == '\r') cell.pop_back();
      cells.push_back(cell);
    }
    while (cells.size() < header.size()) cells.push_back("");
    t.names.push_back(cells[0]);
    std::map<std::string, double> row;
    for (std::size_t i = 1; i < header.size(); ++i) {
      if (cells[i].empty()) continue;
      try {
        row[header[i]] = std::stod(cells[i]);
      } catch (const std::exception&) {
        // non-numeric cells (e.g. a status column) are not metrics
      }
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace qcprof
