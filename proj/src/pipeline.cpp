#include "gapbound/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <thread>

#include "gapbound/certificate.hpp"
#include "gapbound/error.hpp"
#include "gapbound/fixtures.hpp"
#include "gapbound/polytope.hpp"

namespace gapbound {

namespace {

[[noreturn]] void fail_at(const std::string& source, std::size_t line, const std::string& what) {
  throw Error(ErrorCode::Parse, source + ":" + std::to_string(line) + ": " + what);
}

std::vector<std::string> fields_of(const std::string& line) {
  std::istringstream in(line.substr(0, line.find('#')));
  std::vector<std::string> out;
  for (std::string f; in >> f;) out.push_back(f);
  return out;
}

int parse_count(const std::string& s, const std::string& source, std::size_t line, const char* what) {
  std::size_t used = 0;
  long v = -1;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || v < 0 || v > 1 << 20) fail_at(source, line, std::string("bad ") + what + " '" + s + "'");
  return static_cast<int>(v);
}

}  // namespace

VertexFile parse_vertex_text(const std::string& text, const std::string& source) {
  VertexFile out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;

  int n = 0;
  int remaining = 0;
  std::size_t header_line = 0;
  std::vector<std::pair<Edge, Rational>> edges;
  auto close_block = [&]() {
    SepPoint p(n, edges);
    const auto feas = check_sep_feasible(p);
    if (!feas.feasible) fail_at(source, header_line, "point is not in SEP: " + feas.violation->message);
    out.points.push_back(std::move(p));
  };

  while (std::getline(in, line)) {
    ++lineno;
    const auto f = fields_of(line);
    if (f.empty()) continue;
    if (remaining == 0) {
      if (f[0] != "v" || f.size() != 3) fail_at(source, lineno, "expected 'v <n> <m>'");
      n = parse_count(f[1], source, lineno, "node count");
      remaining = parse_count(f[2], source, lineno, "edge count");
      if (n < 3) fail_at(source, lineno, "need at least 3 nodes");
      if (remaining > n * (n - 1) / 2) fail_at(source, lineno, "more edges than node pairs");
      header_line = lineno;
      edges.clear();
      if (remaining == 0) fail_at(source, lineno, "block without edges");
      continue;
    }
    if (f.size() != 3) fail_at(source, lineno, "expected '<i> <j> <weight>'");
    const int i = parse_count(f[0], source, lineno, "node");
    const int j = parse_count(f[1], source, lineno, "node");
    if (i >= n || j >= n) fail_at(source, lineno, "node out of range");
    if (i >= j) fail_at(source, lineno, "need i < j");
    Rational w;
    try {
      w = parse_rational(f[2]);
    } catch (const Error& e) {
      fail_at(source, lineno, e.what());
    }
    if (w <= 0 || w > 1) fail_at(source, lineno, "weight " + to_string(w) + " outside (0, 1]");
    const Edge e(i, j);
    for (const auto& [g, x] : edges) {
      if (g == e) fail_at(source, lineno, "repeated edge");
    }
    edges.emplace_back(e, w);
    if (--remaining == 0) close_block();
  }
  if (remaining > 0) fail_at(source, lineno, "block from line " + std::to_string(header_line) + " is missing " +
                                                 std::to_string(remaining) + " edge lines");
  return out;
}

VertexFile parse_vertex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, path + ": cannot open");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_vertex_text(buf.str(), path);
}

std::string serialize_vertex_file(const std::vector<SepPoint>& points) {
  std::string out;
  for (const auto& p : points) {
    out += "v " + std::to_string(p.n()) + " " + std::to_string(p.edge_count()) + "\n";
    for (const auto& [e, w] : p.weights()) {
      out += std::to_string(e.u) + " " + std::to_string(e.v) + " " + to_string(w) + "\n";
    }
  }
  return out;
}

std::vector<SepPoint> filter_ancestors(const std::vector<SepPoint>& points, int k) {
  std::vector<std::pair<CanonicalForm, SepPoint>> kept;
  for (const auto& p : points) {
    const int n = p.n();
    if (p.is_integral()) continue;
    if (static_cast<int>(p.edge_count()) != n + k) continue;
    if (n < k + 3 || n > 2 * k) continue;
    const auto deg = p.support_degrees();
    if (std::find(deg.begin(), deg.end(), 2) != deg.end()) continue;
    CanonicalLabeling lab = canonical_labeling(support_graph(p));
    kept.emplace_back(std::move(lab.form), relabel(p, lab.label));
  }
  std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<SepPoint> out;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (i > 0 && kept[i].first == kept[i - 1].first) continue;
    out.push_back(std::move(kept[i].second));
  }
  return out;
}

std::vector<SepPoint> builtin_ancestors(int k) {
  if (k == 3) return enumerate_sep_vertices(6);
  if (k == 4) {
    std::vector<SepPoint> out;
    for (const auto& f : family4_fixtures()) out.push_back(f.point);
    return out;
  }
  throw Error(ErrorCode::SourceDataAbsent,
              "source data absent: no built-in vertex list for k = " + std::to_string(k) +
                  "; supply one with --vertices");
}

FamilyReport run_family(int k, const std::vector<SepPoint>& ancestors, const Rational& alpha, int max_iter,
                        const FamilyOptions& options) {
  for (const auto& a : ancestors) {
    if (a.n() <= kMaxDirectVertexCheck && !is_vertex(a).is_vertex) {
      throw Error(ErrorCode::InvalidArgument, "ancestor is not a vertex of SEP");
    }
  }
  std::vector<std::pair<CanonicalForm, SepPoint>> order;
  for (const auto& a : ancestors) order.emplace_back(canonical_form(a), a);
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<AncestorOutcome> outcomes(order.size());
  std::vector<std::string> errors(order.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < order.size(); i = next++) {
      try {
        AncestorOutcome& o = outcomes[i];
        o.ancestor = order[i].second;
        const GbeResult r = gbe(o.ancestor, alpha, max_iter, options.gbe);
        o.gb_bound = r.steps.front().run.result.bound;
        o.bound = r.bound;
        o.iterations = r.iterations;
        for (const auto& s : r.steps) o.certificates.push_back(certificate_to_json(s.run.certificate));
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  const unsigned count = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(order.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (!errors[i].empty()) throw Error(ErrorCode::InvalidArgument, "ancestor " + std::to_string(i + 1) + ": " + errors[i]);
  }

  FamilyReport report;
  report.k = k;
  report.alpha = alpha;
  report.max_iter = max_iter;
  report.ancestor_count = outcomes.size();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    AncestorOutcome& o = outcomes[i];
    o.id = "A" + std::to_string(k) + "-" + std::to_string(i + 1);
    if (i == 0 || o.bound > report.max_bound) report.max_bound = o.bound;
    report.max_iterations = std::max(report.max_iterations, o.iterations);
    if (o.bound > alpha) ++report.failures;
  }
  report.ancestors = std::move(outcomes);
  return report;
}

std::string report_json(const FamilyReport& report) {
  nlohmann::ordered_json doc;
  doc["k"] = report.k;
  doc["alpha"] = to_string(report.alpha);
  doc["max_iter"] = report.max_iter;
  doc["ancestor_count"] = report.ancestor_count;
  doc["max_bound"] = report.ancestor_count ? nlohmann::ordered_json(to_string(report.max_bound)) : nlohmann::ordered_json();
  doc["max_iterations"] = report.max_iterations;
  doc["failures"] = report.failures;
  doc["all_within_alpha"] = report.failures == 0;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& o : report.ancestors) {
    nlohmann::ordered_json row;
    row["id"] = o.id;
    row["n"] = o.ancestor.n();
    row["edges"] = o.ancestor.edge_count();
    row["gb_bound"] = to_string(o.gb_bound);
    row["bound"] = to_string(o.bound);
    row["iterations"] = o.iterations;
    row["within_alpha"] = o.bound <= report.alpha;
    rows.push_back(row);
  }
  doc["ancestors"] = rows;
  return doc.dump(2) + "\n";
}

std::string report_table(const FamilyReport& report) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "%-8s %3s %4s %10s %10s %5s %s\n", "id", "n", "|E|", "GB", "GBe", "iter", "ok");
  out << line;
  for (const auto& o : report.ancestors) {
    std::snprintf(line, sizeof line, "%-8s %3d %4zu %10s %10s %5d %s\n", o.id.c_str(), o.ancestor.n(),
                  o.ancestor.edge_count(), to_string(o.gb_bound).c_str(), to_string(o.bound).c_str(), o.iterations,
                  o.bound <= report.alpha ? "yes" : "NO");
    out << line;
  }
  out << "k=" << report.k << "  ancestors=" << report.ancestor_count
      << "  max bound=" << (report.ancestor_count ? to_string(report.max_bound) : std::string("-"))
      << "  max iterations=" << report.max_iterations << "  alpha=" << to_string(report.alpha)
      << "  failures=" << report.failures << "\n";
  return out.str();
}

std::vector<SurveyRow> survey(int n) {
  std::vector<std::pair<CanonicalForm, SurveyRow>> rows;
  for (const auto& p : enumerate_sep_vertices(n)) {
    SurveyRow r;
    r.point = p;
    r.edges = p.edge_count();
    r.gap_plus = 1 / solve_opt2(p).value;
    rows.emplace_back(canonical_form(p), std::move(r));
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.second.edges != b.second.edges) return a.second.edges < b.second.edges;
    return a.first < b.first;
  });
  std::vector<SurveyRow> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].second.id = "n" + std::to_string(n) + "-" + std::to_string(i + 1);
    out.push_back(std::move(rows[i].second));
  }
  return out;
}

}  // namespace gapbound
