#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <random>
#include <sstream>

#include "gapbound/certificate.hpp"
#include "gapbound/error.hpp"
#include "gapbound/pipeline.hpp"
#include "gapbound/polytope.hpp"

using namespace gapbound;
namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAboveAlpha = 1;
constexpr int kExitError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, path + ": cannot open");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, path.string() + ": cannot write");
  out << text;
}

std::vector<SepPoint> load_points(const std::string& path) {
  if (path.empty()) throw Error(ErrorCode::InvalidArgument, "--vertices is required");
  return parse_vertex_file(path).points;
}

std::vector<SepPoint> family_source(int k, const std::string& vertices) {
  return vertices.empty() ? builtin_ancestors(k) : parse_vertex_file(vertices).points;
}

std::string result_line(const GapBoundResult& r) {
  std::ostringstream out;
  out << "OPT2=" << to_string(r.opt2_value) << "  Gap+=" << to_string(r.gap_plus) << "  C*=" << to_string(r.c_star)
      << "  bound=" << to_string(r.bound);
  return out.str();
}

// Randomly rewrites one rational field, re-signs, and expects rejection.
int tamper_drive(const std::string& text, int count, unsigned seed) {
  std::mt19937 rng(seed);
  int missed = 0;
  const auto base = nlohmann::json::parse(text);
  std::vector<nlohmann::json::json_pointer> targets;
  targets.emplace_back("/bound");
  targets.emplace_back("/c_star");
  targets.emplace_back("/opt2_value");
  targets.emplace_back("/gap_plus");
  for (std::size_t i = 0; i < base["walks"].size(); ++i) targets.emplace_back("/walks/" + std::to_string(i) + "/mu");
  for (std::size_t i = 0; i < base["constants"].size(); ++i) targets.emplace_back("/constants/" + std::to_string(i) + "/C");
  for (std::size_t i = 0; i < base["costs"].size(); ++i) targets.emplace_back("/costs/" + std::to_string(i) + "/2");
  for (std::size_t i = 0; i < base["point"]["edges"].size(); ++i) {
    targets.emplace_back("/point/edges/" + std::to_string(i) + "/2");
  }
  std::uniform_int_distribution<std::size_t> pick(0, targets.size() - 1);
  std::uniform_int_distribution<int> num(1, 9), den(10, 99);
  for (int t = 0; t < count; ++t) {
    auto doc = base;
    auto& field = doc[targets[pick(rng)]];
    field = to_string(parse_rational(field.get<std::string>()) + make_rational(num(rng), den(rng)));
    doc["digest"] = certificate_digest(doc.dump());
    if (verify_certificate(doc.dump()).accepted) ++missed;
  }
  std::cout << "tampered variants: " << count << ", accepted: " << missed << "\n";
  return missed ? kExitAboveAlpha : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact gap bounds for SEP vertex families"};
  app.require_subcommand(1);

  std::string vertices, out, alpha_text = "4/3";
  int k = 0, max_iter = kDefaultMaxIterations, n = 6, tamper = 0;
  unsigned seed = 1, workers = 1;
  bool cold = false;
  std::vector<std::string> cert_files;

  auto* check_cmd = app.add_subcommand("check-vertex", "feasibility and vertex test for every point of a file");
  check_cmd->add_option("--vertices", vertices, "vertex file")->required();

  auto* gb_cmd = app.add_subcommand("gb", "GB bound for every point of a file");
  auto* gbe_cmd = app.add_subcommand("gbe", "GBe bound for every point of a file");
  for (auto* c : {gb_cmd, gbe_cmd}) {
    c->add_option("--vertices", vertices, "vertex file")->required();
    c->add_option("--alpha", alpha_text, "target bound");
    c->add_option("--out", out, "directory for certificates");
  }
  gbe_cmd->add_option("--max-iter", max_iter, "BB-moves allowed per point")->check(CLI::NonNegativeNumber);
  gbe_cmd->add_flag("--cold", cold, "do not seed inner solves with lifted walks");

  auto* anc_cmd = app.add_subcommand("ancestors", "filter a vertex list down to the ancestors of a family");
  anc_cmd->add_option("--k", k, "family index")->required()->check(CLI::PositiveNumber);
  anc_cmd->add_option("--vertices", vertices, "vertex file (built-in list for k = 3, 4)");
  anc_cmd->add_option("--out", out, "write the ancestors in vertex file format");

  auto* fam_cmd = app.add_subcommand("run-family", "GBe over all ancestors of a family");
  fam_cmd->add_option("--k", k, "family index")->required()->check(CLI::PositiveNumber);
  fam_cmd->add_option("--vertices", vertices, "vertex file (built-in list for k = 3, 4)");
  fam_cmd->add_option("--alpha", alpha_text, "target bound");
  fam_cmd->add_option("--max-iter", max_iter, "BB-moves allowed per ancestor")->check(CLI::NonNegativeNumber);
  fam_cmd->add_option("--out", out, "directory for report.json and certificates");
  fam_cmd->add_option("--workers", workers, "parallel workers")->check(CLI::PositiveNumber);

  auto* survey_cmd = app.add_subcommand("survey", "Gap+ of every vertex class for small n");
  survey_cmd->add_option("--n", n, "number of nodes")->check(CLI::Range(3, kMaxEnumerationNodes));
  survey_cmd->add_option("--out", out, "CSV file");

  auto* verify_cmd = app.add_subcommand("verify-cert", "re-check certificates without solving any LP");
  verify_cmd->add_option("files", cert_files, "certificate files")->required();
  verify_cmd->add_option("--tamper", tamper, "also check N random re-signed corruptions of each file");
  verify_cmd->add_option("--seed", seed, "seed for --tamper");

  CLI11_PARSE(app, argc, argv);

  try {
    const Rational alpha = parse_rational(alpha_text);

    if (*check_cmd) {
      const auto points = load_points(vertices);
      bool all = true;
      for (std::size_t i = 0; i < points.size(); ++i) {
        const SepPoint& p = points[i];
        std::cout << "point " << i + 1 << ": n=" << p.n() << " |E|=" << p.edge_count();
        if (p.n() > kMaxDirectVertexCheck) {
          const auto f = check_sep_feasible(p);
          std::cout << (f.feasible ? " feasible" : " infeasible") << ", too large for the vertex check\n";
          all = false;
          continue;
        }
        const auto r = is_vertex(p);
        if (!r.feasible) {
          std::cout << " infeasible: " << r.violation->message << "\n";
        } else {
          std::cout << " rank " << r.tight_rank << "/" << r.dimension << (r.is_vertex ? " vertex" : " not a vertex")
                    << "\n";
        }
        all = all && r.is_vertex;
      }
      return all ? kExitOk : kExitAboveAlpha;
    }

    if (*gb_cmd || *gbe_cmd) {
      const auto points = load_points(vertices);
      bool all = true;
      for (std::size_t i = 0; i < points.size(); ++i) {
        const std::string stem = "point" + std::to_string(i + 1);
        if (*gb_cmd) {
          const GbRun run = gb(points[i]);
          std::cout << stem << ": " << result_line(run.result) << "\n";
          all = all && run.result.bound <= alpha;
          if (!out.empty()) write_file(fs::path(out) / (stem + ".json"), certificate_to_json(run.certificate) + "\n");
        } else {
          GbeOptions opt;
          opt.warm_start = !cold;
          const GbeResult r = gbe(points[i], alpha, max_iter, opt);
          for (std::size_t s = 0; s < r.steps.size(); ++s) {
            std::cout << stem << " step " << s << ": " << result_line(r.steps[s].run.result) << "\n";
            if (!out.empty()) {
              write_file(fs::path(out) / (stem + "-step" + std::to_string(s) + ".json"),
                         certificate_to_json(r.steps[s].run.certificate) + "\n");
            }
          }
          std::cout << stem << ": bound=" << to_string(r.bound) << " iterations=" << r.iterations << "\n";
          all = all && r.bound <= alpha;
        }
      }
      return all ? kExitOk : kExitAboveAlpha;
    }

    if (*anc_cmd) {
      const auto ancestors = filter_ancestors(family_source(k, vertices), k);
      std::cout << "k=" << k << " ancestors=" << ancestors.size() << "\n";
      if (!out.empty()) write_file(out, serialize_vertex_file(ancestors));
      return kExitOk;
    }

    if (*fam_cmd) {
      const auto ancestors = filter_ancestors(family_source(k, vertices), k);
      FamilyOptions opt;
      opt.workers = workers;
      const FamilyReport report = run_family(k, ancestors, alpha, max_iter, opt);
      std::cout << report_table(report);
      const std::string json = report_json(report);
      if (out.empty()) {
        std::cout << json;
      } else {
        write_file(fs::path(out) / "report.json", json);
        for (const auto& a : report.ancestors) {
          for (std::size_t s = 0; s < a.certificates.size(); ++s) {
            write_file(fs::path(out) / (a.id + "-step" + std::to_string(s) + ".json"), a.certificates[s] + "\n");
          }
        }
        std::cout << "report written to " << (fs::path(out) / "report.json").string() << "\n";
      }
      return report.failures == 0 ? kExitOk : kExitAboveAlpha;
    }

    if (*survey_cmd) {
      std::ostringstream csv;
      csv << "id,edges,gap_plus\n";
      for (const auto& r : survey(n)) csv << r.id << "," << r.edges << "," << to_string(r.gap_plus) << "\n";
      if (out.empty()) {
        std::cout << csv.str();
      } else {
        write_file(out, csv.str());
      }
      return kExitOk;
    }

    if (*verify_cmd) {
      int status = kExitOk;
      for (const auto& f : cert_files) {
        const std::string text = read_file(f);
        const auto v = verify_certificate(text);
        std::cout << f << ": " << (v.accepted ? "accepted" : "REJECTED: " + v.reason) << "\n";
        if (!v.accepted) status = kExitAboveAlpha;
        if (v.accepted && tamper > 0 && tamper_drive(text, tamper, seed) != kExitOk) status = kExitAboveAlpha;
      }
      return status;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
