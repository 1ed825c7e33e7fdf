#pragma once

#include <string>
#include <vector>

#include "gapbound/gap_bounding.hpp"

namespace gapbound {

/// Text format, one block per point:
///   v <n> <m>
///   <i> <j> <num>/<den>     (m lines, 0-based, i < j)
/// Blank lines and anything after '#' are ignored.
struct VertexFile {
  std::vector<SepPoint> points;
};

/// Errors are Error(Parse) with "<source>:<line>: " in front. Every block
/// must be a feasible SEP point.
VertexFile parse_vertex_text(const std::string& text, const std::string& source = "<input>");
VertexFile parse_vertex_file(const std::string& path);
std::string serialize_vertex_file(const std::vector<SepPoint>& points);

/// Fractional points with n + k support edges, no support node of degree 2
/// and k + 3 <= n <= 2k, one per isomorphism class, canonically relabeled
/// and sorted by canonical form.
std::vector<SepPoint> filter_ancestors(const std::vector<SepPoint>& points, int k);

/// Built-in ancestor source for k = 3 (enumeration at n = 6) and k = 4 (the
/// shipped fixtures). Throws SourceDataAbsent for other k.
std::vector<SepPoint> builtin_ancestors(int k);

struct AncestorOutcome {
  std::string id;
  SepPoint ancestor;
  Rational gb_bound;
  Rational bound;
  int iterations = 0;
  /// One certificate document per GBe step, in step order.
  std::vector<std::string> certificates;
};

struct FamilyReport {
  int k = 0;
  Rational alpha;
  int max_iter = 0;
  std::size_t ancestor_count = 0;
  Rational max_bound;
  int max_iterations = 0;
  std::size_t failures = 0;  // ancestors with bound > alpha
  std::vector<AncestorOutcome> ancestors;  // canonical order
};

struct FamilyOptions {
  unsigned workers = 1;
  GbeOptions gbe;
};

/// Runs GBe on every ancestor. Ancestors up to the direct-check size must
/// pass is_vertex. Output does not depend on the worker count.
FamilyReport run_family(int k, const std::vector<SepPoint>& ancestors, const Rational& alpha, int max_iter,
                        const FamilyOptions& options = {});

std::string report_json(const FamilyReport& report);
std::string report_table(const FamilyReport& report);

struct SurveyRow {
  std::string id;
  SepPoint point;
  std::size_t edges = 0;
  Rational gap_plus;
};

/// Every vertex class of SEP on n <= 6 nodes with its Gap+, sorted by
/// (|E|, canonical form).
std::vector<SurveyRow> survey(int n);

}  // namespace gapbound
