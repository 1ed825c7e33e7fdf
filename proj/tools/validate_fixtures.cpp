// Build step: the shipped vertex files must parse, match the compiled
// fixtures and pass the vertex check.
#include <iostream>

#include "gapbound/fixtures.hpp"
#include "gapbound/pipeline.hpp"
#include "gapbound/polytope.hpp"

using namespace gapbound;

namespace {

int check(const std::string& path, const std::vector<SepPoint>& expected, int k) {
  int bad = 0;
  const VertexFile file = parse_vertex_file(path);
  if (file.points.size() != expected.size()) {
    std::cerr << path << ": " << file.points.size() << " points, expected " << expected.size() << "\n";
    return 1;
  }
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const auto report = is_vertex(file.points[i]);
    if (!report.is_vertex) {
      std::cerr << path << ": point " << i + 1 << " is not a vertex (rank " << report.tight_rank << " of "
                << report.dimension << ")\n";
      ++bad;
    }
    if (!(file.points[i] == expected[i])) {
      std::cerr << path << ": point " << i + 1 << " differs from the compiled fixture\n";
      ++bad;
    }
  }
  if (filter_ancestors(file.points, k).size() != expected.size()) {
    std::cerr << path << ": points are not distinct k = " << k << " ancestors\n";
    ++bad;
  }
  return bad;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: validate_fixtures <data-dir>\n";
    return 2;
  }
  const std::string dir = argv[1];
  std::vector<SepPoint> four;
  for (const auto& f : family4_fixtures()) four.push_back(f.point);
  int bad = 0;
  try {
    bad += check(dir + "/family3.txt", {prism()}, 3);
    bad += check(dir + "/family4.txt", four, 4);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  if (bad) return 1;
  std::cout << "fixtures ok\n";
  return 0;
}
