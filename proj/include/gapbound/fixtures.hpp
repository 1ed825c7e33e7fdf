#pragma once

#include <string>
#include <vector>

#include "gapbound/graph.hpp"

namespace gapbound {

struct Fixture {
  std::string name;
  SepPoint point;
};

/// The ancestor of the k = 3 family: two half-weight triangles {0,1,2} and
/// {3,4,5} joined by the 1-edges 0-3, 1-4, 2-5.
SepPoint prism();

/// The five ancestors of the k = 4 family, transcribed from drawings
/// (nodes a..h mapped to 0..7).
std::vector<Fixture> family4_fixtures();

/// prism followed by the k = 4 ancestors.
std::vector<Fixture> all_fixtures();

/// Characteristic vector of the tour visiting `order` cyclically.
SepPoint tour_point(const std::vector<Node>& order);

}  // namespace gapbound
