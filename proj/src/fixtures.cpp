#include "gapbound/fixtures.hpp"

#include <utility>

namespace gapbound {

namespace {

SepPoint from_lists(int n, const std::vector<std::pair<int, int>>& halves,
                    const std::vector<std::pair<int, int>>& ones) {
  std::vector<std::pair<Edge, Rational>> w;
  for (auto [i, j] : halves) w.emplace_back(Edge(i, j), Rational(1, 2));
  for (auto [i, j] : ones) w.emplace_back(Edge(i, j), Rational(1));
  return SepPoint(n, w);
}

}  // namespace

SepPoint prism() {
  return from_lists(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}, {{0, 3}, {1, 4}, {2, 5}});
}

std::vector<Fixture> family4_fixtures() {
  return {
      {"a4-1", from_lists(7, {{0, 6}, {4, 6}, {1, 4}, {1, 3}, {3, 5}, {5, 6}, {2, 6}, {0, 2}},
                          {{0, 1}, {2, 3}, {4, 5}})},
      {"a4-2", from_lists(8, {{0, 4}, {4, 5}, {1, 5}, {1, 2}, {2, 6}, {6, 7}, {3, 7}, {0, 3}},
                          {{0, 1}, {2, 3}, {4, 7}, {5, 6}})},
      {"a4-3", from_lists(8, {{0, 4}, {3, 4}, {0, 3}, {1, 5}, {1, 2}, {2, 6}, {6, 7}, {5, 7}},
                          {{0, 1}, {2, 3}, {4, 7}, {5, 6}})},
      {"a4-4", from_lists(8, {{0, 4}, {4, 6}, {2, 6}, {2, 3}, {3, 7}, {5, 7}, {1, 5}, {0, 1}},
                          {{0, 3}, {1, 2}, {4, 7}, {5, 6}})},
      {"a4-5", from_lists(8, {{0, 4}, {4, 6}, {2, 6}, {1, 2}, {1, 5}, {5, 7}, {3, 7}, {0, 3}},
                          {{0, 1}, {2, 3}, {4, 7}, {5, 6}})},
  };
}

std::vector<Fixture> all_fixtures() {
  std::vector<Fixture> out{{"prism", prism()}};
  for (auto& f : family4_fixtures()) out.push_back(std::move(f));
  return out;
}

SepPoint tour_point(const std::vector<Node>& order) {
  std::vector<std::pair<Edge, Rational>> w;
  const std::size_t n = order.size();
  for (std::size_t i = 0; i < n; ++i) w.emplace_back(Edge(order[i], order[(i + 1) % n]), Rational(1));
  return SepPoint(static_cast<int>(n), w);
}

}  // namespace gapbound
