#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gapbound/certificate.hpp"
#include "gapbound/rational.hpp"

namespace oracle {

using gapbound::Rational;
using Matrix = std::vector<std::vector<Rational>>;

inline Rational brute_tsp(const Matrix& d) {
  const int n = static_cast<int>(d.size());
  std::vector<int> p(n - 1);
  std::iota(p.begin(), p.end(), 1);
  bool have = false;
  Rational best;
  do {
    Rational c = d[0][p.front()] + d[p.back()][0];
    for (int i = 0; i + 1 < n - 1; ++i) c += d[p[i]][p[i + 1]];
    if (!have || c < best) best = c;
    have = true;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

inline Matrix random_metric(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(1, 40), den(1, 7);
  Matrix d(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) d[i][j] = d[j][i] = gapbound::make_rational(num(rng), den(rng));
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const Rational via = d[i][k] + d[k][j];
        if (via < d[i][j]) d[i][j] = via;
      }
    }
  }
  return d;
}

inline gapbound::WeightedGraph complete(const Matrix& d) {
  std::vector<std::pair<gapbound::Edge, Rational>> e;
  const int n = static_cast<int>(d.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.emplace_back(gapbound::Edge(i, j), d[i][j]);
  }
  return gapbound::WeightedGraph(n, e);
}

// Rewrites one field of a certificate so that it is certainly wrong. Even
// kinds re-sign the digest, so the mathematical checks must catch them.
inline std::string tamper(const std::string& text, int variant) {
  using nlohmann::json;
  json doc = json::parse(text);
  auto bump = [](json& field, int num, int den) {
    const Rational v = gapbound::parse_rational(field.get<std::string>());
    field = gapbound::to_string(v + gapbound::make_rational(num, den));
  };
  const int kind = variant % 11;
  const int pick = variant / 11;
  switch (kind) {
    case 0: bump(doc["bound"], 1, 97); break;
    case 1: bump(doc["c_star"], -1, 53); break;
    case 2: bump(doc["constants"][pick % doc["constants"].size()]["C"], 1, 31); break;
    case 3: bump(doc["walks"][pick % doc["walks"].size()]["mu"], 1, 41); break;
    case 4: bump(doc["costs"][pick % doc["costs"].size()][2], 1, 7); break;
    case 5: bump(doc["point"]["edges"][pick % doc["point"]["edges"].size()][2], -1, 29); break;
    case 6: doc["walks"].erase(pick % doc["walks"].size()); break;
    case 7: bump(doc["opt2_value"], 1, 13); break;
    case 8: bump(doc["gap_plus"], 1, 17); break;
    case 9: {
      // flip one multiplicity 1 <-> 2, which breaks parity at both ends
      auto& w = doc["walks"][pick % doc["walks"].size()]["edges"];
      auto& m = w[pick % w.size()][2];
      m = m.get<int>() == 1 ? 2 : 1;
      break;
    }
    default: bump(doc["bound"], 1, 89); return doc.dump(1);  // stale digest
  }
  doc["digest"] = gapbound::certificate_digest(doc.dump());
  return doc.dump(1);
}

}  // namespace oracle
