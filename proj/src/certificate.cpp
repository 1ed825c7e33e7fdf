#include "gapbound/certificate.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <nlohmann/json.hpp>

#include "gapbound/error.hpp"
#include "gapbound/polytope.hpp"

namespace gapbound {

using nlohmann::json;

namespace {

json weighted_edges(const std::vector<std::pair<Edge, Rational>>& edges) {
  json arr = json::array();
  for (const auto& [e, w] : edges) arr.push_back(json::array({e.u, e.v, to_string(w)}));
  return arr;
}

json document(const GapBoundCertificate& cert) {
  json doc;
  doc["format"] = kCertificateFormat;
  doc["version"] = kCertificateVersion;
  doc["point"] = {{"n", cert.point.n()},
                  {"edges", weighted_edges({cert.point.weights().begin(), cert.point.weights().end()})}};
  doc["costs"] = weighted_edges(cert.costs.edges);
  json walks = json::array();
  for (const auto& [w, v] : cert.mu) {
    json edges = json::array();
    for (const auto& [e, m] : w.multiplicities()) edges.push_back(json::array({e.u, e.v, m}));
    walks.push_back({{"edges", edges}, {"mu", to_string(v)}});
  }
  doc["walks"] = walks;
  const GapBoundResult& r = cert.result;
  doc["opt2_value"] = to_string(r.opt2_value);
  doc["gap_plus"] = to_string(r.gap_plus);
  json constants = json::array();
  for (const auto& [e, c] : r.constants) constants.push_back({{"edge", json::array({e.u, e.v})}, {"C", to_string(c)}});
  doc["constants"] = constants;
  doc["c_star"] = to_string(r.c_star);
  doc["bound"] = to_string(r.bound);
  doc["scope"] = cert.scope;
  return doc;
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  EVP_DigestUpdate(ctx, data.data(), data.size());
  EVP_DigestFinal_ex(ctx, md, &len);
  EVP_MD_CTX_free(ctx);
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

std::string digest_of(json doc) {
  doc.erase("digest");
  return "sha256:" + sha256_hex(doc.dump());
}

Rational rational_field(const json& j) {
  if (!j.is_string()) throw Error(ErrorCode::Parse, "rational field is not a string");
  return parse_rational(j.get<std::string>());
}

Node node_field(const json& j) {
  if (!j.is_number_integer()) throw Error(ErrorCode::Parse, "node index is not an integer");
  return j.get<Node>();
}

std::vector<std::pair<Edge, Rational>> edges_field(const json& arr) {
  if (!arr.is_array()) throw Error(ErrorCode::Parse, "edge list is not an array");
  std::vector<std::pair<Edge, Rational>> out;
  for (const auto& item : arr) {
    if (!item.is_array() || item.size() != 3) throw Error(ErrorCode::Parse, "edge entry must have 3 fields");
    out.emplace_back(Edge(node_field(item[0]), node_field(item[1])), rational_field(item[2]));
  }
  return out;
}

CertificateVerdict reject(std::string why) { return {false, std::move(why)}; }

std::string edge_text(const Edge& e) { return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")"; }

}  // namespace

std::string certificate_to_json(const GapBoundCertificate& cert) {
  json doc = document(cert);
  doc["digest"] = digest_of(doc);
  return doc.dump(1);
}

std::string certificate_digest(const std::string& json_text) {
  try {
    return digest_of(json::parse(json_text));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("certificate is not valid JSON: ") + e.what());
  }
}

GapBoundCertificate certificate_from_json(const std::string& text) {
  try {
    const json doc = json::parse(text);
    if (doc.value("format", "") != kCertificateFormat) throw Error(ErrorCode::Parse, "unknown certificate format");
    if (doc.value("version", -1) != kCertificateVersion) throw Error(ErrorCode::Parse, "unsupported certificate version");
    GapBoundCertificate cert;
    const json& p = doc.at("point");
    const int n = p.at("n").get<int>();
    if (n < 0 || n > 64) throw Error(ErrorCode::Parse, "node count out of range");
    cert.point = SepPoint(n, edges_field(p.at("edges")));
    cert.costs = WeightedGraph(n, edges_field(doc.at("costs")));
    for (const auto& item : doc.at("walks")) {
      std::map<Edge, int> mult;
      for (const auto& e : item.at("edges")) {
        if (!e.is_array() || e.size() != 3 || !e[2].is_number_integer()) throw Error(ErrorCode::Parse, "bad walk entry");
        const Edge edge(node_field(e[0]), node_field(e[1]));
        if (!mult.emplace(edge, e[2].get<int>()).second) throw Error(ErrorCode::Parse, "walk repeats an edge");
      }
      for (const auto& [e, m] : mult) {
        if (m < 1 || m > 2) throw Error(ErrorCode::Parse, "walk multiplicity " + std::to_string(m) + " outside {1, 2}");
      }
      Walk w(mult);
      if (!cert.mu.emplace(w, rational_field(item.at("mu"))).second) throw Error(ErrorCode::Parse, "walk listed twice");
    }
    GapBoundResult& r = cert.result;
    r.opt2_value = rational_field(doc.at("opt2_value"));
    r.gap_plus = rational_field(doc.at("gap_plus"));
    for (const auto& item : doc.at("constants")) {
      const json& e = item.at("edge");
      if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::Parse, "bad constant edge");
      r.constants.emplace_back(Edge(node_field(e[0]), node_field(e[1])), rational_field(item.at("C")));
    }
    r.c_star = rational_field(doc.at("c_star"));
    r.bound = rational_field(doc.at("bound"));
    cert.scope = doc.at("scope").get<std::string>();
    return cert;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("malformed certificate: ") + e.what());
  }
}

CertificateVerdict verify_certificate(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    return reject(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("digest") || !doc["digest"].is_string()) return reject("missing digest");
  const std::string stated = doc["digest"].get<std::string>();
  const std::string actual = digest_of(doc);
  if (stated != actual) return reject("digest mismatch: stated " + stated + ", computed " + actual);
  GapBoundCertificate cert;
  try {
    cert = certificate_from_json(json_text);
  } catch (const Error& e) {
    return reject(e.what());
  }
  return verify_certificate(cert);
}

CertificateVerdict verify_certificate(const GapBoundCertificate& cert) {
  try {
    const SepPoint& x = cert.point;
    const auto feas = check_sep_feasible(x);
    if (!feas.feasible) return reject("point is not in SEP: " + feas.violation->message);
    if (x.n() <= kMaxDirectVertexCheck && !is_vertex(x).is_vertex) return reject("point is not a vertex");

    const WeightedGraph support = support_graph(x);
    for (const auto& [w, v] : cert.mu) {
      const auto check = is_valid_walk(support, w);
      if (!check.valid) return reject("invalid walk: " + check.message);
      if (v <= 0) return reject("walk weight " + to_string(v) + " is not positive");
    }
    const DualCheck dual = verify_dual_feasible(x, cert.mu);
    if (!dual.feasible) return reject("dual infeasible: " + dual.message);
    const Rational total = total_weight(cert.mu);
    const GapBoundResult& r = cert.result;
    if (total != r.opt2_value) {
      return reject("sum of mu is " + to_string(total) + ", stated value " + to_string(r.opt2_value));
    }
    if (r.opt2_value <= 0) return reject("value must be positive");

    // primal side: c on exactly the support edges
    if (cert.costs.n != x.n() || cert.costs.edge_count() != support.edge_count()) {
      return reject("costs must cover exactly the support edges");
    }
    Rational cx = 0;
    for (std::size_t i = 0; i < support.edge_count(); ++i) {
      const auto& [e, c] = cert.costs.edges[i];
      if (e != support.edges[i].first) return reject("cost on non-support edge " + edge_text(e));
      if (c < 0) return reject("negative cost on edge " + edge_text(e));
      cx += c * support.edges[i].second;
    }
    if (cx != r.opt2_value) return reject("c.x is " + to_string(cx) + ", stated value " + to_string(r.opt2_value));
    for (const auto& [w, v] : cert.mu) {
      const Rational cw = w.cost(cert.costs);
      if (cw != 1) return reject("weighted walk has cost " + to_string(cw) + " instead of 1");
    }
    const PricedWalk cheapest = min_cost_walk(cert.costs);
    if (cheapest.cost < 1) return reject("costs admit a walk of cost " + to_string(cheapest.cost));

    if (r.gap_plus * r.opt2_value != 1) return reject("gap_plus is not the inverse of the value");
    const auto ones = x.one_edges();
    if (r.constants.size() != ones.size()) return reject("constants must list every 1-edge once");
    Rational c_star = 0;
    for (std::size_t i = 0; i < ones.size(); ++i) {
      const auto& [e, c] = r.constants[i];
      if (e != ones[i]) return reject("constant listed for unexpected edge " + edge_text(e));
      const Rational expect = compute_C(x, cert.mu, e);
      if (c != expect) return reject("C on " + edge_text(e) + " is " + to_string(expect) + ", stated " + to_string(c));
      if (c < 1) return reject("C on " + edge_text(e) + " is below 1");
      if (i == 0 || c > c_star) c_star = c;
    }
    if (ones.empty()) return reject("point has no 1-edges");
    if (c_star != r.c_star) return reject("C* is " + to_string(c_star) + ", stated " + to_string(r.c_star));
    const Rational bound = r.c_star * r.gap_plus;
    if (bound != r.bound) return reject("bound is " + to_string(bound) + ", stated " + to_string(r.bound));
  } catch (const Error& e) {
    return reject(e.what());
  }
  return {true, ""};
}

}  // namespace gapbound
