#include <gtest/gtest.h>

#include "gapbound/certificate.hpp"
#include "gapbound/fixtures.hpp"
#include "gapbound/gap_bounding.hpp"
#include "oracles.hpp"

using namespace gapbound;

namespace {

std::vector<std::string> emitted() {
  std::vector<std::string> out;
  for (const auto& f : all_fixtures()) {
    const GbeResult r = gbe(f.point, make_rational(4, 3), kDefaultMaxIterations);
    for (const auto& s : r.steps) out.push_back(certificate_to_json(s.run.certificate));
  }
  return out;
}

}  // namespace

TEST(Certificate, EmittedOnesVerify) {
  for (const auto& text : emitted()) {
    const auto v = verify_certificate(text);
    EXPECT_TRUE(v.accepted) << v.reason;
  }
}

TEST(Certificate, RoundTrip) {
  for (const auto& text : emitted()) {
    EXPECT_EQ(certificate_to_json(certificate_from_json(text)), text);
  }
}

TEST(Certificate, DigestCoversContent) {
  const std::string text = certificate_to_json(gb(prism()).certificate);
  EXPECT_EQ(certificate_digest(text).rfind("sha256:", 0), 0u);
  EXPECT_EQ(certificate_digest(text).size(), 7u + 64u);
  auto doc = nlohmann::json::parse(text);
  EXPECT_EQ(doc["digest"], certificate_digest(text));
  doc["scope"] = "something else";
  EXPECT_FALSE(verify_certificate(doc.dump()).accepted);
}

TEST(Certificate, RejectsTamperedVariants) {
  const auto all = emitted();
  for (int v = 0; v < 110; ++v) {
    const std::string& base = all[v % all.size()];
    const std::string bad = oracle::tamper(base, v);
    ASSERT_NE(bad, base);
    const auto verdict = verify_certificate(bad);
    EXPECT_FALSE(verdict.accepted) << "variant " << v;
    EXPECT_FALSE(verdict.reason.empty());
  }
}

TEST(Certificate, RejectsMalformedInput) {
  const std::string text = certificate_to_json(gb(prism()).certificate);
  EXPECT_FALSE(verify_certificate(text.substr(0, text.size() / 2)).accepted);
  EXPECT_FALSE(verify_certificate("[]").accepted);
  EXPECT_FALSE(verify_certificate("").accepted);
  auto doc = nlohmann::json::parse(text);
  doc["point"]["edges"][0][2] = 5;
  doc["digest"] = certificate_digest(doc.dump());
  EXPECT_FALSE(verify_certificate(doc.dump()).accepted);
  doc = nlohmann::json::parse(text);
  doc["point"]["edges"][0][0] = 99;
  doc["digest"] = certificate_digest(doc.dump());
  EXPECT_FALSE(verify_certificate(doc.dump()).accepted);
}

// a smaller but still feasible mu with consistent numbers is rejected by the
// c.w = 1 check, since complementary slackness no longer holds
TEST(Certificate, RejectsSuboptimalButConsistentMu) {
  GapBoundCertificate cert = gb(prism()).certificate;
  for (auto& [w, v] : cert.mu) v /= 2;
  GapBoundResult& r = cert.result;
  r.opt2_value /= 2;
  r.gap_plus = 1 / r.opt2_value;
  r.constants.clear();
  r.c_star = 0;
  for (const Edge& e : cert.point.one_edges()) {
    const Rational c = compute_C(cert.point, cert.mu, e);
    r.constants.emplace_back(e, c);
    if (c > r.c_star) r.c_star = c;
  }
  r.bound = r.c_star * r.gap_plus;
  EXPECT_FALSE(verify_certificate(cert).accepted);
}
