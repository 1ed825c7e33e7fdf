#pragma once

#include <string>

#include "gapbound/gap_bounding.hpp"

namespace gapbound {

inline constexpr const char* kCertificateFormat = "gapbound-certificate";
inline constexpr int kCertificateVersion = 1;

/// JSON text with sorted keys, rationals as "num/den" strings and a
/// "digest" field holding "sha256:<hex>" of the document without it.
std::string certificate_to_json(const GapBoundCertificate& cert);

/// Parses a document written by certificate_to_json. Does not check the
/// digest or any of the mathematics; throws Error(Parse) on bad structure.
GapBoundCertificate certificate_from_json(const std::string& text);

/// "sha256:<hex>" over the compact dump of the document minus "digest".
std::string certificate_digest(const std::string& json_text);

struct CertificateVerdict {
  bool accepted = false;
  std::string reason;
};

/// Re-checks a certificate without solving any LP: digest, SEP feasibility
/// (and vertexhood up to the direct-check size), walk validity, mu >= 0,
/// edge loads, sum of mu, cost nonnegativity, c.x, c.w = 1 on every
/// weighted walk, min-cost walk >= 1 under c, the constants, C*, and the
/// bound arithmetic.
CertificateVerdict verify_certificate(const std::string& json_text);
CertificateVerdict verify_certificate(const GapBoundCertificate& cert);

}  // namespace gapbound
