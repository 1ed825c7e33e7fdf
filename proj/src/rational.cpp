#include "gapbound/rational.hpp"

#include <cctype>

#include "gapbound/error.hpp"

namespace gapbound {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::NoOneEdges: return "no 1-edges";
    case ErrorCode::NotOneEdge: return "not a 1-edge";
    case ErrorCode::OneEdgeCycle: return "1-edges form a cycle";
    case ErrorCode::DimensionTooLarge: return "dimension too large";
    case ErrorCode::Disconnected: return "disconnected graph";
    case ErrorCode::NotMetric: return "costs are not metric";
    case ErrorCode::ClassMismatch: return "class mismatch";
    case ErrorCode::EdgeCountTooLarge: return "edge count too large for enumeration";
    case ErrorCode::Infeasible: return "infeasible";
    case ErrorCode::Unbounded: return "unbounded";
    case ErrorCode::RowGenerationStalled: return "row generation stalled";
    case ErrorCode::ConstantBelowOne: return "rescaling constant below one";
    case ErrorCode::SourceDataAbsent: return "source data absent";
  }
  return "unknown error";
}

Rational make_rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_literal(num_text, true)) {
    throw Error(ErrorCode::Parse, "malformed rational '" + std::string(text) + "'");
  }
  std::string num_str(num_text);
  if (num_str[0] == '+') num_str.erase(0, 1);
  Rational r;
  r.get_num() = Integer(num_str);
  if (slash == std::string_view::npos) {
    r.get_den() = 1;
    return r;
  }
  const auto den_text = text.substr(slash + 1);
  if (!is_integer_literal(den_text, false)) {
    throw Error(ErrorCode::Parse, "malformed rational '" + std::string(text) + "'");
  }
  Integer den{std::string(den_text)};
  if (den == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
  r.get_den() = den;
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Integer common_denominator(const std::vector<Rational>& values) {
  Integer l = 1;
  for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

}  // namespace gapbound
