#pragma once

#include <stdexcept>
#include <string>

namespace gapbound {

enum class ErrorCode {
  Parse,
  InvalidArgument,
  NoOneEdges,
  NotOneEdge,
  OneEdgeCycle,
  DimensionTooLarge,
  Disconnected,
  NotMetric,
  ClassMismatch,
  EdgeCountTooLarge,
  Infeasible,
  Unbounded,
  RowGenerationStalled,
  ConstantBelowOne,
  SourceDataAbsent,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gapbound
