#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace matchwidth {

enum class ErrorCode {
  kInvalidInput,
  kInvalidShore,
  kNotPerfect,
  kNotBipartite,
  kNotStronglyConnected,
  kNotAlternating,
  kNotDisjoint,
  kNoPerfectMatching,
  kNotMatchingCovered,
  kCapExceeded,
  kEdgeNotInTree,
  kInvalidDecomposition,
  kLeafMapMismatch,
  kMatchedPairNotSiblings,
  kNotContractible,
  kWrongDegree,
  kAlignmentUnsatisfiable,
  kParse,
  kOddComponent,
  kSchema,
  kUnknownExperiment,
};

std::string_view error_code_name(ErrorCode code);

// Every library failure is reported through this type; `code()` lets
// callers (and the CLI exit-code mapping) distinguish the cases.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace matchwidth
