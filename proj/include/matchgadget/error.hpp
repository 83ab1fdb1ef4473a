#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace matchgadget {

enum class ErrorCode {
  SelfLoop,
  OutOfRangeVertex,
  NotAMatching,
  NotAugmenting,
  EnumerationDiverges,
  CapExceeded,
  CoveredStart,
  NoNode,
  BudgetExceeded,
  NotAPath,
  RootUncovered,
  Stuck,
  NotPrefixClosed,
  NotPerfectComponent,
  PreconditionViolated,
  MalformedCodingGraph,
  EmptyList,
  UnboundAtom,
  ContextTooLarge,
  EvenLength,
  SyntaxError,
  UnbalancedParens,
  MalformedInput,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so that
/// callers (tests, the CLI) can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace matchgadget
