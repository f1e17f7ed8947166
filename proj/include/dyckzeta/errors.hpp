#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dyckzeta {

enum class ErrorKind {
  InvalidGraph,
  InvalidVertex,
  NotIrreducible,
  NoPerronRoot,
  BudgetExceeded,
  NotInvertible,
  DomainError,
  InternalInconsistency,
  InvalidMatrix,
  TooLarge,
  SingularityBeforeRoot,
  NoData,
  NoRoot,
  DegenerateMinor,
  BranchError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dyckzeta
