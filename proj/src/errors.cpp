#include "dyckzeta/errors.hpp"

namespace dyckzeta {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::InvalidVertex: return "InvalidVertex";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::NoPerronRoot: return "NoPerronRoot";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::InvalidMatrix: return "InvalidMatrix";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::SingularityBeforeRoot: return "SingularityBeforeRoot";
    case ErrorKind::NoData: return "NoData";
    case ErrorKind::NoRoot: return "NoRoot";
    case ErrorKind::DegenerateMinor: return "DegenerateMinor";
    case ErrorKind::BranchError: return "BranchError";
  }
  return "Unknown";
}

}  // namespace dyckzeta
