#ifndef DDF_ERROR_HPP
#define DDF_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace ddf {

enum class ErrorKind {
  NotPrime,
  SizeExceeded,
  DoesNotDivide,
  IndexOutOfRange,
  ConditionsNotMet,
  DlogOfZero,
  NotAUnit,
  OddDegree,
  DegenerateParameters,
  NotDisjoint,
  UnequalBlockSizes,
  NotASubgroup,
  BudgetExceeded,
  NotAPermutation,
  Parse,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::SizeExceeded: return "SizeExceeded";
    case ErrorKind::DoesNotDivide: return "DoesNotDivide";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ConditionsNotMet: return "ConditionsNotMet";
    case ErrorKind::DlogOfZero: return "DlogOfZero";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::OddDegree: return "OddDegree";
    case ErrorKind::DegenerateParameters: return "DegenerateParameters";
    case ErrorKind::NotDisjoint: return "NotDisjoint";
    case ErrorKind::UnequalBlockSizes: return "UnequalBlockSizes";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotAPermutation: return "NotAPermutation";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ddf

#endif  // DDF_ERROR_HPP
