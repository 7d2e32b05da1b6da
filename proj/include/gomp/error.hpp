#ifndef GOMP_ERROR_HPP
#define GOMP_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace gomp {

enum class Errc {
  RankDeficient,
  DimensionMismatch,
  Singular,
  InsufficientCandidates,
  InvalidParams,
  BudgetExceeded,
  DimensionError,
  NonPositiveDiagonal,
  OrderMismatch,
  EmptySupport,
  ConditionViolated,
  NotNoiseFree,
  TraceIncomplete,
  IoError,
  ParseError,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::Singular: return "Singular";
    case Errc::InsufficientCandidates: return "InsufficientCandidates";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::DimensionError: return "DimensionError";
    case Errc::NonPositiveDiagonal: return "NonPositiveDiagonal";
    case Errc::OrderMismatch: return "OrderMismatch";
    case Errc::EmptySupport: return "EmptySupport";
    case Errc::ConditionViolated: return "ConditionViolated";
    case Errc::NotNoiseFree: return "NotNoiseFree";
    case Errc::TraceIncomplete: return "TraceIncomplete";
    case Errc::IoError: return "IoError";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

// Every failure raised by the library carries one of the codes above so
// callers (and tests) can dispatch on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string &what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace gomp

#endif  // GOMP_ERROR_HPP
