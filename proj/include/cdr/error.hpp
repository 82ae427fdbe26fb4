#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cdr {

enum class Errc {
  SelfLoop,
  DuplicateEdge,
  EndpointOutOfRange,
  SameVertex,
  EmptySet,
  NotACouple,
  Overlap,
  Infeasible,
  AlphaTooSmall,
  TooLarge,
  DomainError,
  InvalidInstance,
  InfeasibleInput,
  PreconditionViolated,
  Disconnected,
  ParseError,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::EndpointOutOfRange: return "EndpointOutOfRange";
    case Errc::SameVertex: return "SameVertex";
    case Errc::EmptySet: return "EmptySet";
    case Errc::NotACouple: return "NotACouple";
    case Errc::Overlap: return "Overlap";
    case Errc::Infeasible: return "Infeasible";
    case Errc::AlphaTooSmall: return "AlphaTooSmall";
    case Errc::TooLarge: return "TooLarge";
    case Errc::DomainError: return "DomainError";
    case Errc::InvalidInstance: return "InvalidInstance";
    case Errc::InfeasibleInput: return "InfeasibleInput";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::Disconnected: return "Disconnected";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

// All library failures surface as this exception; code() identifies the kind.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace cdr
