#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace coarse_embed {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  InvalidVertexId,
  DisconnectedGraph,
  MetricViolation,
  ScheduleMismatch,
  BallTooLarge,
  ElementOutOfRange,
  InfeasibleDegree,
  NotConverged,
  DegenerateEmbedding,
};

constexpr std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidVertexId: return "InvalidVertexId";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::MetricViolation: return "MetricViolation";
    case ErrorCode::ScheduleMismatch: return "ScheduleMismatch";
    case ErrorCode::BallTooLarge: return "BallTooLarge";
    case ErrorCode::ElementOutOfRange: return "ElementOutOfRange";
    case ErrorCode::InfeasibleDegree: return "InfeasibleDegree";
    case ErrorCode::NotConverged: return "NotConverged";
    case ErrorCode::DegenerateEmbedding: return "DegenerateEmbedding";
  }
  return "Unknown";
}

/// Base exception for every failure raised by the library. The code is the
/// machine-readable part; the CLI reports it verbatim.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view code_name() const noexcept { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

enum class MetricAxiom { Nonnegativity, Identity, Symmetry, Triangle };

constexpr std::string_view metric_axiom_name(MetricAxiom axiom) {
  switch (axiom) {
    case MetricAxiom::Nonnegativity: return "nonnegativity";
    case MetricAxiom::Identity: return "identity";
    case MetricAxiom::Symmetry: return "symmetry";
    case MetricAxiom::Triangle: return "triangle";
  }
  return "unknown";
}

/// Raised by distance-matrix validation. The witness is (x, y, z) for the
/// triangle axiom and (x, y, y) for the two-point axioms.
class MetricViolation : public Error {
 public:
  MetricViolation(MetricAxiom axiom, std::array<std::uint32_t, 3> witness,
                  const std::string& message)
      : Error(ErrorCode::MetricViolation, message), axiom_(axiom), witness_(witness) {}

  MetricAxiom axiom() const noexcept { return axiom_; }
  const std::array<std::uint32_t, 3>& witness() const noexcept { return witness_; }

 private:
  MetricAxiom axiom_;
  std::array<std::uint32_t, 3> witness_;
};

}  // namespace coarse_embed
