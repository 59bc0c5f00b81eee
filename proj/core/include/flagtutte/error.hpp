#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace flagtutte {

enum class ErrorKind {
  EmptyBases,
  UnequalCardinality,
  ExchangeViolation,
  OutOfRange,
  NotAMatroid,
  MismatchedGroundSets,
  AxiomViolation,
  NotConcordant,
  NotNested,
  RankBoundTooSmall,
  MalformedInput,
  NotAVertex,
  NotPointed,
  InexactDivision,
  NoDecomposition,
  NegativeShift,
  DimensionMismatch,
  PoleAtOne,
  BadWeights,
  SpaceMismatch,
  FitMismatch,
  TooLarge,
};

std::string_view to_string(ErrorKind kind);

/// Domain error carrying a machine-readable kind; the message holds the witness.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace flagtutte
