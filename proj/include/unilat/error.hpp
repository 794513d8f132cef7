#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "unilat/element.hpp"

namespace unilat {

enum class ErrorCode {
  // lattice-core
  InvalidLabel,
  DuplicateLabel,
  UnknownLabel,
  NotAPoset,
  NotALattice,
  NoBounds,
  EmptyBounds,
  // op-algebra
  CarrierNotClosed,
  CarrierMismatch,
  // constructions
  InvalidNeutral,
  MissingComponent,
  ComponentNotTnorm,
  ComponentNotConorm,
  ComponentNotSubnorm,
  ComponentNotSubconorm,
  PreconditionViolated,
  RegionGap,
  RegionOverlap,
  BadChain,
  // lattice-gen
  UnknownName,
  RetriesExhausted,
  SizeTooLarge,
  CarrierTooLarge,
  // io
  SyntaxError,
  ShapeError,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `witness` carries the offending
/// elements when the failure is about specific elements (e.g. the pair with
/// no join); `line` is set by the parsers.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::vector<ElementId> witness = {}, int line = 0)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        witness_(std::move(witness)),
        line_(line) {}

  ErrorCode code() const { return code_; }
  const std::vector<ElementId>& witness() const { return witness_; }
  int line() const { return line_; }

 private:
  ErrorCode code_;
  std::vector<ElementId> witness_;
  int line_;
};

}  // namespace unilat
