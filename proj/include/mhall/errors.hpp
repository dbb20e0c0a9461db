#pragma once

#include <stdexcept>
#include <string>

namespace mhall {

// Structural validation failures (bad flat families, basis families, graphs, ...).
class ValidationError : public std::runtime_error {
 public:
  enum class Code {
    MissingBasepointInFlat,
    NotIntersectionClosed,
    GroundNotFlat,
    ExchangeAxiomViolated,
    ExchangeViolated,
    EmptyBasisFamily,
    RankExceedsSize,
    MissingDistinguishedLoop,
    DanglingEndpoint,
    SubsetOutOfRange,
    SubsetContainsBasepoint,
    AmbientMismatch,
    BasepointNotPreserved,
    FlatPreimageViolated,
    NotAdmissible,
    BadNesting,
    IndexOutOfRange,
    BoundExceeded,
    DegreeBoundExceeded,
    GeneratorLimitExceeded,
    BadLabels,
  };

  ValidationError(Code code, std::string msg)
      : std::runtime_error(std::move(msg)), code_(code) {}

  Code code() const { return code_; }

 private:
  Code code_;
};

// Malformed input documents (unknown labels, bad JSON shapes, ...).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(std::string msg) : std::runtime_error(std::move(msg)) {}
};

}  // namespace mhall
