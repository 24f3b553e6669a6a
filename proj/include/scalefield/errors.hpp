#pragma once

#include <stdexcept>
#include <string>

namespace scalefield {

// Contract violations get distinct types so call sites can tell them apart.

// An operation touched the empty structure (level or superscript 0).
struct EmptyStructureError : std::domain_error {
  using std::domain_error::domain_error;
};

// Two quantities at different levels were combined without transport.
struct LevelMismatchError : std::domain_error {
  using std::domain_error::domain_error;
};

// Real/complex kinds were mixed, or a kind invariant was broken.
struct KindError : std::domain_error {
  using std::domain_error::domain_error;
};

// Relativized structures with different subscripts cannot be combined.
struct CombinationError : std::domain_error {
  using std::domain_error::domain_error;
};

struct DivisionByZeroError : std::domain_error {
  using std::domain_error::domain_error;
};

// A gauge map failed a unitarity/derivative consistency check.
struct GaugeConsistencyError : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace scalefield
