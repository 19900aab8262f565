#pragma once

#include <stdexcept>
#include <string>

namespace bernstein {

/// Base class for all contract violations raised by this library. The
/// message always starts with the condition name ("DegreeMismatch: ...")
/// so front ends can surface it verbatim.
class DomainError : public std::runtime_error {
 public:
  DomainError(const std::string& name, const std::string& detail)
      : std::runtime_error(name + ": " + detail) {}
};

#define BERNSTEIN_DEFINE_ERROR(Name)                        \
  class Name : public DomainError {                         \
   public:                                                  \
    explicit Name(const std::string& detail)                \
        : DomainError(#Name, detail) {}                     \
  }

BERNSTEIN_DEFINE_ERROR(DimensionMismatch);
BERNSTEIN_DEFINE_ERROR(DegreeMismatch);
BERNSTEIN_DEFINE_ERROR(OutOfSimplex);
BERNSTEIN_DEFINE_ERROR(TruncationTooSmall);
BERNSTEIN_DEFINE_ERROR(EmptyGrid);
BERNSTEIN_DEFINE_ERROR(EmptyDegrees);
BERNSTEIN_DEFINE_ERROR(ArityMismatch);
BERNSTEIN_DEFINE_ERROR(InvalidQ);
BERNSTEIN_DEFINE_ERROR(HypothesisViolated);
// Catch-all for malformed constructor arguments (negative index entries,
// empty coordinate lists, non-bijective permutations, ...).
BERNSTEIN_DEFINE_ERROR(InvalidInput);

#undef BERNSTEIN_DEFINE_ERROR

}  // namespace bernstein
