#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace finduality {

// Common base for all precondition / validation failures. `kind()` is a
// stable machine-readable tag; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define FINDUALITY_DEFINE_ERROR(Name)                \
  class Name : public Error {                        \
   public:                                           \
    explicit Name(const std::string& detail)         \
        : Error(#Name, detail) {}                    \
  }

FINDUALITY_DEFINE_ERROR(BoundExceeded);
FINDUALITY_DEFINE_ERROR(ShapeMismatch);
FINDUALITY_DEFINE_ERROR(NotATopology);
FINDUALITY_DEFINE_ERROR(NotStone);
FINDUALITY_DEFINE_ERROR(NotContact);
FINDUALITY_DEFINE_ERROR(NotNormal);
FINDUALITY_DEFINE_ERROR(NotEquivalence);
FINDUALITY_DEFINE_ERROR(NotOpen);
FINDUALITY_DEFINE_ERROR(NotSurjective);
FINDUALITY_DEFINE_ERROR(NotDiscrete);
FINDUALITY_DEFINE_ERROR(NotComposable);
FINDUALITY_DEFINE_ERROR(NotDVMorphism);
FINDUALITY_DEFINE_ERROR(NotReflexive);
FINDUALITY_DEFINE_ERROR(NotSymmetric);
FINDUALITY_DEFINE_ERROR(DegenerateAlgebra);
FINDUALITY_DEFINE_ERROR(PreconditionFailed);
FINDUALITY_DEFINE_ERROR(RigidityRequired);
FINDUALITY_DEFINE_ERROR(ConditionFFailed);
FINDUALITY_DEFINE_ERROR(NotWellDefined);
FINDUALITY_DEFINE_ERROR(LawViolation);

// Raised when a structure the theory guarantees fails to materialize;
// indicates a bug in this library, never bad user input.
FINDUALITY_DEFINE_ERROR(InternalContradiction);

#undef FINDUALITY_DEFINE_ERROR

}  // namespace finduality
