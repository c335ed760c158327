#pragma once

#include <stdexcept>
#include <string>

namespace k3fib {

// Base class for all library errors.
class K3fibError : public std::runtime_error {
 public:
  explicit K3fibError(const std::string& what) : std::runtime_error(what) {}
};

#define K3FIB_DEFINE_ERROR(Name)                                   \
  class Name : public K3fibError {                                 \
   public:                                                         \
    explicit Name(const std::string& what = #Name)                 \
        : K3fibError(std::string(#Name) + ": " + what) {}          \
  }

// Field arithmetic.
K3FIB_DEFINE_ERROR(ZeroPolynomial);
K3FIB_DEFINE_ERROR(NonSquarefreePlace);
K3FIB_DEFINE_ERROR(DivisionByZero);

// Weierstrass models and classification.
K3FIB_DEFINE_ERROR(SingularSurface);
K3FIB_DEFINE_ERROR(AmbiguousBundle);
K3FIB_DEFINE_ERROR(UnclassifiableTriple);
K3FIB_DEFINE_ERROR(IncompleteConfiguration);

// Genus-one transformations.
K3FIB_DEFINE_ERROR(NotSquarefree);
K3FIB_DEFINE_ERROR(WrongDegree);
K3FIB_DEFINE_ERROR(SingularPoint);

// Neighbor steps and parameter fitting.
K3FIB_DEFINE_ERROR(DegreeOverflow);
K3FIB_DEFINE_ERROR(NotJacobianCase);
K3FIB_DEFINE_ERROR(Underdetermined);
K3FIB_DEFINE_ERROR(Inconsistent);

// Classical elimination.
K3FIB_DEFINE_ERROR(NotLinearlySolvable);
K3FIB_DEFINE_ERROR(HigherGenus);

// Divisor lattice.
K3FIB_DEFINE_ERROR(OpaquePairing);
K3FIB_DEFINE_ERROR(UnknownFunction);
K3FIB_DEFINE_ERROR(IdentityFails);

// Plumbing.
K3FIB_DEFINE_ERROR(ParseError);
K3FIB_DEFINE_ERROR(InternalError);

#undef K3FIB_DEFINE_ERROR

}  // namespace k3fib
