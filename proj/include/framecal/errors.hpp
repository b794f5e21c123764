#pragma once

#include <stdexcept>
#include <string>

namespace framecal {

// Base class for every error thrown by the library. Each condition gets its
// own type so callers can discriminate without parsing messages.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define FRAMECAL_DEFINE_ERROR(Name)                                  \
    class Name : public Error {                                      \
    public:                                                          \
        explicit Name(const std::string& msg) : Error(msg) {}        \
    }

// linalg
FRAMECAL_DEFINE_ERROR(NotHermitian);
FRAMECAL_DEFINE_ERROR(NotPSD);
FRAMECAL_DEFINE_ERROR(Singular);
FRAMECAL_DEFINE_ERROR(DimensionMismatch);

// measure spaces and coefficient vectors
FRAMECAL_DEFINE_ERROR(NonPositiveWeight);
FRAMECAL_DEFINE_ERROR(DuplicateLabel);
FRAMECAL_DEFINE_ERROR(IndexOutOfRange);
FRAMECAL_DEFINE_ERROR(WouldBeEmpty);
FRAMECAL_DEFINE_ERROR(SpaceMismatch);

// frames and duality
FRAMECAL_DEFINE_ERROR(NotAFrame);
FRAMECAL_DEFINE_ERROR(NotARepresentation);
FRAMECAL_DEFINE_ERROR(KernelConditionViolated);
FRAMECAL_DEFINE_ERROR(NotDualPair);
FRAMECAL_DEFINE_ERROR(TransportConditionViolated);
FRAMECAL_DEFINE_ERROR(DegenerateAtom);
FRAMECAL_DEFINE_ERROR(NotDegenerate);
FRAMECAL_DEFINE_ERROR(NotRieszBasis);

// approximate duality
FRAMECAL_DEFINE_ERROR(NotApproxDual);
FRAMECAL_DEFINE_ERROR(HypothesisViolated);
FRAMECAL_DEFINE_ERROR(NotParseval);

// wavelets and affine grids
FRAMECAL_DEFINE_ERROR(NotAdmissible);
FRAMECAL_DEFINE_ERROR(NonPositiveGrid);
FRAMECAL_DEFINE_ERROR(GridTooCoarse);

// serialization
FRAMECAL_DEFINE_ERROR(ParseError);

// A mathematically guaranteed cross-check failed; indicates a bug in the
// library itself, never bad user input.
FRAMECAL_DEFINE_ERROR(ConsistencyError);

#undef FRAMECAL_DEFINE_ERROR

}  // namespace framecal
