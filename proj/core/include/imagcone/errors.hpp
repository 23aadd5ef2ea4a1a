#pragma once

#include <stdexcept>
#include <string>

namespace imagcone {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define IMAGCONE_DEFINE_ERROR(Name)                                           \
    struct Name : Error {                                                     \
        explicit Name(const std::string& what = #Name) : Error(what) {}       \
    }

IMAGCONE_DEFINE_ERROR(DivisionByZero);
IMAGCONE_DEFINE_ERROR(DimensionMismatch);
IMAGCONE_DEFINE_ERROR(InvalidFieldSpec);
IMAGCONE_DEFINE_ERROR(UnrepresentableLabel);
IMAGCONE_DEFINE_ERROR(InvalidInfiniteBond);
IMAGCONE_DEFINE_ERROR(NegativeRadicand);
IMAGCONE_DEFINE_ERROR(FieldMismatch);

IMAGCONE_DEFINE_ERROR(SingularFormForDual);
IMAGCONE_DEFINE_ERROR(PointNotInCone);
IMAGCONE_DEFINE_ERROR(EmptyCone);

IMAGCONE_DEFINE_ERROR(InvalidGram);
IMAGCONE_DEFINE_ERROR(ExtensionSingular);
IMAGCONE_DEFINE_ERROR(NotPositivelyIndependent);
IMAGCONE_DEFINE_ERROR(FormSingular);
IMAGCONE_DEFINE_ERROR(NotDistinctReflections);
IMAGCONE_DEFINE_ERROR(NotARoot);

IMAGCONE_DEFINE_ERROR(NotInChamber);
IMAGCONE_DEFINE_ERROR(NotInK);
IMAGCONE_DEFINE_ERROR(NotFiniteType);
IMAGCONE_DEFINE_ERROR(ClosureBoundExceeded);

IMAGCONE_DEFINE_ERROR(NotIrreducibleIndefinite);
IMAGCONE_DEFINE_ERROR(FiniteSubgroup);
IMAGCONE_DEFINE_ERROR(AlgorithmInvariantViolated);

IMAGCONE_DEFINE_ERROR(NotInfiniteDihedral);
IMAGCONE_DEFINE_ERROR(NonpositiveHeight);

IMAGCONE_DEFINE_ERROR(SqrtNotInField);
IMAGCONE_DEFINE_ERROR(NotInPositiveCone);
IMAGCONE_DEFINE_ERROR(UniquenessViolated);
IMAGCONE_DEFINE_ERROR(InvalidPrefix);

IMAGCONE_DEFINE_ERROR(InputError);

#undef IMAGCONE_DEFINE_ERROR

} // namespace imagcone
