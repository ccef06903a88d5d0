#pragma once

#include <stdexcept>
#include <string>

namespace syncode {

/// Base class for all errors raised by this library. Loader errors carry
/// row/column context in the message where applicable.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define SYNCODE_DEFINE_ERROR(Name)                                  \
    class Name : public Error {                                     \
    public:                                                         \
        explicit Name(const std::string& msg) : Error(msg) {}       \
    }

// corpus
SYNCODE_DEFINE_ERROR(DuplicateIdentifier);
SYNCODE_DEFINE_ERROR(BadIdentifier);
SYNCODE_DEFINE_ERROR(BadCellToken);
SYNCODE_DEFINE_ERROR(EmptyCorpus);
SYNCODE_DEFINE_ERROR(MisclassifiedTarget);
SYNCODE_DEFINE_ERROR(UnknownFeature);
SYNCODE_DEFINE_ERROR(BadEnergy);
SYNCODE_DEFINE_ERROR(IncompleteGraph);
SYNCODE_DEFINE_ERROR(BadWeight);
SYNCODE_DEFINE_ERROR(UnknownLanguage);

// codes
SYNCODE_DEFINE_ERROR(NotFullyMapped);
SYNCODE_DEFINE_ERROR(LengthMismatch);

// bounds
SYNCODE_DEFINE_ERROR(DomainError);

// survey
SYNCODE_DEFINE_ERROR(EmptyInput);
SYNCODE_DEFINE_ERROR(InsufficientLanguages);

// dynamics
SYNCODE_DEFINE_ERROR(TooLarge);
SYNCODE_DEFINE_ERROR(LanguageMismatch);
SYNCODE_DEFINE_ERROR(BadSymbol);

#undef SYNCODE_DEFINE_ERROR

} // namespace syncode
