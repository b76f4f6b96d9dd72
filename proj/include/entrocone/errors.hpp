#pragma once

#include <stdexcept>
#include <string>

namespace entrocone {

// Base for all library errors. `code()` is a stable machine-readable tag used
// by the CLI to pick exit codes and by tests to match error categories.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define ENTROCONE_DEFINE_ERROR(Name)                          \
    class Name : public Error {                               \
    public:                                                   \
        explicit Name(const std::string& what)                \
            : Error(#Name, what) {}                           \
    }

ENTROCONE_DEFINE_ERROR(NotAPoset);
ENTROCONE_DEFINE_ERROR(NoMinimalCommonAncestor);
ENTROCONE_DEFINE_ERROR(NoInitialObject);
ENTROCONE_DEFINE_ERROR(SizeLimit);
ENTROCONE_DEFINE_ERROR(NotADistribution);
ENTROCONE_DEFINE_ERROR(NotMeasurePreserving);
ENTROCONE_DEFINE_ERROR(UnknownLabel);
ENTROCONE_DEFINE_ERROR(ShapeMismatch);
ENTROCONE_DEFINE_ERROR(MarginalMismatch);
ENTROCONE_DEFINE_ERROR(NotAnIsomorphism);
ENTROCONE_DEFINE_ERROR(ZeroWeightAtom);
ENTROCONE_DEFINE_ERROR(NotInCone);
ENTROCONE_DEFINE_ERROR(NumericalRankFailure);
ENTROCONE_DEFINE_ERROR(ParseError);

#undef ENTROCONE_DEFINE_ERROR

} // namespace entrocone
