// Error taxonomy shared across the library. Every domain failure carries a
// stable kind string so the CLI can emit machine-readable errors.
#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace motcell {

class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define MOTCELL_DEFINE_ERROR(Name)                                       \
    class Name : public Error {                                          \
    public:                                                               \
        explicit Name(const std::string& message) : Error(#Name, message) {} \
    }

MOTCELL_DEFINE_ERROR(InvalidSpec);
MOTCELL_DEFINE_ERROR(CapExceeded);
MOTCELL_DEFINE_ERROR(ParseError);
MOTCELL_DEFINE_ERROR(NonPrimitiveRay);
MOTCELL_DEFINE_ERROR(NonSmoothCone);
MOTCELL_DEFINE_ERROR(WallConditionFailed);
MOTCELL_DEFINE_ERROR(NoGenericFound);
MOTCELL_DEFINE_ERROR(NonGenericCocharacter);
MOTCELL_DEFINE_ERROR(UnknownSuite);
MOTCELL_DEFINE_ERROR(UsageError);

#undef MOTCELL_DEFINE_ERROR

} // namespace motcell
