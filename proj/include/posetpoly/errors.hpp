#ifndef POSETPOLY_ERRORS_HPP
#define POSETPOLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace posetpoly {

// Base class for all library errors. The category steers CLI exit codes
// and C-API status codes: Validation -> 2, Geometry -> 3, Scale -> 4.
class Error : public std::runtime_error {
public:
    enum class Category { Validation, Geometry, Scale, Internal };

    Error(Category cat, const std::string& what) : std::runtime_error(what), cat_(cat) {}
    Category category() const { return cat_; }

private:
    Category cat_;
};

#define POSETPOLY_DEFINE_ERROR(Name, Cat)                                    \
    class Name : public Error {                                              \
    public:                                                                  \
        explicit Name(const std::string& what) : Error(Category::Cat, what) {} \
    }

POSETPOLY_DEFINE_ERROR(CycleError, Validation);
POSETPOLY_DEFINE_ERROR(IndexError, Validation);
POSETPOLY_DEFINE_ERROR(ArgError, Validation);
POSETPOLY_DEFINE_ERROR(IncompatiblePartition, Validation);
POSETPOLY_DEFINE_ERROR(DomainError, Validation);
POSETPOLY_DEFINE_ERROR(NotAnExtension, Validation);
POSETPOLY_DEFINE_ERROR(WeightError, Validation);
POSETPOLY_DEFINE_ERROR(ChainError, Validation);
POSETPOLY_DEFINE_ERROR(PairingError, Validation);
POSETPOLY_DEFINE_ERROR(ParseError, Validation);
POSETPOLY_DEFINE_ERROR(FormatError, Validation);
POSETPOLY_DEFINE_ERROR(UnboundedError, Geometry);
POSETPOLY_DEFINE_ERROR(InfeasibleError, Geometry);
POSETPOLY_DEFINE_ERROR(ScaleError, Scale);
POSETPOLY_DEFINE_ERROR(SizeError, Scale);
POSETPOLY_DEFINE_ERROR(InternalError, Internal);

#undef POSETPOLY_DEFINE_ERROR

} // namespace posetpoly

#endif
