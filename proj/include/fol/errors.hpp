#ifndef FOL_ERRORS_HPP
#define FOL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fol {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mismatched ambient dimensions or index out of range.
struct DimensionError : Error {
    using Error::Error;
};

struct ParseError : Error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : Error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

// Profile constraint violations, including the Malgrange bound.
struct ProfileError : Error {
    using Error::Error;
};

// Declared rank disagrees with the sampled maximum.
struct ContradictionError : Error {
    using Error::Error;
};

// A decomposition check failed; carries the check name.
struct DecompositionError : Error {
    std::string check;
    explicit DecompositionError(const std::string& check_name, const std::string& detail = "")
        : Error("decomposition check failed: " + check_name +
                (detail.empty() ? "" : " (" + detail + ")")),
          check(check_name) {}
};

struct UnsupportedPresentationError : Error {
    using Error::Error;
};

// Trace refused: start point is singular for the foliation.
struct SingularStartError : Error {
    using Error::Error;
};

} // namespace fol

#endif
