#pragma once
// Error types thrown by the library. Everything derives from opclass::Error
// so callers can catch one base; the CLI maps ParseError and its siblings to
// exit code 2.

#include <stdexcept>
#include <string>

namespace opclass {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NonSquareError : Error {
    explicit NonSquareError(const std::string& what) : Error(what) {}
};

struct DimensionMismatchError : Error {
    explicit DimensionMismatchError(const std::string& what) : Error(what) {}
};

struct NotHermitianError : Error {
    NotHermitianError(const std::string& what, double defect_)
        : Error(what), defect(defect_) {}
    double defect;  // ||M - M*||_inf actually observed
};

struct EmptyInputError : Error {
    explicit EmptyInputError(const std::string& what) : Error(what) {}
};

struct InvalidWeightError : Error {
    explicit InvalidWeightError(const std::string& what) : Error(what) {}
};

struct SeedLengthError : Error {
    explicit SeedLengthError(const std::string& what) : Error(what) {}
};

struct OverflowError : Error {
    OverflowError(const std::string& what, std::size_t index_)
        : Error(what), index(index_) {}
    std::size_t index;
};

struct TruncationTooSmallError : Error {
    explicit TruncationTooSmallError(const std::string& what) : Error(what) {}
};

struct OrderTooSmallError : Error {
    explicit OrderTooSmallError(const std::string& what) : Error(what) {}
};

struct NotNormalError : Error {
    explicit NotNormalError(const std::string& what) : Error(what) {}
};

struct NotPositiveError : Error {
    explicit NotPositiveError(const std::string& what) : Error(what) {}
};

struct NotCommutingError : Error {
    explicit NotCommutingError(const std::string& what) : Error(what) {}
};

struct NotOrthonormalError : Error {
    explicit NotOrthonormalError(const std::string& what) : Error(what) {}
};

struct InvarianceViolatedError : Error {
    InvarianceViolatedError(const std::string& what, double defect_)
        : Error(what), defect(defect_) {}
    double defect;  // ||(I - P_L) S P_L||
};

struct NotNNormalOnSubspaceError : Error {
    explicit NotNNormalOnSubspaceError(const std::string& what) : Error(what) {}
};

struct NotIntertwiningError : Error {
    explicit NotIntertwiningError(const std::string& what) : Error(what) {}
};

struct GramMismatchError : Error {
    explicit GramMismatchError(const std::string& what) : Error(what) {}
};

// Input/JSON parsing problems. `pointer` carries a JSON-pointer-ish path to
// the offending element when known.
struct ParseError : Error {
    explicit ParseError(const std::string& what, std::string pointer_ = "")
        : Error(pointer_.empty() ? what : pointer_ + ": " + what),
          pointer(std::move(pointer_)) {}
    std::string pointer;
};

}  // namespace opclass
