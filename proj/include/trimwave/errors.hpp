#pragma once

#include <stdexcept>
#include <string>

namespace trimwave {

// Error types map one-to-one onto the validation failures the library can
// raise; callers that only want a message can catch std::runtime_error.

struct InvalidGeometry : std::runtime_error {
    explicit InvalidGeometry(const std::string& msg) : std::runtime_error("invalid geometry: " + msg) {}
};

struct SizeCapExceeded : std::runtime_error {
    explicit SizeCapExceeded(const std::string& msg) : std::runtime_error("size cap exceeded: " + msg) {}
};

struct InvalidTrim : std::runtime_error {
    explicit InvalidTrim(const std::string& msg) : std::runtime_error("invalid trim: " + msg) {}
};

struct IndexError : std::runtime_error {
    explicit IndexError(const std::string& msg) : std::runtime_error("index error: " + msg) {}
};

struct ConfigurationError : std::runtime_error {
    explicit ConfigurationError(const std::string& msg) : std::runtime_error("configuration error: " + msg) {}
};

struct InvalidRestriction : std::runtime_error {
    explicit InvalidRestriction(const std::string& msg) : std::runtime_error("invalid restriction: " + msg) {}
};

struct NotSeparable : std::runtime_error {
    explicit NotSeparable(const std::string& msg) : std::runtime_error("not separable: " + msg) {}
};

struct InvalidMode : std::runtime_error {
    explicit InvalidMode(const std::string& msg) : std::runtime_error("invalid mode: " + msg) {}
};

struct ParityError : std::runtime_error {
    explicit ParityError(const std::string& msg) : std::runtime_error("parity error: " + msg) {}
};

struct SupportViolation : std::runtime_error {
    explicit SupportViolation(const std::string& msg) : std::runtime_error("support violation: " + msg) {}
};

struct InvalidShift : std::runtime_error {
    explicit InvalidShift(const std::string& msg) : std::runtime_error("invalid shift: " + msg) {}
};

struct AdmissibilityError : std::runtime_error {
    explicit AdmissibilityError(const std::string& msg) : std::runtime_error("inadmissible potential: " + msg) {}
};

struct DegenerateGroundState : std::runtime_error {
    explicit DegenerateGroundState(const std::string& msg) : std::runtime_error("degenerate ground state: " + msg) {}
};

struct ParameterError : std::runtime_error {
    explicit ParameterError(const std::string& msg) : std::runtime_error("parameter error: " + msg) {}
};

struct SingularityError : std::runtime_error {
    explicit SingularityError(const std::string& msg) : std::runtime_error("singular solve: " + msg) {}
};

struct FitRangeError : std::runtime_error {
    explicit FitRangeError(const std::string& msg) : std::runtime_error("fit range: " + msg) {}
};

struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& msg) : std::runtime_error("precondition: " + msg) {}
};

}  // namespace trimwave
