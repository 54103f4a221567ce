#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gmr {

/// One axiom / condition checked by a validator.
struct CheckResult {
    std::string name;
    bool passed = false;
    std::string witness;  // empty when passed; otherwise a concrete counterexample
};

struct ValidationReport {
    std::vector<CheckResult> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }

    const CheckResult* first_failure() const {
        for (const auto& c : checks)
            if (!c.passed) return &c;
        return nullptr;
    }

    std::string summary() const;
};

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Construction of a checked object failed one of its axioms.
struct ValidationError : Error {
    ValidationReport report;
    explicit ValidationError(ValidationReport r)
        : Error("validation failed: " + r.summary()), report(std::move(r)) {}
};

/// Endpoints of maps or components of a composite structure do not line up.
struct WiringError : Error {
    using Error::Error;
};

struct InvalidOrderError : Error {
    using Error::Error;
};

struct NotAUnitError : Error {
    using Error::Error;
};

struct NotIdempotentError : Error {
    using Error::Error;
};

struct NoDecompositionError : Error {
    using Error::Error;
};

struct SearchBoundExceeded : Error {
    std::uint32_t size;
    std::uint32_t bound;
    SearchBoundExceeded(std::uint32_t size_, std::uint32_t bound_)
        : Error("carrier size " + std::to_string(size_) + " exceeds search bound " +
                std::to_string(bound_)),
          size(size_),
          bound(bound_) {}
};

struct ConfigError : Error {
    std::string object;  // name of the offending config object, empty for file-level errors
    explicit ConfigError(const std::string& msg, std::string object_ = {})
        : Error(msg), object(std::move(object_)) {}
};

}  // namespace gmr
