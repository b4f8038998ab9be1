#pragma once

#include <stdexcept>
#include <string>

namespace aztec {

/// Gamma function (or rising factorial) evaluated at a nonpositive integer.
struct PoleError : std::domain_error {
    explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

/// Gamma arguments cannot be paired off with integer differences; the ratio
/// is not a rational number.
struct PairingError : std::domain_error {
    explicit PairingError(const std::string& what) : std::domain_error(what) {}
};

/// Brute-force enumeration refused: instance exceeds the configured cap.
struct CapExceededError : std::runtime_error {
    explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace aztec
