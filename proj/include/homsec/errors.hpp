#pragma once

// Structured errors shared by all homsec modules.  Every failure that a
// caller can act on carries a machine-readable code; the message is for
// humans and may additionally carry an input line number (file parsing).

#include <optional>
#include <stdexcept>
#include <string>

namespace homsec {

enum class errc {
    // structure validation
    wrong_cardinality,
    out_of_range,
    duplicate_minset,
    uncovered_participant,
    empty_basis,
    invalid_size,
    too_small,
    // reduction
    intransitivity_detected,
    // bounds
    unverified_certificate,
    independence_violated,
    config_invalid,
    search_exhausted,
    // linear schemes
    not_prime,
    field_too_small,
    dimension_mismatch,
    not_qualified,
    inconsistent_shares,
    missing_share,
    cap_exceeded,
    // classifier
    not_reduced_threshold,
    evidence_verification_failed,
    // io
    syntax_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::wrong_cardinality: return "wrong-cardinality";
        case errc::out_of_range: return "out-of-range";
        case errc::duplicate_minset: return "duplicate-minset";
        case errc::uncovered_participant: return "uncovered-participant";
        case errc::empty_basis: return "empty-basis";
        case errc::invalid_size: return "invalid-size";
        case errc::too_small: return "too-small";
        case errc::intransitivity_detected: return "intransitivity-detected";
        case errc::unverified_certificate: return "unverified-certificate";
        case errc::independence_violated: return "independence-violated";
        case errc::config_invalid: return "config-invalid";
        case errc::search_exhausted: return "search-exhausted";
        case errc::not_prime: return "not-prime";
        case errc::field_too_small: return "field-too-small";
        case errc::dimension_mismatch: return "dimension-mismatch";
        case errc::not_qualified: return "not-qualified";
        case errc::inconsistent_shares: return "inconsistent-shares";
        case errc::missing_share: return "missing-share";
        case errc::cap_exceeded: return "cap-exceeded";
        case errc::not_reduced_threshold: return "not-reduced-threshold";
        case errc::evidence_verification_failed: return "evidence-verification-failed";
        case errc::syntax_error: return "syntax-error";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(errc code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    Error(errc code, std::string message, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + std::move(message)),
          code_(code),
          line_(line) {}

    errc code() const noexcept { return code_; }
    std::optional<int> line() const noexcept { return line_; }

private:
    errc code_;
    std::optional<int> line_;
};

}  // namespace homsec
