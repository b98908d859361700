#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace invar {

enum class ErrorCode {
    NoSuchRoot,
    BadConductor,
    DivisionByZero,
    OrderBoundExceeded,
    NonInvertible,
    DimensionMismatch,
    NotAHomomorphism,
    NotAnAutomorphism,
    ModularCharacteristic,
    SizeGuardExceeded,
    LengthGuard,
    SizeGuard,
    ZeroScale,
    UnknownEntry,
    ValidationFailure,
    CheckFailure,
    InvarianceFailure,
    ParseError,
    IoError,
    FieldMismatch,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::NoSuchRoot: return "NoSuchRoot";
        case ErrorCode::BadConductor: return "BadConductor";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::OrderBoundExceeded: return "OrderBoundExceeded";
        case ErrorCode::NonInvertible: return "NonInvertible";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
        case ErrorCode::NotAnAutomorphism: return "NotAnAutomorphism";
        case ErrorCode::ModularCharacteristic: return "ModularCharacteristic";
        case ErrorCode::SizeGuardExceeded: return "SizeGuardExceeded";
        case ErrorCode::LengthGuard: return "LengthGuard";
        case ErrorCode::SizeGuard: return "SizeGuard";
        case ErrorCode::ZeroScale: return "ZeroScale";
        case ErrorCode::UnknownEntry: return "UnknownEntry";
        case ErrorCode::ValidationFailure: return "ValidationFailure";
        case ErrorCode::CheckFailure: return "CheckFailure";
        case ErrorCode::InvarianceFailure: return "InvarianceFailure";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
    }
    return "Unknown";
}

// Global knobs set once by the CLI / test harness before computations start.
struct Config {
    // Refuse any single enumeration whose monomial count exceeds this.
    std::uint64_t monomial_guard = 5'000'000;
    // Worker count for the OpenMP kernels; 1 selects the serial reference path.
    int jobs = 0; // 0 = autodetect at first use
};

Config& config();

// Deterministic xorshift-based generator. std::mt19937_64 is portable but the
// standard distributions are not; all sampling goes through these helpers.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next() {
        std::uint64_t x = state_;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        state_ = x;
        return x;
    }

    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    // uniform in [lo, hi]
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

} // namespace invar
