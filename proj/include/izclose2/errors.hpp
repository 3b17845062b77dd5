#pragma once

#include <stdexcept>
#include <string>

namespace izclose2 {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Generator set lacks a pure power of x or of y.
struct NotMPrimary : Error {
    explicit NotMPrimary(const std::string& what) : Error(what) {}
};

// Operation requires an integrally closed ideal.
struct NotClosed : Error {
    explicit NotClosed(const std::string& what) : Error(what) {}
};

// Nakayama scan hit the degree bound; the input ideal is not m-primary.
struct Diverged : Error {
    int bound;
    explicit Diverged(int bound_)
        : Error("no Nakayama cutoff found up to degree " + std::to_string(bound_)),
          bound(bound_) {}
};

struct UncertifiedCutoff : Error {
    explicit UncertifiedCutoff(const std::string& what) : Error(what) {}
};

// Witness combinations not found within the degree bound.
struct CannotCertify : Error {
    int bound;
    CannotCertify(const std::string& what, int bound_) : Error(what), bound(bound_) {}
};

struct RankDeficient : Error {
    explicit RankDeficient(const std::string& what) : Error(what) {}
};

struct NotMonomialClosure : Error {
    explicit NotMonomialClosure(const std::string& what) : Error(what) {}
};

struct NotInFamily : Error {
    explicit NotInFamily(const std::string& what) : Error(what) {}
};

struct NormalizationFailed : Error {
    std::string step;
    NormalizationFailed(const std::string& step_, const std::string& what)
        : Error("normalization failed at step " + step_ + ": " + what), step(step_) {}
};

struct CertificateUnavailable : Error {
    explicit CertificateUnavailable(const std::string& reason)
        : Error("no indecomposability certificate applies: " + reason) {}
};

struct GenericityExhausted : Error {
    explicit GenericityExhausted(const std::string& what) : Error(what) {}
};

struct NoSocle : Error {
    explicit NoSocle(const std::string& what) : Error(what) {}
};

struct SearchExhausted : Error {
    explicit SearchExhausted(const std::string& what) : Error(what) {}
};

struct MinorsMismatch : Error {
    explicit MinorsMismatch(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    std::size_t offset;
    std::string expected;
    ParseError(std::size_t offset_, const std::string& expected_)
        : Error("parse error at offset " + std::to_string(offset_) + ": expected " + expected_),
          offset(offset_), expected(expected_) {}
};

} // namespace izclose2
