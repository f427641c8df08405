#ifndef NCGB_CERTDOC_HPP
#define NCGB_CERTDOC_HPP

#include <string>
#include <vector>

#include "ncgb/certificate.hpp"

namespace ncgb {

/// Machine-readable certificate document: everything needed to re-verify a
/// certify run with plain arithmetic against the original problem file.
struct CertificateDocument {
    std::string tool = "ncgb";
    std::string version = "0.1.0";
    std::string status;               // "proved" or "failed"
    std::vector<std::string> claims;  // formatted polynomials
    std::vector<Certificate> certificates;
    std::vector<bool> integer_clean;
    int iterations = 0;
    double timing_ms = 0.0;

    /// Deterministic except for the timing field.
    std::string serialize(const Algebra& alg) const;
    static CertificateDocument parse(const std::string& text, const AlgebraPtr& alg);
};

}  // namespace ncgb

#endif
