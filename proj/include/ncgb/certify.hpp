#ifndef NCGB_CERTIFY_HPP
#define NCGB_CERTIFY_HPP

#include <iosfwd>
#include <optional>
#include <vector>

#include "ncgb/gb.hpp"
#include "ncgb/quiver.hpp"

namespace ncgb {

struct CertifyOptions {
    int maxiter = 10;
    std::optional<MonomialOrder> order;
    std::optional<Quiver> quiver;
    bool parallel = true;
    std::ostream* diag = nullptr;  // progress + warnings
};

/// Outcome of a certify run. `failed` means the memberships could not be
/// verified within the iteration budget; it never asserts non-membership.
struct CertifyReport {
    enum class Status { Proved, Failed };
    Status status = Status::Failed;
    std::vector<Certificate> proofs;     // one per claim when proved
    std::vector<bool> integer_clean;     // per proof
    int iterations_used = 0;

    bool proved() const { return status == Status::Proved; }
    bool all_integer_clean() const;
};

class QuiverError : public UsageError {
public:
    using UsageError::UsageError;
};

/// Verify ideal membership of every claim in the ideal generated by the
/// assumptions, producing certificates that expand exactly to the claims.
CertifyReport certify(const std::vector<Polynomial>& assumptions,
                      const std::vector<Polynomial>& claims, const CertifyOptions& opts = {});
CertifyReport certify(const std::vector<Polynomial>& assumptions, const Polynomial& claim,
                      const CertifyOptions& opts = {});

}  // namespace ncgb

#endif
