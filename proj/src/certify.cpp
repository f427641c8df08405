#include "ncgb/certify.hpp"

#include <cassert>
#include <ostream>

namespace ncgb {

bool CertifyReport::all_integer_clean() const {
    for (bool b : integer_clean)
        if (!b) return false;
    return true;
}

CertifyReport certify(const std::vector<Polynomial>& assumptions, const Polynomial& claim,
                      const CertifyOptions& opts) {
    return certify(assumptions, std::vector<Polynomial>{claim}, opts);
}

CertifyReport certify(const std::vector<Polynomial>& assumptions,
                      const std::vector<Polynomial>& claims, const CertifyOptions& opts) {
    if (assumptions.empty()) throw UsageError("certify: no assumptions given");
    const AlgebraPtr& alg = assumptions[0].algebra();
    for (const auto& c : claims)
        if (!c.is_zero() && !c.algebra()->same_as(*alg))
            throw UsageError("certify: claim over a different algebra");

    if (opts.quiver) {
        for (const auto& a : assumptions)
            if (!opts.quiver->is_compatible(a))
                throw QuiverError("The assumption " + format_polynomial(a) +
                                  " is not compatible with the quiver");
        for (const auto& c : claims)
            if (!opts.quiver->is_compatible(c))
                throw QuiverError("The claim " + format_polynomial(c) +
                                  " is not compatible with the quiver");
    }

    NCIdeal ideal = opts.order ? NCIdeal(assumptions, *opts.order) : NCIdeal(assumptions);
    GBOptions gb;
    gb.maxiter = opts.maxiter;
    gb.parallel = opts.parallel;
    gb.diag = opts.diag;
    gb.reset = false;

    CertifyReport report;
    report.proofs.assign(claims.size(), Certificate());
    report.integer_clean.assign(claims.size(), true);
    std::vector<bool> done(claims.size(), false);

    auto attempt = [&]() {
        bool all = true;
        for (std::size_t k = 0; k < claims.size(); ++k) {
            if (done[k]) continue;
            TracedPolynomial r = ideal.reduce_only(claims[k]);
            if (r.poly.is_zero()) {
                done[k] = true;
                report.proofs[k] = std::move(r.cert);
            } else {
                all = false;
            }
        }
        return all;
    };

    bool proved = attempt();
    while (!proved && ideal.iterations_done() < opts.maxiter) {
        if (!ideal.step(gb)) break;  // full Groebner basis reached
        proved = attempt();
    }

    report.iterations_used = ideal.iterations_done();
    report.status = proved ? CertifyReport::Status::Proved : CertifyReport::Status::Failed;
    if (proved) {
        for (std::size_t k = 0; k < claims.size(); ++k) {
            assert(report.proofs[k].expand(alg, assumptions) == claims[k]);
            report.integer_clean[k] = report.proofs[k].integer_clean();
            if (!report.integer_clean[k] && opts.diag)
                *opts.diag << "Warning: the cofactor representation of "
                           << format_polynomial(claims[k])
                           << " has non-integer coefficients." << std::endl;
        }
    } else {
        report.proofs.clear();
        report.integer_clean.clear();
    }
    return report;
}

}  // namespace ncgb
