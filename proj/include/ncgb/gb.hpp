#ifndef NCGB_GB_HPP
#define NCGB_GB_HPP

#include <iosfwd>
#include <limits>
#include <vector>

#include "ncgb/certificate.hpp"
#include "ncgb/order.hpp"

namespace ncgb {

/// A polynomial carrying a cofactor representation w.r.t. a fixed generator
/// list; cert always expands to poly.
struct TracedPolynomial {
    Polynomial poly;
    Certificate cert;

    bool is_zero() const { return poly.is_zero(); }
};

/// Overlap or inclusion of two leading words. l1*lm(i)*r1 == l2*lm(j)*r2 is
/// the common multiple; [a1,b1) and [a2,b2) are the two occurrences in it.
struct Ambiguity {
    enum class Kind { Overlap, Inclusion };
    Kind kind = Kind::Overlap;
    std::uint32_t i = 0, j = 0;
    Word l1, r1, l2, r2;
    Word multiple;
    std::size_t a1 = 0, b1 = 0, a2 = 0, b2 = 0;

    std::size_t degree() const { return multiple.degree(); }
};

struct GBOptions {
    int maxiter = 10;
    int maxdeg = std::numeric_limits<int>::max();
    bool trace_cofactors = true;
    bool criterion = true;
    bool reset = true;
    bool parallel = true;  // batch S-polynomial reduction via OpenMP
    int verbose = 0;
    std::ostream* diag = nullptr;  // progress stream ("Starting iteration n...")
    bool tail_reduce = true;       // keep basis tails reduced after each iteration
};

/// All overlap/inclusion ambiguities among the basis leading words whose
/// common multiple has degree <= maxdeg, sorted by (degree, i, j, position).
std::vector<Ambiguity> find_ambiguities(const std::vector<TracedPolynomial>& basis,
                                        const MonomialOrder& order,
                                        int maxdeg = std::numeric_limits<int>::max());

/// The two that involve element n against everything at or below it.
std::vector<Ambiguity> ambiguities_with(const std::vector<Word>& lms, std::uint32_t n,
                                        int maxdeg);

TracedPolynomial s_polynomial(const Ambiguity& amb, const std::vector<TracedPolynomial>& basis,
                              const MonomialOrder& order, bool trace = true);

/// Two-sided ideal of the free algebra with completion state. Generators are
/// fixed at construction; the partial basis always contains their monic
/// traced forms and every basis element's certificate expands to itself.
class NCIdeal {
public:
    explicit NCIdeal(std::vector<Polynomial> gens);
    NCIdeal(std::vector<Polynomial> gens, MonomialOrder order);

    const std::vector<Polynomial>& gens() const { return gens_; }
    const MonomialOrder& order() const { return order_; }
    const AlgebraPtr& algebra() const { return alg_; }

    std::vector<TracedPolynomial> groebner_basis(const GBOptions& opts = {});
    TracedPolynomial reduced_form(const Polynomial& f, const GBOptions& opts = {});

    // Strategy switches, mostly for experiments; both re-run reset().
    void set_generator_prepass(bool on);
    void set_newest_first(bool on);

    // Incremental driving (used by certify and the search heuristics).
    void reset();
    /// One completion iteration: reduce all pending ambiguities of minimal
    /// common-multiple degree, adjoin the survivors, tail-reduce. Returns
    /// false when there was nothing left to do.
    bool step(const GBOptions& opts);
    /// Reduce against the current partial basis without completing further.
    TracedPolynomial reduce_only(const Polynomial& f) const;
    /// Same reduction without the cofactor trace; for membership tests.
    Polynomial normal_form(const Polynomial& f) const;

    const std::vector<TracedPolynomial>& basis() const { return basis_; }
    int iterations_done() const { return iterations_; }
    bool complete() const { return pending_.empty(); }

private:
    AlgebraPtr alg_;
    std::vector<Polynomial> gens_;
    MonomialOrder order_;

    struct Elem {
        Polynomial poly;          // monic
        Certificate cert;
        std::vector<Term> sorted;  // descending under order_
        Word lm;
    };
    std::vector<Elem> elems_;
    std::vector<TracedPolynomial> basis_;  // mirrors elems_
    std::vector<Ambiguity> pending_;
    int iterations_ = 0;
    int built_maxdeg_ = 0;  // maxdeg the pending set was generated for
    bool prepass_ = true;
    bool newest_first_ = false;

    void build(int maxdeg);
    void adjoin(Polynomial p, Certificate c, int maxdeg);
    void enqueue_for(std::uint32_t n, int maxdeg);
    bool composite(const Ambiguity& a) const;
    void tail_reduce_all();

    friend struct GBDetail;
};

/// Mutual reduction until no element's monomial is divisible by another's
/// leading word; results are monic with maintained certificates. Zero
/// reductions drop out.
std::vector<TracedPolynomial> interreduce(const std::vector<TracedPolynomial>& G,
                                          const MonomialOrder& order);

}  // namespace ncgb

#endif
