#ifndef NCGB_LOGIC_HPP
#define NCGB_LOGIC_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ncgb/certificate.hpp"
#include "ncgb/gb.hpp"

namespace ncgb {

/// A sort (u, v): morphisms from U to V.
struct Sort {
    std::string src, dst;
    bool operator==(const Sort& o) const { return src == o.src && dst == o.dst; }
    bool operator!=(const Sort& o) const { return !(*this == o); }
};

class SortContext {
public:
    void declare(const std::string& var, Sort s);
    const Sort& sort_of(const std::string& var) const;
    bool has(const std::string& var) const { return vars_.count(var) != 0; }

private:
    std::map<std::string, Sort> vars_;
};

class OpTerm;
using OpTermPtr = std::shared_ptr<const OpTerm>;

/// Sorted operator term. Ill-sorted trees cannot be constructed; sums need
/// equal sorts and products compose like morphisms (the right factor acts
/// first). Negation and repeated sums give the Z-linear combinations the
/// Herbrand enumeration ranges over.
class OpTerm {
public:
    enum class Kind { Var, Zero, Sum, Prod, Neg };

    static OpTermPtr var(std::string name, Sort s);
    static OpTermPtr zero(Sort s);
    static OpTermPtr sum(OpTermPtr a, OpTermPtr b);
    static OpTermPtr prod(OpTermPtr a, OpTermPtr b);
    static OpTermPtr neg(OpTermPtr a);

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    const Sort& sort() const { return sort_; }
    const OpTermPtr& lhs() const { return a_; }
    const OpTermPtr& rhs() const { return b_; }

    std::string str() const;

private:
    Kind kind_;
    std::string name_;
    Sort sort_;
    OpTermPtr a_, b_;
    OpTerm(Kind k, std::string n, Sort s, OpTermPtr a, OpTermPtr b);
};

int opterm_cmp(const OpTermPtr& a, const OpTermPtr& b);
OpTermPtr substitute(const OpTermPtr& t, const std::map<std::string, OpTermPtr>& sub);

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// First-order operator statement over equations of terms. `and`/`or` are
/// treated associative-commutative; s != t is notation for !(s = t).
class Formula {
public:
    enum class Kind { Eq, Not, And, Or, Implies, Forall, Exists };

    static FormulaPtr eq(OpTermPtr s, OpTermPtr t);
    static FormulaPtr neq(OpTermPtr s, OpTermPtr t) { return lnot(eq(s, t)); }
    static FormulaPtr lnot(FormulaPtr f);
    static FormulaPtr land(FormulaPtr a, FormulaPtr b);
    static FormulaPtr lor(FormulaPtr a, FormulaPtr b);
    static FormulaPtr implies(FormulaPtr a, FormulaPtr b);
    static FormulaPtr forall(std::string var, Sort s, FormulaPtr body);
    static FormulaPtr exists(std::string var, Sort s, FormulaPtr body);

    Kind kind() const { return kind_; }
    const OpTermPtr& lhs_term() const { return s_; }
    const OpTermPtr& rhs_term() const { return t_; }
    const FormulaPtr& lhs() const { return a_; }
    const FormulaPtr& rhs() const { return b_; }
    const std::string& var() const { return var_; }
    const Sort& var_sort() const { return sort_; }

    bool quantifier_free() const;
    bool closed() const;
    enum class Shape { Universal, Existential, ForallExists, QuantifierFree, Other };
    Shape shape() const;

    std::string str() const;

private:
    Kind kind_;
    OpTermPtr s_, t_;
    FormulaPtr a_, b_;
    std::string var_;
    Sort sort_;
    Formula(Kind k) : kind_(k) {}
};

FormulaPtr substitute(const FormulaPtr& f, const std::map<std::string, OpTermPtr>& sub);

/// One clause of a conjunctive normal form: a disjunction of disequalities
/// and equalities, literal lists sorted and deduplicated.
struct Clause {
    std::vector<std::pair<OpTermPtr, OpTermPtr>> diseqs;
    std::vector<std::pair<OpTermPtr, OpTermPtr>> eqs;

    bool operator==(const Clause& o) const;
};

/// The unique normal form from exhaustively eliminating implications, moving
/// negations inwards and distributing 'or' over 'and', modulo AC.
std::vector<Clause> cnf(const FormulaPtr& quantifier_free);

/// Evaluate a quantifier-free formula / clause set under a truth assignment
/// of its atomic equations (used to cross-check cnf).
bool eval_formula(const FormulaPtr& f,
                  const std::function<bool(const OpTermPtr&, const OpTermPtr&)>& atom);
bool eval_clauses(const std::vector<Clause>& cs,
                  const std::function<bool(const OpTermPtr&, const OpTermPtr&)>& atom);

/// Clause turned into polynomial ideal-membership data: the clause is true
/// iff some candidate lies in the ideal of the generators.
struct IdealisationTask {
    std::vector<Polynomial> generators;
    std::vector<Polynomial> candidates;
};

/// Variable environment tying statement variables to an algebra.
struct StatementEnv {
    AlgebraPtr alg;
    AdjointMap adj;                          // may be empty
    std::map<std::string, VarIndex> index;   // var name -> algebra index
};

Polynomial to_polynomial(const OpTermPtr& t, const StatementEnv& env);

/// Idealisation of a universal statement: one task per CNF clause of the
/// matrix (equation s = t becomes s - t, zero constants become 0).
std::vector<IdealisationTask> idealise(const FormulaPtr& universal, const StatementEnv& env);

struct TaskResult {
    bool proved = false;
    std::size_t candidate = 0;
    Certificate cert;
};
TaskResult check_task(const IdealisationTask& task, int maxiter);

/// Bounds for one Herbrand enumeration stage: words of degree <= degree,
/// Z-linear combinations of <= summands of them with |coefficient| <= coeff
/// (plus the zero constant).
struct TermBounds {
    int degree = 3;
    int summands = 1;
    int coeff = 1;
};

/// A closed forall-exists statement ready for the semi-decision procedure.
struct Statement {
    StatementEnv env;
    SortContext sorts;
    std::vector<std::string> universals;  // declared order
    struct Existential {
        std::string name;
        Sort sort;
        std::optional<std::string> adjoint_name;
    };
    std::vector<Existential> existentials;
    FormulaPtr matrix;

    /// Letters available to instantiation terms: the universal variables and
    /// their declared adjoint partners.
    std::vector<std::string> herbrand_alphabet() const;
};

/// All well-sorted instantiation terms for one target sort within bounds,
/// in a fair deterministic order (zero, then by degree / word / coefficient).
std::vector<OpTermPtr> herbrand_terms_for(const Statement& st, const Sort& target,
                                          const TermBounds& bounds);

/// Tuples of instantiation terms for all existential variables.
std::vector<std::vector<OpTermPtr>> herbrand_tuples(const Statement& st,
                                                    const TermBounds& bounds);

struct ProveStage {
    TermBounds bounds;
    int maxiter = 10;
};

struct ProveBudget {
    std::vector<ProveStage> stages;
    bool unbounded = false;  // keep growing degree past the last stage
    std::ostream* diag = nullptr;

    static ProveBudget standard();
};

struct ProveResult {
    bool proved = false;
    std::vector<std::pair<std::string, OpTermPtr>> witness;  // existential -> term
    std::vector<Polynomial> generators;
    std::vector<Polynomial> certified_claims;
    std::vector<Certificate> certificates;  // one per certified claim
    int instantiations_tried = 0;
    int stages_used = 0;
};

/// Bounded Gilmore-style loop: enumerate Herbrand instantiations, idealise,
/// and verify memberships with a growing operation budget. Returns proved
/// with witnesses and certificates, or exhausted (proved = false) at the end
/// of the budget. With budget.unbounded the loop only stops on success.
ProveResult semi_decide(const Statement& st, const ProveBudget& budget);

}  // namespace ncgb

#endif
