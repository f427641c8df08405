#include "ncgb/logic.hpp"

#include <algorithm>
#include <ostream>
#include <set>

namespace ncgb {

void SortContext::declare(const std::string& var, Sort s) {
    auto [it, fresh] = vars_.emplace(var, std::move(s));
    if (!fresh && !(it->second == s)) throw UsageError("conflicting sort for '" + var + "'");
}

const Sort& SortContext::sort_of(const std::string& var) const {
    auto it = vars_.find(var);
    if (it == vars_.end()) throw UsageError("no sort declared for '" + var + "'");
    return it->second;
}

OpTerm::OpTerm(Kind k, std::string n, Sort s, OpTermPtr a, OpTermPtr b)
    : kind_(k), name_(std::move(n)), sort_(std::move(s)), a_(std::move(a)), b_(std::move(b)) {}

OpTermPtr OpTerm::var(std::string name, Sort s) {
    return OpTermPtr(new OpTerm(Kind::Var, std::move(name), std::move(s), nullptr, nullptr));
}

OpTermPtr OpTerm::zero(Sort s) {
    return OpTermPtr(new OpTerm(Kind::Zero, "0", std::move(s), nullptr, nullptr));
}

OpTermPtr OpTerm::sum(OpTermPtr a, OpTermPtr b) {
    if (a->sort() != b->sort()) throw UsageError("sum of terms of different sorts");
    Sort s = a->sort();
    return OpTermPtr(new OpTerm(Kind::Sum, "", std::move(s), std::move(a), std::move(b)));
}

OpTermPtr OpTerm::prod(OpTermPtr a, OpTermPtr b) {
    // a : V -> W composed with b : U -> V gives ab : U -> W.
    if (a->sort().src != b->sort().dst)
        throw UsageError("ill-sorted product: " + a->str() + " * " + b->str());
    Sort s{b->sort().src, a->sort().dst};
    return OpTermPtr(new OpTerm(Kind::Prod, "", std::move(s), std::move(a), std::move(b)));
}

OpTermPtr OpTerm::neg(OpTermPtr a) {
    Sort s = a->sort();
    return OpTermPtr(new OpTerm(Kind::Neg, "", std::move(s), std::move(a), nullptr));
}

std::string OpTerm::str() const {
    switch (kind_) {
        case Kind::Var: return name_;
        case Kind::Zero: return "0";
        case Kind::Sum: return "(" + a_->str() + " + " + b_->str() + ")";
        case Kind::Prod: {
            auto factor = [](const OpTermPtr& t) {
                return t->kind() == Kind::Var || t->kind() == Kind::Zero ||
                               t->kind() == Kind::Prod
                           ? t->str()
                           : "(" + t->str() + ")";
            };
            return factor(a_) + "*" + factor(b_);
        }
        case Kind::Neg: return "-" + a_->str();
    }
    return "?";
}

int opterm_cmp(const OpTermPtr& a, const OpTermPtr& b) {
    if (a == b) return 0;
    if ((int)a->kind() != (int)b->kind()) return (int)a->kind() < (int)b->kind() ? -1 : 1;
    if (a->name() != b->name()) return a->name() < b->name() ? -1 : 1;
    if (a->sort().src != b->sort().src) return a->sort().src < b->sort().src ? -1 : 1;
    if (a->sort().dst != b->sort().dst) return a->sort().dst < b->sort().dst ? -1 : 1;
    if (!a->lhs() != !b->lhs()) return !a->lhs() ? -1 : 1;
    if (a->lhs()) {
        int c = opterm_cmp(a->lhs(), b->lhs());
        if (c) return c;
    }
    if (!a->rhs() != !b->rhs()) return !a->rhs() ? -1 : 1;
    if (a->rhs()) return opterm_cmp(a->rhs(), b->rhs());
    return 0;
}

OpTermPtr substitute(const OpTermPtr& t, const std::map<std::string, OpTermPtr>& sub) {
    switch (t->kind()) {
        case OpTerm::Kind::Var: {
            auto it = sub.find(t->name());
            if (it == sub.end()) return t;
            if (!(it->second->sort() == t->sort()))
                throw UsageError("substitution changes the sort of '" + t->name() + "'");
            return it->second;
        }
        case OpTerm::Kind::Zero: return t;
        case OpTerm::Kind::Sum:
            return OpTerm::sum(substitute(t->lhs(), sub), substitute(t->rhs(), sub));
        case OpTerm::Kind::Prod:
            return OpTerm::prod(substitute(t->lhs(), sub), substitute(t->rhs(), sub));
        case OpTerm::Kind::Neg: return OpTerm::neg(substitute(t->lhs(), sub));
    }
    return t;
}

FormulaPtr Formula::eq(OpTermPtr s, OpTermPtr t) {
    if (!(s->sort() == t->sort())) throw UsageError("equation between different sorts");
    auto f = new Formula(Kind::Eq);
    f->s_ = std::move(s);
    f->t_ = std::move(t);
    return FormulaPtr(f);
}

FormulaPtr Formula::lnot(FormulaPtr x) {
    auto f = new Formula(Kind::Not);
    f->a_ = std::move(x);
    return FormulaPtr(f);
}

FormulaPtr Formula::land(FormulaPtr a, FormulaPtr b) {
    auto f = new Formula(Kind::And);
    f->a_ = std::move(a);
    f->b_ = std::move(b);
    return FormulaPtr(f);
}

FormulaPtr Formula::lor(FormulaPtr a, FormulaPtr b) {
    auto f = new Formula(Kind::Or);
    f->a_ = std::move(a);
    f->b_ = std::move(b);
    return FormulaPtr(f);
}

FormulaPtr Formula::implies(FormulaPtr a, FormulaPtr b) {
    auto f = new Formula(Kind::Implies);
    f->a_ = std::move(a);
    f->b_ = std::move(b);
    return FormulaPtr(f);
}

FormulaPtr Formula::forall(std::string var, Sort s, FormulaPtr body) {
    auto f = new Formula(Kind::Forall);
    f->var_ = std::move(var);
    f->sort_ = std::move(s);
    f->a_ = std::move(body);
    return FormulaPtr(f);
}

FormulaPtr Formula::exists(std::string var, Sort s, FormulaPtr body) {
    auto f = new Formula(Kind::Exists);
    f->var_ = std::move(var);
    f->sort_ = std::move(s);
    f->a_ = std::move(body);
    return FormulaPtr(f);
}

bool Formula::quantifier_free() const {
    switch (kind_) {
        case Kind::Eq: return true;
        case Kind::Not: return a_->quantifier_free();
        case Kind::And:
        case Kind::Or:
        case Kind::Implies: return a_->quantifier_free() && b_->quantifier_free();
        default: return false;
    }
}

namespace {

void free_vars(const OpTermPtr& t, std::set<std::string>& out) {
    if (!t) return;
    if (t->kind() == OpTerm::Kind::Var) out.insert(t->name());
    free_vars(t->lhs(), out);
    free_vars(t->rhs(), out);
}

void free_vars(const FormulaPtr& f, std::set<std::string>& bound, std::set<std::string>& out) {
    switch (f->kind()) {
        case Formula::Kind::Eq: {
            std::set<std::string> vs;
            free_vars(f->lhs_term(), vs);
            free_vars(f->rhs_term(), vs);
            for (const auto& v : vs)
                if (!bound.count(v)) out.insert(v);
            return;
        }
        case Formula::Kind::Not: free_vars(f->lhs(), bound, out); return;
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Implies:
            free_vars(f->lhs(), bound, out);
            free_vars(f->rhs(), bound, out);
            return;
        case Formula::Kind::Forall:
        case Formula::Kind::Exists: {
            bool fresh = bound.insert(f->var()).second;
            free_vars(f->lhs(), bound, out);
            if (fresh) bound.erase(f->var());
            return;
        }
    }
}

}  // namespace

bool Formula::closed() const {
    std::set<std::string> bound, free;
    FormulaPtr self(this, [](const Formula*) {});
    free_vars(self, bound, free);
    return free.empty();
}

Formula::Shape Formula::shape() const {
    const Formula* f = this;
    bool any_forall = false, any_exists = false;
    while (f->kind_ == Kind::Forall) {
        any_forall = true;
        f = f->a_.get();
    }
    if (f->quantifier_free())
        return any_forall ? Shape::Universal : Shape::QuantifierFree;
    while (f->kind_ == Kind::Exists) {
        any_exists = true;
        f = f->a_.get();
    }
    if (!f->quantifier_free()) return Shape::Other;
    if (any_forall && any_exists) return Shape::ForallExists;
    if (any_exists) return Shape::Existential;
    return Shape::Other;
}

std::string Formula::str() const {
    switch (kind_) {
        case Kind::Eq: return s_->str() + " = " + t_->str();
        case Kind::Not:
            if (a_->kind() == Kind::Eq)
                return a_->lhs_term()->str() + " != " + a_->rhs_term()->str();
            return "~(" + a_->str() + ")";
        case Kind::And: return "(" + a_->str() + " & " + b_->str() + ")";
        case Kind::Or: return "(" + a_->str() + " | " + b_->str() + ")";
        case Kind::Implies: return "(" + a_->str() + " -> " + b_->str() + ")";
        case Kind::Forall:
            return "forall " + var_ + " : " + sort_.src + " -> " + sort_.dst + " . " + a_->str();
        case Kind::Exists:
            return "exists " + var_ + " : " + sort_.src + " -> " + sort_.dst + " . " + a_->str();
    }
    return "?";
}

FormulaPtr substitute(const FormulaPtr& f, const std::map<std::string, OpTermPtr>& sub) {
    switch (f->kind()) {
        case Formula::Kind::Eq:
            return Formula::eq(substitute(f->lhs_term(), sub), substitute(f->rhs_term(), sub));
        case Formula::Kind::Not: return Formula::lnot(substitute(f->lhs(), sub));
        case Formula::Kind::And:
            return Formula::land(substitute(f->lhs(), sub), substitute(f->rhs(), sub));
        case Formula::Kind::Or:
            return Formula::lor(substitute(f->lhs(), sub), substitute(f->rhs(), sub));
        case Formula::Kind::Implies:
            return Formula::implies(substitute(f->lhs(), sub), substitute(f->rhs(), sub));
        case Formula::Kind::Forall:
        case Formula::Kind::Exists: {
            if (sub.count(f->var())) {
                auto inner = sub;
                inner.erase(f->var());
                auto body = substitute(f->lhs(), inner);
                return f->kind() == Formula::Kind::Forall
                           ? Formula::forall(f->var(), f->var_sort(), body)
                           : Formula::exists(f->var(), f->var_sort(), body);
            }
            auto body = substitute(f->lhs(), sub);
            return f->kind() == Formula::Kind::Forall
                       ? Formula::forall(f->var(), f->var_sort(), body)
                       : Formula::exists(f->var(), f->var_sort(), body);
        }
    }
    return f;
}

// ---------------------------------------------------------------------------
// CNF

namespace {

struct Literal {
    OpTermPtr s, t;
    bool negated;
};

int literal_cmp(const Literal& a, const Literal& b) {
    if (a.negated != b.negated) return a.negated ? -1 : 1;
    int c = opterm_cmp(a.s, b.s);
    if (c) return c;
    return opterm_cmp(a.t, b.t);
}

Literal make_literal(const OpTermPtr& s, const OpTermPtr& t, bool negated) {
    // orient the equation so syntactically equal atoms coincide
    if (opterm_cmp(s, t) <= 0) return Literal{s, t, negated};
    return Literal{t, s, negated};
}

using RawClause = std::vector<Literal>;

void normalize_clause(RawClause& c) {
    std::sort(c.begin(), c.end(), [](const Literal& a, const Literal& b) {
        return literal_cmp(a, b) < 0;
    });
    c.erase(std::unique(c.begin(), c.end(),
                        [](const Literal& a, const Literal& b) {
                            return literal_cmp(a, b) == 0;
                        }),
            c.end());
}

int clause_cmp(const RawClause& a, const RawClause& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = literal_cmp(a[i], b[i]);
        if (c) return c;
    }
    return 0;
}

void normalize_clauses(std::vector<RawClause>& cs) {
    for (auto& c : cs) normalize_clause(c);
    std::sort(cs.begin(), cs.end(),
              [](const RawClause& a, const RawClause& b) { return clause_cmp(a, b) < 0; });
    cs.erase(std::unique(cs.begin(), cs.end(),
                         [](const RawClause& a, const RawClause& b) {
                             return clause_cmp(a, b) == 0;
                         }),
             cs.end());
}

// negation normal form over {Eq, Not, And, Or} after implication removal
std::vector<RawClause> cnf_rec(const FormulaPtr& f, bool negated) {
    switch (f->kind()) {
        case Formula::Kind::Eq:
            return {{make_literal(f->lhs_term(), f->rhs_term(), negated)}};
        case Formula::Kind::Not: return cnf_rec(f->lhs(), !negated);
        case Formula::Kind::Implies: {
            // a -> b  ~>  ~a | b
            FormulaPtr rewritten = Formula::lor(Formula::lnot(f->lhs()), f->rhs());
            return cnf_rec(rewritten, negated);
        }
        case Formula::Kind::And:
        case Formula::Kind::Or: {
            bool conj = (f->kind() == Formula::Kind::And) != negated;
            auto left = cnf_rec(f->lhs(), negated);
            auto right = cnf_rec(f->rhs(), negated);
            if (conj) {
                left.insert(left.end(), right.begin(), right.end());
                return left;
            }
            // distribute the disjunction over both clause sets
            std::vector<RawClause> out;
            out.reserve(left.size() * right.size());
            for (const auto& lc : left)
                for (const auto& rc : right) {
                    RawClause merged = lc;
                    merged.insert(merged.end(), rc.begin(), rc.end());
                    out.push_back(std::move(merged));
                }
            return out;
        }
        default: throw UsageError("cnf expects a quantifier-free formula");
    }
}

}  // namespace

bool Clause::operator==(const Clause& o) const {
    auto eqv = [](const std::vector<std::pair<OpTermPtr, OpTermPtr>>& a,
                  const std::vector<std::pair<OpTermPtr, OpTermPtr>>& b) {
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (opterm_cmp(a[i].first, b[i].first) || opterm_cmp(a[i].second, b[i].second))
                return false;
        return true;
    };
    return eqv(diseqs, o.diseqs) && eqv(eqs, o.eqs);
}

std::vector<Clause> cnf(const FormulaPtr& f) {
    if (!f->quantifier_free()) throw UsageError("cnf expects a quantifier-free formula");
    auto raw = cnf_rec(f, false);
    normalize_clauses(raw);
    std::vector<Clause> out;
    out.reserve(raw.size());
    for (const auto& rc : raw) {
        Clause c;
        for (const auto& lit : rc)
            (lit.negated ? c.diseqs : c.eqs).emplace_back(lit.s, lit.t);
        out.push_back(std::move(c));
    }
    return out;
}

bool eval_formula(const FormulaPtr& f,
                  const std::function<bool(const OpTermPtr&, const OpTermPtr&)>& atom) {
    switch (f->kind()) {
        case Formula::Kind::Eq: return atom(f->lhs_term(), f->rhs_term());
        case Formula::Kind::Not: return !eval_formula(f->lhs(), atom);
        case Formula::Kind::And: return eval_formula(f->lhs(), atom) && eval_formula(f->rhs(), atom);
        case Formula::Kind::Or: return eval_formula(f->lhs(), atom) || eval_formula(f->rhs(), atom);
        case Formula::Kind::Implies:
            return !eval_formula(f->lhs(), atom) || eval_formula(f->rhs(), atom);
        default: throw UsageError("eval expects a quantifier-free formula");
    }
}

bool eval_clauses(const std::vector<Clause>& cs,
                  const std::function<bool(const OpTermPtr&, const OpTermPtr&)>& atom) {
    for (const auto& c : cs) {
        bool sat = false;
        for (const auto& [s, t] : c.diseqs)
            if (!atom(s, t)) {
                sat = true;
                break;
            }
        if (!sat)
            for (const auto& [s, t] : c.eqs)
                if (atom(s, t)) {
                    sat = true;
                    break;
                }
        if (!sat) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Idealisation

Polynomial to_polynomial(const OpTermPtr& t, const StatementEnv& env) {
    switch (t->kind()) {
        case OpTerm::Kind::Var: {
            auto it = env.index.find(t->name());
            if (it == env.index.end())
                throw UsageError("statement variable '" + t->name() + "' not in the algebra");
            return Polynomial::variable(env.alg, it->second);
        }
        case OpTerm::Kind::Zero: return Polynomial::zero(env.alg);
        case OpTerm::Kind::Sum:
            return to_polynomial(t->lhs(), env) + to_polynomial(t->rhs(), env);
        case OpTerm::Kind::Prod:
            return to_polynomial(t->lhs(), env) * to_polynomial(t->rhs(), env);
        case OpTerm::Kind::Neg: return -to_polynomial(t->lhs(), env);
    }
    return Polynomial::zero(env.alg);
}

std::vector<IdealisationTask> idealise(const FormulaPtr& universal, const StatementEnv& env) {
    if (!universal->closed()) throw UsageError("idealise expects a closed statement");
    FormulaPtr matrix = universal;
    while (matrix->kind() == Formula::Kind::Forall) matrix = matrix->lhs();
    if (!matrix->quantifier_free()) throw UsageError("idealise expects a universal statement");

    std::vector<IdealisationTask> tasks;
    for (const auto& clause : cnf(matrix)) {
        IdealisationTask task;
        for (const auto& [s, t] : clause.diseqs) {
            Polynomial p = to_polynomial(s, env) - to_polynomial(t, env);
            if (!p.is_zero()) task.generators.push_back(std::move(p));
        }
        for (const auto& [s, t] : clause.eqs)
            task.candidates.push_back(to_polynomial(s, env) - to_polynomial(t, env));
        tasks.push_back(std::move(task));
    }
    return tasks;
}

TaskResult check_task(const IdealisationTask& task, int maxiter) {
    TaskResult out;
    for (std::size_t k = 0; k < task.candidates.size(); ++k) {
        if (task.candidates[k].is_zero()) {
            out.proved = true;
            out.candidate = k;
            return out;
        }
    }
    if (task.generators.empty()) return out;  // only nonzero candidates, empty ideal
    NCIdeal ideal(task.generators);
    GBOptions opts;
    opts.maxiter = maxiter;
    opts.reset = false;
    auto attempt = [&]() -> bool {
        for (std::size_t k = 0; k < task.candidates.size(); ++k) {
            TracedPolynomial r = ideal.reduce_only(task.candidates[k]);
            if (r.poly.is_zero()) {
                out.proved = true;
                out.candidate = k;
                out.cert = std::move(r.cert);
                return true;
            }
        }
        return false;
    };
    if (attempt()) return out;
    while (ideal.iterations_done() < maxiter && ideal.step(opts))
        if (attempt()) return out;
    return out;
}

// ---------------------------------------------------------------------------
// Herbrand enumeration and the bounded semi-decision loop

std::vector<std::string> Statement::herbrand_alphabet() const {
    std::vector<std::string> out = universals;
    for (const auto& u : universals) {
        auto it = env.index.find(u);
        if (it == env.index.end()) continue;
        if (env.adj.has(it->second)) {
            const std::string& p = env.alg->name(env.adj.partner(it->second));
            if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
        }
    }
    return out;
}

namespace {

void sorted_words(const Statement& st, const std::vector<std::string>& alphabet,
                  const Sort& target, int maxdeg, std::vector<std::vector<std::string>>& out) {
    // extend partial words left-to-right; the rightmost factor fixes src
    std::vector<std::vector<std::string>> partial;  // words whose chain is valid so far
    for (int d = 1; d <= maxdeg; ++d) {
        std::vector<std::vector<std::string>> next;
        if (d == 1) {
            for (const auto& a : alphabet) next.push_back({a});
        } else {
            for (const auto& w : partial)
                for (const auto& a : alphabet) {
                    // appending on the right: sort src of current word must
                    // match dst of the appended letter
                    const Sort& ws = st.sorts.sort_of(w.back());
                    const Sort& as = st.sorts.sort_of(a);
                    if (ws.src != as.dst) continue;
                    auto w2 = w;
                    w2.push_back(a);
                    next.push_back(std::move(w2));
                }
        }
        for (const auto& w : next) {
            const Sort& left = st.sorts.sort_of(w.front());
            const Sort& right = st.sorts.sort_of(w.back());
            if (right.src == target.src && left.dst == target.dst) out.push_back(w);
        }
        partial = std::move(next);
    }
}

OpTermPtr word_to_term(const Statement& st, const std::vector<std::string>& w) {
    OpTermPtr t;
    for (const auto& name : w) {
        OpTermPtr v = OpTerm::var(name, st.sorts.sort_of(name));
        t = t ? OpTerm::prod(t, v) : v;
    }
    return t;
}

OpTermPtr scaled_term(const OpTermPtr& t, int c) {
    OpTermPtr acc;
    int n = c < 0 ? -c : c;
    for (int i = 0; i < n; ++i) acc = acc ? OpTerm::sum(acc, t) : t;
    if (c < 0) acc = OpTerm::neg(acc);
    return acc;
}

}  // namespace

std::vector<OpTermPtr> herbrand_terms_for(const Statement& st, const Sort& target,
                                          const TermBounds& bounds) {
    std::vector<OpTermPtr> out;
    out.push_back(OpTerm::zero(target));
    std::vector<std::vector<std::string>> words;
    sorted_words(st, st.herbrand_alphabet(), target, bounds.degree, words);
    std::stable_sort(words.begin(), words.end(),
                     [&](const std::vector<std::string>& a, const std::vector<std::string>& b) {
                         if (a.size() != b.size()) return a.size() < b.size();
                         for (std::size_t i = 0; i < a.size(); ++i) {
                             VarIndex x = st.env.index.at(a[i]), y = st.env.index.at(b[i]);
                             if (x != y) return x < y;
                         }
                         return false;
                     });
    // single summands first: every word with every coefficient magnitude
    std::vector<OpTermPtr> singles;
    for (const auto& w : words) singles.push_back(word_to_term(st, w));
    for (const auto& s : singles)
        for (int c = 1; c <= bounds.coeff; ++c) {
            out.push_back(scaled_term(s, c));
            out.push_back(scaled_term(s, -c));
        }
    // combinations of k distinct words, coefficients enumerated odometer-style
    for (int k = 2; k <= bounds.summands && (std::size_t)k <= singles.size(); ++k) {
        std::vector<std::size_t> pick(k);
        for (int i = 0; i < k; ++i) pick[i] = i;
        for (;;) {
            std::vector<int> coeff(k, 1);
            for (;;) {
                OpTermPtr acc;
                for (int i = 0; i < k; ++i) {
                    OpTermPtr part = scaled_term(singles[pick[i]], coeff[i]);
                    acc = acc ? OpTerm::sum(acc, part) : part;
                }
                out.push_back(acc);
                // next coefficient vector over {1..c, -1..-c}
                int i = k - 1;
                for (; i >= 0; --i) {
                    int& c = coeff[i];
                    if (c > 0 && c < bounds.coeff) {
                        ++c;
                        break;
                    }
                    if (c > 0) {
                        c = -1;
                        break;
                    }
                    if (-c < bounds.coeff) {
                        --c;
                        break;
                    }
                    c = 1;
                }
                if (i < 0) break;
                for (int j = i + 1; j < k; ++j) coeff[j] = 1;
            }
            // next k-combination
            int i = k - 1;
            while (i >= 0 && pick[i] == singles.size() - (std::size_t)(k - i)) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return out;
}

std::vector<std::vector<OpTermPtr>> herbrand_tuples(const Statement& st,
                                                    const TermBounds& bounds) {
    std::vector<std::vector<OpTermPtr>> per_var;
    for (const auto& e : st.existentials)
        per_var.push_back(herbrand_terms_for(st, e.sort, bounds));
    std::vector<std::vector<OpTermPtr>> tuples;
    if (per_var.empty()) return tuples;
    // fair order: by the sum of indices, then lexicographically
    std::size_t max_sum = 0;
    for (const auto& v : per_var) max_sum += v.size() - 1;
    for (std::size_t target = 0; target <= max_sum; ++target) {
        std::vector<std::size_t> idx(per_var.size(), 0);
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos,
                                                                std::size_t remaining) {
            if (pos + 1 == per_var.size()) {
                if (remaining < per_var[pos].size()) {
                    idx[pos] = remaining;
                    std::vector<OpTermPtr> tuple;
                    for (std::size_t i = 0; i < per_var.size(); ++i)
                        tuple.push_back(per_var[i][idx[i]]);
                    tuples.push_back(std::move(tuple));
                }
                return;
            }
            for (std::size_t i = 0; i <= remaining && i < per_var[pos].size(); ++i) {
                idx[pos] = i;
                rec(pos + 1, remaining - i);
            }
        };
        rec(0, target);
    }
    return tuples;
}

ProveBudget ProveBudget::standard() {
    ProveBudget b;
    b.stages = {
        {{1, 1, 1}, 5},
        {{2, 1, 1}, 5},
        {{3, 1, 1}, 10},
        {{4, 1, 1}, 10},
        {{3, 2, 1}, 10},
    };
    return b;
}

namespace {

OpTermPtr adjoint_term(const OpTermPtr& t, const Statement& st) {
    switch (t->kind()) {
        case OpTerm::Kind::Var: {
            auto it = st.env.index.find(t->name());
            if (it == st.env.index.end() || !st.env.adj.has(it->second))
                throw UsageError("term variable '" + t->name() + "' has no adjoint partner");
            VarIndex p = st.env.adj.partner(it->second);
            const std::string& pname = st.env.alg->name(p);
            return OpTerm::var(pname, st.sorts.sort_of(pname));
        }
        case OpTerm::Kind::Zero: return OpTerm::zero(Sort{t->sort().dst, t->sort().src});
        case OpTerm::Kind::Sum:
            return OpTerm::sum(adjoint_term(t->lhs(), st), adjoint_term(t->rhs(), st));
        case OpTerm::Kind::Prod:
            return OpTerm::prod(adjoint_term(t->rhs(), st), adjoint_term(t->lhs(), st));
        case OpTerm::Kind::Neg: return OpTerm::neg(adjoint_term(t->lhs(), st));
    }
    return t;
}

struct DisjunctCheck {
    bool proved = false;
    std::vector<Polynomial> generators;
    std::vector<Polynomial> claims;
    std::vector<Certificate> certs;
};

/// Completion cache shared across instantiation checks: the tasks of one
/// statement reuse the same generator sets over and over with only the
/// candidates changing.
struct IdealCache {
    struct Verdict {
        Polynomial cand;
        int maxiter;
        bool member;
    };
    struct Entry {
        std::vector<Polynomial> gens;
        std::unique_ptr<NCIdeal> ideal;
        std::vector<Verdict> verdicts;
    };
    std::vector<Entry> entries;

    NCIdeal& get(const std::vector<Polynomial>& gens, int maxiter) {
        Entry* e = nullptr;
        for (auto& x : entries)
            if (x.gens == gens) {
                e = &x;
                break;
            }
        if (!e) {
            entries.push_back(Entry{gens, std::make_unique<NCIdeal>(gens), {}});
            e = &entries.back();
        }
        GBOptions opts;
        opts.maxiter = maxiter;
        opts.reset = false;
        e->ideal->groebner_basis(opts);
        return *e->ideal;
    }

    bool member(const std::vector<Polynomial>& gens, const Polynomial& cand, int maxiter) {
        Entry* e = nullptr;
        for (auto& x : entries)
            if (x.gens == gens) {
                e = &x;
                break;
            }
        if (e)
            for (const auto& v : e->verdicts) {
                if (!(v.cand == cand)) continue;
                if (v.member) return true;
                if (v.maxiter >= maxiter) return false;
            }
        NCIdeal& ideal = get(gens, maxiter);
        if (!e)
            for (auto& x : entries)
                if (x.gens == gens) {
                    e = &x;
                    break;
                }
        bool member = ideal.normal_form(cand).is_zero();
        std::erase_if(e->verdicts, [&](const Verdict& v) { return v.cand == cand; });
        e->verdicts.push_back(Verdict{cand, maxiter, member});
        return member;
    }
};

/// Id of a single instantiated (quantifier-free) disjunct: every clause of
/// its CNF must certify.
DisjunctCheck check_disjunct(const FormulaPtr& inst, const StatementEnv& env, int maxiter,
                             IdealCache& cache) {
    DisjunctCheck out;
    std::vector<IdealisationTask> tasks;
    for (const auto& clause : cnf(inst)) {
        IdealisationTask task;
        for (const auto& [s, t] : clause.diseqs) {
            Polynomial p = to_polynomial(s, env) - to_polynomial(t, env);
            if (!p.is_zero()) task.generators.push_back(std::move(p));
        }
        for (const auto& [s, t] : clause.eqs)
            task.candidates.push_back(to_polynomial(s, env) - to_polynomial(t, env));
        tasks.push_back(std::move(task));
    }
    for (const auto& task : tasks) {
        bool proved = false;
        for (std::size_t k = 0; k < task.candidates.size() && !proved; ++k) {
            const Polynomial& cand = task.candidates[k];
            if (cand.is_zero()) {
                out.claims.push_back(cand);
                out.certs.push_back(Certificate());
                proved = true;
                break;
            }
            if (task.generators.empty()) continue;
            if (cache.member(task.generators, cand, maxiter)) {
                out.claims.push_back(cand);
                out.certs.push_back(
                    cache.get(task.generators, maxiter).reduce_only(cand).cert);
                proved = true;
            }
        }
        if (!proved) return DisjunctCheck{};
        out.generators = task.generators;
    }
    out.proved = true;
    return out;
}

/// Idealisation of the genuine disjunction psi_n = phi_1 | ... | phi_n over
/// the longest prefix whose clause product stays within the cap. Generator
/// sets repeat heavily across product clauses, so completions and candidate
/// reductions are cached per distinct generator set.
bool check_disjunction(const std::vector<FormulaPtr>& insts, const StatementEnv& env,
                       int maxiter, std::size_t clause_cap, IdealCache& cache) {
    if (insts.size() < 2) return false;
    std::vector<IdealisationTask> clauses;  // running product
    auto dedup = [](std::vector<Polynomial>& ps) {
        std::vector<Polynomial> out;
        for (auto& p : ps)
            if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
        ps = std::move(out);
    };
    for (const auto& inst : insts) {
        std::vector<IdealisationTask> parts;
        for (const auto& clause : cnf(inst)) {
            IdealisationTask t;
            for (const auto& [s, u] : clause.diseqs) {
                Polynomial p = to_polynomial(s, env) - to_polynomial(u, env);
                if (!p.is_zero()) t.generators.push_back(std::move(p));
            }
            for (const auto& [s, u] : clause.eqs)
                t.candidates.push_back(to_polynomial(s, env) - to_polynomial(u, env));
            parts.push_back(std::move(t));
        }
        if (clauses.empty()) {
            clauses = std::move(parts);
        } else {
            if (clauses.size() * parts.size() > clause_cap) break;  // keep the prefix
            std::vector<IdealisationTask> merged;
            merged.reserve(clauses.size() * parts.size());
            for (const auto& a : clauses)
                for (const auto& b : parts) {
                    IdealisationTask t = a;
                    t.generators.insert(t.generators.end(), b.generators.begin(),
                                        b.generators.end());
                    t.candidates.insert(t.candidates.end(), b.candidates.begin(),
                                        b.candidates.end());
                    dedup(t.generators);
                    dedup(t.candidates);
                    merged.push_back(std::move(t));
                }
            clauses = std::move(merged);
        }
    }
    if (clauses.empty()) return false;

    for (const auto& task : clauses) {
        bool proved = false;
        for (const auto& cand : task.candidates)
            if (cand.is_zero()) proved = true;
        if (proved) continue;
        if (task.generators.empty()) return false;
        for (const auto& cand : task.candidates)
            if (cache.member(task.generators, cand, maxiter)) {
                proved = true;
                break;
            }
        if (!proved) return false;
    }
    return true;
}

}  // namespace

ProveResult semi_decide(const Statement& st, const ProveBudget& budget) {
    if (st.matrix == nullptr) throw UsageError("statement has no matrix");
    ProveResult result;

    std::vector<ProveStage> stages = budget.stages;
    if (stages.empty()) stages = ProveBudget::standard().stages;

    std::vector<std::vector<OpTermPtr>> tried;  // all instantiation tuples so far
    std::vector<FormulaPtr> insts;              // their instantiated matrices
    std::vector<int> checked_at;                // maxiter already spent per tuple
    IdealCache cache;

    for (std::size_t stage_i = 0;; ++stage_i) {
        ProveStage stage;
        if (stage_i < stages.size()) {
            stage = stages[stage_i];
        } else if (budget.unbounded) {
            stage = stages.back();
            stage.bounds.degree += (int)(stage_i - stages.size() + 1);
            stage.maxiter += 5 * (int)(stage_i - stages.size() + 1);
        } else {
            break;
        }
        result.stages_used = (int)stage_i + 1;
        if (budget.diag)
            *budget.diag << "Stage " << (stage_i + 1) << ": degree <= " << stage.bounds.degree
                         << ", summands <= " << stage.bounds.summands
                         << ", |coeff| <= " << stage.bounds.coeff
                         << ", maxiter " << stage.maxiter << std::endl;

        auto tuples = herbrand_tuples(st, stage.bounds);
        for (auto& tuple : tuples) {
            bool seen = false;
            for (const auto& old : tried) {
                if (old.size() != tuple.size()) continue;
                bool same = true;
                for (std::size_t i = 0; i < old.size(); ++i)
                    if (opterm_cmp(old[i], tuple[i])) {
                        same = false;
                        break;
                    }
                if (same) {
                    seen = true;
                    break;
                }
            }
            if (seen) continue;
            std::map<std::string, OpTermPtr> sub;
            bool sortable = true;
            for (std::size_t v = 0; v < st.existentials.size(); ++v) {
                const auto& e = st.existentials[v];
                sub[e.name] = tuple[v];
                if (e.adjoint_name) {
                    try {
                        sub[*e.adjoint_name] = adjoint_term(tuple[v], st);
                    } catch (const UsageError&) {
                        sortable = false;
                        break;
                    }
                }
            }
            if (!sortable) continue;
            insts.push_back(substitute(st.matrix, sub));
            tried.push_back(std::move(tuple));
            checked_at.push_back(0);
        }

        // Dovetail: every known instantiation gets this stage's operation
        // budget (previously failed ones are retried with more iterations).
        for (std::size_t i = 0; i < tried.size(); ++i) {
            if (checked_at[i] >= stage.maxiter) continue;
            checked_at[i] = stage.maxiter;
            ++result.instantiations_tried;
            DisjunctCheck check = check_disjunct(insts[i], st.env, stage.maxiter, cache);
            if (check.proved) {
                result.proved = true;
                for (std::size_t v = 0; v < st.existentials.size(); ++v)
                    result.witness.emplace_back(st.existentials[v].name, tried[i][v]);
                result.generators = std::move(check.generators);
                result.certified_claims = std::move(check.claims);
                result.certificates = std::move(check.certs);
                return result;
            }
        }

        // Once per stage, the genuine psi_n = phi_1 | ... | phi_n check over
        // the longest affordable prefix; it can prove statements no single
        // instantiation settles.
        if (check_disjunction(insts, st.env, stage.maxiter, 256, cache)) {
            result.proved = true;
            for (std::size_t v = 0; v < st.existentials.size(); ++v)
                result.witness.emplace_back(st.existentials[v].name + " (disjunction witness set)",
                                            nullptr);
            return result;
        }
    }
    return result;
}

}  // namespace ncgb
