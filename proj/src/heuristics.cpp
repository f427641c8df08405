#include "ncgb/heuristics.hpp"

#include <algorithm>
#include <set>

namespace ncgb {

namespace {

GBOptions resumed(int maxiter) {
    GBOptions o;
    o.maxiter = maxiter;
    o.reset = false;
    return o;
}

/// Enumerate all words of exactly `deg` over the order's variables, visiting
/// them in descending or ascending monomial order within the degree.
struct WordEnum {
    std::vector<VarIndex> by_rank;  // rank -> variable, ascending
    std::size_t deg;
    bool descending;
    std::vector<std::size_t> odo;  // rank indices
    bool done = false;

    WordEnum(const MonomialOrder& o, std::size_t d, bool desc) : deg(d), descending(desc) {
        for (const auto& block : o.blocks())
            for (VarIndex v : block) by_rank.push_back(v);
        odo.assign(deg, desc ? by_rank.size() - 1 : 0);
        if (by_rank.empty() && deg > 0) done = true;
    }

    bool next(Word& w) {
        if (done) return false;
        w.letters.resize(deg);
        for (std::size_t i = 0; i < deg; ++i) w.letters[i] = by_rank[odo[i]];
        // advance
        std::size_t i = deg;
        while (i-- > 0) {
            if (descending) {
                if (odo[i] > 0) {
                    --odo[i];
                    for (std::size_t j = i + 1; j < deg; ++j) odo[j] = by_rank.size() - 1;
                    return true;
                }
            } else {
                if (odo[i] + 1 < by_rank.size()) {
                    ++odo[i];
                    for (std::size_t j = i + 1; j < deg; ++j) odo[j] = 0;
                    return true;
                }
            }
        }
        done = true;
        return true;  // the word we just emitted was the last one
    }
};

bool quiver_ok(const std::optional<Quiver>& q, const Polynomial& p) {
    return !q || q->is_compatible(p);
}

void sort_by_leading(std::vector<Polynomial>& v, const MonomialOrder& o) {
    std::stable_sort(v.begin(), v.end(), [&](const Polynomial& a, const Polynomial& b) {
        return o.compare(o.leading_word(a), o.leading_word(b)) < 0;
    });
}

std::vector<Polynomial> scan_basis_for(NCIdeal& I, const Word& fword, int maxiter,
                                       const std::optional<Quiver>& quiver) {
    I.groebner_basis(resumed(maxiter));
    auto reduced = interreduce(I.basis(), I.order());
    std::vector<Polynomial> out;
    for (const auto& t : reduced) {
        for (const auto& term : t.poly.terms()) {
            if (term.word == fword) {
                if (quiver_ok(quiver, t.poly)) out.push_back(t.poly);
                break;
            }
        }
    }
    sort_by_leading(out, I.order());
    return out;
}

Word require_monomial(const Polynomial& f, const char* who) {
    if (f.term_count() != 1)
        throw UsageError(std::string(who) + ": target must be a single monomial");
    return f.terms()[0].word;
}

}  // namespace

std::vector<Polynomial> find_equivalent_expression(NCIdeal& I, const SearchSpec& spec) {
    if (spec.heuristic == SearchHeuristic::RightIdeal && !spec.prefix)
        throw UsageError("heuristic 'right-ideal' requires a prefix");
    if (spec.heuristic == SearchHeuristic::LeftIdeal && !spec.suffix)
        throw UsageError("heuristic 'left-ideal' requires a suffix");

    // A custom order means the whole computation runs over a reordered copy.
    std::optional<NCIdeal> reordered;
    NCIdeal* ideal = &I;
    if (spec.order) {
        reordered.emplace(I.gens(), *spec.order);
        ideal = &*reordered;
    }

    const Polynomial& f = spec.target;
    const AlgebraPtr& alg = ideal->algebra();

    switch (spec.heuristic) {
        case SearchHeuristic::Groebner:
            return scan_basis_for(*ideal, require_monomial(f, "find_equivalent_expression"),
                                  spec.maxiter, spec.quiver);

        case SearchHeuristic::Subalgebra: {
            // Eliminate the target's variables: complete under a block order
            // with them on top, then scan for f - g with g over the rest.
            Word fword = require_monomial(f, "find_equivalent_expression");
            std::set<VarIndex> fvars(fword.letters.begin(), fword.letters.end());
            std::vector<VarIndex> low, high;
            for (const auto& block : ideal->order().blocks())
                for (VarIndex v : block) (fvars.count(v) ? high : low).push_back(v);
            if (low.empty() || high.empty())
                return scan_basis_for(*ideal, fword, spec.maxiter, spec.quiver);
            NCIdeal elim(ideal->gens(), MonomialOrder::of_blocks(alg, {low, high}));
            elim.groebner_basis(resumed(spec.maxiter));
            auto reduced = interreduce(elim.basis(), elim.order());
            std::vector<Polynomial> out;
            for (const auto& t : reduced) {
                bool has_f = false, pure_rest = true;
                for (const auto& term : t.poly.terms()) {
                    if (term.word == fword) {
                        has_f = true;
                        continue;
                    }
                    for (VarIndex v : term.word.letters)
                        if (fvars.count(v)) pure_rest = false;
                }
                if (has_f && pure_rest && quiver_ok(spec.quiver, t.poly)) out.push_back(t.poly);
            }
            sort_by_leading(out, elim.order());
            return out;
        }

        case SearchHeuristic::Naive: {
            ideal->groebner_basis(resumed(spec.maxiter));
            Word pre = spec.prefix ? spec.prefix->word : Word();
            Word suf = spec.suffix ? spec.suffix->word : Word();
            std::size_t affix = pre.degree() + suf.degree();
            for (std::size_t d = 1; d + affix <= (std::size_t)spec.degbound; ++d) {
                WordEnum en(ideal->order(), d, /*descending=*/true);
                Word w;
                while (en.next(w)) {
                    Word m = pre * w * suf;
                    Polynomial mp = Polynomial::monomial(alg, Rational(1), m);
                    Polynomial cand = f - mp;
                    if (cand.is_zero()) continue;
                    if (!ideal->normal_form(cand).is_zero()) continue;
                    Polynomial res = spec.prefix ? mp - f : f - mp;
                    if (!quiver_ok(spec.quiver, res)) continue;
                    return {res};
                }
            }
            return {};
        }

        case SearchHeuristic::RightIdeal:
        case SearchHeuristic::LeftIdeal: {
            ideal->groebner_basis(resumed(spec.maxiter));
            bool right = spec.heuristic == SearchHeuristic::RightIdeal;
            Word affix = right ? spec.prefix->word : spec.suffix->word;
            std::vector<Polynomial> out;
            for (std::size_t d = 1; d + affix.degree() <= (std::size_t)spec.degbound; ++d) {
                WordEnum en(ideal->order(), d, /*descending=*/true);
                Word w;
                while (en.next(w)) {
                    Word m = right ? affix * w : w * affix;
                    Polynomial mp = Polynomial::monomial(alg, Rational(1), m);
                    Polynomial cand = mp - f;
                    if (cand.is_zero()) continue;
                    if (!ideal->normal_form(cand).is_zero()) continue;
                    if (!quiver_ok(spec.quiver, cand)) continue;
                    out.push_back(cand);
                }
            }
            return out;
        }
    }
    return {};
}

namespace {

struct TagIdeal {
    AlgebraPtr ext;
    VarIndex tag;
    NCIdeal ideal;
};

/// Extend the algebra by a fresh tag variable, add the relation tag - u, and
/// complete with the tag in a new lowest block so the rewrite points from u
/// to the tag.
TagIdeal make_tag_ideal(const NCIdeal& I, const Word& u, int maxiter) {
    std::vector<std::string> names = I.algebra()->names();
    std::string tag = "_t";
    while (std::find(names.begin(), names.end(), tag) != names.end()) tag += "_";
    names.push_back(tag);
    AlgebraPtr ext = Algebra::make(names);
    VarIndex tagv = (VarIndex)(ext->size() - 1);

    std::vector<Polynomial> gens;
    for (const auto& g : I.gens()) {
        std::vector<Term> ts(g.terms().begin(), g.terms().end());
        gens.push_back(Polynomial(ext, std::move(ts)));  // indices carry over
    }
    gens.push_back(Polynomial::monomial(ext, Rational(1), Word::single(tagv)) -
                   Polynomial::monomial(ext, Rational(1), u));

    std::vector<std::vector<VarIndex>> blocks;
    blocks.push_back({tagv});
    for (const auto& b : I.order().blocks()) blocks.push_back(b);
    TagIdeal t{ext, tagv, NCIdeal(std::move(gens), MonomialOrder::of_blocks(ext, blocks))};
    t.ideal.groebner_basis(resumed(maxiter));
    return t;
}

Word substitute_tag(const Word& w, VarIndex tag, const Word& u) {
    Word out;
    for (VarIndex v : w.letters) {
        if (v == tag)
            out.letters.insert(out.letters.end(), u.letters.begin(), u.letters.end());
        else
            out.letters.push_back(v);
    }
    return out;
}

std::vector<Polynomial> cancellability(NCIdeal& I, const Term& a, const Term& b,
                                       CancelHeuristic heuristic, int maxiter, int degbound,
                                       bool left) {
    Word u = left ? a.word * b.word : a.word * b.word;
    Word keep = left ? b.word : a.word;  // the factor that stays on the result
    const AlgebraPtr& alg = I.algebra();
    I.groebner_basis(resumed(maxiter));

    auto verified = [&](const Polynomial& g) {
        Polynomial probe = left
                               ? Polynomial::monomial(alg, Rational(1), a.word) * g
                               : g * Polynomial::monomial(alg, Rational(1), b.word);
        return I.normal_form(probe).is_zero();
    };

    std::vector<Polynomial> out;
    if (heuristic == CancelHeuristic::TwoSided) {
        // f = m - 1 for monomials m with u*(m-1) (resp. (m-1)*u) in the ideal.
        Polynomial up = Polynomial::monomial(alg, Rational(1), u);
        for (std::size_t d = 1; d + keep.degree() <= (std::size_t)degbound; ++d) {
            WordEnum en(I.order(), d, /*descending=*/false);
            Word w;
            while (en.next(w)) {
                Polynomial m = Polynomial::monomial(alg, Rational(1), w);
                Polynomial member = left ? up * m - up : m * up - up;
                if (!I.normal_form(member).is_zero()) continue;
                Polynomial keepp = Polynomial::monomial(alg, Rational(1), keep);
                Polynomial res = left ? keepp * m - keepp : m * keepp - keepp;
                if (res.is_zero() || !verified(res)) continue;
                out.push_back(std::move(res));
            }
        }
        return out;
    }

    TagIdeal tj = make_tag_ideal(I, u, maxiter);
    for (const auto& e : tj.ideal.basis()) {
        bool shaped = true;
        bool pure = true;
        for (const auto& term : e.poly.terms()) {
            const auto& ls = term.word.letters;
            if (ls.empty() || (left ? ls.front() : ls.back()) != tj.tag) {
                shaped = false;
                break;
            }
            for (std::size_t k = 0; k + 1 < ls.size(); ++k)
                if (ls[left ? k + 1 : k] == tj.tag) pure = false;
        }
        if (!shaped) continue;
        if (heuristic == CancelHeuristic::OneSided && !pure) continue;
        // strip the tag, substitute the remaining tags back, re-attach `keep`
        std::vector<Term> ts;
        for (const auto& term : e.poly.terms()) {
            Word inner(std::vector<VarIndex>(term.word.letters.begin() + (left ? 1 : 0),
                                             term.word.letters.end() - (left ? 0 : 1)));
            Word sub = substitute_tag(inner, tj.tag, u);
            ts.push_back(Term(term.coeff, left ? keep * sub : sub * keep));
        }
        Polynomial res(alg, std::move(ts));
        if (res.is_zero() || !verified(res)) continue;
        if (std::find(out.begin(), out.end(), res) == out.end()) out.push_back(std::move(res));
    }
    sort_by_leading(out, I.order());
    return out;
}

}  // namespace

std::vector<Polynomial> apply_left_cancellability(NCIdeal& I, const Term& a, const Term& b,
                                                  CancelHeuristic heuristic, int maxiter,
                                                  int degbound) {
    return cancellability(I, a, b, heuristic, maxiter, degbound, /*left=*/true);
}

std::vector<Polynomial> apply_right_cancellability(NCIdeal& I, const Term& a, const Term& b,
                                                   CancelHeuristic heuristic, int maxiter,
                                                   int degbound) {
    return cancellability(I, a, b, heuristic, maxiter, degbound, /*left=*/false);
}

std::vector<Polynomial> find_range_factorisation(NCIdeal& I, const Polynomial& f,
                                                 const Term& through, FactorSide side,
                                                 int maxiter, int degbound) {
    SearchSpec spec;
    spec.target = f;
    spec.heuristic = SearchHeuristic::Naive;
    spec.maxiter = maxiter;
    spec.degbound = degbound;
    if (side == FactorSide::Prefix)
        spec.prefix = through;
    else
        spec.suffix = through;
    auto out = find_equivalent_expression(I, spec);
    // factorisations are reported as g - f on both sides (session style);
    // the suffix-shaped naive search hands back f - g
    if (side == FactorSide::Suffix)
        for (auto& r : out) r = -r;
    return out;
}

std::vector<Polynomial> drop_contaminated(const std::vector<Polynomial>& results,
                                          const Polynomial& target) {
    std::set<VarIndex> tvars;
    for (const auto& t : target.terms())
        tvars.insert(t.word.letters.begin(), t.word.letters.end());
    std::vector<Polynomial> out;
    for (const auto& r : results) {
        bool clean = true;
        for (const auto& t : r.terms()) {
            bool is_target_term = false;
            for (const auto& ft : target.terms())
                if (ft.word == t.word) is_target_term = true;
            if (is_target_term) continue;
            for (VarIndex v : t.word.letters)
                if (tvars.count(v)) clean = false;
        }
        if (clean) out.push_back(r);
    }
    return out;
}

}  // namespace ncgb
