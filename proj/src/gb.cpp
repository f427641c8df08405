#include "ncgb/gb.hpp"

#include <algorithm>
#include <ostream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ncgb {

namespace {

std::vector<Term> to_sorted(const Polynomial& p, const MonomialOrder& o) {
    std::vector<Term> ts(p.terms());
    std::sort(ts.begin(), ts.end(),
              [&](const Term& a, const Term& b) { return o.compare(a.word, b.word) > 0; });
    return ts;
}

Polynomial from_sorted(const AlgebraPtr& alg, std::vector<Term> ts) {
    return Polynomial(alg, std::move(ts));
}

// f -= c * l . g . r, all sorted descending under o. The terms of l.g.r keep
// g's relative order because the comparison is two-sided multiplicative.
void subtract_sandwich(std::vector<Term>& f, const Rational& c, const Word& l,
                       const std::vector<Term>& g, const Word& r, const MonomialOrder& o) {
    std::vector<Term> sub;
    sub.reserve(g.size());
    for (const auto& t : g) sub.push_back(Term(t.coeff * c, l * t.word * r));
    std::vector<Term> out;
    out.reserve(f.size() + sub.size());
    std::size_t i = 0, j = 0;
    while (i < f.size() || j < sub.size()) {
        int cmp;
        if (i >= f.size())
            cmp = -1;
        else if (j >= sub.size())
            cmp = 1;
        else
            cmp = o.compare(f[i].word, sub[j].word);
        if (cmp > 0) {
            out.push_back(std::move(f[i++]));
        } else if (cmp < 0) {
            out.push_back(Term(-sub[j].coeff, sub[j].word));
            ++j;
        } else {
            Rational d = f[i].coeff - sub[j].coeff;
            if (!d.is_zero()) out.push_back(Term(std::move(d), f[i].word));
            ++i;
            ++j;
        }
    }
    f = std::move(out);
}

struct Reducer {
    const MonomialOrder& order;
    bool trace;
    // +1 accumulates the reduction trace (cert expands to f - remainder);
    // -1 maintains an element's own certificate through the reduction.
    int cert_sign = 1;
    bool newest_first = false;

    // Reduce terms of f starting from term index `from` (0 = full normal
    // form, 1 = tail reduction) by the first basis element, in basis order,
    // whose leading word is a subword, leftmost occurrence first.
    template <class BasisView>
    void run(std::vector<Term>& f, const BasisView& basis, std::size_t skip_index,
             std::size_t from, Certificate* cert) const {
        std::size_t idx = from;
        while (idx < f.size()) {
            const Word& w = f[idx].word;
            bool reduced = false;
            std::size_t n = basis.size();
            for (std::size_t step = 0; step < n; ++step) {
                std::size_t k = newest_first ? n - 1 - step : step;
                if (k == skip_index) continue;
                const Word& lm = basis.lm(k);
                std::size_t pos = w.find(lm);
                if (pos == Word::npos) continue;
                Rational c = f[idx].coeff;  // basis elements are monic
                Word l = w.subword(0, pos);
                Word r = w.subword(pos + lm.degree(), w.degree() - pos - lm.degree());
                subtract_sandwich(f, c, l, basis.terms(k), r, order);
                if (trace && cert)
                    cert->add_sandwiched(basis.cert(k),
                                         Term(cert_sign > 0 ? c : -c, std::move(l)),
                                         Term(Rational(1), std::move(r)));
                reduced = true;
                break;
            }
            if (!reduced) ++idx;
        }
    }
};

}  // namespace

struct GBDetail {
    struct ElemView {
        const std::vector<NCIdeal::Elem>& e;
        std::size_t limit;
        std::size_t size() const { return limit; }
        const Word& lm(std::size_t k) const { return e[k].lm; }
        const std::vector<Term>& terms(std::size_t k) const { return e[k].sorted; }
        const Certificate& cert(std::size_t k) const { return e[k].cert; }
    };

    static TracedPolynomial reduce(const NCIdeal& I, const Polynomial& f, std::size_t limit,
                                   bool trace) {
        std::vector<Term> ts = to_sorted(f, I.order_);
        Certificate cert;
        Reducer red{I.order_, trace, 1, I.newest_first_};
        red.run(ts, ElemView{I.elems_, limit}, (std::size_t)-1, 0, &cert);
        return TracedPolynomial{from_sorted(I.alg_, std::move(ts)), std::move(cert)};
    }
};

std::vector<Ambiguity> ambiguities_between(const Word& v, const Word& w, std::uint32_t i,
                                           std::uint32_t j, int maxdeg) {
    std::vector<Ambiguity> out;
    std::size_t lv = v.degree(), lw = w.degree();
    // overlaps: proper suffix of v = proper prefix of w
    for (std::size_t u = 1; u < std::min(lv, lw); ++u) {
        bool match = true;
        for (std::size_t t = 0; t < u; ++t)
            if (v.letters[lv - u + t] != w.letters[t]) {
                match = false;
                break;
            }
        if (!match) continue;
        Ambiguity a;
        a.kind = Ambiguity::Kind::Overlap;
        a.i = i;
        a.j = j;
        a.r1 = w.subword(u, lw - u);
        a.l2 = v.subword(0, lv - u);
        a.multiple = v * a.r1;
        if ((int)a.multiple.degree() > maxdeg) continue;
        a.a1 = 0;
        a.b1 = lv;
        a.a2 = lv - u;
        a.b2 = a.multiple.degree();
        out.push_back(std::move(a));
    }
    // inclusions: w a subword of v (strict, or equal words with j < i)
    if (lw < lv || (lw == lv && j < i && v == w)) {
        for (std::size_t pos = 0; pos + lw <= lv; ++pos) {
            bool match = true;
            for (std::size_t t = 0; t < lw; ++t)
                if (v.letters[pos + t] != w.letters[t]) {
                    match = false;
                    break;
                }
            if (!match) continue;
            Ambiguity a;
            a.kind = Ambiguity::Kind::Inclusion;
            a.i = i;
            a.j = j;
            a.l2 = v.subword(0, pos);
            a.r2 = v.subword(pos + lw, lv - pos - lw);
            a.multiple = v;
            if ((int)a.multiple.degree() > maxdeg) continue;
            a.a1 = 0;
            a.b1 = lv;
            a.a2 = pos;
            a.b2 = pos + lw;
            out.push_back(std::move(a));
        }
    }
    return out;
}

static void sort_ambiguities(std::vector<Ambiguity>& v) {
    std::stable_sort(v.begin(), v.end(), [](const Ambiguity& a, const Ambiguity& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        if (a.i != b.i) return a.i < b.i;
        if (a.j != b.j) return a.j < b.j;
        if (a.a2 != b.a2) return a.a2 < b.a2;
        return a.kind < b.kind;
    });
}

std::vector<Ambiguity> find_ambiguities(const std::vector<TracedPolynomial>& basis,
                                        const MonomialOrder& order, int maxdeg) {
    std::vector<Word> lms;
    lms.reserve(basis.size());
    for (const auto& b : basis) lms.push_back(order.leading_word(b.poly));
    std::vector<Ambiguity> out;
    for (std::uint32_t i = 0; i < lms.size(); ++i)
        for (std::uint32_t j = 0; j < lms.size(); ++j) {
            auto part = ambiguities_between(lms[i], lms[j], i, j, maxdeg);
            out.insert(out.end(), part.begin(), part.end());
        }
    sort_ambiguities(out);
    return out;
}

std::vector<Ambiguity> ambiguities_with(const std::vector<Word>& lms, std::uint32_t n,
                                        int maxdeg) {
    std::vector<Ambiguity> out;
    for (std::uint32_t k = 0; k < lms.size(); ++k) {
        auto a = ambiguities_between(lms[n], lms[k], n, k, maxdeg);
        out.insert(out.end(), a.begin(), a.end());
        if (k != n) {
            auto b = ambiguities_between(lms[k], lms[n], k, n, maxdeg);
            out.insert(out.end(), b.begin(), b.end());
        }
    }
    sort_ambiguities(out);
    return out;
}

TracedPolynomial s_polynomial(const Ambiguity& amb, const std::vector<TracedPolynomial>& basis,
                              const MonomialOrder& order, bool trace) {
    const Polynomial& gi = basis[amb.i].poly;
    const Polynomial& gj = basis[amb.j].poly;
    Term l1(Rational(1), amb.l1), r1(Rational(1), amb.r1);
    Term l2(Rational(1), amb.l2), r2(Rational(1), amb.r2);
    Rational ci = order.leading_term(gi).coeff;
    Rational cj = order.leading_term(gj).coeff;
    Polynomial s = gi.scaled(ci.inverse()).sandwich(l1, r1) -
                   gj.scaled(cj.inverse()).sandwich(l2, r2);
    Certificate cert;
    if (trace) {
        cert.add_sandwiched(basis[amb.i].cert, Term(ci.inverse(), amb.l1),
                            Term(Rational(1), amb.r1));
        cert.add_sandwiched(basis[amb.j].cert, Term(-cj.inverse(), amb.l2),
                            Term(Rational(1), amb.r2));
    }
    return TracedPolynomial{std::move(s), std::move(cert)};
}

NCIdeal::NCIdeal(std::vector<Polynomial> gens)
    : NCIdeal(std::move(gens), MonomialOrder()) {}

NCIdeal::NCIdeal(std::vector<Polynomial> gens, MonomialOrder order)
    : gens_(std::move(gens)), order_(std::move(order)) {
    if (gens_.empty()) throw UsageError("NCIdeal needs at least one generator");
    for (const auto& g : gens_) {
        if (g.is_zero()) throw UsageError("NCIdeal generators must be nonzero");
        if (!alg_)
            alg_ = g.algebra();
        else if (!alg_->same_as(*g.algebra()))
            throw UsageError("NCIdeal generators over different algebras");
    }
    if (!order_.algebra()) order_ = MonomialOrder::deglex(alg_);
    if (!order_.algebra()->same_as(*alg_))
        throw UsageError("order does not match the generators' algebra");
    reset();
}

void NCIdeal::reset() {
    elems_.clear();
    basis_.clear();
    pending_.clear();
    iterations_ = 0;
    built_maxdeg_ = -1;
    for (std::uint32_t k = 0; k < gens_.size(); ++k) {
        Rational lc = order_.leading_term(gens_[k]).coeff;
        Polynomial monic = gens_[k].scaled(lc.inverse());
        Certificate cert;
        cert.add(Term(lc.inverse(), Word()), k, Term(Rational(1), Word()));
        Elem e;
        e.poly = monic;
        e.cert = std::move(cert);
        e.sorted = to_sorted(monic, order_);
        e.lm = e.sorted[0].word;
        elems_.push_back(std::move(e));
        basis_.push_back(TracedPolynomial{elems_.back().poly, elems_.back().cert});
    }
    // Resolve inclusion ambiguities among the generators right away; with
    // nested leading words a generator would otherwise fail to reduce to
    // zero against the fresh basis, and reductions by the first matching
    // element depend on that.
    if (!prepass_) return;
    for (bool grew = true; grew;) {
        grew = false;
        for (std::uint32_t i = 0; i < elems_.size() && !grew; ++i)
            for (std::uint32_t j = 0; j < elems_.size() && !grew; ++j) {
                if (i == j) continue;
                for (auto& a :
                     ambiguities_between(elems_[i].lm, elems_[j].lm, i, j,
                                         std::numeric_limits<int>::max())) {
                    if (a.kind != Ambiguity::Kind::Inclusion) continue;
                    TracedPolynomial s = s_polynomial(a, basis_, order_, true);
                    std::vector<Term> ts = to_sorted(s.poly, order_);
                    Reducer red{order_, true, -1, newest_first_};
                    red.run(ts, GBDetail::ElemView{elems_, elems_.size()}, (std::size_t)-1, 0,
                            &s.cert);
                    Polynomial r = from_sorted(alg_, std::move(ts));
                    if (!r.is_zero()) {
                        adjoin(std::move(r), std::move(s.cert), 0);
                        grew = true;
                        break;
                    }
                }
            }
    }
}

void NCIdeal::set_generator_prepass(bool on) {
    prepass_ = on;
    reset();
}

void NCIdeal::set_newest_first(bool on) {
    newest_first_ = on;
    reset();
}

void NCIdeal::build(int maxdeg) {
    if (built_maxdeg_ == maxdeg) return;
    // Frontier for this degree bound: every ordered pair of current leading
    // words. Regenerated whenever the bound changes; reprocessed ambiguities
    // reduce to zero, so this is sound for resumed runs.
    std::vector<Word> lms;
    for (const auto& e : elems_) lms.push_back(e.lm);
    pending_.clear();
    std::vector<Ambiguity> all;
    for (std::uint32_t i = 0; i < lms.size(); ++i)
        for (std::uint32_t j = 0; j < lms.size(); ++j) {
            auto part = ambiguities_between(lms[i], lms[j], i, j, maxdeg);
            all.insert(all.end(), part.begin(), part.end());
        }
    sort_ambiguities(all);
    pending_ = std::move(all);
    built_maxdeg_ = maxdeg;
}

void NCIdeal::enqueue_for(std::uint32_t n, int maxdeg) {
    std::vector<Word> lms;
    for (const auto& e : elems_) lms.push_back(e.lm);
    auto fresh = ambiguities_with(lms, n, maxdeg);
    pending_.insert(pending_.end(), fresh.begin(), fresh.end());
}

void NCIdeal::adjoin(Polynomial p, Certificate c, int maxdeg) {
    Rational lc = order_.leading_term(p).coeff;
    if (!lc.is_one()) {
        p = p.scaled(lc.inverse());
        c = c.scaled(lc.inverse());
    }
    Elem e;
    e.poly = std::move(p);
    e.cert = std::move(c);
    e.sorted = to_sorted(e.poly, order_);
    e.lm = e.sorted[0].word;
    elems_.push_back(std::move(e));
    basis_.push_back(TracedPolynomial{elems_.back().poly, elems_.back().cert});
    enqueue_for((std::uint32_t)(elems_.size() - 1), maxdeg);
}

bool NCIdeal::composite(const Ambiguity& a) const {
    // Drop an ambiguity whose common multiple contains a third leading-word
    // occurrence splitting it into two strictly smaller ones (noncommutative
    // Gebauer-Moeller / composite-superposition criterion).
    std::size_t mlen = a.multiple.degree();
    for (std::size_t k = 0; k < elems_.size(); ++k) {
        const Word& lm = elems_[k].lm;
        if (lm.degree() > mlen) continue;
        std::size_t pos = 0;
        for (;;) {
            pos = a.multiple.find(lm, pos);
            if (pos == Word::npos) break;
            std::size_t c = pos, d = pos + lm.degree();
            bool is_occ1 = (k == a.i && c == a.a1 && d == a.b1);
            bool is_occ2 = (k == a.j && c == a.a2 && d == a.b2);
            if (!is_occ1 && !is_occ2) {
                std::size_t span1 = std::max(a.b1, d) - std::min(a.a1, c);
                std::size_t span2 = std::max(a.b2, d) - std::min(a.a2, c);
                if (span1 < mlen && span2 < mlen) return true;
            }
            ++pos;
        }
    }
    return false;
}

bool NCIdeal::step(const GBOptions& opts) {
    build(opts.maxdeg);
    if (pending_.empty()) return false;
    ++iterations_;
    if (opts.diag && iterations_ % 5 == 0)
        *opts.diag << "Starting iteration " << iterations_ << "..." << std::endl;

    std::size_t dmin = (std::size_t)-1;
    for (const auto& a : pending_) dmin = std::min(dmin, a.degree());
    std::vector<Ambiguity> batch;
    std::vector<Ambiguity> rest;
    for (auto& a : pending_) {
        if (a.degree() == dmin)
            batch.push_back(std::move(a));
        else
            rest.push_back(std::move(a));
    }
    pending_ = std::move(rest);
    sort_ambiguities(batch);
    if (opts.criterion) {
        std::erase_if(batch, [&](const Ambiguity& a) { return composite(a); });
    }
    if (opts.verbose > 0 && opts.diag)
        *opts.diag << "iteration " << iterations_ << ": degree " << dmin << ", "
                   << batch.size() << " ambiguities, " << pending_.size() << " pending"
                   << std::endl;

    // Phase 1: reduce every S-polynomial of the batch against the snapshot.
    std::size_t snapshot = elems_.size();
    std::vector<TracedPolynomial> remainders(batch.size());
    Reducer red{order_, opts.trace_cofactors, -1, newest_first_};
    GBDetail::ElemView view{elems_, snapshot};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (opts.parallel)
#endif
    for (std::size_t b = 0; b < batch.size(); ++b) {
        TracedPolynomial s = s_polynomial(batch[b], basis_, order_, opts.trace_cofactors);
        std::vector<Term> ts = to_sorted(s.poly, order_);
        red.run(ts, view, (std::size_t)-1, 0, &s.cert);
        remainders[b] = TracedPolynomial{from_sorted(alg_, std::move(ts)), std::move(s.cert)};
    }

    // Phase 2: serial merge in batch order. Remainders were reduced against
    // the snapshot only, so the outcome is independent of phase-1 scheduling;
    // exact duplicates within the batch are dropped.
    for (std::size_t b = 0; b < batch.size(); ++b) {
        if (remainders[b].is_zero()) continue;
        TracedPolynomial r = std::move(remainders[b]);
        Rational lc = order_.leading_term(r.poly).coeff;
        if (!lc.is_one()) {
            r.poly = r.poly.scaled(lc.inverse());
            r.cert = r.cert.scaled(lc.inverse());
        }
        bool duplicate = false;
        for (std::size_t k = snapshot; k < elems_.size(); ++k)
            if (elems_[k].poly == r.poly) {
                duplicate = true;
                break;
            }
        if (duplicate) continue;
        adjoin(std::move(r.poly), std::move(r.cert), opts.maxdeg);
    }

    if (opts.tail_reduce) tail_reduce_all();
    return true;
}

void NCIdeal::tail_reduce_all() {
    Reducer red{order_, true, -1, newest_first_};
    for (std::size_t k = 0; k < elems_.size(); ++k) {
        std::vector<Term> ts = elems_[k].sorted;
        Certificate cert = elems_[k].cert;
        red.run(ts, GBDetail::ElemView{elems_, elems_.size()}, k, 1, &cert);
        if (ts != elems_[k].sorted) {
            elems_[k].sorted = std::move(ts);
            elems_[k].poly = from_sorted(alg_, elems_[k].sorted);
            elems_[k].cert = std::move(cert);
            basis_[k] = TracedPolynomial{elems_[k].poly, elems_[k].cert};
        }
    }
}

std::vector<TracedPolynomial> NCIdeal::groebner_basis(const GBOptions& opts) {
    if (opts.reset) reset();
    build(opts.maxdeg);
    while (iterations_ < opts.maxiter && !pending_.empty()) step(opts);
    return basis_;
}

TracedPolynomial NCIdeal::reduced_form(const Polynomial& f, const GBOptions& opts) {
    if (!f.is_zero() && !f.algebra()->same_as(*alg_))
        throw UsageError("polynomial over a different algebra");
    groebner_basis(opts);
    return reduce_only(f);
}

TracedPolynomial NCIdeal::reduce_only(const Polynomial& f) const {
    return GBDetail::reduce(*this, f, elems_.size(), true);
}

Polynomial NCIdeal::normal_form(const Polynomial& f) const {
    return GBDetail::reduce(*this, f, elems_.size(), false).poly;
}

namespace {

struct ListView {
    const std::vector<TracedPolynomial>* g;
    const MonomialOrder* order;
    std::vector<Word> lms;
    std::vector<std::vector<Term>> sorted;

    void refresh() {
        lms.clear();
        sorted.clear();
        for (const auto& t : *g) {
            sorted.push_back(to_sorted(t.poly, *order));
            lms.push_back(sorted.back()[0].word);
        }
    }
    std::size_t size() const { return g->size(); }
    const Word& lm(std::size_t k) const { return lms[k]; }
    const std::vector<Term>& terms(std::size_t k) const { return sorted[k]; }
    const Certificate& cert(std::size_t k) const { return (*g)[k].cert; }
};

}  // namespace

std::vector<TracedPolynomial> interreduce(const std::vector<TracedPolynomial>& G,
                                          const MonomialOrder& order) {
    std::vector<TracedPolynomial> out;
    for (const auto& t : G) {
        if (t.poly.is_zero()) continue;
        Rational lc = order.leading_term(t.poly).coeff;
        out.push_back(TracedPolynomial{t.poly.scaled(lc.inverse()), t.cert.scaled(lc.inverse())});
    }
    Reducer red{order, true, -1};
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k < out.size(); ++k) {
            ListView view{&out, &order, {}, {}};
            view.refresh();
            std::vector<Term> ts = view.sorted[k];
            Certificate cert = out[k].cert;
            red.run(ts, view, k, 0, &cert);
            Polynomial p = from_sorted(out[k].poly.algebra(), std::move(ts));
            if (p == out[k].poly) continue;
            changed = true;
            if (p.is_zero()) {
                out.erase(out.begin() + (std::ptrdiff_t)k);
            } else {
                Rational lc = order.leading_term(p).coeff;
                out[k] = TracedPolynomial{p.scaled(lc.inverse()), cert.scaled(lc.inverse())};
            }
            break;  // restart the sweep after any change
        }
    }
    return out;
}

}  // namespace ncgb
