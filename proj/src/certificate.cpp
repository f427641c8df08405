#include "ncgb/certificate.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace ncgb {

CertTriple::CertTriple(Term l, std::uint32_t g, Term r)
    : left(std::move(l)), gen(g), right(std::move(r)) {
    left.coeff = left.coeff * right.coeff;
    right.coeff = Rational(1);
}

void Certificate::insert(Term left, std::uint32_t gen, Term right) {
    Rational c = left.coeff * right.coeff;
    if (c.is_zero()) return;
    for (auto& t : triples_) {
        if (t.gen == gen && t.left.word == left.word && t.right.word == right.word) {
            t.left.coeff = t.left.coeff + c;
            return;
        }
    }
    CertTriple t;
    t.left = Term(std::move(c), std::move(left.word));
    t.gen = gen;
    t.right = Term(Rational(1), std::move(right.word));
    triples_.push_back(std::move(t));
}

void Certificate::add(Term left, std::uint32_t gen, Term right) {
    insert(std::move(left), gen, std::move(right));
    // drop summands that cancelled out
    if (!triples_.empty() && triples_.back().left.coeff.is_zero()) triples_.pop_back();
    std::erase_if(triples_, [](const CertTriple& t) { return t.left.coeff.is_zero(); });
}

void Certificate::add_all(const Certificate& o) {
    for (const auto& t : o.triples_) insert(t.left, t.gen, t.right);
    std::erase_if(triples_, [](const CertTriple& t) { return t.left.coeff.is_zero(); });
}

void Certificate::add_scaled(const Certificate& o, const Rational& c) {
    if (c.is_zero()) return;
    for (const auto& t : o.triples_)
        insert(Term(t.left.coeff * c, t.left.word), t.gen, t.right);
    std::erase_if(triples_, [](const CertTriple& t) { return t.left.coeff.is_zero(); });
}

void Certificate::add_sandwiched(const Certificate& o, const Term& l, const Term& r) {
    Rational c = l.coeff * r.coeff;
    if (c.is_zero()) return;
    for (const auto& t : o.triples_)
        insert(Term(t.left.coeff * c, l.word * t.left.word), t.gen,
               Term(Rational(1), t.right.word * r.word));
    std::erase_if(triples_, [](const CertTriple& t) { return t.left.coeff.is_zero(); });
}

Certificate Certificate::scaled(const Rational& c) const {
    Certificate out;
    if (c.is_zero()) return out;
    out.triples_ = triples_;
    for (auto& t : out.triples_) t.left.coeff = t.left.coeff * c;
    return out;
}

Polynomial Certificate::expand(const AlgebraPtr& alg, std::span<const Polynomial> gens) const {
    Polynomial sum = Polynomial::zero(alg);
    for (const auto& t : triples_) {
        if (t.gen >= gens.size()) throw UsageError("certificate references generator out of range");
        sum = sum + gens[t.gen].sandwich(t.left, t.right);
    }
    return sum;
}

bool Certificate::integer_clean() const {
    for (const auto& t : triples_)
        if (!t.left.coeff.is_integer() || !t.right.coeff.is_integer()) return false;
    return true;
}

bool Certificate::reorder_equal(const Certificate& o) const {
    if (triples_.size() != o.triples_.size()) return false;
    std::vector<bool> used(o.triples_.size(), false);
    for (const auto& t : triples_) {
        bool found = false;
        for (std::size_t j = 0; j < o.triples_.size(); ++j) {
            if (!used[j] && o.triples_[j] == t) {
                used[j] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

Polynomial expand_cofactors(const Certificate& cert, const std::vector<Polynomial>& assumptions) {
    if (assumptions.empty()) throw UsageError("expand_cofactors: no assumptions");
    return cert.expand(assumptions[0].algebra(), assumptions);
}

std::string pretty_print_proof(const Certificate& cert,
                               const std::vector<Polynomial>& assumptions) {
    AlgebraPtr alg = assumptions.empty() ? nullptr : assumptions[0].algebra();
    Polynomial lhs = cert.expand(alg, assumptions);
    std::ostringstream os;
    os << format_polynomial(lhs) << " =";
    if (cert.empty()) {
        os << " 0";
        return os.str();
    }
    bool first = true;
    for (const auto& t : cert.triples()) {
        Rational c = t.left.coeff;
        bool neg = c.is_negative();
        if (neg) c = -c;
        os << (first ? (neg ? " -" : " ") : (neg ? " - " : " + "));
        first = false;
        if (!c.is_one()) os << c.str() << "*";
        if (!t.left.word.empty()) os << format_word(t.left.word, *alg) << "*";
        os << "(" << format_polynomial(assumptions[t.gen]) << ")";
        if (!t.right.word.empty()) os << "*" << format_word(t.right.word, *alg);
    }
    return os.str();
}

}  // namespace ncgb
