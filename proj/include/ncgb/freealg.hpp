#ifndef NCGB_FREEALG_HPP
#define NCGB_FREEALG_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ncgb/rational.hpp"

namespace ncgb {

using VarIndex = std::uint32_t;
constexpr VarIndex kNoVar = 0xffffffffu;

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// The ambient free algebra: an ordered set of named indeterminates.
/// Declaration order fixes the default variable ranking.
class Algebra {
public:
    static AlgebraPtr make(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(VarIndex v) const { return names_[v]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<VarIndex> find(std::string_view name) const;
    VarIndex require(std::string_view name) const;

    /// Same algebra = same variable names in the same order.
    bool same_as(const Algebra& o) const;

private:
    explicit Algebra(std::vector<std::string> names);
    std::vector<std::string> names_;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), pos(pos) {}
    std::size_t pos;
};

/// A monomial of the free algebra: a finite sequence of variables.
/// The empty word is the multiplicative identity.
struct Word {
    std::vector<VarIndex> letters;

    Word() = default;
    explicit Word(std::vector<VarIndex> l) : letters(std::move(l)) {}
    static Word single(VarIndex v) { return Word({v}); }

    std::size_t degree() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    Word operator*(const Word& o) const;
    Word subword(std::size_t from, std::size_t len) const;
    /// Leftmost occurrence of u at index >= from, or npos.
    std::size_t find(const Word& u, std::size_t from = 0) const;
    bool contains(const Word& u) const { return find(u) != npos; }

    bool operator==(const Word& o) const { return letters == o.letters; }
    bool operator!=(const Word& o) const { return !(*this == o); }
    std::size_t hash() const;

    static constexpr std::size_t npos = (std::size_t)-1;
};

/// Degree first, then position-wise by variable rank (later rank = larger).
/// This is the canonical storage order; monomial orders for computations
/// live in order.hpp.
int canonical_cmp(const Word& a, const Word& b);

struct Term {
    Rational coeff;
    Word word;

    Term() = default;
    Term(Rational c, Word w) : coeff(std::move(c)), word(std::move(w)) {}
    static Term one() { return Term(Rational(1), Word()); }

    Term operator*(const Term& o) const { return Term(coeff * o.coeff, word * o.word); }
    bool operator==(const Term& o) const { return coeff == o.coeff && word == o.word; }
};

/// An element of the free algebra over Q. Terms are kept sorted descending
/// under the canonical order, with distinct words and nonzero coefficients,
/// so equality is a plain vector comparison.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(AlgebraPtr alg) : alg_(std::move(alg)) {}
    Polynomial(AlgebraPtr alg, std::vector<Term> terms);

    static Polynomial zero(AlgebraPtr alg) { return Polynomial(std::move(alg)); }
    static Polynomial constant(AlgebraPtr alg, Rational c);
    static Polynomial variable(AlgebraPtr alg, VarIndex v);
    static Polynomial monomial(AlgebraPtr alg, Rational c, Word w);

    const AlgebraPtr& algebra() const { return alg_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    std::size_t degree() const;  // 0 for the zero polynomial

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const Rational& c) const;
    /// l * this * r
    Polynomial sandwich(const Term& l, const Term& r) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// True iff o == c * this for some nonzero rational c.
    bool scalar_multiple_of(const Polynomial& o) const;

private:
    AlgebraPtr alg_;
    std::vector<Term> terms_;  // sorted descending, canonical order

    void check_same(const Polynomial& o) const;
};

/// Involutive pairing of variables (x <-> x_adj).
class AdjointMap {
public:
    AdjointMap() = default;
    AdjointMap(AlgebraPtr alg, const std::vector<std::pair<VarIndex, VarIndex>>& pairs);
    /// Pair every `x` with `x_adj` when both names exist in the algebra.
    static AdjointMap by_suffix(const AlgebraPtr& alg, std::string_view suffix = "_adj");

    bool has(VarIndex v) const { return v < partner_.size() && partner_[v] != kNoVar; }
    VarIndex partner(VarIndex v) const;
    bool empty() const { return partner_.empty(); }

private:
    AlgebraPtr alg_;
    std::vector<VarIndex> partner_;
};

/// Letter-wise reversal through the pairing; coefficients are fixed by
/// the trivial conjugation on Q.
Polynomial adjoint(const Polynomial& p, const AdjointMap& m);
Word adjoint_word(const Word& w, const AdjointMap& m);

/// The four Moore-Penrose defining polynomials for (a, b):
/// [a*b*a - a, b*a*b - b, b_adj*a_adj - a*b, a_adj*b_adj - b*a].
std::vector<Polynomial> pinv(const AlgebraPtr& alg, VarIndex a, VarIndex b, VarIndex a_adj,
                             VarIndex b_adj);

/// F followed by the adjoints of its members, dropping polynomials that are
/// scalar multiples of an earlier entry.
std::vector<Polynomial> add_adj(const std::vector<Polynomial>& F, const AdjointMap& m);

/// Grammar: signed sums of products; product = factor ('*' factor)*;
/// factor = rational | identifier | identifier '^' uint.
Polynomial parse_polynomial(std::string_view src, const AlgebraPtr& alg);

struct FormatOptions {
    /// Print terms ascending under this comparison; defaults to canonical.
    int (*cmp)(const Word&, const Word&) = nullptr;
    const void* order = nullptr;  // set by order.hpp helper
};

std::string format_word(const Word& w, const Algebra& alg);  // "a*b^2*c", "1" for empty
std::string format_polynomial(const Polynomial& p);
/// Terms ascending under an arbitrary comparison (used to match order-aware
/// session output).
std::string format_polynomial_sorted(const Polynomial& p,
                                     const std::vector<const Term*>& ascending);

}  // namespace ncgb

#endif
