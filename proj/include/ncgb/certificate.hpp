#ifndef NCGB_CERTIFICATE_HPP
#define NCGB_CERTIFICATE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ncgb/freealg.hpp"

namespace ncgb {

/// One summand of a cofactor representation: left * gens[gen] * right.
/// The full coefficient lives on the left term; right.coeff is always 1.
struct CertTriple {
    Term left;
    std::uint32_t gen = 0;
    Term right;

    CertTriple() = default;
    CertTriple(Term l, std::uint32_t g, Term r);
    bool operator==(const CertTriple& o) const {
        return gen == o.gen && left == o.left && right == o.right;
    }
};

/// Cofactor representation of a polynomial in terms of a generator list.
/// Triples with equal (left word, index, right word) are merged as they are
/// added, first occurrence fixing the position.
class Certificate {
public:
    Certificate() = default;

    void add(Term left, std::uint32_t gen, Term right);
    void add(const CertTriple& t) { add(t.left, t.gen, t.right); }
    void add_all(const Certificate& o);
    void add_scaled(const Certificate& o, const Rational& c);
    /// this += l * o * r
    void add_sandwiched(const Certificate& o, const Term& l, const Term& r);

    Certificate scaled(const Rational& c) const;
    Certificate negated() const { return scaled(Rational(-1)); }

    const std::vector<CertTriple>& triples() const { return triples_; }
    bool empty() const { return triples_.empty(); }
    std::size_t size() const { return triples_.size(); }

    Polynomial expand(const AlgebraPtr& alg, std::span<const Polynomial> gens) const;
    bool integer_clean() const;  // all coefficients in Z

    bool operator==(const Certificate& o) const { return triples_ == o.triples_; }
    /// Equality as multisets of summands.
    bool reorder_equal(const Certificate& o) const;

private:
    std::vector<CertTriple> triples_;
    void insert(Term left, std::uint32_t gen, Term right);
};

Polynomial expand_cofactors(const Certificate& cert, const std::vector<Polynomial>& assumptions);

/// "<expanded> = <sum of bracketed assumption instances>", factors of 1
/// omitted, assumption polynomials parenthesized.
std::string pretty_print_proof(const Certificate& cert,
                               const std::vector<Polynomial>& assumptions);

}  // namespace ncgb

#endif
