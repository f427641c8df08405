#ifndef NCGB_HEURISTICS_HPP
#define NCGB_HEURISTICS_HPP

#include <optional>
#include <vector>

#include "ncgb/gb.hpp"
#include "ncgb/quiver.hpp"

namespace ncgb {

enum class SearchHeuristic { Naive, Groebner, Subalgebra, RightIdeal, LeftIdeal };
enum class CancelHeuristic { Subalgebra, OneSided, TwoSided };

/// Parameters for find_equivalent_expression. right-ideal requires a prefix,
/// left-ideal a suffix.
struct SearchSpec {
    Polynomial target;
    SearchHeuristic heuristic = SearchHeuristic::Groebner;
    std::optional<Term> prefix;
    std::optional<Term> suffix;
    int degbound = 5;
    std::optional<MonomialOrder> order;
    int maxiter = 10;
    std::optional<Quiver> quiver;
};

/// Search the ideal for elements of the form +-(f - g); with a prefix p the
/// unknown is g = p*h, with a suffix s it is g = h*s. Every returned element
/// is re-verified as an ideal member before being returned.
///
/// Sign and selection conventions follow the session output they reproduce:
/// the naive scan returns the first representative found (one per residue
/// class), prefix-shaped results as g - f and suffix-shaped ones as f - g;
/// the one-sided intersections return all matches as g - f.
std::vector<Polynomial> find_equivalent_expression(NCIdeal& I, const SearchSpec& spec);

/// Elements a*b*f of I, returned as b*f (verified via reduced_form(a*(b*f))).
std::vector<Polynomial> apply_left_cancellability(NCIdeal& I, const Term& a, const Term& b,
                                                  CancelHeuristic heuristic = CancelHeuristic::Subalgebra,
                                                  int maxiter = 10, int degbound = 5);

/// Elements f*a*b of I, returned as f*a.
std::vector<Polynomial> apply_right_cancellability(NCIdeal& I, const Term& a, const Term& b,
                                                   CancelHeuristic heuristic = CancelHeuristic::Subalgebra,
                                                   int maxiter = 10, int degbound = 5);

enum class FactorSide { Prefix, Suffix };

/// Douglas-style range factorisation: find f = through * h (Prefix) or
/// f = h * through (Suffix) modulo the ideal.
std::vector<Polynomial> find_range_factorisation(NCIdeal& I, const Polynomial& f,
                                                 const Term& through, FactorSide side,
                                                 int maxiter = 10, int degbound = 5);

/// Drop candidates that still involve any variable of the search target
/// (the CLI's --pure flag).
std::vector<Polynomial> drop_contaminated(const std::vector<Polynomial>& results,
                                          const Polynomial& target);

}  // namespace ncgb

#endif
