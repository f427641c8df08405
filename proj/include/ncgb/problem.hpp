#ifndef NCGB_PROBLEM_HPP
#define NCGB_PROBLEM_HPP

#include <optional>
#include <string>
#include <vector>

#include "ncgb/heuristics.hpp"
#include "ncgb/logic.hpp"
#include "ncgb/quiver.hpp"

namespace ncgb {

/// One problem file: an algebra with optional adjoint pairing, order and
/// quiver, then either assumptions/claims (and friends) or a sorted
/// forall-exists statement block.
struct Problem {
    AlgebraPtr alg;
    AdjointMap adj;
    std::optional<MonomialOrder> order;
    std::optional<Quiver> quiver;

    std::string task = "certify";  // certify | gb | reduce | find | cancel-left | cancel-right | prove
    int maxiter = 10;
    int degbound = 5;
    bool interreduce_flag = false;

    std::vector<Polynomial> assumptions;
    std::vector<Polynomial> claims;
    std::vector<Polynomial> reduce_targets;

    std::optional<Polynomial> target;  // find
    std::string heuristic;             // heuristic name as written, "" = default
    std::optional<Term> prefix, suffix;
    std::optional<std::pair<Term, Term>> cancel_args;

    std::optional<Statement> statement;
    int prove_degree = 3;
    int prove_summands = 1;
    int prove_coeff = 1;

    MonomialOrder effective_order() const {
        return order ? *order : MonomialOrder::deglex(alg);
    }
};

Problem parse_problem_text(const std::string& text, const std::string& origin = "<string>");
Problem parse_problem_file(const std::string& path);

SearchHeuristic parse_search_heuristic(const std::string& name);
CancelHeuristic parse_cancel_heuristic(const std::string& name);

}  // namespace ncgb

#endif
