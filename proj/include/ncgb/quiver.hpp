#ifndef NCGB_QUIVER_HPP
#define NCGB_QUIVER_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ncgb/freealg.hpp"

namespace ncgb {

/// Directed labelled multigraph typing the operators: an edge (u, v, x) says
/// the operator named by variable x maps U to V. One label may sit on several
/// edges.
class Quiver {
public:
    struct Edge {
        std::string source, target;
        VarIndex label;
    };

    Quiver() = default;
    Quiver(AlgebraPtr alg, std::vector<Edge> edges);

    const std::vector<Edge>& edges() const { return edges_; }
    const AlgebraPtr& algebra() const { return alg_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    bool empty() const { return edges_.empty(); }

    /// All (source, target) pairs realized by reading w right to left
    /// (composition order: the rightmost factor acts first). The empty word
    /// yields every loop (u, u).
    std::set<std::pair<std::string, std::string>> signatures(const Word& w) const;

    /// True iff p = 0 or all monomials of p share a common signature.
    bool is_compatible(const Polynomial& p) const;

private:
    AlgebraPtr alg_;
    std::vector<Edge> edges_;
    std::vector<std::string> vertices_;
};

}  // namespace ncgb

#endif
