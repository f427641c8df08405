#include "ncgb/quiver.hpp"

#include <algorithm>

namespace ncgb {

Quiver::Quiver(AlgebraPtr alg, std::vector<Edge> edges)
    : alg_(std::move(alg)), edges_(std::move(edges)) {
    for (const auto& e : edges_) {
        if (e.label >= alg_->size()) throw UsageError("quiver edge labels unknown variable");
        for (const auto* v : {&e.source, &e.target})
            if (std::find(vertices_.begin(), vertices_.end(), *v) == vertices_.end())
                vertices_.push_back(*v);
    }
}

std::set<std::pair<std::string, std::string>> Quiver::signatures(const Word& w) const {
    std::set<std::pair<std::string, std::string>> sigs;
    if (w.empty()) {
        for (const auto& v : vertices_) sigs.emplace(v, v);
        return sigs;
    }
    // Read right to left: the rightmost letter starts the path.
    std::set<std::pair<std::string, std::string>> paths;  // (source, reached)
    bool first = true;
    for (std::size_t i = w.degree(); i-- > 0;) {
        VarIndex x = w.letters[i];
        std::set<std::pair<std::string, std::string>> next;
        for (const auto& e : edges_) {
            if (e.label != x) continue;
            if (first) {
                next.emplace(e.source, e.target);
            } else {
                for (const auto& [src, at] : paths)
                    if (at == e.source) next.emplace(src, e.target);
            }
        }
        paths = std::move(next);
        first = false;
        if (paths.empty()) return {};
    }
    return paths;
}

bool Quiver::is_compatible(const Polynomial& p) const {
    if (p.is_zero()) return true;
    bool first = true;
    std::set<std::pair<std::string, std::string>> common;
    for (const auto& t : p.terms()) {
        auto s = signatures(t.word);
        if (first) {
            common = std::move(s);
            first = false;
        } else {
            std::set<std::pair<std::string, std::string>> inter;
            std::set_intersection(common.begin(), common.end(), s.begin(), s.end(),
                                  std::inserter(inter, inter.begin()));
            common = std::move(inter);
        }
        if (common.empty()) return false;
    }
    return !common.empty();
}

}  // namespace ncgb
