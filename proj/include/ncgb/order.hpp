#ifndef NCGB_ORDER_HPP
#define NCGB_ORDER_HPP

#include <string>
#include <vector>

#include "ncgb/freealg.hpp"

namespace ncgb {

/// Admissible order on words: degree-left-lexicographic within and across
/// variable blocks. Blocks are given ascending (later blocks dominate), which
/// makes multi-block orders elimination orders for the top block.
class MonomialOrder {
public:
    MonomialOrder() = default;

    /// Single block in algebra declaration order (later = larger).
    static MonomialOrder deglex(const AlgebraPtr& alg);
    /// Single block in the given variable order (later = larger).
    static MonomialOrder of_variables(const AlgebraPtr& alg, const std::vector<VarIndex>& vars);
    static MonomialOrder of_blocks(const AlgebraPtr& alg,
                                   const std::vector<std::vector<VarIndex>>& blocks);

    const AlgebraPtr& algebra() const { return alg_; }
    const std::vector<std::vector<VarIndex>>& blocks() const { return blocks_; }
    std::size_t block_count() const { return blocks_.size(); }

    /// <0, 0, >0 like strcmp; 0 only for identical words.
    int compare(const Word& a, const Word& b) const;
    bool less(const Word& a, const Word& b) const { return compare(a, b) < 0; }

    const Term& leading_term(const Polynomial& p) const;  // p != 0
    std::size_t leading_index(const Polynomial& p) const;
    const Word& leading_word(const Polynomial& p) const;

    /// Term pointers of p sorted ascending under this order.
    std::vector<const Term*> ascending(const Polynomial& p) const;

    /// Session-style text, e.g. "[x, y, z]" or "[[y, x], [z]]".
    std::string describe() const;

private:
    AlgebraPtr alg_;
    std::vector<std::vector<VarIndex>> blocks_;
    std::vector<std::uint32_t> block_of_;  // per variable
    std::vector<std::uint32_t> rank_;      // block-major rank, later = larger

    void index();
    void check_letter(VarIndex v) const;
};

/// Parse an order spec: `[x, y, z]` or `[[y, x], [z]]` (blocks ascending).
MonomialOrder parse_order(std::string_view spec, const AlgebraPtr& alg);

std::string format_polynomial(const Polynomial& p, const MonomialOrder& o);

}  // namespace ncgb

#endif
