#include "ncgb/order.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ncgb {

MonomialOrder MonomialOrder::deglex(const AlgebraPtr& alg) {
    std::vector<VarIndex> vars(alg->size());
    for (VarIndex v = 0; v < alg->size(); ++v) vars[v] = v;
    return of_variables(alg, vars);
}

MonomialOrder MonomialOrder::of_variables(const AlgebraPtr& alg,
                                          const std::vector<VarIndex>& vars) {
    return of_blocks(alg, {vars});
}

MonomialOrder MonomialOrder::of_blocks(const AlgebraPtr& alg,
                                       const std::vector<std::vector<VarIndex>>& blocks) {
    MonomialOrder o;
    o.alg_ = alg;
    o.blocks_ = blocks;
    if (blocks.empty()) throw UsageError("order needs at least one block");
    for (const auto& b : blocks)
        if (b.empty()) throw UsageError("order blocks must be non-empty");
    o.index();
    return o;
}

void MonomialOrder::index() {
    block_of_.assign(alg_->size(), kNoVar);
    rank_.assign(alg_->size(), kNoVar);
    std::uint32_t rank = 0;
    for (std::uint32_t b = 0; b < blocks_.size(); ++b) {
        for (VarIndex v : blocks_[b]) {
            if (v >= alg_->size()) throw UsageError("order references unknown variable");
            if (block_of_[v] != kNoVar)
                throw UsageError("variable '" + alg_->name(v) + "' appears twice in order");
            block_of_[v] = b;
            rank_[v] = rank++;
        }
    }
    for (VarIndex v = 0; v < alg_->size(); ++v)
        if (block_of_[v] == kNoVar)
            throw UsageError("variable '" + alg_->name(v) + "' missing from order");
}

void MonomialOrder::check_letter(VarIndex v) const {
    if (v >= block_of_.size() || block_of_[v] == kNoVar)
        throw UsageError("word contains a variable foreign to the order");
}

int MonomialOrder::compare(const Word& a, const Word& b) const {
    // Degree vector, top block first.
    if (blocks_.size() == 1) {
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    } else {
        std::vector<std::uint32_t> da(blocks_.size(), 0), db(blocks_.size(), 0);
        for (VarIndex v : a.letters) {
            check_letter(v);
            ++da[block_of_[v]];
        }
        for (VarIndex v : b.letters) {
            check_letter(v);
            ++db[block_of_[v]];
        }
        for (std::size_t i = blocks_.size(); i-- > 0;)
            if (da[i] != db[i]) return da[i] < db[i] ? -1 : 1;
    }
    // Equal degree vectors imply equal length; break ties left to right.
    for (std::size_t i = 0; i < a.degree(); ++i) {
        VarIndex x = a.letters[i], y = b.letters[i];
        check_letter(x);
        check_letter(y);
        if (rank_[x] != rank_[y]) return rank_[x] < rank_[y] ? -1 : 1;
    }
    return 0;
}

std::size_t MonomialOrder::leading_index(const Polynomial& p) const {
    if (p.is_zero()) throw UsageError("leading term of the zero polynomial");
    const auto& ts = p.terms();
    std::size_t best = 0;
    for (std::size_t i = 1; i < ts.size(); ++i)
        if (compare(ts[i].word, ts[best].word) > 0) best = i;
    return best;
}

const Term& MonomialOrder::leading_term(const Polynomial& p) const {
    return p.terms()[leading_index(p)];
}

const Word& MonomialOrder::leading_word(const Polynomial& p) const {
    return leading_term(p).word;
}

std::vector<const Term*> MonomialOrder::ascending(const Polynomial& p) const {
    std::vector<const Term*> ts;
    ts.reserve(p.terms().size());
    for (const auto& t : p.terms()) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(),
              [&](const Term* x, const Term* y) { return compare(x->word, y->word) < 0; });
    return ts;
}

std::string MonomialOrder::describe() const {
    std::ostringstream os;
    auto block = [&](const std::vector<VarIndex>& b) {
        os << "[";
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (i) os << ", ";
            os << alg_->name(b[i]);
        }
        os << "]";
    };
    if (blocks_.size() == 1) {
        block(blocks_[0]);
    } else {
        os << "[";
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            if (i) os << ", ";
            block(blocks_[i]);
        }
        os << "]";
    }
    return os.str();
}

MonomialOrder parse_order(std::string_view spec, const AlgebraPtr& alg) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < spec.size() && std::isspace((unsigned char)spec[pos])) ++pos;
    };
    auto expect = [&](char c) {
        skip();
        if (pos >= spec.size() || spec[pos] != c)
            throw ParseError(std::string("expected '") + c + "' in order spec", pos);
        ++pos;
    };
    auto ident = [&]() -> VarIndex {
        skip();
        std::size_t start = pos;
        while (pos < spec.size() && (std::isalnum((unsigned char)spec[pos]) || spec[pos] == '_'))
            ++pos;
        if (start == pos) throw ParseError("expected variable name in order spec", pos);
        return alg->require(spec.substr(start, pos - start));
    };
    auto var_list = [&]() {
        std::vector<VarIndex> vars;
        expect('[');
        skip();
        if (pos < spec.size() && spec[pos] == ']') {
            ++pos;
            return vars;
        }
        for (;;) {
            vars.push_back(ident());
            skip();
            if (pos < spec.size() && spec[pos] == ',') {
                ++pos;
                continue;
            }
            expect(']');
            return vars;
        }
    };

    skip();
    expect('[');
    skip();
    if (pos < spec.size() && spec[pos] == '[') {
        std::vector<std::vector<VarIndex>> blocks;
        for (;;) {
            blocks.push_back(var_list());
            skip();
            if (pos < spec.size() && spec[pos] == ',') {
                ++pos;
                skip();
                continue;
            }
            expect(']');
            break;
        }
        return MonomialOrder::of_blocks(alg, blocks);
    }
    // single flat list; rewind past the '[' we consumed
    --pos;
    return MonomialOrder::of_variables(alg, var_list());
}

std::string format_polynomial(const Polynomial& p, const MonomialOrder& o) {
    if (p.is_zero()) return "0";
    return format_polynomial_sorted(p, o.ascending(p));
}

}  // namespace ncgb
