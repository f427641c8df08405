#include "ncgb/problem.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace ncgb {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace((unsigned char)s[a])) ++a;
    while (b > a && std::isspace((unsigned char)s[b - 1])) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split_top_level(const std::string& s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == sep && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!trim(cur).empty()) out.push_back(trim(cur));
    return out;
}

bool starts_with_word(const std::string& s, const char* w) {
    std::size_t n = std::string(w).size();
    return s.size() >= n && s.compare(0, n, w) == 0 &&
           (s.size() == n || !std::isalnum((unsigned char)s[n]));
}

/// Assumption line: polynomial | pinv(a,b,a_adj,b_adj) | add_adj(line, ...).
std::vector<Polynomial> parse_assumption_expr(const std::string& expr, const AlgebraPtr& alg,
                                              const AdjointMap& adj) {
    std::string s = trim(expr);
    if (starts_with_word(s, "pinv")) {
        auto open = s.find('(');
        auto close = s.rfind(')');
        if (open == std::string::npos || close == std::string::npos || close < open)
            throw UsageError("malformed pinv(...) in problem file");
        auto args = split_top_level(s.substr(open + 1, close - open - 1), ',');
        if (args.size() != 4) throw UsageError("pinv takes four variables");
        return pinv(alg, alg->require(args[0]), alg->require(args[1]), alg->require(args[2]),
                    alg->require(args[3]));
    }
    if (starts_with_word(s, "add_adj")) {
        auto open = s.find('(');
        auto close = s.rfind(')');
        if (open == std::string::npos || close == std::string::npos || close < open)
            throw UsageError("malformed add_adj(...) in problem file");
        std::vector<Polynomial> inner;
        for (const auto& arg : split_top_level(s.substr(open + 1, close - open - 1), ',')) {
            auto part = parse_assumption_expr(arg, alg, adj);
            inner.insert(inner.end(), part.begin(), part.end());
        }
        if (adj.empty()) throw UsageError("add_adj needs an adjoint pairing (adjoints = ...)");
        return add_adj(inner, adj);
    }
    return {parse_polynomial(s, alg)};
}

Term parse_term(const std::string& s, const AlgebraPtr& alg) {
    Polynomial p = parse_polynomial(s, alg);
    if (p.term_count() != 1) throw UsageError("expected a single term: '" + s + "'");
    return p.terms()[0];
}

// ---------------------------------------------------------------------------
// statement formulas

struct FormulaParser {
    std::string src;
    std::size_t pos = 0;
    const SortContext& sorts;

    FormulaParser(std::string s, const SortContext& sc) : src(std::move(s)), sorts(sc) {}

    void skip() {
        while (pos < src.size() && std::isspace((unsigned char)src[pos])) ++pos;
    }
    bool at(const char* tok) {
        skip();
        std::size_t n = std::string(tok).size();
        return src.compare(pos, n, tok) == 0;
    }
    bool eat(const char* tok) {
        if (!at(tok)) return false;
        pos += std::string(tok).size();
        return true;
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

    FormulaPtr parse() {
        FormulaPtr f = parse_implies();
        skip();
        if (pos != src.size()) fail("trailing input in statement");
        return f;
    }

    FormulaPtr parse_implies() {
        FormulaPtr a = parse_or();
        if (eat("->")) return Formula::implies(a, parse_implies());
        return a;
    }

    FormulaPtr parse_or() {
        FormulaPtr a = parse_and();
        while (eat("|")) a = Formula::lor(a, parse_and());
        return a;
    }

    FormulaPtr parse_and() {
        FormulaPtr a = parse_unary();
        while (eat("&")) a = Formula::land(a, parse_unary());
        return a;
    }

    FormulaPtr parse_unary() {
        skip();
        if (eat("~")) return Formula::lnot(parse_unary());
        if (at("(")) {
            // either a parenthesized formula or a parenthesized term; decide
            // by scanning for a comparison at depth zero after the group
            std::size_t save = pos;
            ++pos;
            int depth = 1;
            std::size_t scan = pos;
            while (scan < src.size() && depth > 0) {
                if (src[scan] == '(') ++depth;
                if (src[scan] == ')') --depth;
                ++scan;
            }
            // peek past the group
            std::size_t after = scan;
            while (after < src.size() && std::isspace((unsigned char)src[after])) ++after;
            bool is_term_group = after < src.size() &&
                                 (src[after] == '=' || src[after] == '!' || src[after] == '*' ||
                                  src[after] == '+' || src[after] == '-');
            // '->' directly after ')' means the group was a formula
            if (after + 1 < src.size() && src[after] == '-' && src[after + 1] == '>')
                is_term_group = false;
            pos = save;
            if (!is_term_group) {
                eat("(");
                FormulaPtr f = parse_implies();
                if (!eat(")")) fail("expected ')'");
                return f;
            }
        }
        return parse_atom();
    }

    FormulaPtr parse_atom() {
        OpTermPtr s, t;
        bool negated = false;
        if (bare_zero_ahead()) {
            // "0 = t": the right side fixes the zero's sort
            eat("0");
            if (eat("!="))
                negated = true;
            else if (!eat("="))
                fail("expected '=' or '!='");
            t = parse_term_expected(std::nullopt);
            s = OpTerm::zero(t->sort());
        } else {
            s = parse_term_expected(std::nullopt);
            if (eat("!="))
                negated = true;
            else if (!eat("="))
                fail("expected '=' or '!='");
            t = parse_term_expected(s->sort());
        }
        FormulaPtr f = Formula::eq(s, t);
        return negated ? Formula::lnot(f) : f;
    }

    bool bare_zero_ahead() {
        skip();
        if (pos >= src.size() || src[pos] != '0') return false;
        std::size_t p = pos + 1;
        while (p < src.size() && std::isspace((unsigned char)src[p])) ++p;
        return p < src.size() && (src[p] == '=' || src[p] == '!');
    }

    // term grammar over sorted variables; a zero constant stands alone or as
    // a summand, adopting the sort forced by its context
    OpTermPtr parse_term_expected(std::optional<Sort> expected) {
        skip();
        bool neg = false;
        if (at("-") && !at("->")) {
            eat("-");
            neg = true;
        }
        OpTermPtr acc = parse_product(expected);
        if (neg) acc = OpTerm::neg(acc);
        for (;;) {
            skip();
            if (at("->")) break;
            if (eat("+")) {
                acc = OpTerm::sum(acc, parse_product(acc->sort()));
            } else if (at("-") && !at("->")) {
                eat("-");
                acc = OpTerm::sum(acc, OpTerm::neg(parse_product(acc->sort())));
            } else {
                break;
            }
        }
        if (expected && !(acc->sort() == *expected)) fail("term has the wrong sort");
        return acc;
    }

    OpTermPtr parse_product(std::optional<Sort> expected) {
        skip();
        if (pos < src.size() && src[pos] == '0') {
            ++pos;
            if (!expected) fail("cannot infer the sort of a bare zero here");
            return OpTerm::zero(*expected);
        }
        std::vector<OpTermPtr> factors;
        factors.push_back(parse_factor());
        for (;;) {
            skip();
            if (!eat("*")) break;
            factors.push_back(parse_factor());
        }
        // compose left to right: f1*f2*...*fn
        OpTermPtr acc = factors[0];
        for (std::size_t i = 1; i < factors.size(); ++i) acc = OpTerm::prod(acc, factors[i]);
        return acc;
    }

    OpTermPtr parse_factor() {
        skip();
        if (pos >= src.size()) fail("unexpected end of statement");
        if (src[pos] == '(') {
            ++pos;
            OpTermPtr t = parse_term_expected(std::nullopt);
            skip();
            if (pos >= src.size() || src[pos] != ')') fail("expected ')'");
            ++pos;
            return t;
        }
        if (std::isalpha((unsigned char)src[pos]) || src[pos] == '_') {
            std::size_t start = pos;
            while (pos < src.size() && (std::isalnum((unsigned char)src[pos]) || src[pos] == '_'))
                ++pos;
            std::string name = src.substr(start, pos - start);
            if (!sorts.has(name)) fail("undeclared statement variable '" + name + "'");
            return OpTerm::var(name, sorts.sort_of(name));
        }
        fail("unexpected character in term");
    }
};

struct QuantDecl {
    bool universal;
    std::string name;
    Sort sort;
    std::optional<std::string> adjoint;
};

struct VarDecl {
    std::string name;
    Sort sort;
    std::optional<std::string> adjoint;
};

VarDecl parse_sorted_decl(std::istringstream& is, const std::string& line) {
    std::string name, colon, src, arrow, dst;
    is >> name >> colon >> src >> arrow >> dst;
    if (colon != ":" || arrow != "->" || dst.empty())
        throw UsageError("malformed declaration: '" + line + "'");
    VarDecl d{name, Sort{src, dst}, std::nullopt};
    std::string adjkw, adjname;
    if (is >> adjkw) {
        if (adjkw != "adjoint" || !(is >> adjname))
            throw UsageError("malformed adjoint clause: '" + line + "'");
        d.adjoint = adjname;
    }
    return d;
}

}  // namespace

SearchHeuristic parse_search_heuristic(const std::string& name) {
    if (name.empty() || name == "groebner") return SearchHeuristic::Groebner;
    if (name == "naive") return SearchHeuristic::Naive;
    if (name == "subalgebra") return SearchHeuristic::Subalgebra;
    if (name == "right-ideal") return SearchHeuristic::RightIdeal;
    if (name == "left-ideal") return SearchHeuristic::LeftIdeal;
    throw UsageError("unknown heuristic '" + name + "'");
}

CancelHeuristic parse_cancel_heuristic(const std::string& name) {
    if (name.empty() || name == "subalgebra") return CancelHeuristic::Subalgebra;
    if (name == "one-sided") return CancelHeuristic::OneSided;
    if (name == "two-sided") return CancelHeuristic::TwoSided;
    throw UsageError("unknown cancellability heuristic '" + name + "'");
}

Problem parse_problem_text(const std::string& text, const std::string& origin) {
    Problem p;
    std::vector<std::string> var_names;
    std::vector<std::pair<std::string, std::string>> adj_pairs;
    bool adj_auto = false;
    std::string order_spec, quiver_spec;
    std::vector<std::string> assumption_lines, claim_lines, reduce_lines, statement_lines;
    std::vector<QuantDecl> decls;
    std::string prefix_str, suffix_str, target_str, cancel_str;

    std::map<std::string, VarDecl> var_decls;  // the `var x : U -> V` form
    std::string section;
    std::istringstream is(text);
    std::string raw;
    while (std::getline(is, raw)) {
        std::string line = raw;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line == "assumptions:" || line == "claims:" || line == "reduce:" ||
            line == "statement:") {
            section = line.substr(0, line.size() - 1);
            continue;
        }
        if (starts_with_word(line, "var")) {
            std::istringstream ls(line);
            std::string kw;
            ls >> kw;
            VarDecl d = parse_sorted_decl(ls, line);
            var_decls[d.name] = d;
            section.clear();
            continue;
        }
        if (starts_with_word(line, "forall") || starts_with_word(line, "exists")) {
            bool universal = starts_with_word(line, "forall");
            section.clear();
            if (line.find(':') != std::string::npos) {
                // combined form: "forall a : U -> V [adjoint a_adj]"
                std::istringstream ls(line);
                std::string kw;
                ls >> kw;
                VarDecl d = parse_sorted_decl(ls, line);
                decls.push_back(QuantDecl{universal, d.name, d.sort, d.adjoint});
            } else {
                // prefix form: "forall a, p, q" over previous var declarations
                std::string rest = trim(line.substr(universal ? 6 : 6));
                for (const auto& name : split_top_level(rest, ',')) {
                    auto it = var_decls.find(name);
                    if (it == var_decls.end())
                        throw UsageError("quantifier over undeclared variable '" + name + "'");
                    decls.push_back(QuantDecl{universal, name, it->second.sort,
                                              it->second.adjoint});
                }
            }
            continue;
        }
        auto eq = line.find('=');
        bool is_kv = eq != std::string::npos && section != "statement";
        if (is_kv) {
            std::string key = trim(line.substr(0, eq));
            bool keyword = !key.empty();
            for (char c : key)
                if (!std::isalnum((unsigned char)c) && c != '_') keyword = false;
            if (keyword) {
                std::string value = trim(line.substr(eq + 1));
                section.clear();
                if (key == "vars") {
                    for (const auto& v : split_top_level(value, ',')) var_names.push_back(v);
                } else if (key == "adjoints") {
                    if (value == "auto") {
                        adj_auto = true;
                    } else {
                        for (const auto& pair : split_top_level(value, ',')) {
                            auto colon = pair.find(':');
                            if (colon == std::string::npos)
                                throw UsageError("adjoints wants x:x_adj pairs");
                            adj_pairs.emplace_back(trim(pair.substr(0, colon)),
                                                   trim(pair.substr(colon + 1)));
                        }
                    }
                } else if (key == "order") {
                    order_spec = value;
                } else if (key == "quiver") {
                    quiver_spec = value;
                } else if (key == "task") {
                    p.task = value;
                } else if (key == "maxiter") {
                    p.maxiter = std::stoi(value);
                } else if (key == "degbound") {
                    p.degbound = std::stoi(value);
                } else if (key == "heuristic") {
                    p.heuristic = value;
                } else if (key == "interreduce") {
                    p.interreduce_flag = (value == "true" || value == "1");
                } else if (key == "prefix") {
                    prefix_str = value;
                } else if (key == "suffix") {
                    suffix_str = value;
                } else if (key == "target") {
                    target_str = value;
                } else if (key == "cancel") {
                    cancel_str = value;
                } else if (key == "prove_degree") {
                    p.prove_degree = std::stoi(value);
                } else if (key == "prove_summands") {
                    p.prove_summands = std::stoi(value);
                } else if (key == "prove_coeff") {
                    p.prove_coeff = std::stoi(value);
                } else if (key == "objects") {
                    // informational; objects are named inline in declarations
                } else {
                    throw UsageError(origin + ": unknown key '" + key + "'");
                }
                continue;
            }
        }
        if (section == "assumptions") {
            assumption_lines.push_back(line);
        } else if (section == "claims") {
            claim_lines.push_back(line);
        } else if (section == "reduce") {
            reduce_lines.push_back(line);
        } else if (section == "statement") {
            statement_lines.push_back(line);
        } else {
            throw UsageError(origin + ": stray line '" + line + "'");
        }
    }

    // Statement problems declare their algebra through the quantifiers.
    if (!decls.empty()) {
        if (var_names.empty()) {
            for (const auto& d : decls) var_names.push_back(d.name);
            for (const auto& d : decls)
                if (d.adjoint) var_names.push_back(*d.adjoint);
        }
    }
    if (var_names.empty()) throw UsageError(origin + ": no variables declared");
    p.alg = Algebra::make(var_names);

    if (adj_auto) {
        p.adj = AdjointMap::by_suffix(p.alg);
    } else if (!adj_pairs.empty() || !decls.empty()) {
        std::vector<std::pair<VarIndex, VarIndex>> pairs;
        for (const auto& [x, y] : adj_pairs)
            pairs.emplace_back(p.alg->require(x), p.alg->require(y));
        for (const auto& d : decls)
            if (d.adjoint) pairs.emplace_back(p.alg->require(d.name), p.alg->require(*d.adjoint));
        p.adj = AdjointMap(p.alg, pairs);
    }

    if (!order_spec.empty()) p.order = parse_order(order_spec, p.alg);

    if (!quiver_spec.empty()) {
        std::vector<Quiver::Edge> edges;
        for (const auto& triple : split_top_level(quiver_spec, ',')) {
            std::string t = trim(triple);
            if (t.size() < 2 || t.front() != '(' || t.back() != ')')
                throw UsageError("quiver wants (U, V, x) triples");
            auto parts = split_top_level(t.substr(1, t.size() - 2), ',');
            if (parts.size() != 3) throw UsageError("quiver wants (U, V, x) triples");
            edges.push_back(Quiver::Edge{parts[0], parts[1], p.alg->require(parts[2])});
        }
        p.quiver = Quiver(p.alg, edges);
    }

    for (const auto& line : assumption_lines) {
        auto part = parse_assumption_expr(line, p.alg, p.adj);
        p.assumptions.insert(p.assumptions.end(), part.begin(), part.end());
    }
    for (const auto& line : claim_lines) p.claims.push_back(parse_polynomial(line, p.alg));
    for (const auto& line : reduce_lines)
        p.reduce_targets.push_back(parse_polynomial(line, p.alg));

    if (!prefix_str.empty()) p.prefix = parse_term(prefix_str, p.alg);
    if (!suffix_str.empty()) p.suffix = parse_term(suffix_str, p.alg);
    if (!target_str.empty()) p.target = parse_polynomial(target_str, p.alg);
    if (!cancel_str.empty()) {
        auto parts = split_top_level(cancel_str, ',');
        if (parts.size() != 2) throw UsageError("cancel wants two terms 'a, b'");
        p.cancel_args = {parse_term(parts[0], p.alg), parse_term(parts[1], p.alg)};
    }

    if (!statement_lines.empty()) {
        if (decls.empty()) throw UsageError(origin + ": statement without declarations");
        Statement st;
        st.env.alg = p.alg;
        st.env.adj = p.adj;
        for (VarIndex v = 0; v < p.alg->size(); ++v) st.env.index[p.alg->name(v)] = v;
        for (const auto& d : decls) {
            st.sorts.declare(d.name, d.sort);
            if (d.adjoint) st.sorts.declare(*d.adjoint, Sort{d.sort.dst, d.sort.src});
            if (d.universal) {
                st.universals.push_back(d.name);
                if (d.adjoint) st.universals.push_back(*d.adjoint);
            } else {
                st.existentials.push_back(
                    Statement::Existential{d.name, d.sort, d.adjoint});
            }
        }
        std::string body;
        for (const auto& l : statement_lines) {
            if (!body.empty()) body += " ";
            body += l;
        }
        FormulaParser fp(body, st.sorts);
        st.matrix = fp.parse();
        p.statement = std::move(st);
        if (p.task == "certify") p.task = "prove";
    }
    if (p.statement && !p.claims.empty())
        throw UsageError(origin + ": a problem has either claims or a statement, not both");

    return p;
}

Problem parse_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read problem file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_problem_text(ss.str(), path);
}

}  // namespace ncgb
