// Acceptance suite: one check per numbered criterion, each printing a
// single PASS/FAIL line. Run with no arguments for all criteria or with a
// criterion number to run just that one.

#include <chrono>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "ncgb/cli.hpp"
#include "ncgb/heuristics.hpp"
#include "ncgb/logic.hpp"

#ifndef NCGB_FIXTURES_DIR
#define NCGB_FIXTURES_DIR "fixtures"
#endif

using namespace ncgb;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
    void note(const std::string& extra) {
        if (!detail.empty()) detail += "; ";
        detail += extra;
    }
};

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Polynomial P(const AlgebraPtr& alg, const std::string& src) {
    return parse_polynomial(src, alg);
}

Term T(const AlgebraPtr& alg, const std::string& src) {
    return parse_polynomial(src, alg).terms()[0];
}

bool set_equal(const std::vector<Polynomial>& got, std::vector<Polynomial> want) {
    if (got.size() != want.size()) return false;
    for (const auto& g : got) {
        auto it = std::find(want.begin(), want.end(), g);
        if (it == want.end()) return false;
        want.erase(it);
    }
    return true;
}

std::string no_spaces(std::string s) {
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    return s;
}

// The uniqueness assumptions in session order.
std::vector<Polynomial> uniqueness_assumptions(const AlgebraPtr& alg) {
    AdjointMap adj = AdjointMap::by_suffix(alg);
    std::vector<Polynomial> gens = pinv(alg, alg->require("a"), alg->require("b"),
                                        alg->require("a_adj"), alg->require("b_adj"));
    auto pc = pinv(alg, alg->require("a"), alg->require("c"), alg->require("a_adj"),
                   alg->require("c_adj"));
    gens.insert(gens.end(), pc.begin(), pc.end());
    return add_adj(gens, adj);
}

// The corrected transcription of the uniqueness cofactor representation:
// the summands of the displayed equation, with the sign of the
// b*c_adj summand as in the session output (which is the variant that
// actually expands to b - c).
Certificate corrected_eq4(const AlgebraPtr& alg) {
    Certificate c;
    auto add = [&](const char* l, int g, const char* r) {
        c.add(T(alg, l), (std::uint32_t)g, T(alg, r));
    };
    add("1", 5, "1");
    add("b*c_adj", 8, "1");
    add("-b*a*c", 2, "1");
    add("-b", 4, "b");
    add("b", 6, "1");
    add("-b", 6, "b_adj*a_adj");
    add("-1", 1, "1");
    add("1", 7, "b*a*c");
    add("-1", 10, "b_adj*c");
    add("c", 0, "c");
    add("-1", 3, "c");
    add("a_adj*c_adj", 3, "c");
    return c;
}

std::vector<Polynomial> session_a5_gens(const AlgebraPtr& alg) {
    return {P(alg, "a*b*a - a"), P(alg, "b*a*b - b"), P(alg, "a*b - c*d"),
            P(alg, "b*a - d*c"), P(alg, "c*d*c - c"), P(alg, "d*c*d - d")};
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
    Outcome o;
    auto t0 = Clock::now();
    auto alg = Algebra::make({"a", "b", "c", "a_adj", "b_adj", "c_adj"});
    auto gens = uniqueness_assumptions(alg);
    o.require(gens.size() == 12, "assumption list is not the 12 session polynomials");

    CertifyReport rep = certify(gens, P(alg, "b - c"));
    double ms = ms_since(t0);
    o.require(rep.proved(), "certify failed on b - c");
    if (!rep.proved()) return o;
    const Certificate& cert = rep.proofs[0];
    o.require(cert.expand(alg, gens) == P(alg, "b - c"),
              "certificate does not expand bit-exactly to b - c");
    o.require(rep.integer_clean[0], "certificate has non-integer coefficients");
    o.require(cert.size() == 12, "certificate does not have 12 summands");
    o.require(ms < 5000.0, "took " + std::to_string(ms) + " ms");

    Certificate target = corrected_eq4(alg);
    o.require(target.expand(alg, gens) == P(alg, "b - c"),
              "internal: corrected transcription broken");
    if (cert.reorder_equal(target))
        o.note("summand-for-summand equal to the corrected printed representation");
    else
        o.note("valid 12-summand representation; differs from the printed one, whose "
               "as-published form does not expand to b - c (sign defect documented)");
    return o;
}

Outcome criterion2() {
    Outcome o;
    auto alg = Algebra::make({"x", "y"});
    std::vector<Polynomial> gens = {P(alg, "x*y*x - x*y"), P(alg, "y*x*x*y - y")};
    NCIdeal ideal(gens);
    auto basis = ideal.groebner_basis();
    std::vector<Polynomial> plain;
    for (const auto& t : basis) plain.push_back(t.poly);
    o.require(set_equal(plain, {P(alg, "x*y*x - x*y"), P(alg, "y*x^2*y - y"),
                                P(alg, "y*x - y"), P(alg, "x*y^2 - x*y"),
                                P(alg, "x*y^2*x - x*y"), P(alg, "y^2 - y"),
                                P(alg, "y^3 - y")}),
              "basis is not the seven printed elements");
    auto reduced = interreduce(basis, ideal.order());
    std::vector<Polynomial> rplain;
    for (const auto& t : reduced) rplain.push_back(t.poly);
    o.require(set_equal(rplain, {P(alg, "y*x - y"), P(alg, "y^2 - y")}),
              "interreduction is not {y*x - y, y^2 - y}");
    o.require(ideal.reduced_form(P(alg, "y^2 - y")).poly.is_zero(),
              "y^2 - y does not reduce to 0");
    o.require(ideal.reduced_form(P(alg, "y^2")).poly == P(alg, "y"),
              "y^2 does not reduce to y");
    return o;
}

Outcome criterion3() {
    Outcome o;
    auto alg = Algebra::make({"a", "b", "c", "d"});
    std::vector<Polynomial> assumptions = {P(alg, "a*b - d"), P(alg, "c - 1")};
    CertifyReport rep = certify(assumptions, P(alg, "a*b*c - d"));
    o.require(rep.proved(), "a*b*c - d not proved");
    if (rep.proved()) {
        const auto& cert = rep.proofs[0];
        bool exact = cert.size() == 2 &&
                     cert.triples()[0] == CertTriple(T(alg, "1"), 0, T(alg, "c")) &&
                     cert.triples()[1] == CertTriple(T(alg, "d"), 1, T(alg, "1"));
        o.require(exact, "certificate is not [(1,0,c), (d,1,1)]");
        o.require(no_spaces(pretty_print_proof(cert, assumptions)) ==
                      no_spaces("-d + a*b*c = (-d + a*b)*c + d*(-1 + c)"),
                  "pretty-printed proof differs");
    }

    std::vector<Polynomial> chain = {P(alg, "a*b*a - a*b")};
    Polynomial big = P(alg, "a*b^20*a - a*b^20");
    CertifyOptions ten;
    ten.maxiter = 10;
    o.require(!certify(chain, big, ten).proved(), "claim unexpectedly proved at maxiter 10");
    CertifyOptions twenty;
    twenty.maxiter = 20;
    CertifyReport r20 = certify(chain, big, twenty);
    o.require(r20.proved(), "claim not proved at maxiter 20");
    if (r20.proved())
        o.require(r20.proofs[0].expand(alg, chain) == big, "certificate expansion differs");
    return o;
}

Outcome criterion4() {
    Outcome o;
    auto alg = Algebra::make({"a", "p", "q", "a_adj", "p_adj", "q_adj", "x", "x_adj"});
    AdjointMap adj = AdjointMap::by_suffix(alg);
    std::vector<Polynomial> gens =
        add_adj(pinv(alg, alg->require("a"), alg->require("x"), alg->require("a_adj"),
                     alg->require("x_adj")),
                adj);
    auto assumptions = add_adj({P(alg, "a - p*a_adj*a"), P(alg, "a - a*a_adj*q")}, adj);
    gens.insert(gens.end(), assumptions.begin(), assumptions.end());

    {
        NCIdeal ideal(gens);
        SearchSpec spec;
        spec.target = P(alg, "x");
        auto out = find_equivalent_expression(ideal, spec);
        bool found = false;
        for (const auto& r : out)
            if (r == P(alg, "-x + a_adj*q*p_adj")) found = true;
        o.require(found, "default-order search missed -x + a_adj*q*p_adj");
    }
    {
        NCIdeal ideal(gens);
        SearchSpec spec;
        spec.target = P(alg, "x");
        spec.order = parse_order("[[q, q_adj, a, a_adj, p, p_adj], [x, x_adj]]", alg);
        auto out = find_equivalent_expression(ideal, spec);
        o.require(!out.empty() && out[0] == P(alg, "-q_adj*a*p_adj + x"),
                  "block-order search's first result differs");
    }
    {
        // Certify the four defining identities for the candidate.
        auto alg2 = Algebra::make({"a", "p", "q", "a_adj", "p_adj", "q_adj"});
        AdjointMap adj2 = AdjointMap::by_suffix(alg2);
        auto assume2 =
            add_adj({P(alg2, "a - p*a_adj*a"), P(alg2, "a - a*a_adj*q")}, adj2);
        std::vector<Polynomial> claims = {
            P(alg2, "a*a_adj*q*p_adj*a - a"),
            P(alg2, "a_adj*q*p_adj*a*a_adj*q*p_adj - a_adj*q*p_adj"),
            P(alg2, "p*q_adj*a*a_adj - a*a_adj*q*p_adj"),
            P(alg2, "a_adj*p*q_adj*a - a_adj*q*p_adj*a")};
        CertifyReport rep = certify(assume2, claims);
        o.require(rep.proved(), "candidate does not satisfy the four identities");
        if (rep.proved())
            for (std::size_t i = 0; i < claims.size(); ++i)
                o.require(rep.proofs[i].expand(alg2, assume2) == claims[i],
                          "candidate certificate " + std::to_string(i) + " differs");
    }
    return o;
}

Outcome criterion5() {
    Outcome o;
    auto alg = Algebra::make({"a", "b", "c", "d"});
    auto gens = session_a5_gens(alg);

    {
        NCIdeal ideal(gens);
        SearchSpec spec;
        spec.target = P(alg, "a*b");
        auto out = find_equivalent_expression(ideal, spec);
        o.require(set_equal(out, {P(alg, "-a*b + c*d")}), "default search differs");
        for (const auto& r : out)
            o.require(ideal.reduce_only(r).poly.is_zero(), "result not re-verified");
    }
    {
        NCIdeal ideal(gens);
        SearchSpec spec;
        spec.target = P(alg, "a*b");
        spec.heuristic = SearchHeuristic::Naive;
        spec.suffix = T(alg, "b");
        auto out = find_equivalent_expression(ideal, spec);
        o.require(set_equal(out, {P(alg, "a*b - c*d*a*b")}), "naive suffix search differs");
        for (const auto& r : out)
            o.require(ideal.reduce_only(r).poly.is_zero(), "naive result not verified");
    }
    {
        NCIdeal ideal(gens);
        SearchSpec spec;
        spec.target = P(alg, "a*b");
        spec.heuristic = SearchHeuristic::RightIdeal;
        spec.prefix = T(alg, "a*b");
        auto out = find_equivalent_expression(ideal, spec);
        o.require(set_equal(out, {P(alg, "-a*b + a*b*c*d"), P(alg, "-a*b + a*b*a*b")}),
                  "right-ideal search differs");
        for (const auto& r : out)
            o.require(ideal.reduce_only(r).poly.is_zero(), "right-ideal result not verified");
    }
    {
        NCIdeal ideal(gens);
        auto out = apply_left_cancellability(ideal, T(alg, "c"), T(alg, "a"));
        o.require(set_equal(out, {P(alg, "-a + a*b*a"), P(alg, "-a^2 + a*d*c*a")}),
                  "left cancellability differs");
        for (const auto& r : out)
            o.require(ideal.reduce_only(P(alg, "c") * r).poly.is_zero(),
                      "left cancellability result not verified");
    }
    {
        NCIdeal ideal(gens);
        auto out = apply_right_cancellability(ideal, T(alg, "a*b"), T(alg, "d*a"),
                                              CancelHeuristic::TwoSided, 5);
        o.require(set_equal(out, {P(alg, "-a*b + a*b*a*b"), P(alg, "-a*b + c*d*a*b")}),
                  "right cancellability differs");
        for (const auto& r : out)
            o.require(ideal.reduce_only(r * P(alg, "d*a")).poly.is_zero(),
                      "right cancellability result not verified");
    }
    {
        auto alg2 = Algebra::make({"a", "a_adj", "a_dag", "a_dag_adj"});
        AdjointMap adj2 = AdjointMap::by_suffix(alg2);
        auto gens2 = add_adj(pinv(alg2, 0, 2, 1, 3), adj2);
        NCIdeal ideal(gens2);
        auto first = find_range_factorisation(ideal, P(alg2, "a_dag"), T(alg2, "a_adj"),
                                              FactorSide::Prefix);
        o.require(set_equal(first, {P(alg2, "-a_dag + a_adj*a_dag_adj*a_dag")}),
                  "first range inclusion differs");
        auto second = find_range_factorisation(ideal, P(alg2, "a_adj"), T(alg2, "a_dag"),
                                               FactorSide::Suffix);
        o.require(set_equal(second, {P(alg2, "-a_adj + a_adj*a*a_dag")}),
                  "second range inclusion differs");
        for (const auto& r : first)
            o.require(ideal.reduce_only(r).poly.is_zero(), "range result not verified");
        for (const auto& r : second)
            o.require(ideal.reduce_only(r).poly.is_zero(), "range result not verified");
    }
    return o;
}

Outcome criterion6() {
    Outcome o;
    auto alg = Algebra::make({"a", "b", "c", "d"});
    Quiver q(alg, {{"U", "V", 0}, {"V", "W", 1}, {"W", "V", 2}, {"V", "U", 3}});
    o.require(!q.is_compatible(P(alg, "a*b + c*d")), "a*b + c*d should be incompatible");
    o.require(q.is_compatible(P(alg, "a*d + c*b")), "a*d + c*b should be compatible");

    CertifyOptions opts;
    opts.quiver = q;
    bool threw = false;
    try {
        certify({P(alg, "a*d"), P(alg, "c*b")}, P(alg, "a*d - b*c"), opts);
    } catch (const QuiverError& e) {
        threw = std::string(e.what()).find("not compatible with the quiver") !=
                std::string::npos;
    }
    o.require(threw, "quiver-incompatible claim not rejected with the session message");

    // and through the command line path: exit code 2
    std::ostringstream out, err;
    int code = cmd_certify(std::string(NCGB_FIXTURES_DIR) + "/quiver_typo/problem",
                           CmdOptions{}, out, err);
    o.require(code == 2, "CLI exit code is not 2");
    o.require(err.str().find("not compatible with the quiver") != std::string::npos,
              "CLI error text differs");
    return o;
}

Outcome criterion7() {
    Outcome o;
    std::ostringstream sink;
    Problem real = parse_problem_file(std::string(NCGB_FIXTURES_DIR) + "/mp_real/problem");
    RunOutput r1 = run_problem(real, CmdOptions{}, sink);
    o.require(r1.exit_code == 0 && r1.report.proved(), "real-case fixture failed");
    o.require(r1.report.all_integer_clean(), "real-case certificate not integer");

    Problem rank =
        parse_problem_file(std::string(NCGB_FIXTURES_DIR) + "/mp_full_rank/problem");
    std::ostringstream diag;
    RunOutput r2 = run_problem(rank, CmdOptions{}, diag);
    o.require(r2.exit_code == 0 && r2.report.proved(), "full-rank fixture failed");
    o.require(r2.report.iterations_used > 4,
              "full-rank proof finished in " + std::to_string(r2.report.iterations_used) +
                  " iterations");
    return o;
}

Outcome criterion8() {
    Outcome o;
    Problem p =
        parse_problem_file(std::string(NCGB_FIXTURES_DIR) + "/prove_existence/problem");
    ProveBudget budget;
    budget.stages = {{TermBounds{1, 1, 1}, 5},
                     {TermBounds{2, 1, 1}, 5},
                     {TermBounds{3, 1, 1}, 10}};
    ProveResult r = semi_decide(*p.statement, budget);
    o.require(r.proved, "existence statement not proved within degree 3");
    if (r.proved) {
        o.require(!r.witness.empty() && r.witness[0].second &&
                      r.witness[0].second->str() == "a_adj*q*p_adj",
                  "unexpected witness");
        o.require(r.certificates.size() == 4, "expected four certificates");
        for (std::size_t i = 0; i < r.certificates.size(); ++i)
            o.require(r.certificates[i].expand(p.alg, r.generators) ==
                          r.certified_claims[i],
                      "certificate " + std::to_string(i) + " does not expand");
    }

    Problem triv =
        parse_problem_file(std::string(NCGB_FIXTURES_DIR) + "/prove_identity/problem");
    ProveBudget one;
    one.stages = {{TermBounds{1, 1, 1}, 5}};
    ProveResult rt = semi_decide(*triv.statement, one);
    o.require(rt.proved && rt.stages_used == 1, "y = x not proved at the first stage");

    Problem toy =
        parse_problem_file(std::string(NCGB_FIXTURES_DIR) + "/prove_exhausted/problem");
    ProveBudget small;
    small.stages = {{TermBounds{1, 1, 1}, 3}, {TermBounds{2, 2, 2}, 3}};
    ProveResult rx = semi_decide(*toy.statement, small);
    o.require(!rx.proved, "unprovable toy returned a false positive");
    return o;
}

Outcome criterion9() {
    Outcome o;
    auto alg = Algebra::make({"a", "b", "c", "d"});
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> dvar(0, 3);
    std::uniform_int_distribution<int> dgens(1, 4);
    std::uniform_int_distribution<int> ddeg(1, 4);

    int ideals = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Polynomial> gens;
        int n = dgens(rng);
        for (int i = 0; i < n; ++i) {
            auto word = [&](int d) {
                Word w;
                for (int j = 0; j < d; ++j) w.letters.push_back((VarIndex)dvar(rng));
                return w;
            };
            Polynomial f = Polynomial::monomial(alg, Rational(1), word(ddeg(rng))) -
                           Polynomial::monomial(alg, Rational(1), word(ddeg(rng) - 1));
            if (!f.is_zero()) gens.push_back(f);
        }
        if (gens.empty()) continue;
        ++ideals;
        NCIdeal ideal(gens);
        GBOptions opts;
        opts.maxiter = 4;
        ideal.groebner_basis(opts);
        for (const auto& t : ideal.basis())
            o.require(t.cert.expand(alg, gens) == t.poly, "basis certificate broken");
        for (const auto& g : gens)
            o.require(ideal.reduce_only(g).poly.is_zero(),
                      "generator does not reduce to zero");
        // a random two-sided multiple must certify with an exact certificate
        std::uniform_int_distribution<int> dpick(0, (int)gens.size() - 1);
        Word l, r;
        for (int j = 0; j < 2; ++j) l.letters.push_back((VarIndex)dvar(rng));
        for (int j = 0; j < 1; ++j) r.letters.push_back((VarIndex)dvar(rng));
        Polynomial claim = gens[dpick(rng)].sandwich(Term(Rational(1), l), Term(Rational(1), r));
        CertifyOptions co;
        co.maxiter = 5;
        CertifyReport rep = certify(gens, claim, co);
        o.require(rep.proved(), "membership of a generator multiple not verified");
        if (rep.proved())
            o.require(rep.proofs[0].expand(alg, gens) == claim,
                      "certificate does not expand to its claim");
        if (!o.pass) break;
    }
    o.require(ideals >= 200, "fewer than 200 ideals exercised");

    // order admissibility on 10^4 random word triples, two orders
    auto words_alg = Algebra::make({"x", "y", "z", "w"});
    for (const auto& ord :
         {MonomialOrder::deglex(words_alg), parse_order("[[y, x], [w, z]]", words_alg)}) {
        std::mt19937 wrng(7031);
        std::uniform_int_distribution<int> wdeg(0, 5);
        std::uniform_int_distribution<int> wvar(0, 3);
        auto random_word = [&]() {
            Word w;
            int d = wdeg(wrng);
            for (int i = 0; i < d; ++i) w.letters.push_back((VarIndex)wvar(wrng));
            return w;
        };
        for (int i = 0; i < 10000; ++i) {
            Word a = random_word(), b = random_word(), u = random_word(), v = random_word();
            int ab = ord.compare(a, b);
            o.require(ab == -ord.compare(b, a), "antisymmetry violated");
            o.require((ab == 0) == (a == b), "EQ only for identical words");
            if (ab < 0)
                o.require(ord.compare(u * a * v, u * b * v) < 0, "multiplicativity violated");
            if (!o.pass) break;
        }
    }

    // adjoint anti-homomorphism on 10^3 random polynomial pairs
    auto adj_alg = Algebra::make({"a", "b", "a_adj", "b_adj"});
    AdjointMap m = AdjointMap::by_suffix(adj_alg);
    std::mt19937 arng(4099);
    std::uniform_int_distribution<int> aterms(0, 3), adeg(0, 3), avar(0, 3), acoef(-3, 3);
    auto random_poly = [&]() {
        std::vector<Term> ts;
        int n = aterms(arng);
        for (int i = 0; i < n; ++i) {
            Word w;
            int d = adeg(arng);
            for (int j = 0; j < d; ++j) w.letters.push_back((VarIndex)avar(arng));
            int coeff = acoef(arng);
            if (coeff) ts.push_back(Term(Rational(coeff), std::move(w)));
        }
        return Polynomial(adj_alg, std::move(ts));
    };
    for (int i = 0; i < 1000; ++i) {
        Polynomial pp = random_poly(), qq = random_poly();
        o.require(adjoint(pp * qq, m) == adjoint(qq, m) * adjoint(pp, m),
                  "adjoint is not an anti-homomorphism");
        o.require(adjoint(adjoint(pp, m), m) == pp, "adjoint is not an involution");
        if (!o.pass) break;
    }
    return o;
}

Outcome criterion10() {
    Outcome o;
    auto t0 = Clock::now();
    std::ostringstream out, err;
    int code = cmd_fixtures(NCGB_FIXTURES_DIR, "", CmdOptions{}, out, err);
    double total = ms_since(t0);
    o.require(code == 0, "fixture corpus has failures:\n" + out.str());
    o.require(total < 60000.0, "corpus took " + std::to_string(total) + " ms");
    // per-fixture budget: every PASS line reports < 10 s
    std::istringstream lines(out.str());
    std::string line;
    while (std::getline(lines, line)) {
        auto open = line.find('(');
        auto close = line.find(" ms)");
        if (line.rfind("[PASS]", 0) == 0 && open != std::string::npos &&
            close != std::string::npos) {
            int ms = std::stoi(line.substr(open + 1, close - open - 1));
            o.require(ms < 10000, "fixture over budget: " + line);
        }
    }
    o.note("corpus " + std::to_string((int)total) + " ms");
    return o;
}

Outcome criterion11() {
    Outcome o;
    fs::path tmp = fs::temp_directory_path() / "ncgb_acceptance_docs";
    fs::create_directories(tmp);

    // every certify-task fixture emits a document; verify must accept each
    int docs = 0;
    for (const auto& entry : fs::directory_iterator(NCGB_FIXTURES_DIR)) {
        if (!entry.is_directory()) continue;
        fs::path problem = entry.path() / "problem";
        if (!fs::exists(problem)) continue;
        Problem p;
        try {
            p = parse_problem_file(problem.string());
        } catch (const std::exception&) {
            continue;
        }
        if (p.task != "certify" || p.quiver) continue;
        std::ostringstream out, err;
        CmdOptions opts;
        opts.json_out = (tmp / (entry.path().filename().string() + ".json")).string();
        int code = cmd_certify(problem.string(), opts, out, err);
        if (code != 0) continue;  // the maxiter-failure fixture has no document
        ++docs;
        std::ostringstream vout, verr;
        o.require(cmd_verify(problem.string(), opts.json_out, vout, verr) == 0,
                  "verify rejected " + opts.json_out);

        // single-coefficient tampering must be rejected
        std::ifstream in(opts.json_out);
        std::stringstream ss;
        ss << in.rdbuf();
        std::string text = ss.str();
        auto pos = text.find("\"left_coeff\": \"");
        if (pos != std::string::npos) {
            std::string tampered = text;
            std::size_t vstart = pos + 15;
            tampered.insert(vstart, "7");
            std::string tpath = opts.json_out + ".tampered";
            std::ofstream(tpath) << tampered;
            std::ostringstream t_out, t_err;
            int tcode = cmd_verify(problem.string(), tpath, t_out, t_err);
            o.require(tcode != 0, "tampered document accepted: " + tpath);
        }
        if (!o.pass) break;
    }
    o.require(docs >= 5, "only " + std::to_string(docs) + " documents exercised");
    fs::remove_all(tmp);
    o.note(std::to_string(docs) + " documents verified and tamper-checked");
    return o;
}

const char* kDescriptions[] = {
    "uniqueness certificate for b - c",
    "printed basis, interreduction, and normal forms",
    "two-triple certificate, pretty print, iteration budget",
    "existence search under both orders plus candidate certification",
    "heuristic and cancellability outputs, re-verified",
    "quiver compatibility and rejection",
    "real and full-rank case fixtures",
    "bounded semi-decision procedure",
    "property suites (ideals, orders, adjoints)",
    "fixture corpus inside the time envelope",
    "independent verification loop with tamper detection",
};

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::function<Outcome()>> checks = {
        criterion1, criterion2, criterion3, criterion4, criterion5, criterion6,
        criterion7, criterion8, criterion9, criterion10, criterion11};

    int only = argc > 1 ? std::atoi(argv[1]) : 0;
    int failures = 0;
    for (int i = 1; i <= (int)checks.size(); ++i) {
        if (only && i != only) continue;
        auto t0 = Clock::now();
        Outcome o;
        try {
            o = checks[i - 1]();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double ms = ms_since(t0);
        std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << i << ": "
                  << kDescriptions[i - 1] << " (" << (int)ms << " ms)";
        if (!o.detail.empty()) std::cout << " -- " << o.detail;
        std::cout << std::endl;
        if (!o.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
