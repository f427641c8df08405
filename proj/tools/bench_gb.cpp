// Benchmark: completion with the OpenMP batch reduction against the serial
// path, on a family of generated ideals. Both paths run the same two-phase
// iteration, so the resulting bases must match element for element; the
// benchmark asserts that while timing them.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ncgb/gb.hpp"
#include "reference_reduce.hpp"

using namespace ncgb;

namespace {

using Clock = std::chrono::steady_clock;

struct Case {
    std::string name;
    std::vector<Polynomial> gens;
};

Polynomial word_poly(const AlgebraPtr& alg, std::initializer_list<VarIndex> w) {
    return Polynomial::monomial(alg, Rational(1), Word(std::vector<VarIndex>(w)));
}

std::vector<Case> make_cases() {
    std::vector<Case> cases;

    {
        AlgebraPtr alg = Algebra::make({"x", "y"});
        cases.push_back({"xy-chain",
                         {word_poly(alg, {0, 1, 0}) - word_poly(alg, {0, 1}),
                          word_poly(alg, {1, 0, 0, 1}) - word_poly(alg, {1})}});
    }
    {
        // Penrose relations for two reflexive inverses of the same element.
        AlgebraPtr alg = Algebra::make({"a", "b", "c", "a_adj", "b_adj", "c_adj"});
        AdjointMap adj = AdjointMap::by_suffix(alg);
        auto gens = add_adj(pinv(alg, 0, 1, 3, 4), adj);
        auto more = add_adj(pinv(alg, 0, 2, 3, 5), adj);
        gens.insert(gens.end(), more.begin(), more.end());
        cases.push_back({"penrose-pair", gens});
    }
    {
        // random binomial ideals, fixed seed
        std::mt19937 rng(20240817);
        AlgebraPtr alg = Algebra::make({"p", "q", "r", "s"});
        std::vector<Polynomial> gens;
        auto rand_word = [&](int maxdeg) {
            std::uniform_int_distribution<int> dlen(1, maxdeg);
            std::uniform_int_distribution<int> dvar(0, (int)alg->size() - 1);
            Word w;
            int n = dlen(rng);
            for (int i = 0; i < n; ++i) w.letters.push_back((VarIndex)dvar(rng));
            return w;
        };
        for (int i = 0; i < 6; ++i) {
            Polynomial f = Polynomial::monomial(alg, Rational(1), rand_word(4)) -
                           Polynomial::monomial(alg, Rational(1), rand_word(3));
            if (!f.is_zero()) gens.push_back(f);
        }
        cases.push_back({"random-binomials", gens});
    }
    return cases;
}

double run_case(const Case& c, bool parallel, int maxiter, std::vector<Polynomial>& basis_out) {
    auto start = Clock::now();
    NCIdeal ideal(c.gens);
    GBOptions opts;
    opts.maxiter = maxiter;
    opts.parallel = parallel;
    auto basis = ideal.groebner_basis(opts);
    basis_out.clear();
    for (const auto& t : basis) basis_out.push_back(t.poly);
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

// Normal forms of all degree <= d words, engine reducer vs the naive
// reference from the test suite.
std::pair<double, double> reduction_shootout(const Case& c, int maxiter, int maxdeg) {
    NCIdeal ideal(c.gens);
    GBOptions opts;
    opts.maxiter = maxiter;
    ideal.groebner_basis(opts);
    const AlgebraPtr& alg = c.gens[0].algebra();

    std::vector<Polynomial> probes;
    std::vector<Word> frontier = {Word()};
    for (int d = 0; d < maxdeg; ++d) {
        std::vector<Word> next;
        for (const auto& w : frontier)
            for (VarIndex v = 0; v < alg->size(); ++v) {
                Word w2 = w;
                w2.letters.push_back(v);
                probes.push_back(Polynomial::monomial(alg, Rational(1), w2));
                next.push_back(std::move(w2));
            }
        frontier = std::move(next);
    }

    auto t0 = Clock::now();
    std::vector<Polynomial> fast;
    for (const auto& p : probes) fast.push_back(ideal.normal_form(p));
    double engine_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();

    t0 = Clock::now();
    std::vector<Polynomial> slow;
    for (const auto& p : probes)
        slow.push_back(ncgb::testing::reference_reduce(p, ideal.basis(), ideal.order()));
    double ref_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();

    if (fast != slow) {
        std::printf("reducer mismatch in case %s\n", c.name.c_str());
        std::exit(1);
    }
    return {engine_ms, ref_ms};
}

int main(int argc, char** argv) {
    int maxiter = argc > 1 ? std::atoi(argv[1]) : 12;
    int repeats = argc > 2 ? std::atoi(argv[2]) : 3;

#ifdef _OPENMP
    std::printf("OpenMP: %d thread(s)\n", omp_get_max_threads());
#else
    std::printf("OpenMP: not enabled at build time\n");
#endif
    std::printf("completion: parallel batch reduction against the serial path\n");
    std::printf("%-18s %10s %12s %8s %7s\n", "case", "serial ms", "parallel ms", "speedup",
                "basis");

    bool all_match = true;
    for (const auto& c : make_cases()) {
        double best_serial = 1e100, best_parallel = 1e100;
        std::vector<Polynomial> serial_basis, parallel_basis;
        for (int r = 0; r < repeats; ++r) {
            std::vector<Polynomial> b1, b2;
            best_serial = std::min(best_serial, run_case(c, false, maxiter, b1));
            best_parallel = std::min(best_parallel, run_case(c, true, maxiter, b2));
            serial_basis = b1;
            parallel_basis = b2;
        }
        bool match = serial_basis == parallel_basis;
        all_match = all_match && match;
        std::printf("%-18s %10.2f %12.2f %7.2fx %6zu%s\n", c.name.c_str(), best_serial,
                    best_parallel, best_serial / best_parallel, serial_basis.size(),
                    match ? "" : "  MISMATCH");
    }
    if (!all_match) {
        std::printf("serial and parallel bases differ\n");
        return 1;
    }

    std::printf("\nnormal forms of all words up to degree 6: engine vs reference reducer\n");
    std::printf("%-18s %10s %12s %8s\n", "case", "engine ms", "reference ms", "speedup");
    for (const auto& c : make_cases()) {
        auto [engine_ms, ref_ms] = reduction_shootout(c, maxiter, 6);
        std::printf("%-18s %10.2f %12.2f %7.2fx\n", c.name.c_str(), engine_ms, ref_ms,
                    ref_ms / engine_ms);
    }
    return 0;
}
