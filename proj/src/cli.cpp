#include "ncgb/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace ncgb {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    auto push = [&] {
        std::size_t a = 0, b = cur.size();
        while (a < b && std::isspace((unsigned char)cur[a])) ++a;
        while (b > a && std::isspace((unsigned char)cur[b - 1])) --b;
        out.push_back(cur.substr(a, b - a));
        cur.clear();
    };
    for (char c : s) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == ',' && depth == 0)
            push();
        else
            cur.push_back(c);
    }
    push();
    return out;
}

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string list_str(const std::vector<Polynomial>& ps, const MonomialOrder& order) {
    std::string s = "[";
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i) s += ", ";
        s += format_polynomial(ps[i], order);
    }
    return s + "]";
}

std::vector<Polynomial> plain(const std::vector<TracedPolynomial>& ts) {
    std::vector<Polynomial> out;
    out.reserve(ts.size());
    for (const auto& t : ts) out.push_back(t.poly);
    return out;
}

int apply_int(int file_value, int override_value) {
    return override_value >= 0 ? override_value : file_value;
}

}  // namespace

RunOutput run_problem(const Problem& p, const CmdOptions& o, std::ostream& err) {
    RunOutput out;
    auto start = Clock::now();
    int maxiter = apply_int(p.maxiter, o.maxiter);
    int degbound = apply_int(p.degbound, o.degbound);
    std::string heuristic = o.heuristic.empty() ? p.heuristic : o.heuristic;
    MonomialOrder order = p.effective_order();

    try {
        if (p.task == "certify") {
            if (p.assumptions.empty()) throw UsageError("certify needs assumptions");
            if (p.claims.empty()) throw UsageError("certify needs claims");
            CertifyOptions co;
            co.maxiter = maxiter;
            co.order = p.order;
            co.parallel = !o.serial;
            co.diag = &err;
            if (p.quiver) co.quiver = p.quiver;
            err << "Computing a (partial) Groebner basis and reducing the claims..."
                << std::endl;
            out.report = certify(p.assumptions, p.claims, co);
            out.claims = p.claims;
            out.exit_code = out.report.proved() ? 0 : 1;
        } else if (p.task == "gb") {
            NCIdeal ideal(p.assumptions, order);
            GBOptions gb;
            gb.maxiter = maxiter;
            gb.parallel = !o.serial;
            gb.diag = &err;
            out.basis = ideal.groebner_basis(gb);
            if (p.interreduce_flag) out.interreduced = interreduce(out.basis, order);
            out.exit_code = 0;
        } else if (p.task == "reduce") {
            NCIdeal ideal(p.assumptions, order);
            GBOptions gb;
            gb.maxiter = maxiter;
            gb.parallel = !o.serial;
            gb.diag = &err;
            ideal.groebner_basis(gb);
            for (const auto& f : p.reduce_targets) out.reduced.push_back(ideal.reduce_only(f));
            out.exit_code = 0;
        } else if (p.task == "find") {
            if (!p.target) throw UsageError("find needs a target");
            NCIdeal ideal(p.assumptions, order);
            SearchSpec spec;
            spec.target = *p.target;
            spec.heuristic = parse_search_heuristic(heuristic);
            spec.prefix = p.prefix;
            spec.suffix = p.suffix;
            spec.degbound = degbound;
            spec.maxiter = maxiter;
            spec.order = p.order;
            spec.quiver = p.quiver;
            out.results = find_equivalent_expression(ideal, spec);
            if (o.pure) out.results = drop_contaminated(out.results, *p.target);
            out.exit_code = 0;
        } else if (p.task == "range") {
            if (!p.target) throw UsageError("range needs a target");
            if (!p.prefix && !p.suffix)
                throw UsageError("range needs a prefix or a suffix to factor through");
            NCIdeal ideal(p.assumptions, order);
            out.results = p.prefix
                              ? find_range_factorisation(ideal, *p.target, *p.prefix,
                                                         FactorSide::Prefix, maxiter, degbound)
                              : find_range_factorisation(ideal, *p.target, *p.suffix,
                                                         FactorSide::Suffix, maxiter, degbound);
            out.exit_code = 0;
        } else if (p.task == "cancel-left" || p.task == "cancel-right") {
            if (!p.cancel_args) throw UsageError("cancellability needs 'cancel = a, b'");
            NCIdeal ideal(p.assumptions, order);
            CancelHeuristic h = parse_cancel_heuristic(heuristic);
            if (p.task == "cancel-left")
                out.results = apply_left_cancellability(ideal, p.cancel_args->first,
                                                        p.cancel_args->second, h, maxiter,
                                                        degbound);
            else
                out.results = apply_right_cancellability(ideal, p.cancel_args->first,
                                                         p.cancel_args->second, h, maxiter,
                                                         degbound);
            out.exit_code = 0;
        } else if (p.task == "prove") {
            if (!p.statement) throw UsageError("prove needs a statement block");
            ProveBudget budget;
            for (int d = 1; d <= p.prove_degree; ++d)
                budget.stages.push_back(ProveStage{TermBounds{d, 1, 1}, maxiter});
            if (p.prove_summands > 1 || p.prove_coeff > 1)
                budget.stages.push_back(ProveStage{
                    TermBounds{p.prove_degree, p.prove_summands, p.prove_coeff}, maxiter});
            budget.unbounded = o.unbounded;
            budget.diag = nullptr;
            out.prove = semi_decide(*p.statement, budget);
            out.exit_code = out.prove.proved ? 0 : 1;
        } else {
            throw UsageError("unknown task '" + p.task + "'");
        }
    } catch (const QuiverError& e) {
        out.error = e.what();
        out.exit_code = 2;
    } catch (const ParseError& e) {
        out.error = e.what();
        out.exit_code = 2;
    } catch (const UsageError& e) {
        out.error = e.what();
        out.exit_code = 2;
    }
    out.timing_ms = ms_since(start);
    return out;
}

CertificateDocument make_document(const RunOutput& r) {
    CertificateDocument doc;
    doc.version = kToolVersion;
    doc.status = r.report.proved() ? "proved" : "failed";
    doc.iterations = r.report.iterations_used;
    doc.timing_ms = r.timing_ms;
    for (std::size_t i = 0; i < r.claims.size(); ++i) {
        doc.claims.push_back(format_polynomial(r.claims[i]));
        if (r.report.proved()) {
            doc.certificates.push_back(r.report.proofs[i]);
            doc.integer_clean.push_back(r.report.integer_clean[i]);
        }
    }
    return doc;
}

namespace {

int finish_with_error(const RunOutput& r, std::ostream& err) {
    if (!r.error.empty()) err << "error: " << r.error << std::endl;
    return r.exit_code;
}

Problem load(const std::string& path, std::ostream& err, bool& ok) {
    ok = true;
    try {
        return parse_problem_file(path);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << std::endl;
        ok = false;
        return Problem{};
    }
}

}  // namespace

int cmd_certify(const std::string& problem_path, const CmdOptions& o, std::ostream& out,
                std::ostream& err) {
    bool ok;
    Problem p = load(problem_path, err, ok);
    if (!ok) return 2;
    if (p.statement) {
        err << "error: statement problems are proved with the 'prove' subcommand" << std::endl;
        return 2;
    }
    p.task = "certify";
    RunOutput r = run_problem(p, o, err);
    if (r.exit_code == 2) return finish_with_error(r, err);
    if (r.report.proved()) {
        out << "Done! Ideal membership of all claims could be verified!" << std::endl;
        if (o.show_proofs)
            for (std::size_t i = 0; i < p.claims.size(); ++i)
                out << pretty_print_proof(r.report.proofs[i], p.assumptions) << std::endl;
    } else {
        out << "Failed! Not all ideal memberships could be verified." << std::endl;
    }
    if (!o.json_out.empty()) {
        std::ofstream f(o.json_out);
        if (!f) {
            err << "error: cannot write '" << o.json_out << "'" << std::endl;
            return 2;
        }
        f << make_document(r).serialize(*p.alg);
    }
    return r.exit_code;
}

int cmd_verify(const std::string& problem_path, const std::string& doc_path, std::ostream& out,
               std::ostream& err) {
    bool ok;
    Problem p = load(problem_path, err, ok);
    if (!ok) return 2;
    std::ifstream f(doc_path);
    if (!f) {
        err << "error: cannot read '" << doc_path << "'" << std::endl;
        return 2;
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    CertificateDocument doc;
    try {
        doc = CertificateDocument::parse(ss.str(), p.alg);
    } catch (const std::exception& e) {
        err << "error: malformed certificate document: " << e.what() << std::endl;
        return 2;
    }
    if (doc.status != "proved") {
        err << "error: document does not claim a proof" << std::endl;
        return 2;
    }
    if (doc.certificates.size() != p.claims.size()) {
        err << "error: document has " << doc.certificates.size() << " certificates for "
            << p.claims.size() << " claims" << std::endl;
        return 2;
    }
    for (std::size_t i = 0; i < p.claims.size(); ++i) {
        Polynomial expanded;
        try {
            expanded = doc.certificates[i].expand(p.alg, p.assumptions);
        } catch (const UsageError& e) {
            err << "error: claim " << format_polynomial(p.claims[i]) << ": " << e.what()
                << std::endl;
            return 2;
        }
        if (expanded != p.claims[i]) {
            out << "Mismatch! Certificate for claim " << format_polynomial(p.claims[i])
                << " expands to " << format_polynomial(expanded) << "." << std::endl;
            return 1;
        }
    }
    out << "Verified! Every certificate expands to its claim." << std::endl;
    return 0;
}

int cmd_gb(const std::string& problem_path, const CmdOptions& o, std::ostream& out,
           std::ostream& err) {
    bool ok;
    Problem p = load(problem_path, err, ok);
    if (!ok) return 2;
    Problem q = p;
    q.task = "gb";
    RunOutput r = run_problem(q, o, err);
    if (r.exit_code == 2) return finish_with_error(r, err);
    MonomialOrder order = p.effective_order();
    out << list_str(plain(r.basis), order) << std::endl;
    if (p.interreduce_flag) out << list_str(plain(r.interreduced), order) << std::endl;
    return r.exit_code;
}

int cmd_reduce(const std::string& problem_path, const CmdOptions& o, std::ostream& out,
               std::ostream& err) {
    bool ok;
    Problem p = load(problem_path, err, ok);
    if (!ok) return 2;
    Problem q = p;
    q.task = "reduce";
    RunOutput r = run_problem(q, o, err);
    if (r.exit_code == 2) return finish_with_error(r, err);
    MonomialOrder order = p.effective_order();
    for (std::size_t i = 0; i < r.reduced.size(); ++i) {
        out << format_polynomial(r.reduced[i].poly, order) << std::endl;
        if (o.show_proofs && r.reduced[i].poly.is_zero())
            out << pretty_print_proof(r.reduced[i].cert, p.assumptions) << std::endl;
    }
    return r.exit_code;
}

int cmd_find(const std::string& problem_path, const CmdOptions& o, std::ostream& out,
             std::ostream& err) {
    bool ok;
    Problem p = load(problem_path, err, ok);
    if (!ok) return 2;
    Problem q = p;
    q.task = p.task == "range" ? "range" : "find";
    RunOutput r = run_problem(q, o, err);
    if (r.exit_code == 2) return finish_with_error(r, err);
    out << list_str(r.results, p.effective_order()) << std::endl;
    return r.exit_code;
}

int cmd_cancel(const std::string& problem_path, bool left, const CmdOptions& o, std::ostream& out,
               std::ostream& err) {
    bool ok;
    Problem p = load(problem_path, err, ok);
    if (!ok) return 2;
    Problem q = p;
    q.task = left ? "cancel-left" : "cancel-right";
    RunOutput r = run_problem(q, o, err);
    if (r.exit_code == 2) return finish_with_error(r, err);
    out << list_str(r.results, p.effective_order()) << std::endl;
    return r.exit_code;
}

int cmd_prove(const std::string& problem_path, const CmdOptions& o, std::ostream& out,
              std::ostream& err) {
    bool ok;
    Problem p = load(problem_path, err, ok);
    if (!ok) return 2;
    Problem q = p;
    q.task = "prove";
    RunOutput r = run_problem(q, o, err);
    if (r.exit_code == 2) return finish_with_error(r, err);
    if (r.prove.proved) {
        out << "true" << std::endl;
        for (const auto& [name, term] : r.prove.witness)
            out << name << " = " << (term ? term->str() : "(combined)") << std::endl;
        for (std::size_t i = 0; i < r.prove.certificates.size(); ++i) {
            if (r.prove.generators.empty()) continue;
            out << pretty_print_proof(r.prove.certificates[i], r.prove.generators) << std::endl;
        }
    } else {
        out << "exhausted" << std::endl;
    }
    return r.exit_code;
}

// ---------------------------------------------------------------------------
// fixtures

namespace {

struct Expectation {
    std::map<std::string, std::string> keys;
    std::map<std::string, std::vector<std::string>> sections;
};

Expectation parse_expected(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read '" + path + "'");
    Expectation e;
    std::string raw, section;
    while (std::getline(in, raw)) {
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        std::string line;
        {
            std::size_t a = 0, b = raw.size();
            while (a < b && std::isspace((unsigned char)raw[a])) ++a;
            while (b > a && std::isspace((unsigned char)raw[b - 1])) --b;
            line = raw.substr(a, b - a);
        }
        if (line.empty()) continue;
        if (line.back() == ':') {
            section = line.substr(0, line.size() - 1);
            e.sections[section];
            continue;
        }
        auto eq = line.find('=');
        if (eq != std::string::npos) {
            // a key = value line always closes the open section
            std::string key = line.substr(0, eq);
            while (!key.empty() && std::isspace((unsigned char)key.back())) key.pop_back();
            bool is_key = !key.empty();
            for (char c : key)
                if (!std::isalnum((unsigned char)c) && c != '_') is_key = false;
            if (is_key) section.clear();
        }
        if (section.empty() && eq != std::string::npos) {
            std::string key = line.substr(0, eq);
            std::string value = line.substr(eq + 1);
            while (!key.empty() && std::isspace((unsigned char)key.back())) key.pop_back();
            std::size_t a = 0;
            while (a < value.size() && std::isspace((unsigned char)value[a])) ++a;
            e.keys[key] = value.substr(a);
            continue;
        }
        if (!section.empty()) {
            e.sections[section].push_back(line);
            continue;
        }
        throw UsageError("stray line in expected file: '" + line + "'");
    }
    return e;
}

bool poly_set_equal(const std::vector<Polynomial>& got, const std::vector<std::string>& want,
                    const AlgebraPtr& alg, std::string& why) {
    std::vector<Polynomial> expect;
    for (const auto& s : want) expect.push_back(parse_polynomial(s, alg));
    if (got.size() != expect.size()) {
        why = "expected " + std::to_string(expect.size()) + " polynomials, got " +
              std::to_string(got.size());
        return false;
    }
    std::vector<bool> used(expect.size(), false);
    for (const auto& g : got) {
        bool hit = false;
        for (std::size_t i = 0; i < expect.size(); ++i)
            if (!used[i] && expect[i] == g) {
                used[i] = true;
                hit = true;
                break;
            }
        if (!hit) {
            why = "unexpected element " + format_polynomial(g);
            return false;
        }
    }
    return true;
}

bool glob_match(const std::string& pat, const std::string& s, std::size_t pi = 0,
                std::size_t si = 0) {
    while (pi < pat.size()) {
        if (pat[pi] == '*') {
            for (std::size_t k = si; k <= s.size(); ++k)
                if (glob_match(pat, s, pi + 1, k)) return true;
            return false;
        }
        if (si >= s.size()) return false;
        if (pat[pi] != '?' && pat[pi] != s[si]) return false;
        ++pi;
        ++si;
    }
    return si == s.size();
}

Certificate parse_cert_lines(const std::vector<std::string>& lines, const AlgebraPtr& alg) {
    Certificate cert;
    for (const auto& line : lines) {
        std::string s = line;
        if (s.size() < 2 || s.front() != '(' || s.back() != ')')
            throw UsageError("certificate line must be (left, index, right)");
        s = s.substr(1, s.size() - 2);
        auto parts = split_commas(s);
        if (parts.size() != 3) throw UsageError("certificate line must have three parts");
        Polynomial lp = parse_polynomial(parts[0], alg);
        Polynomial rp = parse_polynomial(parts[2], alg);
        if (lp.term_count() != 1 || rp.term_count() != 1)
            throw UsageError("certificate cofactors must be single terms");
        cert.add(lp.terms()[0], (std::uint32_t)std::stoul(parts[1]), rp.terms()[0]);
    }
    return cert;
}

}  // namespace

int cmd_fixtures(const std::string& dir, const std::string& filter, const CmdOptions& o,
                 std::ostream& out, std::ostream& err) {
    namespace fs = std::filesystem;
    std::vector<fs::path> ids;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_directory() && fs::exists(entry.path() / "problem"))
            ids.push_back(entry.path());
    std::sort(ids.begin(), ids.end());

    int passed = 0, failed = 0;
    double total_ms = 0;
    for (const auto& id : ids) {
        std::string name = id.filename().string();
        if (!filter.empty()) {
            bool globby = filter.find('*') != std::string::npos ||
                          filter.find('?') != std::string::npos;
            if (globby ? !glob_match(filter, name) : name.find(filter) == std::string::npos)
                continue;
        }
        std::string why;
        bool okcase = true;
        double ms = 0;
        try {
            Problem p = parse_problem_file((id / "problem").string());
            Expectation e = parse_expected((id / "expected").string());
            std::ostringstream devnull;
            RunOutput r = run_problem(p, o, devnull);
            ms = r.timing_ms;

            auto expect_key = [&](const std::string& k) -> const std::string* {
                auto it = e.keys.find(k);
                return it == e.keys.end() ? nullptr : &it->second;
            };
            if (const auto* v = expect_key("exit"); v && std::stoi(*v) != r.exit_code) {
                okcase = false;
                why = "exit code " + std::to_string(r.exit_code) + ", expected " + *v;
            }
            if (okcase)
                if (const auto* v = expect_key("status")) {
                    bool want_proved = (*v == "proved" || *v == "true");
                    bool got_proved = p.task == "prove" ? r.prove.proved : r.report.proved();
                    if (want_proved != got_proved) {
                        okcase = false;
                        why = "status mismatch";
                    }
                }
            if (okcase)
                if (const auto* v = expect_key("integer_clean");
                    v && *v == "true" && !r.report.all_integer_clean()) {
                    okcase = false;
                    why = "certificate has non-integer coefficients";
                }
            if (okcase)
                if (const auto* v = expect_key("iterations_min");
                    v && r.report.iterations_used < std::stoi(*v)) {
                    okcase = false;
                    why = "finished in " + std::to_string(r.report.iterations_used) +
                          " iterations, expected at least " + *v;
                }
            if (okcase)
                if (const auto* v = expect_key("error_contains");
                    v && r.error.find(*v) == std::string::npos) {
                    okcase = false;
                    why = "error text missing '" + *v + "' (got: " + r.error + ")";
                }
            if (okcase)
                if (const auto* v = expect_key("witness")) {
                    bool hit = false;
                    for (const auto& [n, t] : r.prove.witness)
                        if (t && t->str() == *v) hit = true;
                    if (!hit) {
                        okcase = false;
                        why = "witness mismatch";
                    }
                }
            if (okcase && e.sections.count("results"))
                okcase = poly_set_equal(r.results, e.sections.at("results"), p.alg, why);
            if (okcase && e.sections.count("results_contain")) {
                for (const auto& s : e.sections.at("results_contain")) {
                    Polynomial want = parse_polynomial(s, p.alg);
                    if (std::find(r.results.begin(), r.results.end(), want) ==
                        r.results.end()) {
                        okcase = false;
                        why = "results do not contain " + s;
                        break;
                    }
                }
            }
            if (okcase)
                if (const auto* v = expect_key("first_result")) {
                    if (r.results.empty() ||
                        !(r.results.front() == parse_polynomial(*v, p.alg))) {
                        okcase = false;
                        why = "first result mismatch";
                    }
                }
            if (okcase && e.sections.count("basis"))
                okcase = poly_set_equal(plain(r.basis), e.sections.at("basis"), p.alg, why);
            if (okcase && e.sections.count("interreduced"))
                okcase = poly_set_equal(plain(r.interreduced), e.sections.at("interreduced"),
                                        p.alg, why);
            if (okcase && e.sections.count("reduced")) {
                const auto& want = e.sections.at("reduced");
                if (want.size() != r.reduced.size()) {
                    okcase = false;
                    why = "reduce count mismatch";
                } else {
                    for (std::size_t i = 0; i < want.size(); ++i)
                        if (parse_polynomial(want[i], p.alg) != r.reduced[i].poly) {
                            okcase = false;
                            why = "normal form " + std::to_string(i) + " mismatch";
                            break;
                        }
                }
            }
            if (okcase && e.sections.count("certificate")) {
                Certificate want = parse_cert_lines(e.sections.at("certificate"), p.alg);
                if (!r.report.proved() || r.report.proofs.empty()) {
                    okcase = false;
                    why = "no certificate";
                } else {
                    const Certificate& got = r.report.proofs[0];
                    bool exact = false;
                    if (const auto* v = expect_key("certificate_exact"))
                        exact = (*v == "true");
                    bool same = exact ? (got == want) : got.reorder_equal(want);
                    if (!same) {
                        okcase = false;
                        why = "certificate mismatch";
                    }
                }
            }
            if (okcase)
                if (const auto* v = expect_key("time_budget_ms"); v && ms > std::stod(*v)) {
                    okcase = false;
                    why = "took " + std::to_string(ms) + " ms, budget " + *v;
                }
        } catch (const std::exception& ex) {
            okcase = false;
            why = ex.what();
        }
        total_ms += ms;
        if (okcase) {
            ++passed;
            out << "[PASS] " << name << " (" << (int)ms << " ms)" << std::endl;
        } else {
            ++failed;
            out << "[FAIL] " << name << ": " << why << std::endl;
        }
    }
    out << passed << " passed, " << failed << " failed, " << (int)total_ms << " ms total"
        << std::endl;
    if (!ids.empty() && passed + failed == 0) err << "warning: filter matched nothing" << std::endl;
    return failed == 0 ? 0 : 1;
}

}  // namespace ncgb
