#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ncgb/cli.hpp"

using namespace ncgb;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path dir;
    TempDir() {
        dir = fs::temp_directory_path() /
              ("ncgb_test_" + std::to_string((std::uintptr_t)this));
        fs::create_directories(dir);
    }
    ~TempDir() { fs::remove_all(dir); }
    std::string file(const std::string& name, const std::string& content) const {
        fs::path p = dir / name;
        std::ofstream(p) << content;
        return p.string();
    }
    std::string path(const std::string& name) const { return (dir / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* kMpProblem = R"(
vars = a, b, c, a_adj, b_adj, c_adj
adjoints = auto
assumptions:
  add_adj( pinv(a, b, a_adj, b_adj), pinv(a, c, a_adj, c_adj) )
claims:
  b - c
)";

}  // namespace

TEST_CASE("problem parsing builds the session assumption list") {
    Problem p = parse_problem_text(kMpProblem);
    REQUIRE(p.alg->size() == 6);
    REQUIRE(p.assumptions.size() == 12);
    CHECK(p.assumptions[0] == parse_polynomial("a*b*a - a", p.alg));
    CHECK(p.assumptions[4] == parse_polynomial("a*c*a - a", p.alg));
    CHECK(p.assumptions[8] == parse_polynomial("a_adj*b_adj*a_adj - a_adj", p.alg));
    CHECK(p.assumptions[11] == parse_polynomial("c_adj*a_adj*c_adj - c_adj", p.alg));
    REQUIRE(p.claims.size() == 1);
    CHECK(p.task == "certify");
}

TEST_CASE("problem parsing rejects malformed input") {
    CHECK_THROWS_AS(parse_problem_text("vars = a\nnonsense line\n"), UsageError);
    CHECK_THROWS_AS(parse_problem_text("vars = a\nbogus_key = 3\n"), UsageError);
    CHECK_THROWS_AS(parse_problem_text("claims:\n  a - b\n"), UsageError);  // no vars
    CHECK_THROWS_AS(parse_problem_text("vars = a\nassumptions:\n  pinv(a, b)\n"), UsageError);
    CHECK_THROWS_AS(
        parse_problem_text("vars = a, b\nassumptions:\n  add_adj( a - b )\n"),
        UsageError);  // no adjoint pairing declared
}

TEST_CASE("order and quiver keys parse") {
    Problem p = parse_problem_text(R"(
vars = x, y, z
order = [[y, x], [z]]
quiver = (U, V, x), (V, U, y)
assumptions:
  x*y - 1
claims:
  x*y - 1
)");
    REQUIRE(p.order.has_value());
    CHECK(p.order->block_count() == 2);
    REQUIRE(p.quiver.has_value());
    CHECK(p.quiver->edges().size() == 2);
}

TEST_CASE("certify command round-trips through the certificate document") {
    TempDir tmp;
    std::string problem = tmp.file("problem", kMpProblem);
    std::string doc = tmp.path("cert.json");

    CmdOptions opts;
    opts.json_out = doc;
    std::ostringstream out, err;
    int code = cmd_certify(problem, opts, out, err);
    CHECK(code == 0);
    CHECK(out.str().find("Done! Ideal membership of all claims could be verified!") !=
          std::string::npos);
    CHECK(out.str().find("b - c =") != std::string::npos);
    CHECK(err.str().find("Computing a (partial) Groebner basis") != std::string::npos);

    std::ostringstream vout, verr;
    CHECK(cmd_verify(problem, doc, vout, verr) == 0);
    CHECK(vout.str().find("Verified!") != std::string::npos);
}

TEST_CASE("verify rejects a tampered coefficient") {
    TempDir tmp;
    std::string problem = tmp.file("problem", kMpProblem);
    std::string doc = tmp.path("cert.json");
    CmdOptions opts;
    opts.json_out = doc;
    std::ostringstream out, err;
    REQUIRE(cmd_certify(problem, opts, out, err) == 0);

    std::string text = slurp(doc);
    auto pos = text.find("\"left_coeff\": \"1\"");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 17, "\"left_coeff\": \"2\"");
    std::ofstream(doc) << text;

    std::ostringstream vout, verr;
    CHECK(cmd_verify(problem, doc, vout, verr) == 1);
    CHECK(vout.str().find("Mismatch!") != std::string::npos);
}

TEST_CASE("verify rejects an out-of-range generator index") {
    TempDir tmp;
    std::string problem = tmp.file("problem", kMpProblem);
    std::string doc = tmp.path("cert.json");
    CmdOptions opts;
    opts.json_out = doc;
    std::ostringstream out, err;
    REQUIRE(cmd_certify(problem, opts, out, err) == 0);

    std::string text = slurp(doc);
    auto pos = text.find("\"gen_index\": ");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 14, "\"gen_index\": 99");
    std::ofstream(doc) << text;

    std::ostringstream vout, verr;
    CHECK(cmd_verify(problem, doc, vout, verr) == 2);
}

TEST_CASE("identical runs emit byte-identical documents modulo timing") {
    TempDir tmp;
    std::string problem = tmp.file("problem", kMpProblem);
    CmdOptions opts;
    std::string doc1 = tmp.path("c1.json"), doc2 = tmp.path("c2.json");
    std::ostringstream sink;
    opts.json_out = doc1;
    REQUIRE(cmd_certify(problem, opts, sink, sink) == 0);
    opts.json_out = doc2;
    REQUIRE(cmd_certify(problem, opts, sink, sink) == 0);

    Problem p = parse_problem_file(problem);
    auto d1 = CertificateDocument::parse(slurp(doc1), p.alg);
    auto d2 = CertificateDocument::parse(slurp(doc2), p.alg);
    d1.timing_ms = 0;
    d2.timing_ms = 0;
    CHECK(d1.serialize(*p.alg) == d2.serialize(*p.alg));
}

TEST_CASE("failure exits with code 1 and the session message") {
    TempDir tmp;
    std::string problem = tmp.file("problem", R"(
vars = a, b
maxiter = 10
assumptions:
  a*b*a - a*b
claims:
  a*b^20*a - a*b^20
)");
    std::ostringstream out, err;
    CHECK(cmd_certify(problem, CmdOptions{}, out, err) == 1);
    CHECK(out.str().find("Failed! Not all ideal memberships could be verified.") !=
          std::string::npos);
}

TEST_CASE("parse errors exit with code 2") {
    TempDir tmp;
    std::string problem = tmp.file("problem", "vars = a\nclaims:\n  a + q\n");
    std::ostringstream out, err;
    CHECK(cmd_certify(problem, CmdOptions{}, out, err) == 2);
    CHECK(cmd_certify(tmp.path("missing"), CmdOptions{}, out, err) == 2);
}

TEST_CASE("gb, reduce, find and prove commands print their results") {
    TempDir tmp;
    std::string gb_problem = tmp.file("gb", R"(
vars = x, y
task = gb
interreduce = true
assumptions:
  x*y*x - x*y
  y*x*x*y - y
)");
    std::ostringstream out, err;
    CHECK(cmd_gb(gb_problem, CmdOptions{}, out, err) == 0);
    CHECK(out.str().find("-y + y*x") != std::string::npos);
    CHECK(out.str().find("-y + y^2") != std::string::npos);

    std::string reduce_problem = tmp.file("red", R"(
vars = x, y
task = reduce
assumptions:
  x*y*x - x*y
  y*x*x*y - y
reduce:
  y^2
)");
    std::ostringstream rout, rerr;
    CHECK(cmd_reduce(reduce_problem, CmdOptions{}, rout, rerr) == 0);
    CHECK(rout.str().find("y") != std::string::npos);

    std::string prove_problem = tmp.file("prove", R"(
forall x : U -> V
exists y : U -> V
task = prove
prove_degree = 1
statement:
  y = x
)");
    std::ostringstream pout, perr;
    CHECK(cmd_prove(prove_problem, CmdOptions{}, pout, perr) == 0);
    CHECK(pout.str().find("true") != std::string::npos);
    CHECK(pout.str().find("y = x") != std::string::npos);
}

TEST_CASE("statement grammar: precedence, negation, zero") {
    Problem p = parse_problem_text(R"(
forall a : U -> V
forall b : U -> V
exists y : U -> V
statement:
  ~(a = b) -> (y = a | y = b & a + 0 = b)
)");
    REQUIRE(p.statement.has_value());
    const auto& m = *p.statement->matrix;
    CHECK(m.kind() == Formula::Kind::Implies);
    // | binds looser than &
    CHECK(m.rhs()->kind() == Formula::Kind::Or);
    Problem z = parse_problem_text(R"(
forall a : U -> V
exists y : U -> V
statement:
  0 = a -> y = a
)");
    CHECK(z.statement.has_value());
}

TEST_CASE("var declarations with quantifier prefix lines") {
    Problem p = parse_problem_text(R"(
var a : U -> V adjoint a_adj
var b : V -> U adjoint b_adj
forall a
exists b
statement:
  a*b*a = a -> b*a*b = b
)");
    REQUIRE(p.statement.has_value());
    CHECK(p.statement->universals.size() == 2);  // a and its adjoint
    CHECK(p.statement->existentials.size() == 1);
    CHECK(p.statement->sorts.sort_of("b").src == "V");
}

TEST_CASE("certify refuses statement problems") {
    TempDir tmp;
    std::string problem = tmp.file("problem", R"(
forall x : U -> V
exists y : U -> V
statement:
  y = x
)");
    std::ostringstream out, err;
    CHECK(cmd_certify(problem, CmdOptions{}, out, err) == 2);
    CHECK(err.str().find("prove") != std::string::npos);
}
