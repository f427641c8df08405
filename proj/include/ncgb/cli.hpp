#ifndef NCGB_CLI_HPP
#define NCGB_CLI_HPP

#include <iosfwd>
#include <string>

#include "ncgb/certdoc.hpp"
#include "ncgb/certify.hpp"
#include "ncgb/problem.hpp"

namespace ncgb {

inline constexpr const char* kToolVersion = "0.1.0";

/// Command-line overrides on top of the problem file's own settings.
struct CmdOptions {
    int maxiter = -1;   // -1: keep the file's value
    int degbound = -1;
    std::string heuristic;
    bool quiver_check = false;
    std::string json_out;
    bool pure = false;       // find: drop candidates containing target variables
    bool unbounded = false;  // prove: run the unbounded loop
    bool serial = false;     // disable parallel batch reduction
    bool show_proofs = true;
};

/// Structured result of one problem run; the CLI prints from this and the
/// fixture runner checks it directly.
struct RunOutput {
    int exit_code = 2;
    std::string error;

    CertifyReport report;                   // certify
    std::vector<Polynomial> claims;         // certify claims, for the document
    std::vector<Polynomial> results;        // find / cancellability lists
    std::vector<TracedPolynomial> basis;    // gb
    std::vector<TracedPolynomial> interreduced;
    std::vector<TracedPolynomial> reduced;  // reduce (one per target)
    ProveResult prove;
    double timing_ms = 0;
};

RunOutput run_problem(const Problem& p, const CmdOptions& o, std::ostream& err);

CertificateDocument make_document(const RunOutput& r);

int cmd_certify(const std::string& problem_path, const CmdOptions& o, std::ostream& out,
                std::ostream& err);
int cmd_verify(const std::string& problem_path, const std::string& doc_path, std::ostream& out,
               std::ostream& err);
int cmd_gb(const std::string& problem_path, const CmdOptions& o, std::ostream& out,
           std::ostream& err);
int cmd_reduce(const std::string& problem_path, const CmdOptions& o, std::ostream& out,
               std::ostream& err);
int cmd_find(const std::string& problem_path, const CmdOptions& o, std::ostream& out,
             std::ostream& err);
int cmd_cancel(const std::string& problem_path, bool left, const CmdOptions& o, std::ostream& out,
               std::ostream& err);
int cmd_prove(const std::string& problem_path, const CmdOptions& o, std::ostream& out,
              std::ostream& err);

/// Run every fixture directory under `dir` (optionally filtered by substring)
/// against its expectations; prints one line per fixture plus a summary.
int cmd_fixtures(const std::string& dir, const std::string& filter, const CmdOptions& o,
                 std::ostream& out, std::ostream& err);

}  // namespace ncgb

#endif
