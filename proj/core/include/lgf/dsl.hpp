#pragma once

#include <optional>
#include <random>
#include <string>

#include "lgf/doubling.hpp"

namespace lgf {

/// Parse failure with 1-based position information.
struct ParseError : std::runtime_error {
    int line;
    int col;
    ParseError(int line_, int col_, const std::string& msg)
        : std::runtime_error("syntax error at line " + std::to_string(line_) +
                             ", column " + std::to_string(col_) + ": " + msg),
          line(line_),
          col(col_) {}
};

enum class Action { Gamma, L, Eps, CheckFE, CheckPsi, VerifyMinimal, VerifyAll };

const char* action_label(Action a);
std::optional<Action> action_from_label(const std::string& s);

/// A fully parsed request. Statement order is fixed:
///   field q=...; space ...; pi = ...; omega = ...; psi level ...; <action>
/// The space carries recomputed derived data (eps, anisotropic), so requests
/// built by hand should go through the same normalization the parser uses.
struct Request {
    long q = 3;
    HermSpace space;
    std::vector<GLBlock> tower;  // outermost block first
    LeafKind leaf = LeafKind::MinimalTrivial;
    UnramifiedLeaf unram;
    OmegaSpec omega;
    AddChar psi;
    Action action = Action::Gamma;
    std::string format = "text";  // text | latex | json
    std::optional<Rat> eval_s;

    friend bool operator==(const Request& a, const Request& b) {
        return a.q == b.q && a.space == b.space && a.tower == b.tower &&
               a.leaf == b.leaf && a.unram == b.unram && a.omega == b.omega &&
               a.psi == b.psi && a.action == b.action && a.format == b.format &&
               a.eval_s == b.eval_s;
    }
    friend bool operator!=(const Request& a, const Request& b) {
        return !(a == b);
    }
};

/// Throws ParseError on malformed input and std::invalid_argument on
/// well-formed input with inconsistent semantics (wrong keys for the case,
/// bad square-class labels, ...).
Request parse_request(const std::string& text);

/// Canonical single-line rendering; parse_request(print_request(r)) == r.
std::string print_request(const Request& req);

/// Normalize derived space data (eps for U, anisotropic) the way the parser
/// does; used by the request generator so that hand-built requests compare
/// equal to their reparses.
void finalize_space(const LocalFieldCtx& ctx, HermSpace& space);

ReprDescriptor request_descriptor(const Request& req);

struct RunResult {
    int exit_code = 0;     // 0 success, 1 failed verification, 2 bad input
    std::string output;
};

RunResult run_request(const Request& req, bool trace = false,
                      double tolerance = 1e-9);

/// Parse and run; parse and semantic errors come back as exit code 2 with a
/// diagnostic on the output.
RunResult run_text(const std::string& text, bool trace = false,
                   double tolerance = 1e-9);

/// Random well-formed request for round-trip and property testing.
Request random_request(std::mt19937& rng);

}  // namespace lgf
