// Command line front end: reads one request from -e/--expr, positional file
// arguments, or stdin, and evaluates it. Exit code 0 on success, 1 when a
// check action fails, 2 on malformed or inconsistent input.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lgf/dsl.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact doubling gamma, L and epsilon factor calculator"};

    std::string expr;
    std::vector<std::string> files;
    long q_override = 0;
    bool trace = false;
    double tolerance = 1e-9;

    app.add_option("-e,--expr", expr, "request given inline");
    app.add_option("files", files, "request files (default: read stdin)");
    app.add_option("-q", q_override,
                   "override the residue cardinality of the request");
    app.add_flag("--trace", trace, "print derivation steps");
    app.add_option("--tolerance", tolerance,
                   "numeric tolerance for --eval output");

    CLI11_PARSE(app, argc, argv);

    std::vector<std::string> inputs;
    if (!expr.empty()) inputs.push_back(expr);
    for (const auto& f : files) {
        std::ifstream in(f);
        if (!in) {
            std::cerr << "error: cannot open " << f << "\n";
            return 2;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        inputs.push_back(buf.str());
    }
    if (inputs.empty()) {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        inputs.push_back(buf.str());
    }

    int worst = 0;
    for (const auto& text : inputs) {
        lgf::RunResult rr;
        if (q_override != 0) {
            try {
                lgf::Request req = lgf::parse_request(text);
                req.q = q_override;
                rr = lgf::run_request(req, trace, tolerance);
            } catch (const std::exception& e) {
                rr.exit_code = 2;
                rr.output = std::string("error: ") + e.what() + "\n";
            }
        } else {
            rr = lgf::run_text(text, trace, tolerance);
        }
        (rr.exit_code == 2 ? std::cerr : std::cout) << rr.output;
        worst = std::max(worst, rr.exit_code);
    }
    return worst;
}
