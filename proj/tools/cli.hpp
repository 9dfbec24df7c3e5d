#pragma once

#include "report.hpp"

#include "tdc/graph.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tdc::cli {

enum ExitCode : int {
    kOk = 0,
    kInvalidInput = 2,    // unreadable or malformed input, bad usage
    kNonzeroMass = 3,     // green: measure has nonzero total mass
    kNotStrictlySimple = 4,
    kInconsistent = 5,    // two computations that must agree did not
};

struct RunConfig {
    std::string command;
    std::string input;
    std::vector<std::string> regions;
    std::optional<std::string> measure;
    std::optional<std::string> basepoint;
    std::string format = "text";
    std::vector<std::string> tokens;  // trailing positional words
};

struct Outcome {
    Report report;
    int code = kOk;
};

Outcome cmd_hodge(const Skeleton& s, const RunConfig& c);
Outcome cmd_pd(const Skeleton& s, const RunConfig& c);
Outcome cmd_green(const Skeleton& s, const RunConfig& c);
Outcome cmd_subset(const Skeleton& s, const RunConfig& c);
Outcome cmd_mv(const Skeleton& s, const RunConfig& c);
Outcome cmd_audit(const Skeleton& s, const RunConfig& c);

/// Full command line (args[0] is the program name). Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tdc::cli
