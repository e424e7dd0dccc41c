#pragma once

#include <iosfwd>
#include <string>

namespace obvp::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitInput = 1,
    kExitRank = 2,
    kExitVerify = 3,
};

/// Solves a problem file and writes `samples` rows of x,piece,u,du1..du{n-1}.
int cmd_solve(const std::string& input_path, const std::string& output_path, int samples,
              std::ostream& out, std::ostream& err);

/// Solves a registry entry (or every entry for id "all") and reports it.
int cmd_reproduce(const std::string& example_id, bool with_oracle, std::ostream& out,
                  std::ostream& err);

/// Exact solve, shooting oracle at step h and the full verification report.
int cmd_verify(const std::string& input_path, double h, bool as_json, std::ostream& out,
               std::ostream& err);

int cmd_list(std::ostream& out);

/// Writes a registry entry as a problem file; `drop_pins` removes its pins.
int cmd_export(const std::string& example_id, const std::string& output_path, bool drop_pins,
               std::ostream& out, std::ostream& err);

/// Argument parsing and dispatch.
int run(int argc, char** argv);

}  // namespace obvp::cli
