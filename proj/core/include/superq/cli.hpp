#pragma once

#include <optional>
#include <ostream>
#include <string>

namespace superq {

struct CliOptions {
    std::string command;      // roots rho cone cells classify spectrum model reduce qr unitary atlas
    std::string config_path;
    std::optional<int> box;
    std::optional<double> tol;
    std::string out_dir = ".";
    std::optional<std::string> slice;  // "v1 ; v2 ; origin"
};

/// Runs one job: exit code 0 on success, 1 on domain errors, 2 on
/// configuration errors. Reports are written under out_dir; a short summary
/// goes to `out`. Thin composition of the library modules only.
int run_job(const CliOptions& options, std::ostream& out, std::ostream& err);

}  // namespace superq
