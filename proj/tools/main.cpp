#include <CLI11.hpp>
#include <iostream>

#include "superq/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"superq: root data, Harish-Chandra cones, moment images and "
                 "quantization bookkeeping for real forms of contragredient Lie supergroups"};
    app.require_subcommand(1);

    superq::CliOptions options;
    const std::vector<std::string> commands = {"roots",    "rho",    "cone", "cells",
                                               "classify", "spectrum", "model", "reduce",
                                               "qr",       "unitary", "atlas"};
    int box = -1;
    double tol = -1.0;
    std::string slice;
    for (const std::string& name : commands) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--config", options.config_path, "job configuration file")->required();
        sub->add_option("--box", box, "lattice box bound, overrides [box] n");
        sub->add_option("--tol", tol, "solver residual tolerance, overrides [solver] tol");
        sub->add_option("--out", options.out_dir, "report output directory");
        sub->add_option("--slice", slice, "atlas slice 'v1 ; v2 ; origin'");
        sub->callback([&options, name] { options.command = name; });
    }

    CLI11_PARSE(app, argc, argv);
    if (box >= 0) options.box = box;
    if (tol > 0) options.tol = tol;
    if (!slice.empty()) options.slice = slice;

    return superq::run_job(options, std::cout, std::cerr);
}
