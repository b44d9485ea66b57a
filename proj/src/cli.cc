// Copyright 2026 The qphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qphase/cli.h"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "qphase/io.h"
#include "qphase/quantifiers.h"
#include "qphase/states.h"
#include "qphase/tomography.h"
#include "qphase/wigner.h"

namespace qphase {

namespace {

using ordered_json = nlohmann::ordered_json;

// Thrown for bad flag values discovered after CLI11 parsing succeeds.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

ordered_json number(double x) {
    return round_to_printed(x);
}

ordered_json optional_number(const std::optional<double> &x) {
    return x.has_value() ? number(*x) : ordered_json(nullptr);
}

void emit(const std::string &text, const std::string &path, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    f << text;
}

DensityOperator named_state(const std::string &name) {
    if (name == "ghz") {
        return projector(make_ghz());
    }
    if (name == "w") {
        return projector(make_w());
    }
    if (name == "bell") {
        return projector(make_bell());
    }
    if (name == "mixed") {
        return DensityOperator::maximally_mixed(3);
    }
    throw UsageError("unknown state '" + name + "' (expected ghz, w, bell or mixed)");
}

PureState named_target(const std::string &name) {
    if (name == "ghz") {
        return make_ghz();
    }
    if (name == "w") {
        return make_w();
    }
    throw UsageError("unknown target '" + name + "' (expected ghz or w)");
}

uint64_t parse_count(const std::string &text, const std::string &what) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || text.size() > 18) {
        throw UsageError(what + " must be a positive integer, got '" + text + "'");
    }
    uint64_t v = std::stoull(text);
    if (v == 0) {
        throw UsageError(what + " must be positive");
    }
    return v;
}

VolumeMethod parse_volume_method(const std::string &text, uint64_t seed) {
    auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw UsageError("volume method must be grid:N, grid:NU,NP or mc:M, got '" + text + "'");
    }
    auto kind = text.substr(0, colon);
    auto arg = text.substr(colon + 1);
    if (kind == "mc") {
        return MonteCarloVolumeMethod{parse_count(arg, "Monte Carlo sample count"), seed};
    }
    if (kind == "grid") {
        GridVolumeMethod grid;
        auto comma = arg.find(',');
        if (comma == std::string::npos) {
            grid.points_u = grid.points_phi = parse_count(arg, "grid points");
        } else {
            grid.points_u = parse_count(arg.substr(0, comma), "grid points in u");
            grid.points_phi = parse_count(arg.substr(comma + 1), "grid points in phi");
        }
        if (grid.points_u < 2) {
            throw UsageError("grid needs at least 2 points per dimension");
        }
        return grid;
    }
    throw UsageError("unknown volume method '" + kind + "'");
}

std::filesystem::path sidecar_path(const std::filesystem::path &state_path) {
    auto p = state_path;
    p.replace_extension(".fit.json");
    return p;
}

std::string volume_json(const VolumeEstimate &v) {
    ordered_json doc;
    doc["value"] = number(v.value);
    if (v.std_error.has_value()) {
        doc["std_error"] = number(*v.std_error);
    }
    return doc.dump() + "\n";
}

ordered_json report_json(const QuantifierReport &r) {
    ordered_json doc;
    doc["negative_volume"] = number(r.negative_volume);
    doc["negative_volume_std_error"] = optional_number(r.negative_volume_std_error);
    doc["integrated_ea"] = number(r.integrated_ea);
    doc["linear_entropy"] = number(r.linear_entropy);
    ordered_json neg = ordered_json::object();
    for (const auto &entry : r.log_negativity) {
        neg[entry.label] = number(entry.value);
    }
    neg["mean"] = optional_number(r.log_negativity_mean);
    doc["log_negativity"] = std::move(neg);
    doc["tau2"] = optional_number(r.tau2);
    doc["tau3_paper"] = optional_number(r.tau3_paper);
    doc["tau3_ckw"] = optional_number(r.tau3_ckw);
    doc["fidelity_vs_target"] = optional_number(r.fidelity_vs_target);
    doc["purity"] = number(r.purity);
    return doc;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"qphase: multi-qubit Wigner functions, entanglement fingerprints and tomography"};
    app.require_subcommand(1);

    // gen-state
    auto *gen = app.add_subcommand("gen-state", "Write an ideal state, optionally with noise, as a state file");
    std::string gen_name;
    std::vector<std::string> gen_noise;
    std::string gen_out;
    gen->add_option("name", gen_name, "ghz, w, bell or mixed")->required();
    gen->add_option("--noise", gen_noise, "kind:strength[:qubit], applied in order; repeatable");
    gen->add_option("--out", gen_out, "Output state file (default: standard output)");

    // tomo
    auto *tomo = app.add_subcommand("tomo", "Simulate or fit tomography counts");
    tomo->require_subcommand(1);
    auto *sim = tomo->add_subcommand("sim", "Sample Pauli-basis counts from a state file");
    std::string sim_state;
    std::string sim_out;
    uint64_t sim_shots = 0;
    uint64_t sim_seed = 0;
    sim->add_option("--state", sim_state, "Input state file")->required();
    sim->add_option("--shots", sim_shots, "Shots per setting")->required()->check(CLI::PositiveNumber);
    sim->add_option("--seed", sim_seed, "Generator seed")->required();
    sim->add_option("--out", sim_out, "Output counts CSV")->required();

    auto *fit = tomo->add_subcommand("fit", "Maximum-likelihood fit of a counts file");
    std::string fit_counts;
    std::string fit_out;
    MleConfig fit_config;
    fit->add_option("--counts", fit_counts, "Input counts CSV")->required();
    fit->add_option("--out", fit_out, "Output state file; a .fit.json sidecar is written beside it")->required();
    fit->add_option("--max-iter", fit_config.max_iterations, "Iteration cap")->check(CLI::PositiveNumber);
    fit->add_option("--tol", fit_config.convergence_tol, "Relative log-likelihood change at convergence")
        ->check(CLI::NonNegativeNumber);

    // wigner
    auto *wig = app.add_subcommand("wigner", "Wigner function slices and integrals");
    wig->require_subcommand(1);
    auto *slice_cmd = wig->add_subcommand("slice", "Equal-angle slice on a theta x phi grid");
    std::string slice_state;
    std::string slice_grid = "201,201";
    std::string slice_rotate;
    std::string slice_out;
    slice_cmd->add_option("--state", slice_state, "Input state file")->required();
    slice_cmd->add_option("--grid", slice_grid, "T,P grid points in theta and phi")->capture_default_str();
    slice_cmd->add_option("--rotate", slice_rotate, "qubit:axis, rotate that qubit by pi/2 before slicing");
    slice_cmd->add_option("--out", slice_out, "Output slice CSV")->required();

    auto *volume_cmd = wig->add_subcommand("volume", "Negative volume of the Wigner function");
    std::string volume_state;
    std::string volume_method = "mc:1000000";
    uint64_t volume_seed = 1;
    volume_cmd->add_option("--state", volume_state, "Input state file")->required();
    volume_cmd->add_option("--method", volume_method, "grid:N, grid:NU,NP or mc:M")->capture_default_str();
    volume_cmd->add_option("--seed", volume_seed, "Monte Carlo seed")->capture_default_str();

    auto *ea_cmd = wig->add_subcommand("ea-integral", "Integral of the equal-angle slice");
    std::string ea_state;
    ea_cmd->add_option("--state", ea_state, "Input state file")->required();

    // quantify
    auto *quant = app.add_subcommand("quantify", "Fingerprint a state with Wigner and density-matrix indicators");
    std::string quant_state;
    std::string quant_target;
    std::string quant_out;
    std::string quant_method = "mc:1000000";
    uint64_t quant_seed = 1;
    quant->add_option("--state", quant_state, "Input state file")->required();
    quant->add_option("--target", quant_target, "ghz or w; adds fidelity_vs_target");
    quant->add_option("--out", quant_out, "Output report JSON (default: standard output)");
    quant->add_option("--method", quant_method, "Negative volume method, as for 'wigner volume'")
        ->capture_default_str();
    quant->add_option("--seed", quant_seed, "Monte Carlo seed")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return EXIT_OK;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return EXIT_OK;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        if (app.get_subcommands().empty()) {
            err << "Run with --help for usage.\n";
        }
        return EXIT_USAGE;
    }

    try {
        if (gen->parsed()) {
            auto rho = named_state(gen_name);
            for (const auto &text : gen_noise) {
                NoiseSpec spec = [&] {
                    try {
                        return parse_noise_spec(text);
                    } catch (const std::invalid_argument &e) {
                        throw UsageError(e.what());
                    }
                }();
                rho = apply_noise(rho, spec);
            }
            emit(state_to_json(rho), gen_out, out);
        } else if (sim->parsed()) {
            auto rho = read_state_file(sim_state);
            write_counts_file(sim_out, simulate_counts(rho, sim_shots, sim_seed));
        } else if (fit->parsed()) {
            auto data = read_counts_file(fit_counts);
            auto result = mle_reconstruct(data, fit_config);
            write_state_file(fit_out, result.rho);
            ordered_json meta;
            meta["iterations"] = result.iterations;
            meta["final_loglik"] = number(result.final_loglik);
            meta["converged"] = result.converged;
            emit(meta.dump(2) + "\n", sidecar_path(fit_out).string(), out);
            if (!result.converged) {
                err << "warning: fit stopped at the iteration cap before converging\n";
            }
        } else if (slice_cmd->parsed()) {
            SliceSpec spec;
            auto comma = slice_grid.find(',');
            if (comma == std::string::npos) {
                throw UsageError("--grid must be T,P");
            }
            spec.grid_theta = parse_count(slice_grid.substr(0, comma), "theta grid");
            spec.grid_phi = parse_count(slice_grid.substr(comma + 1), "phi grid");
            if (spec.grid_theta < 2 || spec.grid_phi < 2) {
                throw UsageError("--grid needs at least 2 points per axis");
            }
            auto rho = read_state_file(slice_state);
            if (!slice_rotate.empty()) {
                auto colon = slice_rotate.find(':');
                auto axis = colon == std::string::npos ? std::string() : slice_rotate.substr(colon + 1);
                if (colon == std::string::npos || (axis != "x" && axis != "y" && axis != "z")) {
                    throw UsageError("--rotate must be qubit:axis with axis x, y or z");
                }
                auto qubit_text = slice_rotate.substr(0, colon);
                if (qubit_text.empty() || qubit_text.find_first_not_of("0123456789") != std::string::npos ||
                    qubit_text.size() > 3 || std::stoul(qubit_text) >= rho.n_qubits()) {
                    throw UsageError(
                        "--rotate qubit must be an index below " + std::to_string(rho.n_qubits()) + ", got '" +
                        qubit_text + "'");
                }
                spec.pre_rotation = PreRotation{std::stoul(qubit_text), axis[0], std::numbers::pi / 2};
            }
            write_slice_file(slice_out, equal_angle_slice(rho, spec));
        } else if (volume_cmd->parsed()) {
            auto method = parse_volume_method(volume_method, volume_seed);
            auto rho = read_state_file(volume_state);
            out << volume_json(negative_volume(rho, method));
        } else if (ea_cmd->parsed()) {
            auto rho = read_state_file(ea_state);
            out << volume_json({integrated_ea_slice(rho), std::nullopt});
        } else if (quant->parsed()) {
            WignerConfig config;
            config.volume_method = parse_volume_method(quant_method, quant_seed);
            std::optional<PureState> target;
            if (!quant_target.empty()) {
                target = named_target(quant_target);
            }
            auto rho = read_state_file(quant_state);
            if (target.has_value() && target->n_qubits() != rho.n_qubits()) {
                throw UsageError("--target is a 3-qubit state but the state file has " +
                                 std::to_string(rho.n_qubits()) + " qubits");
            }
            if (rho.n_qubits() != 3) {
                err << "warning: tangles need 3 qubits; tau2, tau3_paper and tau3_ckw are null\n";
            }
            emit(report_json(fingerprint(rho, target, config)).dump(2) + "\n", quant_out, out);
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    }
    return EXIT_OK;
}

}  // namespace qphase
