// Copyright 2026 The oamx Authors
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


// Command-line front end: synthesize, simulate, verify and export X-gate setups.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "oamx/analysis.h"
#include "oamx/errors.h"
#include "oamx/io.h"
#include "oamx/simulation.h"
#include "oamx/synthesis.h"

namespace {

using namespace oamx;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw UsageError("cannot write '" + path + "'");
    }
    out << text;
}

GateVariant resolve_variant(const std::string &name, std::optional<int64_t> shift) {
    auto variant = GateVariant::parse(name);
    if (!variant || variant->kind == GateVariant::Kind::Shifted) {
        throw UsageError("unknown variant '" + name + "' (expected standard, simplified or inverse)");
    }
    if (shift) {
        if (variant->kind != GateVariant::Kind::Standard) {
            throw UsageError("--shift only combines with the standard variant");
        }
        return GateVariant::shifted(*shift);
    }
    return *variant;
}

NetlistDocument build_document(int64_t d, const GateVariant &variant) {
    NetlistDocument doc;
    doc.variant = variant.str();
    doc.netlist = synth_arbitrary(d);
    if (variant.kind == GateVariant::Kind::Inverse) {
        doc.netlist = invert(doc.netlist);
    } else if (variant.kind == GateVariant::Kind::Shifted) {
        doc.netlist = shifted_gate(doc.netlist, variant.shift);
    }
    return doc;
}

bool is_simplified(const NetlistDocument &doc) {
    auto v = GateVariant::parse(doc.variant);
    return v && v->kind == GateVariant::Kind::Simplified;
}

std::pair<OamValue, OamValue> parse_window(const std::string &text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        throw UsageError("window must look like lo..hi");
    }
    try {
        size_t used_lo = 0;
        size_t used_hi = 0;
        std::string lo_text = text.substr(0, dots);
        std::string hi_text = text.substr(dots + 2);
        OamValue lo = std::stoll(lo_text, &used_lo);
        OamValue hi = std::stoll(hi_text, &used_hi);
        if (used_lo != lo_text.size() || used_hi != hi_text.size() || lo > hi) {
            throw UsageError("bad window '" + text + "'");
        }
        return {lo, hi};
    } catch (const std::logic_error &) {
        throw UsageError("bad window '" + text + "'");
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Synthesis and simulation of d-dimensional OAM X-gates"};
    app.require_subcommand(1);

    int64_t synth_d = 0;
    std::string synth_variant = "standard";
    std::optional<int64_t> synth_shift;
    std::string synth_out;
    auto *synth = app.add_subcommand("synth", "Write the netlist of a d-dimensional X-gate as JSON");
    synth->add_option("d", synth_d, "Dimension")->required();
    synth->add_option("--variant", synth_variant, "standard, simplified or inverse");
    synth->add_option("--shift", synth_shift, "Cycle modes m..d-1+m instead of 0..d-1");
    synth->add_option("--out", synth_out, "Output file (default stdout)");

    std::string sim_file;
    std::string sim_input;
    std::string sim_mode = "strict";
    auto *simulate = app.add_subcommand("simulate", "Propagate a ket state through a netlist");
    simulate->add_option("netlist", sim_file, "Netlist JSON")->required();
    simulate->add_option("--input", sim_input, "State, e.g. \"0.6*|1> + 0.8*|2>\"")->required();
    simulate->add_option("--mode", sim_mode, "strict or physical")->check(CLI::IsMember({"strict", "physical"}));

    int64_t verify_d = 0;
    std::string verify_variant = "standard";
    std::optional<int64_t> verify_shift;
    auto *verify = app.add_subcommand("verify", "Check the cyclic permutation and beam-splitter count");
    verify->add_option("d", verify_d, "Dimension")->required();
    verify->add_option("--variant", verify_variant, "standard, simplified or inverse");
    verify->add_option("--shift", verify_shift, "Verify the gate shifted by m");

    int64_t scale_min = 3;
    int64_t scale_max = 500;
    std::string scale_csv;
    auto *scaling = app.add_subcommand("scaling", "Beam-splitter counts over a range of dimensions");
    scaling->add_option("--min", scale_min, "Smallest dimension (>= 3)");
    scaling->add_option("--max", scale_max, "Largest dimension");
    scaling->add_option("--csv", scale_csv, "Output CSV file (default stdout)");

    std::string cycles_file;
    std::string cycles_window;
    auto *cycles = app.add_subcommand("cycles", "Find closed d-cycles of OAM modes in a window");
    cycles->add_option("netlist", cycles_file, "Netlist JSON")->required();
    cycles->add_option("--window", cycles_window, "lo..hi (default -4d..4d)");

    std::string export_file;
    std::string export_dot_path;
    auto *exporter = app.add_subcommand("export", "Render a netlist as Graphviz DOT");
    exporter->add_option("netlist", export_file, "Netlist JSON")->required();
    exporter->add_option("--dot", export_dot_path, "Output DOT file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (synth->parsed()) {
            if (synth_d < 2) {
                throw InvalidDimensionError(synth_d);
            }
            NetlistDocument doc = build_document(synth_d, resolve_variant(synth_variant, synth_shift));
            write_output(synth_out, serialize(doc));
            return kExitOk;
        }

        if (simulate->parsed()) {
            NetlistDocument doc = parse_document(read_file(sim_file));
            ModeVector state = parse_state(sim_input, doc.netlist.input_path);
            double norm = state.norm();
            state = normalize(state);
            if (std::abs(norm - 1.0) > 1e-12) {
                std::cerr << "note: input state normalized (norm was " << norm << ")\n";
            }
            SimulationConfig config;
            config.mode = sim_mode == "physical" ? SimulationMode::Physical : SimulationMode::Strict;
            ModeVector out = is_simplified(doc) ? apply_portgraph(simplify(doc.netlist), state, config)
                                                : apply_netlist(doc.netlist, state, config);
            std::cout << format_state(out);
            return kExitOk;
        }

        if (verify->parsed()) {
            if (verify_d < 2) {
                throw InvalidDimensionError(verify_d);
            }
            VerificationReport report = verify_gate(verify_d, resolve_variant(verify_variant, verify_shift));
            std::cout << report.str();
            return report.ok() ? kExitOk : kExitFailure;
        }

        if (scaling->parsed()) {
            if (scale_min < 3 || scale_max < scale_min) {
                throw UsageError("need 3 <= --min <= --max");
            }
            auto rows = scaling_table(scale_min, scale_max);
            write_output(scale_csv, scaling_csv(rows));
            bool all_ok = std::all_of(rows.begin(), rows.end(), [](const ScalingRow &r) { return r.ok; });
            if (!all_ok) {
                std::cerr << "error: some rows disagree with the predicted counts\n";
            }
            return all_ok ? kExitOk : kExitFailure;
        }

        if (cycles->parsed()) {
            NetlistDocument doc = parse_document(read_file(cycles_file));
            const int64_t d = doc.netlist.dimension;
            auto [lo, hi] = cycles_window.empty() ? std::pair<OamValue, OamValue>{-4 * d, 4 * d}
                                                  : parse_window(cycles_window);
            auto found = discover_cycles(doc.netlist, lo, hi);
            std::cout << found.size() << " closed " << d << "-cycle(s) in [" << lo << ", " << hi << "]\n";
            for (const auto &c : found) {
                for (size_t i = 0; i < c.modes.size(); ++i) {
                    std::cout << (i ? " -> " : "") << c.modes[i];
                }
                std::cout << "\n";
            }
            return kExitOk;
        }

        if (exporter->parsed()) {
            NetlistDocument doc = parse_document(read_file(export_file));
            std::string dot = is_simplified(doc) ? export_dot(simplify(doc.netlist)) : export_dot(doc.netlist);
            write_output(export_dot_path, dot);
            return kExitOk;
        }
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidDimensionError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SchemaVersionMismatchError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
