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


#include "oamx/analysis.h"

#include <charconv>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>

#include "oamx/errors.h"
#include "oamx/synthesis.h"

namespace oamx {

namespace {

int64_t floor_mod(int64_t a, int64_t n) {
    int64_t r = a % n;
    return r < 0 ? r + n : r;
}

}  // namespace

std::string GateVariant::str() const {
    switch (kind) {
        case Kind::Standard:
            return "standard";
        case Kind::Simplified:
            return "simplified";
        case Kind::Inverse:
            return "inverse";
        case Kind::Shifted:
            return "shifted(" + std::to_string(shift) + ")";
    }
    return "standard";
}

std::optional<GateVariant> GateVariant::parse(const std::string &text) {
    if (text == "standard") {
        return standard();
    }
    if (text == "simplified") {
        return simplified();
    }
    if (text == "inverse") {
        return inverse();
    }
    const std::string prefix = "shifted(";
    if (text.size() > prefix.size() + 1 && text.compare(0, prefix.size(), prefix) == 0 && text.back() == ')') {
        int64_t m = 0;
        const char *first = text.data() + prefix.size();
        const char *last = text.data() + text.size() - 1;
        auto [ptr, ec] = std::from_chars(first, last, m);
        if (ec == std::errc() && ptr == last) {
            return shifted(m);
        }
    }
    return std::nullopt;
}

std::string VerificationReport::str() const {
    std::ostringstream out;
    out << "d = " << d << " (" << variant.str() << ")\n";
    out << "permutation: " << (permutation_ok ? "ok" : "FAILED") << " (" << mapped.size() << " of " << d
        << " basis states mapped)\n";
    out << "beam-splitters: " << count_actual << " (predicted " << count_predicted << ")\n";
    if (bound) {
        out << "bound 4 log2(d-1): " << *bound << "\n";
    }
    for (const auto &v : violations) {
        out << "violation: " << v << "\n";
    }
    out << (ok() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

VerificationReport verify_gate(int64_t d, GateVariant variant, const SimulationConfig &config) {
    VerificationReport report;
    report.d = d;
    report.variant = variant;
    try {
        const Netlist base = synth_arbitrary(d);
        const CountPrediction prediction = predict_count(d);
        report.bound = prediction.bound;

        int64_t offset = 0;
        int64_t step = 1;
        StateTransform transform;
        PathLabel in = base.input_path;
        PathLabel out = base.output_path;

        switch (variant.kind) {
            case GateVariant::Kind::Standard: {
                report.count_actual = count_beamsplitters(base);
                report.count_predicted = prediction.n_arb;
                transform = [&](const ModeVector &s) { return apply_netlist(base, s, config); };
                break;
            }
            case GateVariant::Kind::Simplified: {
                auto graph = std::make_shared<PortGraph>(simplify(base));
                graph->validate();
                report.count_actual = static_cast<int64_t>(graph->beamsplitter_count());
                report.count_predicted = predict_simplified_count(d);
                transform = [graph, &config](const ModeVector &s) { return apply_portgraph(*graph, s, config); };
                break;
            }
            case GateVariant::Kind::Inverse: {
                auto inv = std::make_shared<Netlist>(invert(base));
                report.count_actual = count_beamsplitters(*inv);
                report.count_predicted = prediction.n_arb;
                in = inv->input_path;
                out = inv->output_path;
                step = -1;
                transform = [inv, &config](const ModeVector &s) { return apply_netlist(*inv, s, config); };
                break;
            }
            case GateVariant::Kind::Shifted: {
                auto shifted = std::make_shared<Netlist>(shifted_gate(base, variant.shift));
                report.count_actual = count_beamsplitters(*shifted);
                report.count_predicted = prediction.n_arb;
                offset = variant.shift;
                transform = [shifted, &config](const ModeVector &s) { return apply_netlist(*shifted, s, config); };
                break;
            }
        }

        std::vector<OamValue> domain;
        for (int64_t k = 0; k < d; ++k) {
            domain.push_back(k + offset);
        }
        const PermutationResult perm = extract_permutation(transform, domain, in, out);
        report.mapped = perm.mapping;
        report.permutation_ok = perm.is_total();
        for (OamValue x : perm.non_permutation) {
            report.violations.push_back("input |" + std::to_string(x) + "> is not mapped to a single mode on " +
                                        out.str());
        }
        for (int64_t k = 0; k < d; ++k) {
            OamValue expected = floor_mod(k + step, d) + offset;
            auto it = perm.mapping.find(k + offset);
            if (it != perm.mapping.end() && it->second != expected) {
                report.permutation_ok = false;
                report.violations.push_back("|" + std::to_string(k + offset) + "> -> |" + std::to_string(it->second) +
                                            ">, expected |" + std::to_string(expected) + ">");
            }
        }
        if (report.count_actual != report.count_predicted) {
            report.violations.push_back("beam-splitter count " + std::to_string(report.count_actual) +
                                        " differs from prediction " + std::to_string(report.count_predicted));
        }
        if (report.bound && static_cast<double>(report.count_actual) > *report.bound) {
            report.violations.push_back("beam-splitter count exceeds 4 log2(d-1)");
        }
    } catch (const std::exception &e) {
        report.permutation_ok = false;
        report.violations.emplace_back(e.what());
    }
    return report;
}

std::vector<CycleSet> discover_cycles(const Netlist &netlist, OamValue oam_min, OamValue oam_max) {
    if (oam_min > oam_max) {
        throw std::invalid_argument("empty cycle window");
    }
    std::vector<OamValue> window;
    for (OamValue l = oam_min; l <= oam_max; ++l) {
        window.push_back(l);
    }
    const auto perm = extract_permutation([&](const ModeVector &s) { return apply_netlist(netlist, s); }, window,
                                          netlist.input_path, netlist.output_path);
    const auto &f = perm.mapping;

    const PortGraph graph = netlist_to_portgraph(netlist);
    auto recheck = [&](OamValue from, OamValue to) {
        try {
            ModeVector out = apply_portgraph(graph, ModeVector::basis(netlist.input_path, from));
            return out.size() == 1 && std::abs(std::abs(out.at(netlist.output_path, to)) - 1.0) <= 1e-9;
        } catch (const Error &) {
            return false;
        }
    };

    const auto length = static_cast<size_t>(netlist.dimension);
    std::vector<CycleSet> cycles;
    std::set<OamValue> visited;
    for (const auto &[start, image] : f) {
        if (visited.count(start) != 0) {
            continue;
        }
        std::vector<OamValue> orbit{start};
        OamValue x = image;
        while (x != start && f.count(x) != 0 && orbit.size() <= length) {
            orbit.push_back(x);
            x = f.at(x);
        }
        if (x != start) {
            continue;
        }
        visited.insert(orbit.begin(), orbit.end());
        if (orbit.size() != length) {
            continue;
        }
        bool closed = true;
        for (size_t i = 0; i < orbit.size() && closed; ++i) {
            closed = recheck(orbit[i], orbit[(i + 1) % orbit.size()]);
        }
        if (closed) {
            cycles.push_back(CycleSet{std::move(orbit)});
        }
    }
    return cycles;
}

std::vector<ScalingRow> scaling_table(int64_t d_min, int64_t d_max) {
    if (d_min < 3 || d_max < d_min) {
        throw std::invalid_argument("scaling table needs 3 <= d_min <= d_max");
    }
    std::vector<ScalingRow> rows;
    rows.reserve(static_cast<size_t>(d_max - d_min + 1));
    for (int64_t d = d_min; d <= d_max; ++d) {
        const Netlist netlist = synth_arbitrary(d);
        const CountPrediction prediction = predict_count(d);
        ScalingRow row;
        row.d = d;
        row.n_arb_actual = count_beamsplitters(netlist);
        row.n_arb_predicted = prediction.n_arb;
        row.n_s = predict_simplified_count(d);
        row.naive = naive_count(d);
        row.bound = *prediction.bound;
        const auto simplified = static_cast<int64_t>(simplify(netlist).beamsplitter_count());
        row.ok = row.n_arb_actual == row.n_arb_predicted && static_cast<double>(row.n_arb_actual) <= row.bound &&
                 simplified == row.n_s;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace oamx
