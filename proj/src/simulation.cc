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


#include "oamx/simulation.h"

#include <cmath>
#include <stdexcept>

#include "oamx/elements.h"
#include "oamx/errors.h"
#include "oamx/synthesis.h"

namespace oamx {

namespace {

struct Emission {
    Port side;
    OamValue oam;
    Amplitude amp;
};

// Action of one element on light entering `side` with the given OAM.
template <typename Sink>
void act(const Element &element, Port side, OamValue oam, Amplitude amp, SimulationMode mode, Sink &&emit) {
    if (const auto *bs = std::get_if<BeamSplitter>(&element)) {
        if (mode == SimulationMode::Strict) {
            emit(Emission{li_route_strict(bs->m, side, oam), oam, amp});
            return;
        }
        TwoPortUnitary u = li_unitary_physical(bs->m, oam);
        emit(Emission{side, oam, amp * u.same()});
        emit(Emission{other(side), oam, amp * u.cross()});
    } else if (const auto *h = std::get_if<Hologram>(&element)) {
        emit(Emission{side, hologram_apply(h->v, oam), amp});
    } else {
        const auto &z = std::get<ZPlate>(element);
        emit(Emission{side, oam, amp * z_phase(z.d, oam)});
    }
}

void check_norm(double expected, const ModeVector &state, double tol) {
    double actual = state.norm();
    if (std::abs(actual - expected) > tol * std::max(1.0, expected)) {
        throw NormDriftError(expected, actual);
    }
}

}  // namespace

ModeVector apply_netlist(const Netlist &netlist, const ModeVector &state, const SimulationConfig &config) {
    const double norm0 = state.norm();
    ModeVector current = state;
    for (const Element &element : netlist.elements) {
        const auto paths = element_paths(element);
        ModeVector next(state.prune_threshold());
        for (const auto &[key, amp] : current) {
            size_t side = 0;
            while (side < paths.size() && paths[side] != key.path) {
                ++side;
            }
            if (side == paths.size()) {
                next.add(key, amp);
                continue;
            }
            act(element, static_cast<Port>(side), key.oam, amp, config.mode,
                [&](const Emission &e) { next.add(paths[static_cast<size_t>(e.side)], e.oam, e.amp); });
        }
        check_norm(norm0, next, config.amplitude_tolerance);
        current = std::move(next);
    }
    return current;
}

ModeVector apply_portgraph(const PortGraph &graph, const ModeVector &state, const SimulationConfig &config) {
    const size_t budget = config.hop_budget.value_or(10 * std::max<size_t>(graph.nodes.size(), 1));
    const double norm0 = state.norm();

    using Location = std::pair<PortRef, OamValue>;
    std::map<Location, Amplitude> frontier;
    ModeVector out(state.prune_threshold());

    auto forward = [&](std::map<Location, Amplitude> &into, const WireTarget &target, OamValue oam, Amplitude amp) {
        if (const auto *t = std::get_if<Terminal>(&target)) {
            out.add(t->path, oam, amp);
        } else {
            into[{std::get<PortRef>(target), oam}] += amp;
        }
    };

    for (const auto &[key, amp] : state) {
        auto it = graph.entries.find(key.path);
        if (it == graph.entries.end()) {
            out.add(key, amp);
        } else {
            forward(frontier, it->second, key.oam, amp);
        }
    }

    size_t hops = 0;
    while (!frontier.empty()) {
        if (hops >= budget) {
            throw HopBudgetExceededError(budget);
        }
        ++hops;
        std::map<Location, Amplitude> next;
        for (const auto &[where, amp] : frontier) {
            if (std::abs(amp) < state.prune_threshold()) {
                continue;
            }
            const auto &[port, oam] = where;
            act(graph.nodes.at(port.node), port.side, oam, amp, config.mode, [&](const Emission &e) {
                forward(next, graph.wiring.at(PortRef{port.node, port.lane, e.side}), e.oam, e.amp);
            });
        }
        frontier = std::move(next);
    }
    check_norm(norm0, out, config.amplitude_tolerance);
    return out;
}

ModeVector simulate_word(int64_t d, int64_t l, int64_t m_exp, const ModeVector &state,
                         const SimulationConfig &config) {
    if (l < 0 || m_exp < 0) {
        throw std::invalid_argument("word exponents must be non-negative");
    }
    const Netlist gate = d == 1 ? identity_netlist() : synth_arbitrary(d);
    Netlist word;
    word.dimension = d;
    word.input_path = gate.input_path;
    word.output_path = gate.output_path;
    for (int64_t i = 0; i < l; ++i) {
        word.elements.insert(word.elements.end(), gate.elements.begin(), gate.elements.end());
    }
    if (d >= 2) {
        for (int64_t i = 0; i < m_exp; ++i) {
            word.elements.push_back(ZPlate{gate.output_path, d});
        }
    }
    return apply_netlist(word, state, config);
}

}  // namespace oamx
