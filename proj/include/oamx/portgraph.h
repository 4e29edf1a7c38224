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


#ifndef OAMX_PORTGRAPH_H
#define OAMX_PORTGRAPH_H

#include <set>
#include <utility>
#include <variant>

#include "oamx/core.h"
#include "oamx/elements.h"

namespace oamx {

/// One port of a physical element.
///
/// A physical element can be traversed by several independent beams ("lanes"); each lane has its
/// own x/y input and output ports and is acted on by the same device. Holograms and Z plates
/// only use side X.
struct PortRef {
    uint32_t node = 0;
    uint32_t lane = 0;
    Port side = Port::X;

    auto operator<=>(const PortRef &) const = default;
    bool operator==(const PortRef &) const = default;
};

/// Open end of the setup where light leaves on a named path.
struct Terminal {
    PathLabel path;

    auto operator<=>(const Terminal &) const = default;
    bool operator==(const Terminal &) const = default;
};

using WireTarget = std::variant<PortRef, Terminal>;

/// Physical elements with explicit output -> input wiring.
struct PortGraph {
    std::vector<Element> nodes;
    std::vector<uint32_t> lanes;
    /// Output port -> next input port (or terminal). Keys are output ports.
    std::map<PortRef, WireTarget> wiring;
    /// Where light injected on each path first arrives.
    std::map<PathLabel, WireTarget> entries;
    /// Path carried by each port (input and output of a lane side share the label).
    std::map<PortRef, PathLabel> port_paths;
    PathLabel input_path = PathLabel::r(0);
    PathLabel output_path = PathLabel::r(0);
    int64_t dimension = 1;

    size_t beamsplitter_count() const;
    std::set<PathLabel> exits() const;

    /// Wires whose destination node was created before their source node (feedback wiring).
    std::vector<std::pair<PortRef, PortRef>> back_edges() const;

    /// Input ports of a node lane.
    std::vector<Port> sides(uint32_t node) const;

    /// Checks fan-out 1 on every output port, fan-in <= 1 on every input port, and that every
    /// node is reachable from an entry. Throws std::invalid_argument on violation.
    void validate() const;
};

/// Where each netlist element lives physically: (node, lane).
using Placement = std::vector<std::pair<uint32_t, uint32_t>>;

/// Wires a netlist onto physical nodes. Consecutive references to a path label are connected
/// output -> input in element order; the last reference of each path goes to a terminal.
/// `placement` must be the same length as the element list; nodes are numbered by first use.
PortGraph build_portgraph(const Netlist &netlist, const Placement &placement);

/// One node and one lane per element: a pure feed-forward graph.
PortGraph netlist_to_portgraph(const Netlist &netlist);

}  // namespace oamx

#endif
