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


#include "oamx/portgraph.h"

#include <deque>
#include <stdexcept>

namespace oamx {

namespace {

bool same_device(const Element &a, const Element &b) {
    if (a.index() != b.index()) {
        return false;
    }
    if (const auto *bs = std::get_if<BeamSplitter>(&a)) {
        return bs->m == std::get<BeamSplitter>(b).m;
    }
    if (const auto *h = std::get_if<Hologram>(&a)) {
        return h->v == std::get<Hologram>(b).v;
    }
    return std::get<ZPlate>(a).d == std::get<ZPlate>(b).d;
}

}  // namespace

size_t PortGraph::beamsplitter_count() const {
    size_t n = 0;
    for (const auto &e : nodes) {
        n += std::holds_alternative<BeamSplitter>(e);
    }
    return n;
}

std::set<PathLabel> PortGraph::exits() const {
    std::set<PathLabel> out;
    for (const auto &[from, to] : wiring) {
        if (const auto *t = std::get_if<Terminal>(&to)) {
            out.insert(t->path);
        }
    }
    for (const auto &[path, to] : entries) {
        if (const auto *t = std::get_if<Terminal>(&to)) {
            out.insert(t->path);
        }
    }
    return out;
}

std::vector<std::pair<PortRef, PortRef>> PortGraph::back_edges() const {
    std::vector<std::pair<PortRef, PortRef>> out;
    for (const auto &[from, to] : wiring) {
        if (const auto *p = std::get_if<PortRef>(&to); p != nullptr && p->node <= from.node) {
            out.emplace_back(from, *p);
        }
    }
    return out;
}

std::vector<Port> PortGraph::sides(uint32_t node) const {
    if (std::holds_alternative<BeamSplitter>(nodes.at(node))) {
        return {Port::X, Port::Y};
    }
    return {Port::X};
}

void PortGraph::validate() const {
    if (lanes.size() != nodes.size()) {
        throw std::invalid_argument("lane table does not match node list");
    }
    std::map<PortRef, int> fan_in;
    auto feed = [&](const WireTarget &target) {
        if (const auto *p = std::get_if<PortRef>(&target)) {
            if (p->node >= nodes.size() || p->lane >= lanes[p->node]) {
                throw std::invalid_argument("wire into a nonexistent port");
            }
            if (++fan_in[*p] > 1) {
                throw std::invalid_argument("input port of node " + std::to_string(p->node) +
                                            " is fed more than once");
            }
        }
    };
    for (const auto &[path, to] : entries) {
        feed(to);
    }
    for (const auto &[from, to] : wiring) {
        feed(to);
    }
    for (uint32_t n = 0; n < nodes.size(); ++n) {
        for (uint32_t lane = 0; lane < lanes[n]; ++lane) {
            for (Port side : sides(n)) {
                if (wiring.count(PortRef{n, lane, side}) == 0) {
                    throw std::invalid_argument("output port of node " + std::to_string(n) + " is not wired");
                }
            }
        }
    }

    std::set<std::pair<uint32_t, uint32_t>> seen;
    std::deque<std::pair<uint32_t, uint32_t>> queue;
    auto visit = [&](const WireTarget &target) {
        if (const auto *p = std::get_if<PortRef>(&target)) {
            if (seen.emplace(p->node, p->lane).second) {
                queue.emplace_back(p->node, p->lane);
            }
        }
    };
    for (const auto &[path, to] : entries) {
        visit(to);
    }
    while (!queue.empty()) {
        auto [n, lane] = queue.front();
        queue.pop_front();
        for (Port side : sides(n)) {
            visit(wiring.at(PortRef{n, lane, side}));
        }
    }
    for (uint32_t n = 0; n < nodes.size(); ++n) {
        for (uint32_t lane = 0; lane < lanes[n]; ++lane) {
            if (seen.count({n, lane}) == 0) {
                throw std::invalid_argument("node " + std::to_string(n) + " is unreachable");
            }
        }
    }
}

PortGraph build_portgraph(const Netlist &netlist, const Placement &placement) {
    if (placement.size() != netlist.elements.size()) {
        throw std::invalid_argument("placement size does not match netlist");
    }
    PortGraph g;
    g.input_path = netlist.input_path;
    g.output_path = netlist.output_path;
    g.dimension = netlist.dimension;

    std::map<PathLabel, PortRef> open;
    for (size_t i = 0; i < netlist.elements.size(); ++i) {
        const Element &e = netlist.elements[i];
        auto [node, lane] = placement[i];
        if (node == g.nodes.size()) {
            g.nodes.push_back(e);
            g.lanes.push_back(0);
        } else if (node > g.nodes.size()) {
            throw std::invalid_argument("placement must number nodes by first use");
        } else if (!same_device(g.nodes[node], e)) {
            throw std::invalid_argument("element " + std::to_string(i) + " placed on an incompatible device");
        }
        if (lane != g.lanes[node]) {
            throw std::invalid_argument("placement must number lanes by first use");
        }
        ++g.lanes[node];

        auto paths = element_paths(e);
        for (size_t k = 0; k < paths.size(); ++k) {
            PortRef port{node, lane, static_cast<Port>(k)};
            g.port_paths[port] = paths[k];
            if (auto it = open.find(paths[k]); it != open.end()) {
                g.wiring[it->second] = port;
                it->second = port;
            } else {
                g.entries[paths[k]] = port;
                open.emplace(paths[k], port);
            }
        }
    }
    for (const auto &[path, port] : open) {
        g.wiring[port] = Terminal{path};
    }
    return g;
}

PortGraph netlist_to_portgraph(const Netlist &netlist) {
    Placement placement;
    placement.reserve(netlist.elements.size());
    for (uint32_t i = 0; i < netlist.elements.size(); ++i) {
        placement.emplace_back(i, 0);
    }
    return build_portgraph(netlist, placement);
}

}  // namespace oamx
