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


#include "oamx/synthesis.h"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "oamx/errors.h"

namespace oamx {

namespace {

int64_t pow2(int e) {
    return int64_t{1} << e;
}

int floor_log2(int64_t n) {
    return 63 - std::countl_zero(static_cast<uint64_t>(n));
}

class Emitter {
   public:
    void li(int64_t m, PathLabel x, PathLabel y) {
        out_.push_back(BeamSplitter{m, x, y});
    }
    void holog(PathLabel p, int64_t v) {
        out_.push_back(Hologram{p, v});
    }
    Netlist finish(int64_t d) && {
        return Netlist{std::move(out_), PathLabel::r(0), PathLabel::r(0), d};
    }

   private:
    std::vector<Element> out_;
};

PathLabel r(int i) {
    return PathLabel::r(static_cast<uint32_t>(i));
}
PathLabel s(int i) {
    return PathLabel::s(static_cast<uint32_t>(i));
}

void purple_descend(Emitter &e, int M) {
    for (int t = 0; t < M; ++t) {
        e.li(pow2(t), r(t), r(t + 1));
        e.holog(r(t + 1), -pow2(t));
    }
}

void purple_ascend(Emitter &e, int M) {
    for (int t = M - 1; t >= 0; --t) {
        e.holog(r(t + 1), pow2(t));
        e.li(pow2(t), r(t), r(t + 1));
    }
}

// Odd-part structure with every order and shift multiplied by 2^M and r indices offset by M.
// With M = 0 this is exactly the odd-dimension construction.
void odd_core(Emitter &e, const SynthesisParams &p) {
    const int M = p.M;
    const int N = p.N;
    const auto &b = p.bits;
    const auto &a = p.aux;
    auto order = [M](int t) { return pow2(t + M); };
    const PathLabel top = r(N - 1 + M);

    e.li(pow2(M), r(M), s(0));
    e.holog(s(0), pow2(M));

    for (int t = 1; t <= N - 2; ++t) {
        e.li(order(t), r(a[t] + M), r(t + M));
        e.holog(r(t + M), -b[t] * order(t));
    }
    e.li(order(N - 1), r(a[N - 1] + M), top);
    e.holog(top, -order(N - 1));
    for (int t = N - 2; t >= 1; --t) {
        e.holog(r(t + M), b[t] * order(t));
        e.li(order(t), r(a[t] + M), r(t + M));
    }

    for (int t = 1; t <= N - 2; ++t) {
        e.li(order(t), s(0), s(t));
    }
    e.li(order(N - 1), top, s(0));
    for (int t = N - 2; t >= 1; --t) {
        e.li(order(t), top, s(t));
    }

    e.holog(top, -pow2(M));
    e.li(pow2(M), r(M), top);
}

}  // namespace

SynthesisParams decompose(int64_t d) {
    if (d <= 1) {
        throw InvalidDimensionError(d);
    }
    SynthesisParams p;
    p.d = d;
    p.M = std::countr_zero(static_cast<uint64_t>(d));
    p.Q = d >> p.M;
    p.N = floor_log2(p.Q) + 1;
    for (int i = 0; i < p.N; ++i) {
        p.bits.push_back(static_cast<int>((p.Q >> i) & 1));
    }
    p.aux.assign(std::max(p.N, 2), 0);
    for (int t = 1; t <= p.N - 2; ++t) {
        p.aux[t + 1] = p.bits[t] == 0 ? p.aux[t] : t;
    }
    return p;
}

Netlist synth_power_of_two(int M) {
    if (M < 1 || M > 62) {
        throw std::invalid_argument("power-of-two exponent out of range: " + std::to_string(M));
    }
    Emitter e;
    purple_descend(e, M);
    e.holog(r(M), -pow2(M));
    purple_ascend(e, M);
    e.holog(r(0), 1);
    return std::move(e).finish(pow2(M));
}

Netlist synth_odd(int64_t d) {
    if (d < 3 || d % 2 == 0) {
        throw InvalidDimensionError(d);
    }
    Emitter e;
    odd_core(e, decompose(d));
    e.holog(r(0), 1);
    return std::move(e).finish(d);
}

Netlist synth_arbitrary(int64_t d) {
    const SynthesisParams p = decompose(d);
    Emitter e;
    purple_descend(e, p.M);
    if (p.N == 1) {
        e.holog(r(p.M), -pow2(p.M));
    } else {
        odd_core(e, p);
    }
    purple_ascend(e, p.M);
    e.holog(r(0), 1);
    return std::move(e).finish(d);
}

Netlist identity_netlist() {
    return Netlist{};
}

CountPrediction predict_count(int64_t d) {
    const SynthesisParams p = decompose(d);
    CountPrediction c;
    c.n_arb = 2 * (p.M + 2 * int64_t{floor_log2(p.Q)});
    if (d >= 3) {
        c.bound = 4.0 * std::log2(static_cast<double>(d - 1));
    }
    return c;
}

int64_t predict_simplified_count(int64_t d) {
    const SynthesisParams p = decompose(d);
    if (p.Q == 1) {
        return p.M;
    }
    return p.M + 2 * int64_t{floor_log2(p.Q)} + 2;
}

int64_t count_beamsplitters(const Netlist &netlist) {
    int64_t n = 0;
    for (const auto &e : netlist.elements) {
        n += std::holds_alternative<BeamSplitter>(e);
    }
    return n;
}

int64_t naive_count(int64_t d) {
    if (d < 2) {
        throw InvalidDimensionError(d);
    }
    return 2 * (d - 1);
}

Netlist shifted_gate(const Netlist &netlist, int64_t m) {
    Netlist out = netlist;
    out.elements.insert(out.elements.begin(), Hologram{netlist.input_path, -m});
    out.elements.push_back(Hologram{netlist.output_path, m});
    return out;
}

Netlist invert(const Netlist &netlist) {
    Netlist out;
    out.dimension = netlist.dimension;
    out.input_path = netlist.output_path;
    out.output_path = netlist.input_path;
    out.elements.reserve(netlist.elements.size());
    for (auto it = netlist.elements.rbegin(); it != netlist.elements.rend(); ++it) {
        Element e = *it;
        if (auto *h = std::get_if<Hologram>(&e)) {
            h->v = -h->v;
        } else if (const auto *z = std::get_if<ZPlate>(&e)) {
            // Z^-1 = Z^(d-1)
            for (int64_t i = 1; i < z->d; ++i) {
                out.elements.push_back(e);
            }
            continue;
        }
        out.elements.push_back(e);
    }
    return out;
}

PortGraph simplify(const Netlist &netlist) {
    std::vector<size_t> splitters;
    for (size_t i = 0; i < netlist.elements.size(); ++i) {
        const Element &e = netlist.elements[i];
        if (std::holds_alternative<ZPlate>(e)) {
            throw NotSimplifiableError("netlist contains Z plates");
        }
        if (std::holds_alternative<BeamSplitter>(e)) {
            splitters.push_back(i);
        }
    }
    if (splitters.empty()) {
        throw NotSimplifiableError("netlist has no beam-splitters");
    }

    // twin[k] = index (into splitters) of the earlier device a later splitter reuses.
    std::vector<std::optional<size_t>> twin(splitters.size());
    std::vector<bool> taken(splitters.size(), false);
    for (size_t k = 0; k < splitters.size(); ++k) {
        const auto &later = std::get<BeamSplitter>(netlist.elements[splitters[k]]);
        for (size_t j = k; j-- > 0;) {
            const auto &earlier = std::get<BeamSplitter>(netlist.elements[splitters[j]]);
            if (!taken[j] && !twin[j] && earlier.m == later.m && earlier.y == later.y) {
                twin[k] = j;
                taken[j] = true;
                break;
            }
        }
    }
    // Mirror pairs must nest like brackets.
    for (size_t k = 0; k < splitters.size(); ++k) {
        if (!twin[k]) {
            continue;
        }
        for (size_t l = *twin[k] + 1; l < k; ++l) {
            if (twin[l] && *twin[l] < *twin[k]) {
                throw NotSimplifiableError("mirror pairs cross; netlist is not mirror-symmetric");
            }
        }
    }

    Placement placement(netlist.elements.size());
    std::vector<uint32_t> node_of(netlist.elements.size());
    uint32_t next_node = 0;
    size_t k = 0;
    for (size_t i = 0; i < netlist.elements.size(); ++i) {
        if (k < splitters.size() && splitters[k] == i) {
            if (twin[k]) {
                uint32_t node = node_of[splitters[*twin[k]]];
                placement[i] = {node, 1};
                node_of[i] = node;
            } else {
                placement[i] = {next_node, 0};
                node_of[i] = next_node++;
            }
            ++k;
        } else {
            placement[i] = {next_node, 0};
            node_of[i] = next_node++;
        }
    }
    return build_portgraph(netlist, placement);
}

}  // namespace oamx
