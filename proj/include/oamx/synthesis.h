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


#ifndef OAMX_SYNTHESIS_H
#define OAMX_SYNTHESIS_H

#include <optional>

#include "oamx/core.h"
#include "oamx/portgraph.h"

namespace oamx {

/// Quantities driving the ladder construction for d = 2^M * Q, Q odd.
struct SynthesisParams {
    int64_t d = 0;
    int M = 0;
    int64_t Q = 1;
    /// Bit length of Q.
    int N = 1;
    /// Binary digits of Q, least significant first.
    std::vector<int> bits;
    /// Auxiliary indices a_1 .. a_{N-1}; aux[t] holds a_t, aux[0] is unused.
    std::vector<int> aux;
};

SynthesisParams decompose(int64_t d);

/// Ladder construction for d = 2^M.
Netlist synth_power_of_two(int M);

/// Ladder construction for odd d >= 3.
Netlist synth_odd(int64_t d);

/// General construction: power-of-two ladder wrapped around the odd-part structure.
Netlist synth_arbitrary(int64_t d);

/// The d = 1 gate: no elements at all.
Netlist identity_netlist();

struct CountPrediction {
    int64_t n_arb = 0;
    /// 4 log2(d - 1); absent at d = 2 where the bound is not defined.
    std::optional<double> bound;
};

/// Beam-splitter count 2 (M + 2 floor(log2 Q)) and its logarithmic upper bound.
CountPrediction predict_count(int64_t d);

/// Physical beam-splitters after element reuse: M + 2 floor(log2 Q) + 2 when Q > 1, and M for
/// pure powers of two (the whole recombination ladder is reused, nothing else is left).
int64_t predict_simplified_count(int64_t d);

int64_t count_beamsplitters(const Netlist &netlist);

/// One split and one merge interferometer per mode boundary: 2 (d - 1).
int64_t naive_count(int64_t d);

/// Acts on modes m .. d-1+m instead of 0 .. d-1.
Netlist shifted_gate(const Netlist &netlist, int64_t m);

/// X^-1 by time reversal: reversed element order with negated hologram values.
Netlist invert(const Netlist &netlist);

/// Reuses the separation ladders for recombination. Every recombination beam-splitter is paired
/// with the separation beam-splitter of the same order that feeds the same second port; the pair
/// becomes one physical device traversed on two lanes. Throws NotSimplifiableError when the
/// netlist has no beam-splitters, contains Z plates, or its pairs do not nest.
PortGraph simplify(const Netlist &netlist);

}  // namespace oamx

#endif
