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

#include <numbers>

#include "gtest/gtest.h"
#include "oamx/errors.h"
#include "oamx/synthesis.h"
#include "test_util.h"

using namespace oamx;
using oamx::testing::mod;
using oamx::testing::random_state;
using oamx::testing::range;

namespace {

const PathLabel r0 = PathLabel::r(0);

double distance(const ModeVector &a, const ModeVector &b) {
    ModeVector diff = a;
    for (const auto &[key, amp] : b) {
        diff.add(key, -amp);
    }
    return diff.norm();
}

// Clock-and-shift reference: X^l |k> = |k + l>, then Z^m multiplies by w^(m (k + l)).
ModeVector word_oracle(int64_t d, int64_t l, int64_t m, const ModeVector &in) {
    ModeVector out;
    for (const auto &[key, amp] : in) {
        const int64_t k = mod(key.oam + l, d);
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(mod(m * k, d)) / static_cast<double>(d);
        out.add(r0, k, amp * std::polar(1.0, angle));
    }
    return out;
}

}  // namespace

TEST(apply_netlist, examples) {
    Netlist two = synth_arbitrary(2);
    EXPECT_EQ(apply_netlist(two, ModeVector::basis(r0, 0)), ModeVector::basis(r0, 1));
    EXPECT_EQ(apply_netlist(two, ModeVector::basis(r0, 1)), ModeVector::basis(r0, 0));
    EXPECT_EQ(apply_netlist(identity_netlist(), ModeVector::basis(r0, 7)), ModeVector::basis(r0, 7));

    // A mode on a path the netlist never touches is carried through.
    ModeVector stray = ModeVector::basis(PathLabel::s(40), 3);
    EXPECT_EQ(apply_netlist(two, stray), stray);
}

TEST(apply_netlist, strict_mode_rejects_non_multiples) {
    Netlist n;
    n.dimension = 2;
    n.elements.push_back(BeamSplitter{2, r0, PathLabel::r(1)});
    EXPECT_THROW(apply_netlist(n, ModeVector::basis(r0, 3)), NonMultipleModeError);
}

TEST(apply_netlist, linear) {
    std::mt19937_64 rng(7);
    for (int64_t d : {3, 8, 10, 11, 88}) {
        Netlist n = synth_arbitrary(d);
        ModeVector a = random_state(rng, r0, range(0, d));
        ModeVector b = random_state(rng, r0, range(0, d));
        const Amplitude alpha(0.3, -0.4);
        const Amplitude beta(0.5, 0.2);
        ModeVector mix = a.scaled(alpha);
        for (const auto &[key, amp] : b.scaled(beta)) {
            mix.add(key, amp);
        }
        ModeVector lhs = apply_netlist(n, mix);
        ModeVector rhs = apply_netlist(n, a).scaled(alpha);
        for (const auto &[key, amp] : apply_netlist(n, b).scaled(beta)) {
            rhs.add(key, amp);
        }
        EXPECT_LT(distance(lhs, rhs), 1e-12) << d;
    }
}

TEST(apply_netlist, order_d) {
    std::mt19937_64 rng(11);
    for (int64_t d = 2; d <= 32; ++d) {
        Netlist n = synth_arbitrary(d);
        ModeVector in = random_state(rng, r0, range(0, d));
        ModeVector state = in;
        for (int64_t i = 0; i < d; ++i) {
            state = apply_netlist(n, state);
        }
        EXPECT_LT(distance(state, in), 1e-10) << d;
    }
}

TEST(apply_netlist, physical_mode_routes_with_quarter_turn_phases) {
    // The physical beam-splitter moves every basis state to the same place as the ideal router,
    // but each one picks up its own phase in {1, i, -1, -i}. Superpositions therefore differ from
    // the strict result by relative phases.
    SimulationConfig physical{SimulationMode::Physical};
    for (int64_t d : {2, 3, 10, 11, 88}) {
        Netlist n = synth_arbitrary(d);
        for (int64_t k = 0; k < d; ++k) {
            ModeVector out = apply_netlist(n, ModeVector::basis(r0, k), physical);
            ASSERT_EQ(out.size(), 1u) << d << " " << k;
            Amplitude a = out.at(r0, mod(k + 1, d));
            EXPECT_NEAR(std::abs(a), 1.0, 1e-12);
            const double quarter = std::arg(a) / (std::numbers::pi / 2);
            EXPECT_NEAR(quarter, std::round(quarter), 1e-9);
        }
    }
}

TEST(apply_portgraph, simplified_eleven) {
    PortGraph g = simplify(synth_arbitrary(11));
    EXPECT_EQ(apply_portgraph(g, ModeVector::basis(r0, 3)), ModeVector::basis(r0, 4));
    EXPECT_EQ(apply_portgraph(g, ModeVector::basis(r0, 10)), ModeVector::basis(r0, 0));
}

TEST(apply_portgraph, matches_netlist_on_feed_forward_graphs) {
    std::mt19937_64 rng(3);
    for (int64_t d = 2; d <= 40; ++d) {
        Netlist n = synth_arbitrary(d);
        PortGraph g = netlist_to_portgraph(n);
        EXPECT_TRUE(g.back_edges().empty());
        ModeVector in = random_state(rng, r0, range(0, d));
        EXPECT_LT(distance(apply_portgraph(g, in), apply_netlist(n, in)), 1e-12) << d;
        EXPECT_LT(distance(apply_portgraph(simplify(n), in), apply_netlist(n, in)), 1e-12) << d;
    }
}

TEST(apply_portgraph, netlist_to_portgraph_examples) {
    PortGraph g = netlist_to_portgraph(synth_arbitrary(2));
    EXPECT_EQ(g.nodes.size(), 6u);
    EXPECT_EQ(g.beamsplitter_count(), 2u);
    EXPECT_EQ(g.exits(), (std::set<PathLabel>{r0, PathLabel::r(1)}));
    EXPECT_NO_THROW(g.validate());

    PortGraph empty = netlist_to_portgraph(identity_netlist());
    EXPECT_TRUE(empty.nodes.empty());
    EXPECT_EQ(apply_portgraph(empty, ModeVector::basis(r0, 5)), ModeVector::basis(r0, 5));
}

TEST(apply_portgraph, loop_exhausts_hop_budget) {
    PortGraph g;
    g.nodes.push_back(Hologram{r0, 1});
    g.lanes.push_back(1);
    const PortRef port{0, 0, Port::X};
    g.entries[r0] = port;
    g.wiring[port] = port;
    EXPECT_THROW(apply_portgraph(g, ModeVector::basis(r0, 0)), HopBudgetExceededError);

    SimulationConfig tight;
    tight.hop_budget = 3;
    EXPECT_THROW(apply_portgraph(simplify(synth_arbitrary(11)), ModeVector::basis(r0, 0), tight),
                 HopBudgetExceededError);
}

TEST(simulate_word, examples) {
    // X then Z on |1> in d = 4 lands on |2> with phase w^2 = -1 relative to the clock convention
    // Z|k> = w^k |k>.
    ModeVector out = simulate_word(4, 1, 1, ModeVector::basis(r0, 1));
    EXPECT_NEAR(std::abs(out.at(r0, 2) - Amplitude(-1.0)), 0.0, 1e-12);

    // With two plates the phase is w^4 = 1: the direct product of shift and clock matrices
    // leaves |2> with a positive sign.
    EXPECT_EQ(simulate_word(4, 1, 2, ModeVector::basis(r0, 1)), ModeVector::basis(r0, 2));

    EXPECT_EQ(simulate_word(3, 0, 0, ModeVector::basis(r0, 1)), ModeVector::basis(r0, 1));
    for (int64_t k = 0; k < 3; ++k) {
        EXPECT_EQ(simulate_word(3, 3, 0, ModeVector::basis(r0, k)), ModeVector::basis(r0, k));
    }

    // Two shifts, no phase plate.
    EXPECT_EQ(simulate_word(3, 2, 0, ModeVector::basis(r0, 2)), ModeVector::basis(r0, 1));

    EXPECT_EQ(simulate_word(1, 5, 5, ModeVector::basis(r0, 0)), ModeVector::basis(r0, 0));
    EXPECT_THROW(simulate_word(3, -1, 0, ModeVector::basis(r0, 0)), std::invalid_argument);
}

TEST(simulate_word, clock_and_shift_oracle) {
    std::mt19937_64 rng(5);
    for (int64_t d : {2, 3, 4, 8}) {
        for (int64_t l = 0; l <= d; ++l) {
            for (int64_t m = 0; m <= d; ++m) {
                ModeVector in = random_state(rng, r0, range(0, d));
                EXPECT_LT(distance(simulate_word(d, l, m, in), word_oracle(d, l, m, in)), 1e-10)
                    << d << " " << l << " " << m;
            }
        }
    }
}

TEST(simulate_word, weyl_commutation) {
    // Z X = w X Z.
    for (int64_t d : {3, 5, 8}) {
        const Amplitude w = std::polar(1.0, 2.0 * std::numbers::pi / static_cast<double>(d));
        for (int64_t k = 0; k < d; ++k) {
            ModeVector zx = simulate_word(d, 1, 1, ModeVector::basis(r0, k));
            ModeVector z = simulate_word(d, 0, 1, ModeVector::basis(r0, k));
            ModeVector xz = apply_netlist(synth_arbitrary(d), z).scaled(w);
            EXPECT_LT(distance(zx, xz), 1e-12);
        }
    }
}
