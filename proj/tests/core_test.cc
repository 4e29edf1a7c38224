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


#include "oamx/core.h"

#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "oamx/errors.h"
#include "oamx/simulation.h"
#include "oamx/synthesis.h"
#include "test_util.h"

using namespace oamx;
using oamx::testing::cyclic_oracle;
using oamx::testing::range;

namespace {

const PathLabel r0 = PathLabel::r(0);

StateTransform run(const Netlist &n) {
    return [n](const ModeVector &s) { return apply_netlist(n, s); };
}

}  // namespace

TEST(path_label, parse_and_print) {
    EXPECT_EQ(PathLabel::parse("r0"), PathLabel::r(0));
    EXPECT_EQ(PathLabel::parse("s12"), PathLabel::s(12));
    EXPECT_EQ(PathLabel::s(3).str(), "s3");
    EXPECT_FALSE(PathLabel::parse("q7"));
    EXPECT_FALSE(PathLabel::parse("r"));
    EXPECT_FALSE(PathLabel::parse("r-1"));
    EXPECT_FALSE(PathLabel::parse("r1x"));
    EXPECT_FALSE(PathLabel::parse("R1"));
}

TEST(mode_vector, prunes_below_threshold) {
    ModeVector v;
    v.add(r0, 0, 1e-16);
    EXPECT_TRUE(v.empty());
    v.add(r0, 1, 0.5);
    v.add(r0, 1, -0.5);
    EXPECT_TRUE(v.empty());
    EXPECT_THROW(v.add(r0, 2, std::nan("")), std::invalid_argument);
}

TEST(normalize, single_entry_rescale) {
    ModeVector v;
    v.add(r0, 0, 2.0);
    ModeVector n = normalize(v);
    ASSERT_EQ(n.size(), 1u);
    EXPECT_DOUBLE_EQ(n.at(r0, 0).real(), 1.0);
    EXPECT_DOUBLE_EQ(n.at(r0, 0).imag(), 0.0);
}

TEST(normalize, symmetric_pair) {
    ModeVector v;
    v.add(r0, 0, 1.0);
    v.add(r0, 1, 1.0);
    ModeVector n = normalize(v);
    EXPECT_NEAR(n.at(r0, 0).real(), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(n.at(r0, 1).real(), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(n.norm(), 1.0, 1e-12);
}

TEST(normalize, zero_state) {
    EXPECT_THROW(normalize(ModeVector{}), ZeroStateError);
}

TEST(global_phase, examples) {
    ModeVector a;
    a.add(r0, 0, 0.6);
    a.add(r0, 3, Amplitude(0, 0.8));
    EXPECT_TRUE(equal_up_to_global_phase(a, a, 1e-12));
    EXPECT_TRUE(equal_up_to_global_phase(a, a.scaled(std::polar(1.0, std::numbers::pi / 3)), 1e-12));
    EXPECT_FALSE(equal_up_to_global_phase(ModeVector::basis(r0, 0), ModeVector::basis(r0, 1), 1e-9));

    // A relative phase between components is not global.
    ModeVector b;
    b.add(r0, 0, 0.6);
    b.add(r0, 3, Amplitude(0, -0.8));
    EXPECT_FALSE(equal_up_to_global_phase(a, b, 1e-9));
}

TEST(global_phase, equivalence_relation) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
    for (int trial = 0; trial < 200; ++trial) {
        ModeVector a = oamx::testing::random_state(rng, r0, {0, 1, 2, 5});
        ModeVector b = a.scaled(std::polar(1.0, angle(rng)));
        ModeVector c = b.scaled(std::polar(1.0, angle(rng)));
        ModeVector other = oamx::testing::random_state(rng, r0, {0, 1, 2, 5});
        EXPECT_TRUE(equal_up_to_global_phase(a, a, 1e-12));
        EXPECT_TRUE(equal_up_to_global_phase(a, b, 1e-12));
        EXPECT_TRUE(equal_up_to_global_phase(b, a, 1e-12));
        EXPECT_TRUE(equal_up_to_global_phase(a, c, 2e-12));
        EXPECT_EQ(equal_up_to_global_phase(a, other, 1e-9), equal_up_to_global_phase(other, a, 1e-9));
    }
}

TEST(element, invariants) {
    EXPECT_THROW(validate(Element{BeamSplitter{1, r0, r0}}), std::invalid_argument);
    EXPECT_THROW(validate(Element{BeamSplitter{0, r0, PathLabel::r(1)}}), std::invalid_argument);
    EXPECT_THROW(validate(Element{ZPlate{r0, 1}}), std::invalid_argument);
    EXPECT_NO_THROW(validate(Element{Hologram{r0, -5}}));
    EXPECT_EQ(element_label(Hologram{r0, -16}), "Holog-16");
    EXPECT_EQ(element_label(Hologram{r0, 0}), "Holog+0");
    EXPECT_EQ(element_label(BeamSplitter{8, r0, PathLabel::s(0)}), "LI_8");
}

TEST(netlist, paths_must_be_referenced) {
    Netlist n;
    n.elements.push_back(Hologram{PathLabel::r(1), 1});
    n.dimension = 2;
    EXPECT_THROW(validate(n), std::invalid_argument);
    EXPECT_NO_THROW(validate(identity_netlist()));
    EXPECT_NO_THROW(validate(synth_arbitrary(88)));
}

TEST(extract_permutation, three_cycle) {
    auto perm = extract_permutation(run(synth_arbitrary(3)), range(0, 3), r0, r0);
    EXPECT_TRUE(perm.is_total());
    EXPECT_EQ(perm.mapping, (std::map<OamValue, OamValue>{{0, 1}, {1, 2}, {2, 0}}));
}

TEST(extract_permutation, identity_circuit) {
    auto perm = extract_permutation(run(identity_netlist()), {0}, r0, r0);
    EXPECT_EQ(perm.mapping, (std::map<OamValue, OamValue>{{0, 0}}));
}

TEST(extract_permutation, ten_cycle) {
    auto perm = extract_permutation(run(synth_arbitrary(10)), range(0, 10), r0, r0);
    EXPECT_TRUE(perm.is_total());
    EXPECT_EQ(perm.mapping, cyclic_oracle(10));
}

TEST(extract_permutation, reports_failures_as_partial) {
    // A lone parity sorter sends odd modes off the output path; a strict LI_2 rejects them.
    Netlist split;
    split.dimension = 2;
    split.elements.push_back(BeamSplitter{1, r0, PathLabel::r(1)});
    auto perm = extract_permutation(run(split), range(0, 4), r0, r0);
    EXPECT_EQ(perm.mapping, (std::map<OamValue, OamValue>{{0, 0}, {2, 2}}));
    EXPECT_EQ(perm.non_permutation, (std::vector<OamValue>{1, 3}));

    Netlist strict;
    strict.dimension = 2;
    strict.elements.push_back(BeamSplitter{2, r0, PathLabel::r(1)});
    perm = extract_permutation(run(strict), {0, 1}, r0, r0);
    EXPECT_EQ(perm.non_permutation, (std::vector<OamValue>{1}));
}
