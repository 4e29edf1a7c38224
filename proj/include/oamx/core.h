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


#ifndef OAMX_CORE_H
#define OAMX_CORE_H

#include <compare>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace oamx {

/// Quanta of orbital angular momentum carried by a photon. Negative values are legal;
/// the construction routes the highest mode through the ancilla mode -1.
using OamValue = int64_t;

using Amplitude = std::complex<double>;

enum class PathFamily : uint8_t { R, S };

/// Name of a beam path, e.g. r0 or s3.
struct PathLabel {
    PathFamily family = PathFamily::R;
    uint32_t index = 0;

    static PathLabel r(uint32_t index) {
        return {PathFamily::R, index};
    }
    static PathLabel s(uint32_t index) {
        return {PathFamily::S, index};
    }

    /// Parses names matching [rs][0-9]+. Returns nullopt otherwise.
    static std::optional<PathLabel> parse(std::string_view text);
    std::string str() const;

    auto operator<=>(const PathLabel &) const = default;
    bool operator==(const PathLabel &) const = default;
};

struct ModeKey {
    PathLabel path;
    OamValue oam = 0;

    auto operator<=>(const ModeKey &) const = default;
    bool operator==(const ModeKey &) const = default;
};

constexpr double kDefaultPruneThreshold = 1e-15;

/// Sparse single-photon state: amplitude per (path, OAM) mode.
///
/// Entries with magnitude below the prune threshold are never stored, so two states
/// that differ only by numerical dust compare equal entry-wise.
class ModeVector {
   public:
    using Map = std::map<ModeKey, Amplitude>;

    explicit ModeVector(double prune_threshold = kDefaultPruneThreshold) : prune_threshold_(prune_threshold) {
    }

    static ModeVector basis(PathLabel path, OamValue oam) {
        ModeVector v;
        v.add(path, oam, 1.0);
        return v;
    }

    /// Adds `amplitude` coherently to the existing entry.
    void add(const ModeKey &key, Amplitude amplitude);
    void add(PathLabel path, OamValue oam, Amplitude amplitude) {
        add(ModeKey{path, oam}, amplitude);
    }

    Amplitude at(const ModeKey &key) const;
    Amplitude at(PathLabel path, OamValue oam) const {
        return at(ModeKey{path, oam});
    }

    double norm_squared() const;
    double norm() const;
    bool empty() const {
        return entries_.empty();
    }
    size_t size() const {
        return entries_.size();
    }
    const Map &entries() const {
        return entries_;
    }
    double prune_threshold() const {
        return prune_threshold_;
    }

    ModeVector scaled(Amplitude factor) const;

    auto begin() const {
        return entries_.begin();
    }
    auto end() const {
        return entries_.end();
    }

    bool operator==(const ModeVector &other) const {
        return entries_ == other.entries_;
    }

   private:
    Map entries_;
    double prune_threshold_;
};

/// Rescales to unit 2-norm. Throws ZeroStateError when nothing survives pruning.
ModeVector normalize(const ModeVector &state);

/// True iff some unit complex g satisfies ||a - g*b|| <= tol. The phase g is taken from the
/// largest-magnitude entry of `a` that `b` also has.
bool equal_up_to_global_phase(const ModeVector &a, const ModeVector &b, double tol);

/// OAM beam-splitter LI_m(x, y): Mach-Zehnder with Dove prisms, sorts by parity of oam/m.
struct BeamSplitter {
    int64_t m = 1;
    PathLabel x;
    PathLabel y;
    bool operator==(const BeamSplitter &) const = default;
};

/// Holog(p, v): adds v quanta of OAM on path p.
struct Hologram {
    PathLabel path;
    int64_t v = 0;
    bool operator==(const Hologram &) const = default;
};

/// Dove-prism clock element: multiplies mode oam on its path by exp(2 pi i oam / d).
struct ZPlate {
    PathLabel path;
    int64_t d = 2;
    bool operator==(const ZPlate &) const = default;
};

using Element = std::variant<BeamSplitter, Hologram, ZPlate>;

/// Throws std::invalid_argument if the element violates its invariants.
void validate(const Element &element);

/// Ports referenced by an element, in port order (x then y for beam-splitters).
std::vector<PathLabel> element_paths(const Element &element);

std::string element_label(const Element &element);

struct Netlist {
    std::vector<Element> elements;
    PathLabel input_path = PathLabel::r(0);
    PathLabel output_path = PathLabel::r(0);
    int64_t dimension = 1;

    bool operator==(const Netlist &) const = default;
};

/// Checks element invariants and that input/output paths are referenced (unless empty).
void validate(const Netlist &netlist);

using StateTransform = std::function<ModeVector(const ModeVector &)>;

struct PermutationResult {
    std::map<OamValue, OamValue> mapping;
    /// Inputs whose output was not a single unit-magnitude mode on the output path, or which
    /// raised during simulation.
    std::vector<OamValue> non_permutation;

    bool is_total() const {
        return non_permutation.empty();
    }
};

/// Feeds each basis input (input_path, oam) through `transform` and records the image.
PermutationResult extract_permutation(const StateTransform &transform, const std::vector<OamValue> &domain,
                                      PathLabel input_path, PathLabel output_path, double tol = 1e-9);

}  // namespace oamx

#endif
