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


#ifndef OAMX_ELEMENTS_H
#define OAMX_ELEMENTS_H

#include <array>

#include "oamx/core.h"

namespace oamx {

/// Port of a two-port element, x or y.
enum class Port : uint8_t { X = 0, Y = 1 };

inline Port other(Port p) {
    return p == Port::X ? Port::Y : Port::X;
}

enum class Parity : uint8_t { Even, Odd };

struct LiRouterDecision {
    bool stays = true;
    Parity multiple_parity = Parity::Even;
};

/// Parity of oam/m. Throws NonMultipleModeError when m does not divide oam.
LiRouterDecision li_route_decision(int64_t m, OamValue oam);

/// Ideal OAM beam-splitter: even multiples of m leave by the entry port, odd multiples by the
/// other one. Amplitude and OAM are untouched.
Port li_route_strict(int64_t m, Port input, OamValue oam);

/// Transfer matrix of the Mach-Zehnder OAM beam-splitter for one OAM value.
///
/// Basis order is (same-port, cross-port):
///
///     U = [[cos(phi/2), i sin(phi/2)],
///          [i sin(phi/2), cos(phi/2)]],   phi = pi * oam / m
///
/// phi is the relative arm phase 2 * alpha * oam for Dove prisms rotated by alpha = pi / (2m).
/// The overall phase is a convention; only the port magnitudes are physical here.
struct TwoPortUnitary {
    std::array<std::array<Amplitude, 2>, 2> u{};
    /// phi reduced into [0, 2 pi).
    double phase = 0;

    Amplitude same() const {
        return u[0][0];
    }
    Amplitude cross() const {
        return u[1][0];
    }
    /// Max entry-wise deviation of U U^dagger from the identity.
    double unitarity_error() const;
};

TwoPortUnitary li_unitary_physical(int64_t m, OamValue oam);

inline OamValue hologram_apply(int64_t v, OamValue oam) {
    return oam + v;
}

/// exp(2 pi i oam / d), periodic in oam with period d.
Amplitude z_phase(int64_t d, OamValue oam);

}  // namespace oamx

#endif
