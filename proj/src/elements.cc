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


#include "oamx/elements.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "oamx/errors.h"

namespace oamx {

namespace {

// Floor modulus; C++ % truncates toward zero.
int64_t floor_mod(int64_t a, int64_t n) {
    int64_t r = a % n;
    return r < 0 ? r + n : r;
}

// cos and sin of 2 pi * num / den, exact at quarter turns.
std::pair<double, double> turn(int64_t num, int64_t den) {
    int64_t r = floor_mod(num, den);
    if ((4 * r) % den == 0) {
        switch ((4 * r) / den) {
            case 0:
                return {1.0, 0.0};
            case 1:
                return {0.0, 1.0};
            case 2:
                return {-1.0, 0.0};
            default:
                return {0.0, -1.0};
        }
    }
    double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(den);
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace

LiRouterDecision li_route_decision(int64_t m, OamValue oam) {
    if (m < 1) {
        throw std::invalid_argument("beam-splitter order must be >= 1");
    }
    if (oam % m != 0) {
        throw NonMultipleModeError(oam, m);
    }
    bool even = (oam / m) % 2 == 0;
    return {even, even ? Parity::Even : Parity::Odd};
}

Port li_route_strict(int64_t m, Port input, OamValue oam) {
    return li_route_decision(m, oam).stays ? input : other(input);
}

double TwoPortUnitary::unitarity_error() const {
    double worst = 0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            Amplitude s = u[i][0] * std::conj(u[j][0]) + u[i][1] * std::conj(u[j][1]);
            worst = std::max(worst, std::abs(s - (i == j ? 1.0 : 0.0)));
        }
    }
    return worst;
}

TwoPortUnitary li_unitary_physical(int64_t m, OamValue oam) {
    if (m < 1) {
        throw std::invalid_argument("beam-splitter order must be >= 1");
    }
    // phi / 2 = pi * oam / (2m) = 2 pi * oam / (4m)
    auto [c, s] = turn(oam, 4 * m);
    TwoPortUnitary out;
    out.phase = std::numbers::pi * static_cast<double>(floor_mod(oam, 2 * m)) / static_cast<double>(m);
    out.u[0][0] = c;
    out.u[1][1] = c;
    out.u[0][1] = Amplitude(0, s);
    out.u[1][0] = Amplitude(0, s);
    return out;
}

Amplitude z_phase(int64_t d, OamValue oam) {
    if (d < 2) {
        throw std::invalid_argument("Z plate dimension must be >= 2");
    }
    auto [c, s] = turn(oam, d);
    return {c, s};
}

}  // namespace oamx
