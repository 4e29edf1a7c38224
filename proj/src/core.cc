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

#include <charconv>
#include <cmath>
#include <stdexcept>

#include "oamx/errors.h"

namespace oamx {

std::optional<PathLabel> PathLabel::parse(std::string_view text) {
    if (text.size() < 2) {
        return std::nullopt;
    }
    PathLabel label;
    if (text[0] == 'r') {
        label.family = PathFamily::R;
    } else if (text[0] == 's') {
        label.family = PathFamily::S;
    } else {
        return std::nullopt;
    }
    auto digits = text.substr(1);
    for (char c : digits) {
        if (c < '0' || c > '9') {
            return std::nullopt;
        }
    }
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), label.index);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
        return std::nullopt;
    }
    return label;
}

std::string PathLabel::str() const {
    return (family == PathFamily::R ? "r" : "s") + std::to_string(index);
}

void ModeVector::add(const ModeKey &key, Amplitude amplitude) {
    if (!std::isfinite(amplitude.real()) || !std::isfinite(amplitude.imag())) {
        throw std::invalid_argument("non-finite amplitude");
    }
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        if (std::abs(amplitude) >= prune_threshold_) {
            entries_.emplace(key, amplitude);
        }
        return;
    }
    it->second += amplitude;
    if (std::abs(it->second) < prune_threshold_) {
        entries_.erase(it);
    }
}

Amplitude ModeVector::at(const ModeKey &key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? Amplitude{} : it->second;
}

double ModeVector::norm_squared() const {
    double total = 0;
    for (const auto &[key, amp] : entries_) {
        total += std::norm(amp);
    }
    return total;
}

double ModeVector::norm() const {
    return std::sqrt(norm_squared());
}

ModeVector ModeVector::scaled(Amplitude factor) const {
    ModeVector out(prune_threshold_);
    for (const auto &[key, amp] : entries_) {
        out.add(key, amp * factor);
    }
    return out;
}

ModeVector normalize(const ModeVector &state) {
    double n = state.norm();
    if (state.empty() || n < state.prune_threshold()) {
        throw ZeroStateError();
    }
    return state.scaled(1.0 / n);
}

bool equal_up_to_global_phase(const ModeVector &a, const ModeVector &b, double tol) {
    const ModeKey *anchor = nullptr;
    double best = -1;
    for (const auto &[key, amp] : a) {
        double mag = std::abs(amp);
        if (mag > best && std::abs(b.at(key)) > 0) {
            best = mag;
            anchor = &key;
        }
    }
    Amplitude phase = 1.0;
    if (anchor != nullptr) {
        Amplitude ratio = a.at(*anchor) / b.at(*anchor);
        phase = ratio / std::abs(ratio);
    }
    double dist2 = 0;
    for (const auto &[key, amp] : a) {
        dist2 += std::norm(amp - phase * b.at(key));
    }
    for (const auto &[key, amp] : b) {
        if (a.entries().count(key) == 0) {
            dist2 += std::norm(phase * amp);
        }
    }
    return std::sqrt(dist2) <= tol;
}

void validate(const Element &element) {
    if (const auto *bs = std::get_if<BeamSplitter>(&element)) {
        if (bs->m < 1) {
            throw std::invalid_argument("beam-splitter order must be >= 1");
        }
        if (bs->x == bs->y) {
            throw std::invalid_argument("beam-splitter ports must differ: " + bs->x.str());
        }
    } else if (const auto *z = std::get_if<ZPlate>(&element)) {
        if (z->d < 2) {
            throw std::invalid_argument("Z plate dimension must be >= 2");
        }
    }
}

std::vector<PathLabel> element_paths(const Element &element) {
    return std::visit(
        [](const auto &e) -> std::vector<PathLabel> {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, BeamSplitter>) {
                return {e.x, e.y};
            } else {
                return {e.path};
            }
        },
        element);
}

std::string element_label(const Element &element) {
    return std::visit(
        [](const auto &e) -> std::string {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, BeamSplitter>) {
                return "LI_" + std::to_string(e.m);
            } else if constexpr (std::is_same_v<T, Hologram>) {
                return std::string("Holog") + (e.v < 0 ? "-" : "+") + std::to_string(e.v < 0 ? -e.v : e.v);
            } else {
                return "Z_" + std::to_string(e.d);
            }
        },
        element);
}

void validate(const Netlist &netlist) {
    if (netlist.dimension < 1) {
        throw std::invalid_argument("netlist dimension must be positive");
    }
    bool saw_input = false;
    bool saw_output = false;
    for (const auto &e : netlist.elements) {
        validate(e);
        for (const auto &p : element_paths(e)) {
            saw_input |= p == netlist.input_path;
            saw_output |= p == netlist.output_path;
        }
    }
    if (!netlist.elements.empty() && (!saw_input || !saw_output)) {
        throw std::invalid_argument("input/output path not referenced by any element");
    }
}

PermutationResult extract_permutation(const StateTransform &transform, const std::vector<OamValue> &domain,
                                      PathLabel input_path, PathLabel output_path, double tol) {
    PermutationResult result;
    for (OamValue oam : domain) {
        ModeVector out;
        try {
            out = transform(ModeVector::basis(input_path, oam));
        } catch (const Error &) {
            result.non_permutation.push_back(oam);
            continue;
        }
        // Single surviving mode on the output path with unit magnitude.
        const ModeKey *hit = nullptr;
        double residual = 0;
        for (const auto &[key, amp] : out) {
            if (hit == nullptr && key.path == output_path && std::abs(std::abs(amp) - 1.0) <= tol) {
                hit = &key;
            } else {
                residual += std::norm(amp);
            }
        }
        if (hit == nullptr || std::sqrt(residual) > tol) {
            result.non_permutation.push_back(oam);
            continue;
        }
        result.mapping.emplace(oam, hit->oam);
    }
    return result;
}

}  // namespace oamx
