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


#include "oamx/io.h"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "oamx/errors.h"

namespace oamx {

namespace {

using nlohmann::json;

std::pair<size_t, size_t> line_column(std::string_view text, size_t offset) {
    size_t line = 1;
    size_t column = 1;
    for (size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

// Best-effort source position for semantic errors: nlohmann::json keeps no value positions.
class Locator {
   public:
    explicit Locator(std::string_view text) : text_(text) {
    }

    [[noreturn]] void fail_at_key(const std::string &key, const std::string &reason) const {
        size_t pos = text_.find("\"" + key + "\"");
        fail(pos == std::string_view::npos ? 0 : pos, reason);
    }

    [[noreturn]] void fail_at_element(size_t index, const std::string &reason) const {
        size_t pos = text_.find("\"elements\"");
        for (size_t i = 0; pos != std::string_view::npos && i <= index; ++i) {
            pos = text_.find('{', pos + 1);
        }
        fail(pos == std::string_view::npos ? 0 : pos, reason);
    }

    [[noreturn]] void fail(size_t offset, const std::string &reason) const {
        auto [line, column] = line_column(text_, offset);
        throw ParseError(line, column, reason);
    }

   private:
    std::string_view text_;
};

std::string kind_name(const Element &e) {
    switch (e.index()) {
        case 0:
            return "LI";
        case 1:
            return "HOLOG";
        default:
            return "ZPLATE";
    }
}

std::string quoted(const std::string &s) {
    return json(s).dump();
}

std::string format_double(double x) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), ptr);
}

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string format_amplitude(Amplitude c) {
    constexpr double eps = 1e-12;
    double re = std::abs(c.real()) < eps ? 0.0 : c.real();
    double im = std::abs(c.imag()) < eps ? 0.0 : c.imag();
    if (im == 0.0) {
        return format_real(re);
    }
    if (re == 0.0) {
        return format_real(im) + "i";
    }
    return "(" + format_real(re) + (im < 0 ? "-" : "+") + format_real(std::abs(im)) + "i)";
}

}  // namespace

std::string serialize(const NetlistDocument &doc) {
    const Netlist &n = doc.netlist;
    std::ostringstream out;
    out << "{\n";
    out << "  \"schema_version\": " << quoted(doc.schema_version) << ",\n";
    out << "  \"dimension\": " << n.dimension << ",\n";
    out << "  \"variant\": " << quoted(doc.variant) << ",\n";
    out << "  \"input_path\": " << quoted(n.input_path.str()) << ",\n";
    out << "  \"output_path\": " << quoted(n.output_path.str()) << ",\n";
    if (n.elements.empty()) {
        out << "  \"elements\": []\n";
    } else {
        out << "  \"elements\": [\n";
        for (size_t i = 0; i < n.elements.size(); ++i) {
            const Element &e = n.elements[i];
            out << "    {\"kind\": \"" << kind_name(e) << "\", ";
            if (const auto *bs = std::get_if<BeamSplitter>(&e)) {
                out << "\"m\": " << bs->m << ", ";
            } else if (const auto *h = std::get_if<Hologram>(&e)) {
                out << "\"v\": " << h->v << ", ";
            } else {
                out << "\"d\": " << std::get<ZPlate>(e).d << ", ";
            }
            out << "\"paths\": [";
            auto paths = element_paths(e);
            for (size_t k = 0; k < paths.size(); ++k) {
                out << (k ? ", " : "") << quoted(paths[k].str());
            }
            out << "]}" << (i + 1 < n.elements.size() ? "," : "") << "\n";
        }
        out << "  ]\n";
    }
    out << "}\n";
    return out.str();
}

NetlistDocument parse_document(std::string_view text) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(line, column, e.what());
    }
    const Locator loc(text);
    if (!root.is_object()) {
        loc.fail(0, "document must be a JSON object");
    }

    static const std::array<const char *, 6> kKeys = {"schema_version", "dimension",   "variant",
                                                      "input_path",     "output_path", "elements"};
    for (const auto &[key, value] : root.items()) {
        if (std::find_if(kKeys.begin(), kKeys.end(), [&](const char *k) { return key == k; }) == kKeys.end()) {
            loc.fail_at_key(key, "unknown key '" + key + "'");
        }
    }
    for (const char *key : kKeys) {
        if (!root.contains(key)) {
            loc.fail(0, std::string("missing key '") + key + "'");
        }
    }

    auto string_field = [&](const char *key) {
        const json &v = root.at(key);
        if (!v.is_string()) {
            loc.fail_at_key(key, std::string("'") + key + "' must be a string");
        }
        return v.get<std::string>();
    };
    auto path_field = [&](const char *key) {
        std::string name = string_field(key);
        auto label = PathLabel::parse(name);
        if (!label) {
            loc.fail_at_key(key, "malformed path name '" + name + "'");
        }
        return *label;
    };

    NetlistDocument doc;
    doc.schema_version = string_field("schema_version");
    if (doc.schema_version != kSchemaVersion) {
        throw SchemaVersionMismatchError(std::string(kSchemaVersion), doc.schema_version);
    }
    doc.variant = string_field("variant");
    if (!GateVariant::parse(doc.variant)) {
        loc.fail_at_key("variant", "unknown variant '" + doc.variant + "'");
    }
    if (!root.at("dimension").is_number_integer()) {
        loc.fail_at_key("dimension", "'dimension' must be an integer");
    }
    doc.netlist.dimension = root.at("dimension").get<int64_t>();
    if (doc.netlist.dimension < 1) {
        loc.fail_at_key("dimension", "'dimension' must be positive");
    }
    doc.netlist.input_path = path_field("input_path");
    doc.netlist.output_path = path_field("output_path");

    const json &elements = root.at("elements");
    if (!elements.is_array()) {
        loc.fail_at_key("elements", "'elements' must be an array");
    }
    for (size_t i = 0; i < elements.size(); ++i) {
        const json &item = elements[i];
        auto fail = [&](const std::string &reason) { loc.fail_at_element(i, "element " + std::to_string(i) + ": " + reason); };
        if (!item.is_object() || !item.contains("kind") || !item.at("kind").is_string()) {
            fail("expected an object with a string 'kind'");
        }
        const std::string kind = item.at("kind").get<std::string>();
        const char *param = kind == "LI" ? "m" : kind == "HOLOG" ? "v" : kind == "ZPLATE" ? "d" : nullptr;
        if (param == nullptr) {
            fail("unknown kind '" + kind + "'");
        }
        for (const auto &[key, value] : item.items()) {
            if (key != "kind" && key != "paths" && key != param) {
                fail("unexpected key '" + key + "'");
            }
        }
        if (!item.contains(param) || !item.at(param).is_number_integer()) {
            fail(std::string("'") + param + "' must be an integer");
        }
        const int64_t value = item.at(param).get<int64_t>();
        if (!item.contains("paths") || !item.at("paths").is_array()) {
            fail("'paths' must be an array");
        }
        std::vector<PathLabel> paths;
        for (const json &p : item.at("paths")) {
            if (!p.is_string()) {
                fail("path names must be strings");
            }
            auto label = PathLabel::parse(p.get<std::string>());
            if (!label) {
                fail("malformed path name '" + p.get<std::string>() + "'");
            }
            paths.push_back(*label);
        }
        const size_t arity = kind == "LI" ? 2 : 1;
        if (paths.size() != arity) {
            fail(kind + " takes " + std::to_string(arity) + " path(s)");
        }
        Element e;
        if (kind == "LI") {
            e = BeamSplitter{value, paths[0], paths[1]};
        } else if (kind == "HOLOG") {
            e = Hologram{paths[0], value};
        } else {
            e = ZPlate{paths[0], value};
        }
        try {
            validate(e);
        } catch (const std::invalid_argument &err) {
            fail(err.what());
        }
        doc.netlist.elements.push_back(e);
    }
    try {
        validate(doc.netlist);
    } catch (const std::invalid_argument &err) {
        loc.fail_at_key("input_path", err.what());
    }
    return doc;
}

std::string export_dot(const PortGraph &graph) {
    std::ostringstream out;
    out << "digraph netlist {\n";
    auto endpoint = [](const WireTarget &t) {
        if (const auto *p = std::get_if<PortRef>(&t)) {
            return "n" + std::to_string(p->node);
        }
        return "out_" + std::get<Terminal>(t).path.str();
    };
    for (const auto &[path, target] : graph.entries) {
        out << "  in_" << path.str() << " [shape=point];\n";
    }
    for (const PathLabel &path : graph.exits()) {
        out << "  out_" << path.str() << " [shape=point];\n";
    }
    for (size_t i = 0; i < graph.nodes.size(); ++i) {
        out << "  n" << i << " [label=\"" << element_label(graph.nodes[i]) << "\"";
        if (graph.lanes[i] > 1) {
            out << ", peripheries=2";
        }
        out << "];\n";
    }
    for (const auto &[path, target] : graph.entries) {
        out << "  in_" << path.str() << " -> " << endpoint(target) << " [label=\"" << path.str() << "\"];\n";
    }
    for (const auto &[from, target] : graph.wiring) {
        out << "  n" << from.node << " -> " << endpoint(target) << " [label=\"" << graph.port_paths.at(from).str()
            << "\"";
        if (const auto *p = std::get_if<PortRef>(&target); p != nullptr && p->node <= from.node) {
            out << ", style=dashed, constraint=false";
        }
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string export_dot(const Netlist &netlist) {
    return export_dot(netlist_to_portgraph(netlist));
}

namespace {

class StateParser {
   public:
    StateParser(std::string_view text, PathLabel path) : text_(text), path_(path) {
    }

    ModeVector parse() {
        ModeVector out;
        skip_space();
        if (pos_ == text_.size()) {
            fail("empty state");
        }
        bool first = true;
        while (pos_ < text_.size()) {
            double sign = 1;
            if (!first) {
                if (peek() != '+' && peek() != '-') {
                    fail("expected '+' or '-' between terms");
                }
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_space();
            } else if (peek() == '-' && next_is_ket(pos_ + 1)) {
                sign = -1;
                ++pos_;
                skip_space();
            }
            first = false;
            Amplitude coef = 1.0;
            if (peek() != '|') {
                size_t star = text_.find('*', pos_);
                if (star == std::string_view::npos) {
                    fail("expected '*' after coefficient");
                }
                coef = parse_complex(text_.substr(pos_, star - pos_), pos_);
                pos_ = star + 1;
                skip_space();
            }
            if (peek() != '|') {
                fail("expected '|'");
            }
            ++pos_;
            skip_space();
            size_t start = pos_;
            if (peek() == '-' || peek() == '+') {
                ++pos_;
            }
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            OamValue oam = 0;
            auto digits = text_.substr(start, pos_ - start);
            if (!digits.empty() && digits[0] == '+') {
                digits.remove_prefix(1);
            }
            auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), oam);
            if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
                fail_at(start, "expected an integer OAM value");
            }
            skip_space();
            if (peek() != '>') {
                fail("expected '>'");
            }
            ++pos_;
            skip_space();
            out.add(path_, oam, sign * coef);
        }
        return out;
    }

   private:
    char peek() const {
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool next_is_ket(size_t p) const {
        while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) {
            ++p;
        }
        return p < text_.size() && text_[p] == '|';
    }

    // a | bi | a+bi | a-bi, optionally parenthesized; "i" alone means 1i.
    Amplitude parse_complex(std::string_view s, size_t origin) const {
        std::string compact;
        for (char c : s) {
            if (!std::isspace(static_cast<unsigned char>(c))) {
                compact += c;
            }
        }
        if (compact.size() >= 2 && compact.front() == '(' && compact.back() == ')') {
            compact = compact.substr(1, compact.size() - 2);
        }
        if (compact.empty()) {
            fail_at(origin, "empty coefficient");
        }
        auto number = [&](std::string_view part) -> double {
            if (part.empty() || part == "+") {
                return 1;
            }
            if (part == "-") {
                return -1;
            }
            std::string tmp(part);
            char *end = nullptr;
            double v = std::strtod(tmp.c_str(), &end);
            if (end != tmp.c_str() + tmp.size() || !std::isfinite(v)) {
                fail_at(origin, "malformed number '" + tmp + "'");
            }
            return v;
        };
        if (compact.back() != 'i') {
            return {number(compact), 0.0};
        }
        std::string_view body(compact.data(), compact.size() - 1);
        // Split at the last sign that is not the leading sign or an exponent sign.
        size_t split = std::string_view::npos;
        for (size_t k = body.size(); k-- > 1;) {
            if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
                split = k;
                break;
            }
        }
        if (split == std::string_view::npos) {
            return {0.0, number(body)};
        }
        return {number(body.substr(0, split)), number(body.substr(split))};
    }

    [[noreturn]] void fail(const std::string &reason) const {
        fail_at(pos_, reason);
    }
    [[noreturn]] void fail_at(size_t offset, const std::string &reason) const {
        throw ParseError(1, offset + 1, reason);
    }

    std::string_view text_;
    PathLabel path_;
    size_t pos_ = 0;
};

}  // namespace

ModeVector parse_state(std::string_view text, PathLabel path) {
    return StateParser(text, path).parse();
}

std::string format_state(const ModeVector &state) {
    std::ostringstream out;
    for (const auto &[key, amp] : state) {
        if (std::abs(amp - Amplitude(1.0)) > 1e-12) {
            out << format_amplitude(amp) << "*";
        }
        out << "|" << key.oam << "> @ " << key.path.str() << "\n";
    }
    return out.str();
}

std::string scaling_csv(const std::vector<ScalingRow> &rows) {
    std::ostringstream out;
    out << kScalingCsvHeader << "\n";
    for (const auto &row : rows) {
        out << row.d << "," << row.n_arb_actual << "," << row.n_arb_predicted << "," << row.n_s << "," << row.naive
            << "," << format_double(row.bound) << "\n";
    }
    return out.str();
}

}  // namespace oamx
