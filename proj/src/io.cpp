/*
   Copyright 2026 The pfnsn Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
 */

#include "pfnsn/io.hpp"

#include "numfmt.hpp"

#include "json.hpp"

#include <cstdio>
#include <map>
#include <optional>
#include <set>

namespace pfnsn {

namespace {

using ordered_json = nlohmann::ordered_json;
using json = nlohmann::json;

ordered_json value_json(const NeutroValue& v) {
    ordered_json j = ordered_json::object();
    j[v.is_indeterminate() ? "i" : "d"] = v.magnitude;
    return j;
}

ordered_json triple_json(const ChannelTriple& t) {
    ordered_json arr = ordered_json::array();
    for (const NeutroValue& v : t.channels) {
        arr.push_back(value_json(v));
    }
    return arr;
}

[[noreturn]] void schema_error(const std::string& path, const std::string& message) {
    throw JsonError(JsonError::Kind::Schema, path, message);
}

[[noreturn]] void invariant_error(const std::string& path, const std::string& message) {
    throw JsonError(JsonError::Kind::Invariant, path, message);
}

const json& member(const json& obj, const std::string& path, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        schema_error(path + "." + key, std::string("missing field '") + key + "'");
    }
    return *it;
}

std::string get_string(const json& obj, const std::string& path, const char* key) {
    const json& v = member(obj, path, key);
    if (!v.is_string()) {
        schema_error(path + "." + key, "expected a string");
    }
    return v.get<std::string>();
}

bool get_bool(const json& obj, const std::string& path, const char* key) {
    const json& v = member(obj, path, key);
    if (!v.is_boolean()) {
        schema_error(path + "." + key, "expected a boolean");
    }
    return v.get<bool>();
}

std::uint64_t get_id(const json& obj, const std::string& path, const char* key) {
    const json& v = member(obj, path, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
        schema_error(path + "." + key, "expected a nonnegative integer");
    }
    return v.get<std::uint64_t>();
}

const json& get_array(const json& obj, const std::string& path, const char* key) {
    const json& v = member(obj, path, key);
    if (!v.is_array()) {
        schema_error(path + "." + key, "expected an array");
    }
    return v;
}

NeutroValue read_value(const json& j, const std::string& path) {
    if (!j.is_object() || j.size() != 1) {
        schema_error(path, "expected an object with exactly one of 'd' or 'i'");
    }
    const auto it = j.begin();
    const std::string key = it.key();
    const json& val = it.value();
    if (key != "d" && key != "i") {
        schema_error(path, "unknown key '" + key + "', expected 'd' or 'i'");
    }
    if (!val.is_number()) {
        schema_error(path + "." + key, "expected a number");
    }
    const double x = val.get<double>();
    return key == "d" ? NeutroValue::determinate(x) : NeutroValue::indeterminate(x);
}

ChannelTriple read_triple(const json& obj, const std::string& path, const char* key) {
    const json& arr = get_array(obj, path, key);
    const std::string here = path + "." + key;
    if (arr.size() != 3) {
        schema_error(here, "expected exactly 3 channel values, got " + std::to_string(arr.size()));
    }
    ChannelTriple t;
    for (std::size_t k = 0; k < 3; ++k) {
        t[k] = read_value(arr[k], here + "[" + std::to_string(k) + "]");
    }
    return t;
}

std::string channel_path(const std::string& base, const NetError& err) {
    if (err.channel()) {
        return base + "[" + std::to_string(*err.channel()) + "]";
    }
    return base;
}

}  // namespace

std::string to_json(const SemanticNet& net, int indent) {
    ordered_json doc = ordered_json::object();
    doc["mode"] = std::string(to_string(net.mode()));
    doc["name"] = net.name();
    doc["scale"] = {net.scale()[0], net.scale()[1], net.scale()[2]};
    if (!net.directed()) {
        doc["directed"] = false;
    }
    ordered_json vertices = ordered_json::array();
    for (const Vertex& v : net.vertices()) {
        ordered_json jv = ordered_json::object();
        jv["id"] = v.id.index;
        jv["label"] = v.label;
        jv["indeterminate"] = v.indeterminate;
        jv["membership"] = triple_json(v.membership);
        vertices.push_back(std::move(jv));
    }
    doc["vertices"] = std::move(vertices);
    ordered_json edges = ordered_json::array();
    for (const Edge& e : net.edges()) {
        ordered_json je = ordered_json::object();
        je["src"] = e.src.index;
        je["dst"] = e.dst.index;
        je["label"] = e.label;
        je["indeterminate"] = e.indeterminate;
        je["weight"] = triple_json(e.weight);
        edges.push_back(std::move(je));
    }
    doc["edges"] = std::move(edges);
    return doc.dump(indent, ' ', false, nlohmann::detail::error_handler_t::replace) + "\n";
}

SemanticNet from_json(std::string_view document) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error& e) {
        throw JsonError(JsonError::Kind::Malformed, "$", e.what());
    }
    if (!doc.is_object()) {
        schema_error("$", "expected an object");
    }

    const std::string mode_text = get_string(doc, "$", "mode");
    const auto mode = parse_mode(mode_text);
    if (!mode) {
        schema_error("$.mode", "unknown mode '" + mode_text + "', expected FNSN, PNSN or PFNSN");
    }
    std::string name = get_string(doc, "$", "name");

    const json& scale_json = get_array(doc, "$", "scale");
    if (scale_json.size() != 3) {
        schema_error("$.scale", "expected exactly 3 channel maxima");
    }
    Scale scale{};
    for (std::size_t k = 0; k < 3; ++k) {
        if (!scale_json[k].is_number()) {
            schema_error("$.scale[" + std::to_string(k) + "]", "expected a number");
        }
        scale[k] = scale_json[k].get<double>();
    }
    bool directed = true;
    if (doc.contains("directed")) {
        directed = get_bool(doc, "$", "directed");
    }

    std::optional<SemanticNet> net;
    try {
        net.emplace(*mode, std::move(name), scale, directed);
    } catch (const NetError& err) {
        invariant_error(channel_path("$.scale", err), err.what());
    }

    std::map<std::uint64_t, VertexId> ids;
    const json& vertices = get_array(doc, "$", "vertices");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const std::string path = "$.vertices[" + std::to_string(i) + "]";
        const json& jv = vertices[i];
        if (!jv.is_object()) {
            schema_error(path, "expected an object");
        }
        const std::uint64_t id = get_id(jv, path, "id");
        std::string label = get_string(jv, path, "label");
        const bool indeterminate = get_bool(jv, path, "indeterminate");
        const ChannelTriple membership = read_triple(jv, path, "membership");
        if (ids.count(id) != 0) {
            invariant_error(path + ".id", "duplicate vertex id " + std::to_string(id));
        }
        try {
            ids.emplace(id, net->add_vertex(std::move(label), membership, indeterminate));
        } catch (const NetError& err) {
            const bool range = err.code() == NetError::Code::OutOfRange;
            invariant_error(range ? channel_path(path + ".membership", err) : path + ".label", err.what());
        }
    }

    const json& edges = get_array(doc, "$", "edges");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string path = "$.edges[" + std::to_string(i) + "]";
        const json& je = edges[i];
        if (!je.is_object()) {
            schema_error(path, "expected an object");
        }
        const std::uint64_t src = get_id(je, path, "src");
        const std::uint64_t dst = get_id(je, path, "dst");
        std::string label = get_string(je, path, "label");
        const bool indeterminate = get_bool(je, path, "indeterminate");
        const ChannelTriple weight = read_triple(je, path, "weight");
        auto src_it = ids.find(src);
        if (src_it == ids.end()) {
            invariant_error(path + ".src", "unknown vertex id " + std::to_string(src));
        }
        auto dst_it = ids.find(dst);
        if (dst_it == ids.end()) {
            invariant_error(path + ".dst", "unknown vertex id " + std::to_string(dst));
        }
        try {
            net->add_edge(src_it->second, dst_it->second, std::move(label), weight, indeterminate);
        } catch (const NetError& err) {
            switch (err.code()) {
                case NetError::Code::OutOfRange: invariant_error(channel_path(path + ".weight", err), err.what());
                case NetError::Code::Loop: invariant_error(path + ".dst", err.what());
                default: invariant_error(path, err.what());
            }
        }
    }
    return std::move(*net);
}

namespace {

std::string dot_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': break;
            default: out += c;
        }
    }
    return out;
}

std::string two_decimals(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

// Normalized channel text; indeterminate channels keep their nI form.
std::string normalized_text(const ChannelTriple& t, const Scale& scale) {
    std::string out = "(";
    for (std::size_t k = 0; k < 3; ++k) {
        if (k > 0) {
            out += ", ";
        }
        out += t[k].is_indeterminate() ? detail::format_value(t[k]) : two_decimals(t[k].magnitude / scale[k]);
    }
    return out + ")";
}

std::string raw_text(const ChannelTriple& t) {
    return "(" + detail::format_value(t[0]) + ", " + detail::format_value(t[1]) + ", " +
           detail::format_value(t[2]) + ")";
}

}  // namespace

std::string to_dot(const SemanticNet& net) {
    const char* arrow = net.directed() ? " -> " : " -- ";
    std::string out = std::string(net.directed() ? "digraph" : "graph") + " \"" + dot_escape(net.name()) + "\" {\n";
    std::size_t indeterminate_count = 0;
    for (const Vertex& v : net.vertices()) {
        std::string label;
        if (v.indeterminate) {
            label = "N_" + std::to_string(++indeterminate_count) + ": ";
        }
        label += v.label + "\n" + normalized_text(v.membership, net.scale());
        out += "  n" + std::to_string(v.id.index) + " [label=\"" + dot_escape(label) + "\"";
        if (v.indeterminate) {
            out += ", style=dotted";
        }
        out += "];\n";
    }
    for (const Edge& e : net.edges()) {
        std::string label = e.label.empty() ? raw_text(e.weight) : e.label + " " + raw_text(e.weight);
        out += "  n" + std::to_string(e.src.index) + arrow + "n" + std::to_string(e.dst.index) + " [label=\"" +
               dot_escape(label) + "\"";
        if (e.indeterminate) {
            out += ", style=dotted";
        }
        out += "];\n";
    }
    out += "}\n";
    return out;
}

}  // namespace pfnsn
