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

#include "pfnsn/core.hpp"

#include "numfmt.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_set>
#include <utility>

namespace pfnsn {

namespace {

constexpr std::array<std::string_view, 3> kModeNames{"FNSN", "PNSN", "PFNSN"};

std::string channel_name(std::size_t k) { return "channel " + std::to_string(k + 1); }

bool valid_coefficient(double c) { return std::isfinite(c) && c > 0.0 && c <= 1.0; }

}  // namespace

std::string_view to_string(NetMode mode) { return kModeNames[static_cast<std::size_t>(mode)]; }

std::optional<NetMode> parse_mode(std::string_view text) {
    for (std::size_t i = 0; i < kModeNames.size(); ++i) {
        if (text == kModeNames[i]) {
            return static_cast<NetMode>(i);
        }
    }
    return std::nullopt;
}

bool ChannelTriple::all_zero() const {
    return std::all_of(channels.begin(), channels.end(), [](const NeutroValue& v) { return v.is_zero(); });
}

bool ChannelTriple::any_indeterminate() const {
    return std::any_of(channels.begin(), channels.end(),
                       [](const NeutroValue& v) { return v.is_indeterminate(); });
}

SemanticNet::SemanticNet(NetMode mode, std::string name, Scale scale, bool directed)
    : mode_(mode), name_(std::move(name)), scale_(scale), directed_(directed) {
    for (std::size_t k = 0; k < 3; ++k) {
        if (!std::isfinite(scale_[k]) || scale_[k] <= 0.0) {
            throw NetError(NetError::Code::InvalidScale,
                           channel_name(k) + " scale must be positive, got " + detail::format_number(scale_[k]),
                           k);
        }
    }
}

SemanticNet SemanticNet::assemble_unchecked(NetMode mode, std::string name, Scale scale, bool directed,
                                            std::vector<Vertex> vertices, std::vector<Edge> edges) {
    SemanticNet net;
    net.mode_ = mode;
    net.name_ = std::move(name);
    net.scale_ = scale;
    net.directed_ = directed;
    net.vertices_ = std::move(vertices);
    net.edges_ = std::move(edges);
    return net;
}

void SemanticNet::check_triple(const ChannelTriple& triple, std::string_view what) const {
    for (std::size_t k = 0; k < 3; ++k) {
        const NeutroValue& v = triple[k];
        if (v.is_indeterminate()) {
            if (!valid_coefficient(v.magnitude)) {
                throw NetError(NetError::Code::OutOfRange,
                               std::string(what) + ": " + channel_name(k) + " indeterminacy coefficient " +
                                   detail::format_number(v.magnitude) + " outside (0, 1]",
                               k);
            }
        } else if (!std::isfinite(v.magnitude) || v.magnitude < 0.0 || v.magnitude > scale_[k]) {
            throw NetError(NetError::Code::OutOfRange,
                           std::string(what) + ": " + channel_name(k) + " degree " +
                               detail::format_number(v.magnitude) +
                               " outside [0, " + detail::format_number(scale_[k]) + "]",
                           k);
        }
    }
}

VertexId SemanticNet::add_vertex(std::string label, const ChannelTriple& membership, bool indeterminate) {
    if (label.empty()) {
        throw NetError(NetError::Code::EmptyLabel, "vertex label must not be empty");
    }
    if (find_vertex(label)) {
        throw NetError(NetError::Code::DuplicateLabel, "duplicate vertex '" + label + "'");
    }
    check_triple(membership, "vertex '" + label + "'");
    VertexId id{vertices_.size()};
    vertices_.push_back(Vertex{id, std::move(label), indeterminate, membership});
    return id;
}

EdgeId SemanticNet::add_edge(VertexId src, VertexId dst, std::string label, const ChannelTriple& weight,
                             bool indeterminate) {
    for (VertexId end : {src, dst}) {
        if (!contains(end)) {
            throw NetError(NetError::Code::UnknownVertex, "unknown vertex id " + std::to_string(end.index));
        }
    }
    if (src == dst) {
        throw NetError(NetError::Code::Loop, "loop on vertex '" + vertices_[src.index].label + "' rejected");
    }
    if (find_edge(src, dst)) {
        throw NetError(NetError::Code::DuplicateEdge, "vertices '" + vertices_[src.index].label + "' and '" +
                                                          vertices_[dst.index].label + "' already connected");
    }
    check_triple(weight, "edge '" + vertices_[src.index].label + "' -> '" + vertices_[dst.index].label + "'");
    EdgeId id{edges_.size()};
    edges_.push_back(Edge{src, dst, std::move(label), indeterminate, weight});
    return id;
}

const Vertex& SemanticNet::vertex(VertexId id) const {
    if (!contains(id)) {
        throw NetError(NetError::Code::UnknownVertex, "unknown vertex id " + std::to_string(id.index));
    }
    return vertices_[id.index];
}

std::optional<VertexId> SemanticNet::find_vertex(std::string_view label) const {
    for (const Vertex& v : vertices_) {
        if (v.label == label) {
            return v.id;
        }
    }
    return std::nullopt;
}

std::optional<EdgeId> SemanticNet::find_edge(VertexId src, VertexId dst) const {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if ((e.src == src && e.dst == dst) || (!directed_ && e.src == dst && e.dst == src)) {
            return EdgeId{i};
        }
    }
    return std::nullopt;
}

SemanticNet SemanticNet::with_mode(NetMode mode) const {
    SemanticNet copy = *this;
    copy.mode_ = mode;
    return copy;
}

namespace {

void check_entries(const SemanticNet& net, const ChannelTriple& triple, const std::string& what,
                   std::vector<Violation>& out) {
    const Scale& scale = net.scale();
    for (std::size_t k = 0; k < 3; ++k) {
        const NeutroValue& v = triple[k];
        const std::string where = what + " " + channel_name(k);
        if (v.is_indeterminate()) {
            if (!valid_coefficient(v.magnitude)) {
                out.push_back({Violation::Severity::Error, where + ": indeterminacy coefficient " +
                                                               detail::format_number(v.magnitude) +
                                                               " outside (0, 1]"});
            }
            continue;
        }
        if (!std::isfinite(v.magnitude) || v.magnitude < 0.0 || v.magnitude > scale[k]) {
            out.push_back({Violation::Severity::Error, where + ": degree " + detail::format_number(v.magnitude) +
                                                           " outside [0, " + detail::format_number(scale[k]) +
                                                           "]"});
            continue;
        }
        if (net.mode() == NetMode::PNSN && v.magnitude != 0.0 && v.magnitude != scale[k]) {
            out.push_back({Violation::Severity::Error, where + ": non-crisp degree " +
                                                           detail::format_number(v.magnitude) +
                                                           " (PNSN requires 0 or " +
                                                           detail::format_number(scale[k]) + ")"});
        }
    }
}

}  // namespace

std::vector<Violation> validate(const SemanticNet& net) {
    std::vector<Violation> out;
    const auto error = [&out](std::string msg) { out.push_back({Violation::Severity::Error, std::move(msg)}); };

    for (std::size_t k = 0; k < 3; ++k) {
        if (!std::isfinite(net.scale()[k]) || net.scale()[k] <= 0.0) {
            error(channel_name(k) + " scale must be positive, got " + detail::format_number(net.scale()[k]));
        }
    }

    std::unordered_set<std::string> labels;
    for (std::size_t i = 0; i < net.vertices().size(); ++i) {
        const Vertex& v = net.vertices()[i];
        if (v.id.index != i) {
            error("vertex '" + v.label + "' has id " + std::to_string(v.id.index) + ", expected " +
                  std::to_string(i));
        }
        if (v.label.empty()) {
            error("vertex " + std::to_string(i) + " has an empty label");
        } else if (!labels.insert(v.label).second) {
            error("duplicate vertex '" + v.label + "'");
        }
        check_entries(net, v.membership, "vertex '" + v.label + "'", out);
    }

    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < net.edges().size(); ++i) {
        const Edge& e = net.edges()[i];
        const std::string what = "edge " + std::to_string(i);
        if (!net.contains(e.src) || !net.contains(e.dst)) {
            error(what + ": dangling endpoint");
            continue;
        }
        if (e.src == e.dst) {
            error(what + ": loop on vertex '" + net.vertex(e.src).label + "'");
        }
        auto key = std::pair{e.src.index, e.dst.index};
        if (!net.directed() && key.first > key.second) {
            std::swap(key.first, key.second);
        }
        if (!pairs.insert(key).second) {
            error(what + ": duplicate connection '" + net.vertex(e.src).label + "' -> '" +
                  net.vertex(e.dst).label + "'");
        }
        check_entries(net, e.weight, what, out);
        if (e.weight.all_zero()) {
            out.push_back({Violation::Severity::Warning,
                           what + ": all-zero weight is not recoverable from the adjacency tensor"});
        }
    }
    return out;
}

bool has_errors(const std::vector<Violation>& violations) {
    return std::any_of(violations.begin(), violations.end(),
                       [](const Violation& v) { return v.severity == Violation::Severity::Error; });
}

GraphClass classify(const SemanticNet& net) {
    GraphClass c;
    for (const Vertex& v : net.vertices()) {
        c.has_indeterminate_vertex = c.has_indeterminate_vertex || v.indeterminate;
    }
    for (const Edge& e : net.edges()) {
        c.has_indeterminate_edge = c.has_indeterminate_edge || e.indeterminate;
    }
    c.is_point_graph = c.has_indeterminate_vertex;
    c.is_edge_graph = c.has_indeterminate_edge;
    c.is_strongly_neutrosophic = c.has_indeterminate_vertex && c.has_indeterminate_edge;

    // No loops anywhere, and no repeated connection touching an indeterminate vertex.
    const auto indeterminate = [&net](VertexId id) { return net.contains(id) && net.vertex(id).indeterminate; };
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const Edge& e : net.edges()) {
        if (e.src == e.dst) {
            c.is_neutrosophic_simple = false;
            break;
        }
        auto key = std::pair{e.src.index, e.dst.index};
        if (!net.directed() && key.first > key.second) {
            std::swap(key.first, key.second);
        }
        if (!seen.insert(key).second && (indeterminate(e.src) || indeterminate(e.dst))) {
            c.is_neutrosophic_simple = false;
            break;
        }
    }
    return c;
}

NetOrder order(const SemanticNet& net) {
    NetOrder o;
    for (const Vertex& v : net.vertices()) {
        ++(v.indeterminate ? o.indeterminate : o.ordinary);
    }
    o.total = o.ordinary + o.indeterminate;
    return o;
}

}  // namespace pfnsn
