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

#ifndef PFNSN_CORE_HPP
#define PFNSN_CORE_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pfnsn {

/// Which triad a net's three channels stand for.
///
/// FNSN reads channels as (truth, indeterminacy, falsehood) with fuzzy
/// degrees. PNSN reads them as (positivity, neutrality, negativity) with crisp
/// degrees: every determinate entry is either 0 or the channel maximum. PFNSN
/// is the polar reading with fuzzy degrees.
enum class NetMode : std::uint8_t { FNSN, PNSN, PFNSN };

std::string_view to_string(NetMode mode);
std::optional<NetMode> parse_mode(std::string_view text);

/// A single channel entry: either a determinate degree d >= 0, or a scaled
/// indeterminacy n*I with coefficient n in (0, 1].
struct NeutroValue {
    enum class Kind : std::uint8_t { Determinate, Indeterminate };

    Kind kind = Kind::Determinate;
    double magnitude = 0.0;

    static constexpr NeutroValue determinate(double degree) { return {Kind::Determinate, degree}; }
    static constexpr NeutroValue indeterminate(double coefficient = 1.0) {
        return {Kind::Indeterminate, coefficient};
    }

    constexpr bool is_indeterminate() const { return kind == Kind::Indeterminate; }
    constexpr bool is_zero() const { return kind == Kind::Determinate && magnitude == 0.0; }

    friend constexpr bool operator==(const NeutroValue&, const NeutroValue&) = default;
};

/// Channel 1 is t or p, channel 2 is i or u, channel 3 is f or n.
struct ChannelTriple {
    std::array<NeutroValue, 3> channels{};

    ChannelTriple() = default;
    constexpr ChannelTriple(NeutroValue c1, NeutroValue c2, NeutroValue c3) : channels{c1, c2, c3} {}
    constexpr ChannelTriple(double c1, double c2, double c3)
        : channels{NeutroValue::determinate(c1), NeutroValue::determinate(c2),
                   NeutroValue::determinate(c3)} {}

    constexpr NeutroValue& operator[](std::size_t k) { return channels[k]; }
    constexpr const NeutroValue& operator[](std::size_t k) const { return channels[k]; }

    bool all_zero() const;
    bool any_indeterminate() const;

    friend bool operator==(const ChannelTriple&, const ChannelTriple&) = default;
};

/// Maximum degree per channel.
using Scale = std::array<double, 3>;
inline constexpr Scale kDefaultScale{3.0, 2.0, 1.0};

struct VertexId {
    std::size_t index = 0;
    friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

struct EdgeId {
    std::size_t index = 0;
    friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

struct Vertex {
    VertexId id;
    std::string label;
    bool indeterminate = false;
    ChannelTriple membership;

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Edge {
    VertexId src;
    VertexId dst;
    std::string label;
    bool indeterminate = false;
    ChannelTriple weight;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Raised when a construction call would break a net invariant.
class NetError : public std::runtime_error {
public:
    enum class Code : std::uint8_t {
        InvalidScale,
        DuplicateLabel,
        EmptyLabel,
        OutOfRange,
        UnknownVertex,
        DuplicateEdge,
        Loop,
    };

    NetError(Code code, const std::string& message, std::optional<std::size_t> channel = std::nullopt)
        : std::runtime_error(message), code_(code), channel_(channel) {}

    Code code() const noexcept { return code_; }
    /// 0-based channel index for InvalidScale / OutOfRange.
    std::optional<std::size_t> channel() const noexcept { return channel_; }

private:
    Code code_;
    std::optional<std::size_t> channel_;
};

class SemanticNet {
public:
    /// Throws NetError(InvalidScale) if a channel maximum is not a positive
    /// finite number.
    explicit SemanticNet(NetMode mode, std::string name = {}, Scale scale = kDefaultScale,
                         bool directed = true);

    /// Builds a net from parts without any checking. Loaders use this and
    /// then run validate() themselves.
    static SemanticNet assemble_unchecked(NetMode mode, std::string name, Scale scale, bool directed,
                                          std::vector<Vertex> vertices, std::vector<Edge> edges);

    VertexId add_vertex(std::string label, const ChannelTriple& membership, bool indeterminate = false);
    EdgeId add_edge(VertexId src, VertexId dst, std::string label, const ChannelTriple& weight,
                    bool indeterminate = false);

    NetMode mode() const noexcept { return mode_; }
    const std::string& name() const noexcept { return name_; }
    const Scale& scale() const noexcept { return scale_; }
    bool directed() const noexcept { return directed_; }
    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    bool contains(VertexId id) const noexcept { return id.index < vertices_.size(); }
    const Vertex& vertex(VertexId id) const;
    std::optional<VertexId> find_vertex(std::string_view label) const;
    std::optional<EdgeId> find_edge(VertexId src, VertexId dst) const;

    /// Same content under a different mode; no checks are run.
    SemanticNet with_mode(NetMode mode) const;

    friend bool operator==(const SemanticNet&, const SemanticNet&) = default;

private:
    SemanticNet() = default;
    void check_triple(const ChannelTriple& triple, std::string_view what) const;

    NetMode mode_ = NetMode::PFNSN;
    std::string name_;
    Scale scale_ = kDefaultScale;
    bool directed_ = true;
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
};

struct Violation {
    enum class Severity : std::uint8_t { Error, Warning };
    Severity severity = Severity::Error;
    std::string message;
};

/// Re-checks every structural and range invariant plus the mode rules:
/// PNSN degrees must be crisp, FNSN/PFNSN degrees lie in [0, channel max].
/// Edges whose weight is all zero produce a warning (the adjacency tensor
/// cannot represent them).
std::vector<Violation> validate(const SemanticNet& net);
bool has_errors(const std::vector<Violation>& violations);

struct GraphClass {
    bool has_indeterminate_vertex = false;
    bool has_indeterminate_edge = false;
    bool is_point_graph = false;
    bool is_edge_graph = false;
    bool is_strongly_neutrosophic = false;
    bool is_neutrosophic_simple = true;

    friend bool operator==(const GraphClass&, const GraphClass&) = default;
};

GraphClass classify(const SemanticNet& net);

struct NetOrder {
    std::size_t ordinary = 0;
    std::size_t indeterminate = 0;
    std::size_t total = 0;

    friend bool operator==(const NetOrder&, const NetOrder&) = default;
};

NetOrder order(const SemanticNet& net);

}  // namespace pfnsn

#endif  // PFNSN_CORE_HPP
