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

#include "pfnsn/pfnsn.h"

#include "pfnsn/analysis.hpp"
#include "pfnsn/core.hpp"
#include "pfnsn/dsl.hpp"
#include "pfnsn/io.hpp"
#include "pfnsn/matrix.hpp"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

struct pfnsn_net {
    pfnsn::SemanticNet net;
};

namespace {

using namespace pfnsn;

struct ErrorState {
    pfnsn_status status = PFNSN_OK;
    std::string message;
    std::size_t line = 0;
    std::size_t column = 0;
    std::string snippet;
    std::string path;
};

thread_local ErrorState g_error;

pfnsn_status set_error(pfnsn_status status, std::string message) {
    g_error = ErrorState{};
    g_error.status = status;
    g_error.message = std::move(message);
    return status;
}

pfnsn_status net_status(NetError::Code code) {
    switch (code) {
        case NetError::Code::InvalidScale:
        case NetError::Code::OutOfRange: return PFNSN_ERR_RANGE;
        case NetError::Code::DuplicateLabel:
        case NetError::Code::DuplicateEdge: return PFNSN_ERR_DUPLICATE;
        case NetError::Code::UnknownVertex: return PFNSN_ERR_NOT_FOUND;
        case NetError::Code::Loop: return PFNSN_ERR_LOOP;
        case NetError::Code::EmptyLabel: break;
    }
    return PFNSN_ERR_INVALID_ARGUMENT;
}

// Runs `body`, translating exceptions into status codes and error state.
template <typename F>
pfnsn_status guarded(F&& body) noexcept {
    try {
        body();
        return PFNSN_OK;
    } catch (const ParseError& e) {
        set_error(PFNSN_ERR_PARSE, e.message());
        g_error.line = e.line();
        g_error.column = e.column();
        g_error.snippet = e.snippet();
        return PFNSN_ERR_PARSE;
    } catch (const JsonError& e) {
        set_error(PFNSN_ERR_JSON, e.what());
        g_error.path = e.path();
        return PFNSN_ERR_JSON;
    } catch (const NetError& e) {
        return set_error(net_status(e.code()), e.what());
    } catch (const MatrixError& e) {
        return set_error(PFNSN_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return set_error(PFNSN_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return set_error(PFNSN_ERR_INTERNAL, e.what());
    } catch (...) {
        return set_error(PFNSN_ERR_INTERNAL, "unknown exception");
    }
}

pfnsn_status null_argument(const char* name) {
    return set_error(PFNSN_ERR_INVALID_ARGUMENT, std::string("null argument: ") + name);
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.data(), s.size() + 1);
    return out;
}

bool valid_mode(pfnsn_mode mode) { return mode >= PFNSN_MODE_FNSN && mode <= PFNSN_MODE_PFNSN; }

NeutroValue from_c(const pfnsn_value& v) {
    return v.indeterminate ? NeutroValue::indeterminate(v.magnitude) : NeutroValue::determinate(v.magnitude);
}

pfnsn_value to_c(const NeutroValue& v) { return {v.is_indeterminate() ? 1 : 0, v.magnitude}; }

ChannelTriple from_c(const pfnsn_triple& t) {
    return {from_c(t.channel[0]), from_c(t.channel[1]), from_c(t.channel[2])};
}

pfnsn_triple to_c(const ChannelTriple& t) { return {{to_c(t[0]), to_c(t[1]), to_c(t[2])}}; }

pfnsn_normalized to_c(const NormalizedTriple& t) { return {t.p, t.u, t.n, t.has_indeterminacy ? 1 : 0}; }

NormalizedTriple from_c(const pfnsn_normalized& t) { return {t.p, t.u, t.n, t.has_indeterminacy != 0}; }

Scale scale_or_default(const double* scale) {
    return scale == nullptr ? kDefaultScale : Scale{scale[0], scale[1], scale[2]};
}

pfnsn_status wrap(SemanticNet net, pfnsn_net** out) {
    *out = new pfnsn_net{std::move(net)};
    return PFNSN_OK;
}

}  // namespace

extern "C" {

const char* pfnsn_version(void) { return "1.0.0"; }

const char* pfnsn_status_string(pfnsn_status status) {
    switch (status) {
        case PFNSN_OK: return "ok";
        case PFNSN_ERR_INVALID_ARGUMENT: return "invalid argument";
        case PFNSN_ERR_PARSE: return "parse error";
        case PFNSN_ERR_JSON: return "json error";
        case PFNSN_ERR_RANGE: return "value out of range";
        case PFNSN_ERR_DUPLICATE: return "duplicate";
        case PFNSN_ERR_NOT_FOUND: return "not found";
        case PFNSN_ERR_LOOP: return "loop rejected";
        case PFNSN_ERR_BUFFER_TOO_SMALL: return "buffer too small";
        case PFNSN_ERR_EMPTY: return "empty net";
        case PFNSN_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

pfnsn_error pfnsn_last_error(void) {
    return {g_error.status, g_error.message.c_str(), g_error.line,
            g_error.column, g_error.snippet.c_str(), g_error.path.c_str()};
}

void pfnsn_string_free(char* s) { std::free(s); }

pfnsn_status pfnsn_net_create(pfnsn_mode mode, const char* name, const double* scale, int directed,
                              pfnsn_net** out) {
    if (out == nullptr) return null_argument("out");
    if (!valid_mode(mode)) return set_error(PFNSN_ERR_INVALID_ARGUMENT, "unknown mode");
    return guarded([&] {
        wrap(SemanticNet(static_cast<NetMode>(mode), name ? name : "", scale_or_default(scale), directed != 0), out);
    });
}

void pfnsn_net_destroy(pfnsn_net* net) { delete net; }

pfnsn_status pfnsn_net_clone(const pfnsn_net* net, pfnsn_net** out) {
    if (net == nullptr) return null_argument("net");
    if (out == nullptr) return null_argument("out");
    return guarded([&] { wrap(net->net, out); });
}

pfnsn_status pfnsn_net_with_mode(const pfnsn_net* net, pfnsn_mode mode, pfnsn_net** out) {
    if (net == nullptr) return null_argument("net");
    if (out == nullptr) return null_argument("out");
    if (!valid_mode(mode)) return set_error(PFNSN_ERR_INVALID_ARGUMENT, "unknown mode");
    return guarded([&] { wrap(net->net.with_mode(static_cast<NetMode>(mode)), out); });
}

pfnsn_status pfnsn_net_add_vertex(pfnsn_net* net, const char* label, const pfnsn_triple* membership,
                                  int indeterminate, size_t* out_id) {
    if (net == nullptr) return null_argument("net");
    if (label == nullptr) return null_argument("label");
    if (membership == nullptr) return null_argument("membership");
    return guarded([&] {
        VertexId id = net->net.add_vertex(label, from_c(*membership), indeterminate != 0);
        if (out_id != nullptr) *out_id = id.index;
    });
}

pfnsn_status pfnsn_net_add_edge(pfnsn_net* net, size_t src, size_t dst, const char* label,
                                const pfnsn_triple* weight, int indeterminate, size_t* out_id) {
    if (net == nullptr) return null_argument("net");
    if (weight == nullptr) return null_argument("weight");
    return guarded([&] {
        EdgeId id = net->net.add_edge(VertexId{src}, VertexId{dst}, label ? label : "", from_c(*weight),
                                      indeterminate != 0);
        if (out_id != nullptr) *out_id = id.index;
    });
}

pfnsn_status pfnsn_net_parse(const char* source, size_t length, pfnsn_net** out) {
    if (source == nullptr && length != 0) return null_argument("source");
    if (out == nullptr) return null_argument("out");
    return guarded([&] { wrap(parse_net(std::string_view(source ? source : "", length)), out); });
}

pfnsn_status pfnsn_net_from_json(const char* document, size_t length, pfnsn_net** out) {
    if (document == nullptr && length != 0) return null_argument("document");
    if (out == nullptr) return null_argument("out");
    return guarded([&] { wrap(from_json(std::string_view(document ? document : "", length)), out); });
}

pfnsn_status pfnsn_net_format(const pfnsn_net* net, char** out) {
    if (net == nullptr) return null_argument("net");
    if (out == nullptr) return null_argument("out");
    return guarded([&] { *out = copy_string(format_net(net->net)); });
}

pfnsn_status pfnsn_net_to_json(const pfnsn_net* net, char** out) {
    if (net == nullptr) return null_argument("net");
    if (out == nullptr) return null_argument("out");
    return guarded([&] { *out = copy_string(to_json(net->net)); });
}

pfnsn_status pfnsn_net_to_dot(const pfnsn_net* net, char** out) {
    if (net == nullptr) return null_argument("net");
    if (out == nullptr) return null_argument("out");
    return guarded([&] { *out = copy_string(to_dot(net->net)); });
}

pfnsn_mode pfnsn_net_mode(const pfnsn_net* net) {
    return net == nullptr ? PFNSN_MODE_PFNSN : static_cast<pfnsn_mode>(net->net.mode());
}

const char* pfnsn_net_name(const pfnsn_net* net) { return net == nullptr ? "" : net->net.name().c_str(); }

void pfnsn_net_scale(const pfnsn_net* net, double out_scale[3]) {
    if (net == nullptr || out_scale == nullptr) return;
    for (std::size_t k = 0; k < 3; ++k) {
        out_scale[k] = net->net.scale()[k];
    }
}

int pfnsn_net_directed(const pfnsn_net* net) { return net != nullptr && net->net.directed() ? 1 : 0; }

size_t pfnsn_net_vertex_count(const pfnsn_net* net) { return net == nullptr ? 0 : net->net.vertices().size(); }

size_t pfnsn_net_edge_count(const pfnsn_net* net) { return net == nullptr ? 0 : net->net.edges().size(); }

const char* pfnsn_net_vertex_label(const pfnsn_net* net, size_t id) {
    if (net == nullptr || !net->net.contains(VertexId{id})) return nullptr;
    return net->net.vertices()[id].label.c_str();
}

int pfnsn_net_vertex_indeterminate(const pfnsn_net* net, size_t id) {
    if (net == nullptr || !net->net.contains(VertexId{id})) return 0;
    return net->net.vertices()[id].indeterminate ? 1 : 0;
}

pfnsn_status pfnsn_net_find_vertex(const pfnsn_net* net, const char* label, size_t* out_id) {
    if (net == nullptr) return null_argument("net");
    if (label == nullptr) return null_argument("label");
    auto id = net->net.find_vertex(label);
    if (!id) return set_error(PFNSN_ERR_NOT_FOUND, std::string("unknown vertex '") + label + "'");
    if (out_id != nullptr) *out_id = id->index;
    return PFNSN_OK;
}

pfnsn_status pfnsn_net_edge(const pfnsn_net* net, size_t index, pfnsn_edge_info* out) {
    if (net == nullptr) return null_argument("net");
    if (out == nullptr) return null_argument("out");
    if (index >= net->net.edges().size()) {
        return set_error(PFNSN_ERR_NOT_FOUND, "edge index " + std::to_string(index) + " out of range");
    }
    const Edge& e = net->net.edges()[index];
    *out = {e.src.index, e.dst.index, e.label.c_str(), e.indeterminate ? 1 : 0, to_c(e.weight)};
    return PFNSN_OK;
}

pfnsn_status pfnsn_net_validate(const pfnsn_net* net, size_t* error_count, size_t* warning_count, char** report) {
    if (net == nullptr) return null_argument("net");
    return guarded([&] {
        const auto violations = validate(net->net);
        std::size_t errors = 0;
        std::string text;
        for (const Violation& v : violations) {
            if (v.severity == Violation::Severity::Error) {
                ++errors;
            } else {
                text += "warning: ";
            }
            text += v.message + "\n";
        }
        if (error_count != nullptr) *error_count = errors;
        if (warning_count != nullptr) *warning_count = violations.size() - errors;
        if (report != nullptr) *report = copy_string(text);
    });
}

pfnsn_status pfnsn_net_classify(const pfnsn_net* net, pfnsn_graph_class* out) {
    if (net == nullptr) return null_argument("net");
    if (out == nullptr) return null_argument("out");
    const GraphClass c = classify(net->net);
    *out = {c.has_indeterminate_vertex, c.has_indeterminate_edge,   c.is_point_graph,
            c.is_edge_graph,            c.is_strongly_neutrosophic, c.is_neutrosophic_simple};
    return PFNSN_OK;
}

pfnsn_status pfnsn_net_order(const pfnsn_net* net, pfnsn_order* out) {
    if (net == nullptr) return null_argument("net");
    if (out == nullptr) return null_argument("out");
    const NetOrder o = order(net->net);
    *out = {o.ordinary, o.indeterminate, o.total};
    return PFNSN_OK;
}

pfnsn_status pfnsn_net_membership(const pfnsn_net* net, pfnsn_triple* rows, size_t capacity, size_t* required) {
    if (net == nullptr) return null_argument("net");
    const MembershipMatrix m = membership_matrix(net->net);
    if (required != nullptr) *required = m.rows.size();
    if ((rows == nullptr && !m.rows.empty()) || capacity < m.rows.size()) {
        return set_error(PFNSN_ERR_BUFFER_TOO_SMALL, "membership buffer needs " + std::to_string(m.rows.size()) +
                                                         " rows");
    }
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
        rows[i] = to_c(m.rows[i]);
    }
    return PFNSN_OK;
}

pfnsn_status pfnsn_net_adjacency(const pfnsn_net* net, pfnsn_value* slices, size_t capacity, size_t* required) {
    if (net == nullptr) return null_argument("net");
    const std::size_t n = net->net.vertices().size();
    const std::size_t need = 3 * n * n;
    if (required != nullptr) *required = need;
    if ((slices == nullptr && need != 0) || capacity < need) {
        return set_error(PFNSN_ERR_BUFFER_TOO_SMALL, "adjacency buffer needs " + std::to_string(need) + " values");
    }
    return guarded([&] {
        const AdjacencyTensor t = adjacency_tensor(net->net);
        for (std::size_t k = 0; k < 3; ++k) {
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    slices[k * n * n + i * n + j] = to_c(t.slices[k][i][j]);
                }
            }
        }
    });
}

pfnsn_status pfnsn_net_from_matrices(pfnsn_mode mode, const char* name, const double* scale,
                                     const char* const* labels, size_t n, const pfnsn_triple* rows,
                                     const pfnsn_value* slices, pfnsn_net** out) {
    if (out == nullptr) return null_argument("out");
    if (!valid_mode(mode)) return set_error(PFNSN_ERR_INVALID_ARGUMENT, "unknown mode");
    if (n != 0 && (labels == nullptr || rows == nullptr || slices == nullptr)) return null_argument("matrices");
    return guarded([&] {
        MembershipMatrix m;
        AdjacencyTensor t;
        for (std::size_t i = 0; i < n; ++i) {
            if (labels[i] == nullptr) {
                throw MatrixError("null label at row " + std::to_string(i));
            }
            m.labels.emplace_back(labels[i]);
            m.rows.push_back(from_c(rows[i]));
        }
        t.labels = m.labels;
        for (std::size_t k = 0; k < 3; ++k) {
            t.slices[k].assign(n, std::vector<NeutroValue>(n));
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    t.slices[k][i][j] = from_c(slices[k * n * n + i * n + j]);
                }
            }
        }
        wrap(from_matrices(static_cast<NetMode>(mode), name ? name : "", scale_or_default(scale), m, t), out);
    });
}

pfnsn_status pfnsn_normalize(const pfnsn_triple* triple, const double scale[3], pfnsn_normalized* out) {
    if (triple == nullptr) return null_argument("triple");
    if (out == nullptr) return null_argument("out");
    return guarded([&] { *out = to_c(normalize(from_c(*triple), scale_or_default(scale))); });
}

pfnsn_normalized pfnsn_combine(pfnsn_normalized edge, pfnsn_normalized neighbor) {
    return to_c(combine(from_c(edge), from_c(neighbor)));
}

double pfnsn_polarity_score(pfnsn_normalized t) { return polarity_score(from_c(t)); }

pfnsn_status pfnsn_polar_select(const pfnsn_net* net, size_t vertex, pfnsn_preference preference,
                                pfnsn_ranked* ranked, size_t capacity, size_t* count) {
    if (net == nullptr) return null_argument("net");
    if (preference < PFNSN_PREFER_POSITIVE || preference > PFNSN_PREFER_NEGATIVE) {
        return set_error(PFNSN_ERR_INVALID_ARGUMENT, "unknown preference");
    }
    SelectionResult result;
    const pfnsn_status status = guarded(
        [&] { result = polar_select(net->net, VertexId{vertex}, static_cast<Preference>(preference)); });
    if (status != PFNSN_OK) return status;
    if (count != nullptr) *count = result.ranked.size();
    if (ranked == nullptr) return PFNSN_OK;
    if (capacity < result.ranked.size()) {
        return set_error(PFNSN_ERR_BUFFER_TOO_SMALL,
                         "selection buffer needs " + std::to_string(result.ranked.size()) + " entries");
    }
    for (std::size_t i = 0; i < result.ranked.size(); ++i) {
        const RankedNeighbor& r = result.ranked[i];
        ranked[i] = {r.vertex.index, to_c(r.combined), r.score};
    }
    return PFNSN_OK;
}

pfnsn_status pfnsn_net_polarity(const pfnsn_net* net, double threshold, pfnsn_normalized* summary, double* score,
                                pfnsn_polarity_label* label) {
    if (net == nullptr) return null_argument("net");
    if (net->net.vertices().empty()) return set_error(PFNSN_ERR_EMPTY, "net polarity is undefined for an empty net");
    return guarded([&] {
        const PolaritySummary s = net_polarity(net->net, threshold);
        if (summary != nullptr) *summary = to_c(s.summary);
        if (score != nullptr) *score = s.score;
        if (label != nullptr) {
            switch (s.label) {
                case PolarityLabel::Positive: *label = PFNSN_POLARITY_POSITIVE; break;
                case PolarityLabel::Neutral: *label = PFNSN_POLARITY_NEUTRAL; break;
                case PolarityLabel::Negative: *label = PFNSN_POLARITY_NEGATIVE; break;
            }
        }
    });
}

}  // extern "C"
