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

#include "pfnsn/analysis.hpp"

#include "numfmt.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pfnsn {

NormalizedTriple normalize(const ChannelTriple& triple, const Scale& scale) {
    std::array<double, 3> out{};
    bool indeterminate = false;
    for (std::size_t k = 0; k < 3; ++k) {
        const NeutroValue& v = triple[k];
        if (v.is_indeterminate()) {
            indeterminate = true;
            continue;
        }
        if (!(v.magnitude >= 0.0 && v.magnitude <= scale[k])) {
            throw NetError(NetError::Code::OutOfRange,
                           "channel " + std::to_string(k + 1) + " degree " + detail::format_number(v.magnitude) +
                               " outside [0, " + detail::format_number(scale[k]) + "]",
                           k);
        }
        out[k] = v.magnitude / scale[k];
    }
    return {out[0], out[1], out[2], indeterminate};
}

NormalizedTriple combine(const NormalizedTriple& edge, const NormalizedTriple& neighbor) {
    return {(edge.p + neighbor.p) / 2.0, (edge.u + neighbor.u) / 2.0, (edge.n + neighbor.n) / 2.0,
            edge.has_indeterminacy || neighbor.has_indeterminacy};
}

double polarity_score(const NormalizedTriple& t) { return t.p - t.n; }

SelectionResult polar_select(const SemanticNet& net, VertexId from, Preference preference) {
    if (!net.contains(from)) {
        throw NetError(NetError::Code::UnknownVertex, "unknown vertex id " + std::to_string(from.index));
    }

    SelectionResult result;
    for (const Edge& e : net.edges()) {
        VertexId other;
        if (e.src == from) {
            other = e.dst;
        } else if (!net.directed() && e.dst == from) {
            other = e.src;
        } else {
            continue;
        }
        NormalizedTriple combined =
            combine(normalize(e.weight, net.scale()), normalize(net.vertex(other).membership, net.scale()));
        result.ranked.push_back({other, combined, polarity_score(combined)});
    }

    const auto tail = [&net](const RankedNeighbor& a, const RankedNeighbor& b) {
        const std::string& la = net.vertex(a.vertex).label;
        const std::string& lb = net.vertex(b.vertex).label;
        if (la != lb) {
            return la < lb;
        }
        return a.vertex < b.vertex;
    };

    std::sort(result.ranked.begin(), result.ranked.end(),
              [&](const RankedNeighbor& a, const RankedNeighbor& b) {
                  switch (preference) {
                      case Preference::Positive:
                          if (a.score != b.score) return a.score > b.score;
                          break;
                      case Preference::Negative:
                          if (a.score != b.score) return a.score < b.score;
                          break;
                      case Preference::Neutral:
                          if (a.combined.u != b.combined.u) return a.combined.u > b.combined.u;
                          return tail(a, b);
                  }
                  if (a.combined.u != b.combined.u) return a.combined.u < b.combined.u;
                  return tail(a, b);
              });
    return result;
}

PolaritySummary net_polarity(const SemanticNet& net, double threshold) {
    if (net.vertices().empty()) {
        throw std::invalid_argument("net polarity is undefined for an empty net");
    }
    NormalizedTriple sum;
    const auto add = [&sum, &net](const ChannelTriple& triple) {
        NormalizedTriple t = normalize(triple, net.scale());
        sum.p += t.p;
        sum.u += t.u;
        sum.n += t.n;
        sum.has_indeterminacy = sum.has_indeterminacy || t.has_indeterminacy;
    };
    for (const Vertex& v : net.vertices()) {
        add(v.membership);
    }
    for (const Edge& e : net.edges()) {
        add(e.weight);
    }
    const auto count = static_cast<double>(net.vertices().size() + net.edges().size());

    PolaritySummary out;
    out.summary = {sum.p / count, sum.u / count, sum.n / count, sum.has_indeterminacy};
    out.score = polarity_score(out.summary);
    if (out.score > threshold) {
        out.label = PolarityLabel::Positive;
    } else if (out.score < -threshold) {
        out.label = PolarityLabel::Negative;
    } else {
        out.label = PolarityLabel::Neutral;
    }
    return out;
}

const char* to_string(PolarityLabel label) {
    switch (label) {
        case PolarityLabel::Positive: return "positive";
        case PolarityLabel::Negative: return "negative";
        case PolarityLabel::Neutral: break;
    }
    return "neutral";
}

}  // namespace pfnsn
