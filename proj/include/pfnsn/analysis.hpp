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

#ifndef PFNSN_ANALYSIS_HPP
#define PFNSN_ANALYSIS_HPP

#include "pfnsn/core.hpp"

#include <vector>

namespace pfnsn {

/// A channel triple mapped onto [0, 1] by dividing each determinate degree by
/// its channel maximum. Indeterminate channels contribute 0 and raise the flag.
struct NormalizedTriple {
    double p = 0.0;
    double u = 0.0;
    double n = 0.0;
    bool has_indeterminacy = false;

    friend bool operator==(const NormalizedTriple&, const NormalizedTriple&) = default;
};

/// Throws NetError(OutOfRange) when a determinate degree lies outside
/// [0, scale].
NormalizedTriple normalize(const ChannelTriple& triple, const Scale& scale);

/// Channel-wise mean; indeterminacy flags are OR-ed.
NormalizedTriple combine(const NormalizedTriple& edge, const NormalizedTriple& neighbor);

/// p - n, in [-1, 1].
double polarity_score(const NormalizedTriple& t);

enum class Preference { Positive, Neutral, Negative };

struct RankedNeighbor {
    VertexId vertex;
    NormalizedTriple combined;
    double score = 0.0;
};

struct SelectionResult {
    std::vector<RankedNeighbor> ranked;
};

/// Ranks the neighbours reachable from `from` (out-neighbours; all incident
/// neighbours for undirected nets) by combining the normalized edge weight
/// with the normalized neighbour membership.
///
/// Positive sorts by score descending, Negative by score ascending, Neutral
/// by u descending. Ties fall back to lower u (Positive/Negative only), then
/// label, then insertion order.
SelectionResult polar_select(const SemanticNet& net, VertexId from, Preference preference);

enum class PolarityLabel { Positive, Neutral, Negative };

struct PolaritySummary {
    NormalizedTriple summary;
    double score = 0.0;
    PolarityLabel label = PolarityLabel::Neutral;
};

/// Mean of every normalized vertex membership and edge weight. Labelled
/// positive above `threshold`, negative below `-threshold`.
/// Throws std::invalid_argument on an empty net.
PolaritySummary net_polarity(const SemanticNet& net, double threshold = 0.1);

const char* to_string(PolarityLabel label);

}  // namespace pfnsn

#endif  // PFNSN_ANALYSIS_HPP
