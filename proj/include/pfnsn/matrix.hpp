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

#ifndef PFNSN_MATRIX_HPP
#define PFNSN_MATRIX_HPP

#include "pfnsn/core.hpp"

#include <array>
#include <string>
#include <vector>

namespace pfnsn {

/// Row r is the membership triple of vertex r (insertion order).
struct MembershipMatrix {
    std::vector<std::string> labels;
    std::vector<ChannelTriple> rows;

    friend bool operator==(const MembershipMatrix&, const MembershipMatrix&) = default;
};

/// Three |V| x |V| slices. slices[k][i][j] is the channel-k weight of the
/// edge from vertex i to vertex j, or 0 when there is no such edge.
/// Undirected nets fill both (i, j) and (j, i).
struct AdjacencyTensor {
    using Slice = std::vector<std::vector<NeutroValue>>;

    std::vector<std::string> labels;
    std::array<Slice, 3> slices;

    std::size_t size() const noexcept { return labels.size(); }
    const NeutroValue& at(std::size_t k, std::size_t i, std::size_t j) const { return slices.at(k).at(i).at(j); }

    friend bool operator==(const AdjacencyTensor&, const AdjacencyTensor&) = default;
};

class MatrixError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

MembershipMatrix membership_matrix(const SemanticNet& net);
AdjacencyTensor adjacency_tensor(const SemanticNet& net);

/// Inverse of the two extractors. One directed edge per (i, j) whose channel
/// triple is not all zero, in row-major order, with empty relation labels.
/// Vertices and edges are flagged indeterminate when any of their entries is.
///
/// Throws MatrixError on shape or label mismatch, NetError when an entry
/// breaks a net invariant.
SemanticNet from_matrices(NetMode mode, std::string name, Scale scale, const MembershipMatrix& membership,
                          const AdjacencyTensor& tensor);

}  // namespace pfnsn

#endif  // PFNSN_MATRIX_HPP
