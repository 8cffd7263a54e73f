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

#include "pfnsn/matrix.hpp"

namespace pfnsn {

namespace {

std::vector<std::string> labels_of(const SemanticNet& net) {
    std::vector<std::string> labels;
    labels.reserve(net.vertices().size());
    for (const Vertex& v : net.vertices()) {
        labels.push_back(v.label);
    }
    return labels;
}

}  // namespace

MembershipMatrix membership_matrix(const SemanticNet& net) {
    MembershipMatrix m;
    m.labels = labels_of(net);
    m.rows.reserve(net.vertices().size());
    for (const Vertex& v : net.vertices()) {
        m.rows.push_back(v.membership);
    }
    return m;
}

AdjacencyTensor adjacency_tensor(const SemanticNet& net) {
    const std::size_t n = net.vertices().size();
    AdjacencyTensor t;
    t.labels = labels_of(net);
    for (auto& slice : t.slices) {
        slice.assign(n, std::vector<NeutroValue>(n));
    }
    for (const Edge& e : net.edges()) {
        for (std::size_t k = 0; k < 3; ++k) {
            t.slices[k][e.src.index][e.dst.index] = e.weight[k];
            if (!net.directed()) {
                t.slices[k][e.dst.index][e.src.index] = e.weight[k];
            }
        }
    }
    return t;
}

SemanticNet from_matrices(NetMode mode, std::string name, Scale scale, const MembershipMatrix& membership,
                          const AdjacencyTensor& tensor) {
    const std::size_t n = membership.rows.size();
    if (membership.labels.size() != n) {
        throw MatrixError("membership matrix has " + std::to_string(n) + " rows but " +
                          std::to_string(membership.labels.size()) + " labels");
    }
    if (tensor.labels.size() != n) {
        throw MatrixError("dimension mismatch: membership has " + std::to_string(n) + " rows, tensor is " +
                          std::to_string(tensor.labels.size()) + " wide");
    }
    for (std::size_t k = 0; k < 3; ++k) {
        if (tensor.slices[k].size() != n) {
            throw MatrixError("dimension mismatch: slice " + std::to_string(k + 1) + " has " +
                              std::to_string(tensor.slices[k].size()) + " rows, expected " + std::to_string(n));
        }
        for (const auto& row : tensor.slices[k]) {
            if (row.size() != n) {
                throw MatrixError("dimension mismatch: slice " + std::to_string(k + 1) + " is not square");
            }
        }
    }
    if (membership.labels != tensor.labels) {
        throw MatrixError("label mismatch between membership matrix and adjacency tensor");
    }

    SemanticNet net(mode, std::move(name), scale);
    for (std::size_t i = 0; i < n; ++i) {
        const ChannelTriple& row = membership.rows[i];
        net.add_vertex(membership.labels[i], row, row.any_indeterminate());
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            ChannelTriple w(tensor.slices[0][i][j], tensor.slices[1][i][j], tensor.slices[2][i][j]);
            if (!w.all_zero()) {
                net.add_edge(VertexId{i}, VertexId{j}, {}, w, w.any_indeterminate());
            }
        }
    }
    return net;
}

}  // namespace pfnsn
