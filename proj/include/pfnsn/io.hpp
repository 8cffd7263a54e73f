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

#ifndef PFNSN_IO_HPP
#define PFNSN_IO_HPP

#include "pfnsn/core.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pfnsn {

class JsonError : public std::runtime_error {
public:
    enum class Kind : std::uint8_t { Malformed, Schema, Invariant };

    JsonError(Kind kind, std::string path, const std::string& message)
        : std::runtime_error(path + ": " + message), kind_(kind), path_(std::move(path)) {}

    Kind kind() const noexcept { return kind_; }
    /// JSONPath-style location, e.g. "$.edges[0].src".
    const std::string& path() const noexcept { return path_; }

private:
    Kind kind_;
    std::string path_;
};

/// Keys in fixed order: mode, name, scale, [directed], vertices, edges.
/// "directed" is written only for undirected nets. Degrees are encoded as
/// {"d": 2.4}, indeterminacies as {"i": 0.5}.
std::string to_json(const SemanticNet& net, int indent = 2);

/// Treats the document as untrusted: every field and net invariant is
/// checked and failures carry the JSON path of the offending value.
SemanticNet from_json(std::string_view document);

/// Graphviz rendering. Vertex labels show the normalized triple, edge labels
/// the relation word and raw degrees; indeterminate elements are dotted.
std::string to_dot(const SemanticNet& net);

}  // namespace pfnsn

#endif  // PFNSN_IO_HPP
