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

#ifndef PFNSN_DSL_HPP
#define PFNSN_DSL_HPP

#include "pfnsn/core.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pfnsn {

/// Line-oriented net description (`.pnet`):
///
///   # comment
///   net pfnsn "S3" scale 3 2 1
///   vertex Bob (3.0, 0, 0)
///   vertex healthy (3.0, 0, 0)
///   edge Bob -> healthy label "quite" (2.7, 0, 0)
///   vertex N1 (0.5I, 0, I) indeterminate
///
/// Vertex labels are identifier tokens or quoted strings. `0.5I` is 0.5*I and
/// a bare `I` is 1.0*I. An optional trailing `undirected` on the header makes
/// the net undirected.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, std::string message, std::string snippet);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }
    const std::string& snippet() const noexcept { return snippet_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
    std::string snippet_;
};

/// Throws ParseError at the first problem, be it syntax or a net invariant.
SemanticNet parse_net(std::string_view source);

/// Canonical text: header with explicit scale, then vertices and edges in
/// insertion order. parse_net(format_net(n)) == n.
std::string format_net(const SemanticNet& net);

}  // namespace pfnsn

#endif  // PFNSN_DSL_HPP
