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

#ifndef PFNSN_SRC_NUMFMT_HPP
#define PFNSN_SRC_NUMFMT_HPP

#include "pfnsn/core.hpp"

#include <charconv>
#include <string>

namespace pfnsn::detail {

// Shortest fixed-notation text that reads back to the same double.
inline std::string format_number(double value) {
    char buf[512];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed);
    if (ec != std::errc{}) {
        return std::to_string(value);
    }
    return std::string(buf, end);
}

// "2.4", "0.5I", or "I" for a unit indeterminacy.
inline std::string format_value(const NeutroValue& v) {
    if (!v.is_indeterminate()) {
        return format_number(v.magnitude);
    }
    if (v.magnitude == 1.0) {
        return "I";
    }
    return format_number(v.magnitude) + "I";
}

}  // namespace pfnsn::detail

#endif  // PFNSN_SRC_NUMFMT_HPP
