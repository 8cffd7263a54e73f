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

#ifndef PFNSN_TESTS_TEST_SUPPORT_HPP
#define PFNSN_TESTS_TEST_SUPPORT_HPP

#include "pfnsn/core.hpp"
#include "pfnsn/dsl.hpp"

#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace pfnsn::test {

inline std::string fixture_path(const std::string& name) { return std::string(PFNSN_FIXTURE_DIR) + "/" + name; }

inline std::string read_fixture(const std::string& name) {
    std::ifstream in(fixture_path(name), std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline SemanticNet load_fixture(const std::string& name) { return parse_net(read_fixture(name)); }

struct GenOptions {
    std::size_t max_vertices = 8;
    bool nonzero_edges = false;       // skip all-zero edge weights
    bool flags_follow_entries = false;  // indeterminate flag <=> some entry is nI
    bool allow_indeterminate = true;
    bool exotic_labels = true;        // quotes, spaces, UTF-8
    bool allow_undirected = true;
};

// Random valid nets for property tests.
class NetGenerator {
public:
    explicit NetGenerator(std::uint64_t seed) : rng_(seed) {}

    std::mt19937_64& rng() { return rng_; }

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

    Scale scale() {
        if (coin(0.3)) {
            return kDefaultScale;
        }
        return {uniform(0.1, 10.0), uniform(0.1, 10.0), uniform(0.1, 10.0)};
    }

    NeutroValue value(NetMode mode, double max, bool allow_indeterminate) {
        const std::size_t pick = below(allow_indeterminate ? 5 : 4);
        if (pick == 4) {
            return NeutroValue::indeterminate(coin(0.3) ? 1.0 : uniform(1e-6, 1.0));
        }
        if (mode == NetMode::PNSN) {
            return NeutroValue::determinate(coin() ? 0.0 : max);
        }
        switch (pick) {
            case 0: return NeutroValue::determinate(0.0);
            case 1: return NeutroValue::determinate(max);
            default: return NeutroValue::determinate(uniform(0.0, max));
        }
    }

    ChannelTriple triple(NetMode mode, const Scale& scale, bool allow_indeterminate) {
        return {value(mode, scale[0], allow_indeterminate), value(mode, scale[1], allow_indeterminate),
                value(mode, scale[2], allow_indeterminate)};
    }

    std::string label(std::size_t i, bool exotic) {
        static const std::vector<std::string> odd{"two words", "qu\"ote", "back\\slash", "caf\xC3\xA9",
                                                  "tab\there",  "I",       "1.5",          "label"};
        if (exotic && coin(0.25)) {
            return odd[below(odd.size())] + std::to_string(i);
        }
        static const char* alphabet = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_";
        std::string s;
        const std::size_t len = 1 + below(6);
        for (std::size_t k = 0; k < len; ++k) {
            s += alphabet[below(63)];
        }
        return s + "_" + std::to_string(i);
    }

    SemanticNet net(const GenOptions& opt = {}) {
        const auto mode = static_cast<NetMode>(below(3));
        const Scale sc = scale();
        const bool directed = !opt.allow_undirected || coin(0.8);
        std::string name = coin(0.5) ? "net" + std::to_string(below(1000)) : label(0, opt.exotic_labels);
        SemanticNet out(mode, name, sc, directed);

        const std::size_t n = below(opt.max_vertices + 1);
        for (std::size_t i = 0; i < n; ++i) {
            ChannelTriple m = triple(mode, sc, opt.allow_indeterminate);
            const bool flag = opt.flags_follow_entries ? m.any_indeterminate() : coin(0.2);
            out.add_vertex(label(i, opt.exotic_labels), m, flag && opt.allow_indeterminate);
        }
        if (n >= 2) {
            const std::size_t attempts = below(n * n);
            for (std::size_t a = 0; a < attempts; ++a) {
                VertexId s{below(n)};
                VertexId d{below(n)};
                if (s == d || out.find_edge(s, d)) {
                    continue;
                }
                ChannelTriple w = triple(mode, sc, opt.allow_indeterminate);
                if (opt.nonzero_edges && w.all_zero()) {
                    w[0] = NeutroValue::determinate(sc[0]);
                }
                const bool flag = opt.flags_follow_entries ? w.any_indeterminate() : coin(0.2);
                std::string rel = coin(0.5) ? std::string() : label(a, opt.exotic_labels);
                out.add_edge(s, d, rel, w, flag && opt.allow_indeterminate);
            }
        }
        return out;
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace pfnsn::test

#endif  // PFNSN_TESTS_TEST_SUPPORT_HPP
