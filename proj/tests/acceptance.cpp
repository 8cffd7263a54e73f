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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.
// Usage: pfnsn_acceptance <path-to-pfnsn-cli>

#include "pfnsn/analysis.hpp"
#include "pfnsn/dsl.hpp"
#include "pfnsn/io.hpp"
#include "pfnsn/matrix.hpp"
#include "test_support.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace pfnsn;

namespace {

constexpr double kTolerance = 1e-9;

std::string cli_path;

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
    if (!ok) {
        throw Failure(what);
    }
}

struct CliResult {
    int status;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const std::string command = "\"" + cli_path + "\" " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    expect(pipe != nullptr, "cannot run " + command);
    std::string out;
    char buf[4096];
    for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, pipe)) > 0;) {
        out.append(buf, n);
    }
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::vector<std::string> words(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string w; in >> w;) {
        out.push_back(w);
    }
    return out;
}

// Tables printed by `matrices`: title -> rows of cells, header row excluded.
using Tables = std::map<std::string, std::vector<std::vector<std::string>>>;

Tables parse_tables(const std::string& text) {
    Tables out;
    std::istringstream in(text);
    std::string line;
    std::string title;
    bool header = false;
    while (std::getline(in, line)) {
        if (line.empty()) {
            title.clear();
            continue;
        }
        if (title.empty()) {
            title = words(line).front();
            header = true;
            continue;
        }
        if (header) {
            header = false;
            continue;
        }
        out[title].push_back(words(line));
    }
    return out;
}

using Rows = std::vector<std::pair<std::string, std::array<double, 3>>>;
using Nonzeros = std::vector<std::tuple<std::size_t, std::string, std::string, double>>;

void expect_membership(const SemanticNet& net, const Rows& expected) {
    const MembershipMatrix m = membership_matrix(net);
    expect(m.rows.size() == expected.size(), "membership row count");
    for (std::size_t i = 0; i < expected.size(); ++i) {
        expect(m.labels[i] == expected[i].first, "membership label " + expected[i].first);
        for (std::size_t k = 0; k < 3; ++k) {
            expect(m.rows[i][k] == NeutroValue::determinate(expected[i].second[k]),
                   "membership " + expected[i].first + " channel " + std::to_string(k + 1));
        }
    }
}

void expect_tensor(const SemanticNet& net, const Nonzeros& expected) {
    const AdjacencyTensor t = adjacency_tensor(net);
    Nonzeros actual;
    for (std::size_t k = 0; k < 3; ++k) {
        for (std::size_t i = 0; i < t.size(); ++i) {
            for (std::size_t j = 0; j < t.size(); ++j) {
                const NeutroValue& v = t.at(k, i, j);
                if (!v.is_zero()) {
                    expect(!v.is_indeterminate(), "unexpected indeterminate tensor entry");
                    actual.emplace_back(k + 1, t.labels[i], t.labels[j], v.magnitude);
                }
            }
        }
    }
    Nonzeros want = expected;
    std::sort(want.begin(), want.end());
    std::sort(actual.begin(), actual.end());
    expect(actual == want, "tensor nonzeros differ");
}

// Criterion 1: the CLI `matrices` output for S1, compared cell by cell.
void criterion_s1() {
    const CliResult r = run_cli("matrices \"" + test::fixture_path("s1.pnet") + "\"");
    expect(r.status == 0, "matrices exited " + std::to_string(r.status) + ": " + r.out);
    const Tables tables = parse_tables(r.out);
    const std::vector<std::vector<std::string>> membership{
        {"night", "3", "0", "0"}, {"cold", "3", "0", "0"}, {"hazy", "3", "0", "0"}, {"raining", "0", "0", "1"}};
    expect(tables.count("membership") && tables.at("membership") == membership, "membership table");
    const std::vector<std::string> labels{"night", "cold", "hazy", "raining"};
    const std::map<std::string, std::tuple<std::size_t, std::size_t, std::string>> nonzero{
        {"A_ij1", {0, 1, "2.4"}}, {"A_ij2", {0, 2, "1.4"}}, {"A_ij3", {0, 3, "1"}}};
    for (const auto& [title, cell] : nonzero) {
        expect(tables.count(title) == 1, "missing table " + title);
        const auto& rows = tables.at(title);
        expect(rows.size() == 4, title + " row count");
        for (std::size_t i = 0; i < 4; ++i) {
            expect(rows[i].size() == 5 && rows[i][0] == labels[i], title + " row " + labels[i]);
            for (std::size_t j = 0; j < 4; ++j) {
                const bool hit = i == std::get<0>(cell) && j == std::get<1>(cell);
                expect(rows[i][j + 1] == (hit ? std::get<2>(cell) : "0"),
                       title + "[" + labels[i] + "][" + labels[j] + "] = " + rows[i][j + 1]);
            }
        }
    }
    const SemanticNet s1 = test::load_fixture("s1.pnet");
    expect_membership(s1, {{"night", {3, 0, 0}}, {"cold", {3, 0, 0}}, {"hazy", {3, 0, 0}}, {"raining", {0, 0, 1.0}}});
    expect_tensor(s1, {{1, "night", "cold", 2.4}, {2, "night", "hazy", 1.4}, {3, "night", "raining", 1.0}});
}

// Criterion 2: S2 rows, six slice-2 entries of 2.0, validate as PNSN empty.
void criterion_s2() {
    const SemanticNet s2 = test::load_fixture("s2.pnet");
    expect(s2.mode() == NetMode::PNSN, "S2 fixture is not PNSN");
    expect_membership(s2, {{"protons", {3, 0, 0}},
                           {"positive", {3, 0, 0}},
                           {"neutrons", {0, 2, 0}},
                           {"neutral", {0, 2, 0}},
                           {"electrons", {0, 0, 1}},
                           {"negative", {0, 0, 1}},
                           {"atom", {0, 2, 0}}});
    expect_tensor(s2, {{2, "protons", "positive", 2.0},
                       {2, "neutrons", "neutral", 2.0},
                       {2, "electrons", "negative", 2.0},
                       {2, "atom", "protons", 2.0},
                       {2, "atom", "neutrons", 2.0},
                       {2, "atom", "electrons", 2.0}});
    expect(validate(s2).empty(), "validate(S2) is not empty");
}

// Criterion 3: S3 rows and tensor; PNSN validation fails, PFNSN passes.
void criterion_s3() {
    const SemanticNet s3 = test::load_fixture("s3.pnet");
    expect(s3.mode() == NetMode::PFNSN, "S3 fixture is not PFNSN");
    expect_membership(s3, {{"Bob", {3, 0, 0}}, {"healthy", {3, 0, 0}}, {"plump", {3, 0, 0}}, {"anaemic", {0, 0, 1.0}}});
    expect_tensor(s3, {{1, "Bob", "healthy", 2.7}, {2, "Bob", "plump", 1.4}, {3, "Bob", "anaemic", 0.3}});
    expect(validate(s3).empty(), "validate(S3) as PFNSN is not empty");
    expect(!validate(s3.with_mode(NetMode::PNSN)).empty(), "validate(S3) as PNSN is empty");
    const SemanticNet as_pnsn = test::load_fixture("s3_as_pnsn.pnet");
    expect(as_pnsn.mode() == NetMode::PNSN && has_errors(validate(as_pnsn)), "s3_as_pnsn.pnet validates");
}

// Criterion 4: selection from Bob, checked against a hand oracle built from
// the raw fixture literals, through both the CLI and the library.
void criterion_selection() {
    struct Expected {
        std::string label;
        double score;
    };
    // edge weight and neighbour membership as written in s3.pnet, scale (3, 2, 1)
    struct Raw {
        std::string label;
        double ep, eu, en, vp, vu, vn;
    };
    const std::vector<Raw> raw{{"healthy", 2.7, 0, 0, 3.0, 0, 0},
                               {"plump", 0, 1.4, 0, 3.0, 0, 0},
                               {"anaemic", 0, 0, 0.3, 0, 0, 1.0}};
    std::vector<Expected> oracle;
    for (const Raw& r : raw) {
        const double p = (r.ep / 3.0 + r.vp / 3.0) / 2.0;
        const double n = (r.en / 1.0 + r.vn / 1.0) / 2.0;
        oracle.push_back({r.label, p - n});
    }
    std::sort(oracle.begin(), oracle.end(), [](const Expected& a, const Expected& b) { return a.score > b.score; });
    const std::vector<Expected> stated{{"healthy", 0.95}, {"plump", 0.5}, {"anaemic", -0.65}};
    for (std::size_t i = 0; i < 3; ++i) {
        expect(oracle[i].label == stated[i].label && std::abs(oracle[i].score - stated[i].score) <= kTolerance,
               "oracle disagrees with expected ranking at " + std::to_string(i + 1));
    }

    const SemanticNet s3 = test::load_fixture("s3.pnet");
    const SelectionResult sel = polar_select(s3, *s3.find_vertex("Bob"), Preference::Positive);
    expect(sel.ranked.size() == 3, "library returned " + std::to_string(sel.ranked.size()) + " neighbours");
    for (std::size_t i = 0; i < 3; ++i) {
        expect(s3.vertex(sel.ranked[i].vertex).label == oracle[i].label, "library rank " + std::to_string(i + 1));
        expect(std::abs(sel.ranked[i].score - oracle[i].score) <= kTolerance,
               "library score for " + oracle[i].label);
    }

    const CliResult r = run_cli("select \"" + test::fixture_path("s3.pnet") + "\" --vertex Bob --prefer positive");
    expect(r.status == 0, "select exited " + std::to_string(r.status) + ": " + r.out);
    std::istringstream in(r.out);
    std::string line;
    for (std::size_t i = 0; i < 3; ++i) {
        expect(static_cast<bool>(std::getline(in, line)), "select printed fewer than 3 lines");
        const std::vector<std::string> w = words(line);
        expect(w.size() >= 3 && w[0] == std::to_string(i + 1) + "." && w[1] == oracle[i].label,
               "select line: " + line);
        expect(w[2].rfind("score=", 0) == 0, "select line: " + line);
        const double score = std::stod(w[2].substr(6));
        expect(std::abs(score - oracle[i].score) <= kTolerance, "select score: " + line);
    }
    expect(!std::getline(in, line), "select printed extra output");
}

// Criterion 5: fixtures are not neutrosophic; synthetic nets hit each flag.
void criterion_classification() {
    for (const char* name : {"s1.pnet", "s2.pnet", "s3.pnet"}) {
        const GraphClass c = classify(test::load_fixture(name));
        expect(!c.has_indeterminate_vertex && !c.has_indeterminate_edge && !c.is_point_graph && !c.is_edge_graph &&
                   !c.is_strongly_neutrosophic,
               std::string(name) + " has a neutrosophic flag set");
    }
    auto build = [](bool ind_vertex, bool ind_edge) {
        SemanticNet net(NetMode::PFNSN, "synthetic");
        const ChannelTriple some_i{NeutroValue{}, NeutroValue::indeterminate(0.5), NeutroValue{}};
        const VertexId a = net.add_vertex("a", ind_vertex ? some_i : ChannelTriple{3, 0, 0}, ind_vertex);
        const VertexId b = net.add_vertex("b", {0, 0, 1});
        net.add_edge(a, b, "r", ind_edge ? ChannelTriple{NeutroValue::indeterminate(), NeutroValue{}, NeutroValue{}}
                                         : ChannelTriple{1, 0, 0},
                     ind_edge);
        return classify(net);
    };
    const GraphClass v = build(true, false);
    expect(v.is_point_graph && !v.is_edge_graph && !v.is_strongly_neutrosophic, "I-vertex net");
    const GraphClass e = build(false, true);
    expect(!e.is_point_graph && e.is_edge_graph && !e.is_strongly_neutrosophic, "I-edge net");
    const GraphClass both = build(true, true);
    expect(both.is_point_graph && both.is_edge_graph && both.is_strongly_neutrosophic, "I-vertex and I-edge net");
    const GraphClass none = build(false, false);
    expect(!none.is_point_graph && !none.is_edge_graph && !none.is_strongly_neutrosophic, "plain net");
}

constexpr int kCases = 1000;

SemanticNet scaled_copy(const SemanticNet& net, double factor) {
    const Scale& s = net.scale();
    const Scale sc{s[0] * factor, s[1] * factor, s[2] * factor};
    auto scale_triple = [&](const ChannelTriple& t) {
        ChannelTriple out = t;
        for (std::size_t k = 0; k < 3; ++k) {
            if (!out[k].is_indeterminate()) {
                out[k].magnitude = out[k].magnitude == s[k] ? sc[k] : std::min(out[k].magnitude * factor, sc[k]);
            }
        }
        return out;
    };
    SemanticNet out(net.mode(), net.name(), sc, net.directed());
    for (const Vertex& v : net.vertices()) {
        out.add_vertex(v.label, scale_triple(v.membership), v.indeterminate);
    }
    for (const Edge& e : net.edges()) {
        out.add_edge(e.src, e.dst, e.label, scale_triple(e.weight), e.indeterminate);
    }
    return out;
}

void properties_dsl() {
    test::NetGenerator gen(1);
    for (int i = 0; i < kCases; ++i) {
        const SemanticNet net = gen.net();
        expect(parse_net(format_net(net)) == net, "DSL round-trip case " + std::to_string(i));
    }
}

void properties_json() {
    test::NetGenerator gen(2);
    for (int i = 0; i < kCases; ++i) {
        const SemanticNet net = gen.net();
        expect(from_json(to_json(net)) == net, "JSON round-trip case " + std::to_string(i));
    }
}

void properties_matrices() {
    test::NetGenerator gen(3);
    test::GenOptions opt;
    opt.nonzero_edges = true;
    opt.flags_follow_entries = true;
    opt.allow_undirected = false;
    for (int i = 0; i < kCases; ++i) {
        const SemanticNet net = gen.net(opt);
        const SemanticNet back =
            from_matrices(net.mode(), net.name(), net.scale(), membership_matrix(net), adjacency_tensor(net));
        expect(back.vertices() == net.vertices(), "matrices vertices case " + std::to_string(i));
        expect(back.edges().size() == net.edges().size(), "matrices edge count case " + std::to_string(i));
        for (const Edge& e : net.edges()) {
            const auto id = back.find_edge(e.src, e.dst);
            expect(id.has_value(), "matrices lost an edge in case " + std::to_string(i));
            const Edge& b = back.edges()[id->index];
            expect(b.weight == e.weight && b.indeterminate == e.indeterminate,
                   "matrices edge weight case " + std::to_string(i));
        }
    }
}

void properties_scaling() {
    test::NetGenerator gen(4);
    test::GenOptions opt;
    opt.max_vertices = 7;
    opt.exotic_labels = false;
    int done = 0;
    while (done < kCases) {
        const SemanticNet net = gen.net(opt);
        if (net.edges().empty()) {
            continue;
        }
        const double factor = gen.coin() ? gen.uniform(0.01, 1.0) : gen.uniform(1.0, 1000.0);
        const SemanticNet scaled = scaled_copy(net, factor);
        for (std::size_t v = 0; v < net.vertices().size(); ++v) {
            for (Preference pref : {Preference::Positive, Preference::Neutral, Preference::Negative}) {
                const auto a = polar_select(net, VertexId{v}, pref).ranked;
                const auto b = polar_select(scaled, VertexId{v}, pref).ranked;
                expect(a.size() == b.size(), "scaling changed neighbour count");
                for (std::size_t k = 0; k < a.size(); ++k) {
                    expect(a[k].vertex == b[k].vertex, "scaling changed ranking in case " + std::to_string(done));
                    expect(std::abs(a[k].score - b[k].score) <= kTolerance, "scaling changed a score");
                }
            }
        }
        ++done;
    }
}

void properties_score_bounds() {
    test::NetGenerator gen(5);
    for (int i = 0; i < kCases; ++i) {
        const Scale sc = gen.scale();
        const ChannelTriple t = gen.triple(NetMode::PFNSN, sc, true);
        const double s = polarity_score(normalize(t, sc));
        expect(s >= -1.0 && s <= 1.0, "score out of [-1, 1]: " + std::to_string(s));
        const NormalizedTriple c = combine(normalize(gen.triple(NetMode::PFNSN, sc, true), sc), normalize(t, sc));
        const double cs = polarity_score(c);
        expect(cs >= -1.0 && cs <= 1.0, "combined score out of [-1, 1]: " + std::to_string(cs));
    }
}

void properties_fuzz() {
    test::NetGenerator gen(6);
    const std::string seed = test::read_fixture("s3.pnet");
    for (int i = 0; i < kCases; ++i) {
        std::string input;
        if (gen.coin()) {
            const std::size_t len = gen.below(256);
            for (std::size_t k = 0; k < len; ++k) {
                input += static_cast<char>(gen.below(256));
            }
        } else {
            input = seed;
            for (std::size_t k = 1 + gen.below(6); k > 0; --k) {
                input[gen.below(input.size())] = static_cast<char>(gen.below(256));
            }
        }
        try {
            parse_net(input);
        } catch (const ParseError& e) {
            expect(e.line() >= 1 && e.column() >= 1, "parse error without a position");
        }
    }
}

void criterion_properties() {
    for (auto suite : {properties_dsl, properties_json, properties_matrices, properties_scaling,
                       properties_score_bounds, properties_fuzz}) {
        suite();
    }
}

// Criterion 7: S2 polarity against a summary triple computed by hand.
void criterion_s2_polarity() {
    // normalized (p, u, n) of the 7 vertices and 6 edges of s2.pnet
    const std::vector<std::array<double, 3>> items{
        {1, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 1}, {0, 1, 0},
        {0, 1, 0}, {0, 1, 0}, {0, 1, 0}, {0, 1, 0}, {0, 1, 0}, {0, 1, 0}};
    std::array<double, 3> mean{0, 0, 0};
    for (const auto& it : items) {
        for (std::size_t k = 0; k < 3; ++k) {
            mean[k] += it[k] / static_cast<double>(items.size());
        }
    }
    expect(std::abs(mean[0] - 2.0 / 13) <= kTolerance && std::abs(mean[1] - 9.0 / 13) <= kTolerance &&
               std::abs(mean[2] - 2.0 / 13) <= kTolerance,
           "hand oracle is not (2/13, 9/13, 2/13)");

    const PolaritySummary s = net_polarity(test::load_fixture("s2.pnet"));
    expect(std::abs(s.summary.p - mean[0]) <= kTolerance && std::abs(s.summary.u - mean[1]) <= kTolerance &&
               std::abs(s.summary.n - mean[2]) <= kTolerance,
           "summary triple differs from oracle");
    expect(std::abs(s.score) <= kTolerance, "score " + std::to_string(s.score));
    expect(s.label == PolarityLabel::Neutral, std::string("label ") + to_string(s.label));
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: " << argv[0] << " <pfnsn-cli>\n";
        return 2;
    }
    cli_path = argv[1];

    const std::vector<std::pair<std::string, std::function<void()>>> criteria{
        {"S1 matrices via CLI match membership and tensor exactly", criterion_s1},
        {"S2 matrices exact, validate as PNSN empty", criterion_s2},
        {"S3 matrices exact, validate PNSN non-empty / PFNSN empty", criterion_s3},
        {"select Bob positive: healthy 0.95, plump 0.5, anaemic -0.65 (tol 1e-9)", criterion_selection},
        {"classification truth table", criterion_classification},
        {"property suites, 1000 cases each", criterion_properties},
        {"S2 net polarity neutral, score 0 (tol 1e-9)", criterion_s2_polarity},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        try {
            criteria[i].second();
        } catch (const std::exception& e) {
            detail = e.what();
        }
        std::cout << (detail.empty() ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first;
        if (!detail.empty()) {
            std::cout << ": " << detail;
            ++failed;
        }
        std::cout << "\n";
    }
    return failed == 0 ? 0 : 1;
}
