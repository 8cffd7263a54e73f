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

// pfnsn command-line tool. Talks to the library only through the C API.

#include "pfnsn/pfnsn.h"

#include "CLI11.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct NetDeleter {
    void operator()(pfnsn_net* net) const { pfnsn_net_destroy(net); }
};
using NetPtr = std::unique_ptr<pfnsn_net, NetDeleter>;

struct StringDeleter {
    void operator()(char* s) const { pfnsn_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

// Thrown to unwind with a specific exit code after printing diagnostics.
struct Exit {
    int code;
};

[[noreturn]] void usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    throw Exit{kExitUsage};
}

[[noreturn]] void report_library_error() {
    const pfnsn_error err = pfnsn_last_error();
    if (err.status == PFNSN_ERR_PARSE) {
        std::cerr << err.line << ":" << err.column << ":" << err.message << "\n";
    } else {
        std::cerr << "error: " << err.message << "\n";
    }
    throw Exit{kExitDomain};
}

void check(pfnsn_status status) {
    if (status != PFNSN_OK) {
        report_library_error();
    }
}

std::string number(double x) {
    char buf[512];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed);
    return ec == std::errc{} ? std::string(buf, end) : std::to_string(x);
}

std::string value_text(const pfnsn_value& v) {
    if (!v.indeterminate) {
        return number(v.magnitude);
    }
    return v.magnitude == 1.0 ? "I" : number(v.magnitude) + "I";
}

// Up to nine decimals, trailing zeros dropped.
std::string rounded(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", x);
    std::string s = buf;
    s.erase(s.find_last_not_of('0') + 1);
    if (s.back() == '.') {
        s.pop_back();
    }
    if (s == "-0") {
        s = "0";
    }
    return s;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        usage_error("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << text)) {
        usage_error("cannot write '" + out_path + "'");
    }
}

std::string resolve_format(const std::string& path, const std::string& forced) {
    if (!forced.empty()) {
        return forced;
    }
    const std::string ext = std::filesystem::path(path).extension().string();
    if (ext == ".json") {
        return "json";
    }
    if (ext == ".pnet") {
        return "pnet";
    }
    usage_error("cannot infer the format of '" + path + "'; pass --format pnet|json");
}

NetPtr load(const std::string& path, const std::string& forced_format) {
    const std::string format = resolve_format(path, forced_format);
    const std::string text = read_file(path);
    pfnsn_net* raw = nullptr;
    if (format == "json") {
        check(pfnsn_net_from_json(text.data(), text.size(), &raw));
    } else {
        check(pfnsn_net_parse(text.data(), text.size(), &raw));
    }
    return NetPtr(raw);
}

std::array<const char*, 3> channel_names(const pfnsn_net* net) {
    if (pfnsn_net_mode(net) == PFNSN_MODE_FNSN) {
        return {"t", "i", "f"};
    }
    return {"p", "u", "n"};
}

// Runs `call` with an out-pointer and takes ownership of the returned string.
template <typename Call>
std::string owned(Call call) {
    char* text = nullptr;
    check(call(&text));
    OwnedString holder(text);
    return holder.get();
}

int cmd_validate(const pfnsn_net* net) {
    size_t errors = 0;
    size_t warnings = 0;
    const std::string text = owned([&](char** out) { return pfnsn_net_validate(net, &errors, &warnings, out); });
    if (errors == 0 && warnings == 0) {
        std::cout << "OK\n";
        return kExitOk;
    }
    std::cout << text;
    return errors == 0 ? kExitOk : kExitDomain;
}

int cmd_classify(const pfnsn_net* net) {
    pfnsn_graph_class c{};
    check(pfnsn_net_classify(net, &c));
    const auto line = [](const char* name, int flag) { std::cout << name << "=" << (flag ? "true" : "false") << "\n"; };
    line("has_indeterminate_vertex", c.has_indeterminate_vertex);
    line("has_indeterminate_edge", c.has_indeterminate_edge);
    line("is_point_graph", c.is_point_graph);
    line("is_edge_graph", c.is_edge_graph);
    line("is_strongly_neutrosophic", c.is_strongly_neutrosophic);
    line("is_neutrosophic_simple", c.is_neutrosophic_simple);
    return kExitOk;
}

// Left-aligned table; column widths fit the widest cell.
void print_table(const std::vector<std::vector<std::string>>& cells) {
    std::vector<std::size_t> widths;
    for (const auto& row : cells) {
        widths.resize(std::max(widths.size(), row.size()));
        for (std::size_t c = 0; c < row.size(); ++c) {
            widths[c] = std::max(widths[c], row[c].size());
        }
    }
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) {
                line += std::string(widths[c] - row[c].size() + 2, ' ');
            }
        }
        std::cout << line << "\n";
    }
}

int cmd_matrices(const pfnsn_net* net) {
    const std::size_t n = pfnsn_net_vertex_count(net);
    const auto names = channel_names(net);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        labels.emplace_back(pfnsn_net_vertex_label(net, i));
    }

    std::vector<pfnsn_triple> rows(n);
    check(pfnsn_net_membership(net, rows.data(), rows.size(), nullptr));
    std::vector<pfnsn_value> slices(3 * n * n);
    check(pfnsn_net_adjacency(net, slices.data(), slices.size(), nullptr));

    std::cout << "membership\n";
    std::vector<std::vector<std::string>> table{{"", names[0], names[1], names[2]}};
    for (std::size_t i = 0; i < n; ++i) {
        table.push_back({labels[i], value_text(rows[i].channel[0]), value_text(rows[i].channel[1]),
                         value_text(rows[i].channel[2])});
    }
    print_table(table);

    for (std::size_t k = 0; k < 3; ++k) {
        std::cout << "\nA_ij" << k + 1 << " (" << names[k] << ")\n";
        std::vector<std::vector<std::string>> slice{{""}};
        slice[0].insert(slice[0].end(), labels.begin(), labels.end());
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::string> row{labels[i]};
            for (std::size_t j = 0; j < n; ++j) {
                row.push_back(value_text(slices[k * n * n + i * n + j]));
            }
            slice.push_back(std::move(row));
        }
        print_table(slice);
    }
    return kExitOk;
}

std::string normalized_text(const pfnsn_normalized& t) {
    return "(" + rounded(t.p) + ", " + rounded(t.u) + ", " + rounded(t.n) + ")";
}

int cmd_select(const pfnsn_net* net, const std::string& vertex, const std::string& prefer) {
    size_t id = 0;
    check(pfnsn_net_find_vertex(net, vertex.c_str(), &id));
    const pfnsn_preference preference = prefer == "positive"   ? PFNSN_PREFER_POSITIVE
                                        : prefer == "negative" ? PFNSN_PREFER_NEGATIVE
                                                               : PFNSN_PREFER_NEUTRAL;
    size_t count = 0;
    check(pfnsn_polar_select(net, id, preference, nullptr, 0, &count));
    std::vector<pfnsn_ranked> ranked(count);
    check(pfnsn_polar_select(net, id, preference, ranked.data(), ranked.size(), &count));
    for (std::size_t r = 0; r < count; ++r) {
        std::cout << r + 1 << ". " << pfnsn_net_vertex_label(net, ranked[r].vertex)
                  << " score=" << rounded(ranked[r].score) << " " << normalized_text(ranked[r].combined);
        if (ranked[r].combined.has_indeterminacy) {
            std::cout << " indeterminate";
        }
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_polarity(const pfnsn_net* net) {
    pfnsn_normalized summary{};
    double score = 0.0;
    pfnsn_polarity_label label = PFNSN_POLARITY_NEUTRAL;
    check(pfnsn_net_polarity(net, 0.1, &summary, &score, &label));
    const auto names = channel_names(net);
    std::cout << "summary (" << names[0] << ", " << names[1] << ", " << names[2] << ") = " << normalized_text(summary)
              << "\n";
    std::cout << "score=" << rounded(score) << "\n";
    std::cout << "label="
              << (label == PFNSN_POLARITY_POSITIVE   ? "positive"
                  : label == PFNSN_POLARITY_NEGATIVE ? "negative"
                                                     : "neutral")
              << "\n";
    if (summary.has_indeterminacy) {
        std::cout << "indeterminacy=true\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polar fuzzy neutrosophic semantic nets"};
    app.require_subcommand(1);
    app.set_version_flag("--version", pfnsn_version());

    std::string input;
    std::string format;
    std::string out_path;
    std::string vertex;
    std::string prefer = "positive";
    std::string target;

    const auto add_input = [&](CLI::App* sub) {
        sub->add_option("FILE", input, "Input net (.pnet or .json)")->required();
        sub->add_option("--format", format, "Override the input format")
            ->check(CLI::IsMember({"pnet", "json"}));
    };

    auto* validate = app.add_subcommand("validate", "Check a net; prints OK or one violation per line");
    add_input(validate);
    auto* classify = app.add_subcommand("classify", "Print neutrosophic graph-class flags");
    add_input(classify);
    auto* matrices = app.add_subcommand("matrices", "Print the membership matrix and adjacency slices");
    add_input(matrices);
    auto* render = app.add_subcommand("render", "Render the net as Graphviz DOT");
    add_input(render);
    render->add_option("-o,--output", out_path, "Write to a file instead of stdout");
    auto* select = app.add_subcommand("select", "Rank the neighbours of a vertex by polarity");
    add_input(select);
    select->add_option("--vertex", vertex, "Vertex label")->required();
    select->add_option("--prefer", prefer, "positive, neutral or negative")
        ->check(CLI::IsMember({"positive", "neutral", "negative"}));
    auto* polarity = app.add_subcommand("polarity", "Summarize the polarity of the whole net");
    add_input(polarity);
    auto* convert = app.add_subcommand("convert", "Convert between .pnet and .json");
    add_input(convert);
    convert->add_option("--to", target, "Output format")->required()->check(CLI::IsMember({"json", "pnet"}));
    convert->add_option("-o,--output", out_path, "Write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        NetPtr net = load(input, format);
        if (validate->parsed()) return cmd_validate(net.get());
        if (classify->parsed()) return cmd_classify(net.get());
        if (matrices->parsed()) return cmd_matrices(net.get());
        if (render->parsed()) {
            write_output(owned([&](char** out) { return pfnsn_net_to_dot(net.get(), out); }), out_path);
            return kExitOk;
        }
        if (select->parsed()) return cmd_select(net.get(), vertex, prefer);
        if (polarity->parsed()) return cmd_polarity(net.get());
        if (convert->parsed()) {
            write_output(owned([&](char** out) {
                             return target == "json" ? pfnsn_net_to_json(net.get(), out)
                                                     : pfnsn_net_format(net.get(), out);
                         }),
                         out_path);
            return kExitOk;
        }
    } catch (const Exit& e) {
        return e.code;
    }
    return kExitUsage;
}
