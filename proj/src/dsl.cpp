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

#include "pfnsn/dsl.hpp"

#include "numfmt.hpp"
#include "utf8.hpp"

#include <charconv>
#include <optional>
#include <utility>
#include <vector>

namespace pfnsn {

ParseError::ParseError(std::size_t line, std::size_t column, std::string message, std::string snippet)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(std::move(message)),
      snippet_(std::move(snippet)) {}

namespace {

enum class Tok { Word, String, LParen, RParen, Comma, Arrow };

struct Token {
    Tok kind;
    std::string text;  // decoded for strings
    std::size_t column;
};

bool is_word_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' || c == '.';
}

bool is_ident(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (c == '.' || !is_word_char(c)) {
            return false;
        }
    }
    return true;
}

const char* describe(Tok kind) {
    switch (kind) {
        case Tok::Word: return "word";
        case Tok::String: return "quoted string";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::Comma: return "','";
        case Tok::Arrow: return "'->'";
    }
    return "token";
}

class LineParser {
public:
    LineParser(std::string_view text, std::size_t line_no) : text_(text), line_no_(line_no) {}

    [[noreturn]] void fail(std::size_t column, const std::string& message) const {
        throw ParseError(line_no_, column, message, std::string(text_));
    }

    std::vector<Token> tokenize() const {
        std::vector<Token> out;
        std::size_t i = 0;
        while (i < text_.size()) {
            const char c = text_[i];
            const std::size_t col = i + 1;
            if (c == ' ' || c == '\t') {
                ++i;
            } else if (c == '#') {
                break;
            } else if (c == '(') {
                out.push_back({Tok::LParen, "(", col});
                ++i;
            } else if (c == ')') {
                out.push_back({Tok::RParen, ")", col});
                ++i;
            } else if (c == ',') {
                out.push_back({Tok::Comma, ",", col});
                ++i;
            } else if (c == '-' && i + 1 < text_.size() && text_[i + 1] == '>') {
                out.push_back({Tok::Arrow, "->", col});
                i += 2;
            } else if (c == '"') {
                out.push_back({Tok::String, read_string(i), col});
            } else if (is_word_char(c)) {
                std::size_t j = i;
                while (j < text_.size() && is_word_char(text_[j])) {
                    ++j;
                }
                out.push_back({Tok::Word, std::string(text_.substr(i, j - i)), col});
                i = j;
            } else if (c == '-') {
                fail(col, "unexpected '-': degrees must be nonnegative numbers");
            } else {
                fail(col, "unexpected character");
            }
        }
        return out;
    }

private:
    // Advances i past the closing quote.
    std::string read_string(std::size_t& i) const {
        const std::size_t start = i;
        std::string out;
        ++i;
        while (i < text_.size()) {
            const char c = text_[i];
            if (c == '"') {
                ++i;
                if (!detail::valid_utf8(out)) {
                    fail(start + 1, "quoted string is not valid UTF-8");
                }
                return out;
            }
            if (c == '\\') {
                if (i + 1 >= text_.size()) {
                    break;
                }
                switch (text_[i + 1]) {
                    case '"': out += '"'; break;
                    case '\\': out += '\\'; break;
                    case 'n': out += '\n'; break;
                    case 'r': out += '\r'; break;
                    case 't': out += '\t'; break;
                    default: fail(i + 1, "unknown escape sequence in quoted string");
                }
                i += 2;
                continue;
            }
            out += c;
            ++i;
        }
        fail(start + 1, "unterminated quoted string");
    }

    std::string_view text_;
    std::size_t line_no_;
};

// Statement-level cursor over one line's tokens.
class Cursor {
public:
    Cursor(const LineParser& line, std::vector<Token> tokens, std::size_t line_length)
        : line_(line), tokens_(std::move(tokens)), end_column_(line_length + 1) {}

    bool done() const { return pos_ >= tokens_.size(); }
    const Token* peek() const { return done() ? nullptr : &tokens_[pos_]; }
    std::size_t column() const { return done() ? end_column_ : tokens_[pos_].column; }

    [[noreturn]] void fail_here(const std::string& expected) const {
        if (done()) {
            line_.fail(end_column_, "expected " + expected + ", found end of line");
        }
        line_.fail(tokens_[pos_].column,
                   "expected " + expected + ", found " + describe(tokens_[pos_].kind) + " '" + tokens_[pos_].text + "'");
    }

    const Token& expect(Tok kind, const std::string& expected) {
        if (done() || tokens_[pos_].kind != kind) {
            fail_here(expected);
        }
        return tokens_[pos_++];
    }

    bool accept_word(std::string_view word) {
        if (!done() && tokens_[pos_].kind == Tok::Word && tokens_[pos_].text == word) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect_end() const {
        if (!done()) {
            line_.fail(tokens_[pos_].column, std::string("unexpected ") + describe(tokens_[pos_].kind) + " '" +
                                                 tokens_[pos_].text + "' at end of statement");
        }
    }

    [[noreturn]] void fail_at(std::size_t column, const std::string& message) const { line_.fail(column, message); }

    const Token& next() { return tokens_[pos_++]; }

private:
    const LineParser& line_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::size_t end_column_;
};

std::optional<double> parse_number(std::string_view s) {
    std::size_t digits = 0;
    std::size_t dots = 0;
    for (char c : s) {
        if (c >= '0' && c <= '9') {
            ++digits;
        } else if (c == '.') {
            ++dots;
        } else {
            return std::nullopt;
        }
    }
    if (digits == 0 || dots > 1) {
        return std::nullopt;
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value, std::chars_format::fixed);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return value;
}

double expect_number(Cursor& cur, const std::string& what) {
    if (cur.done() || cur.peek()->kind != Tok::Word) {
        cur.fail_here(what);
    }
    const Token& tok = cur.next();
    auto value = parse_number(tok.text);
    if (!value) {
        cur.fail_at(tok.column, "expected " + what + ", found '" + tok.text + "'");
    }
    return *value;
}

NeutroValue expect_value(Cursor& cur) {
    const std::string what = "degree (number, nI or I)";
    if (cur.done() || cur.peek()->kind != Tok::Word) {
        cur.fail_here(what);
    }
    const Token& tok = cur.next();
    std::string_view text = tok.text;
    if (text == "I") {
        return NeutroValue::indeterminate(1.0);
    }
    if (text.size() > 1 && text.back() == 'I') {
        if (auto coefficient = parse_number(text.substr(0, text.size() - 1))) {
            return NeutroValue::indeterminate(*coefficient);
        }
    } else if (auto degree = parse_number(text)) {
        return NeutroValue::determinate(*degree);
    }
    cur.fail_at(tok.column, "expected " + what + ", found '" + tok.text + "'");
}

struct TripleTokens {
    ChannelTriple triple;
    std::array<std::size_t, 3> columns{};
};

TripleTokens expect_triple(Cursor& cur) {
    TripleTokens out;
    cur.expect(Tok::LParen, "'(' opening a degree triple");
    for (std::size_t k = 0; k < 3; ++k) {
        if (k > 0) {
            cur.expect(Tok::Comma, "','");
        }
        out.columns[k] = cur.column();
        out.triple[k] = expect_value(cur);
    }
    cur.expect(Tok::RParen, "')' closing the degree triple");
    return out;
}

// Identifier or quoted vertex label.
std::pair<std::string, std::size_t> expect_label(Cursor& cur) {
    const Token* tok = cur.peek();
    if (tok != nullptr && tok->kind == Tok::String && !tok->text.empty()) {
        cur.next();
        return {tok->text, tok->column};
    }
    if (tok == nullptr || tok->kind != Tok::Word || !is_ident(tok->text)) {
        cur.fail_here("vertex label (identifier or quoted string)");
    }
    cur.next();
    return {tok->text, tok->column};
}

std::size_t column_for(const NetError& err, const std::array<std::size_t, 3>& columns, std::size_t fallback) {
    if (err.channel() && *err.channel() < 3) {
        return columns[*err.channel()];
    }
    return fallback;
}

}  // namespace

SemanticNet parse_net(std::string_view source) {
    std::optional<SemanticNet> net;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    if (source.substr(0, 3) == "\xEF\xBB\xBF") {
        pos = 3;
    }
    while (pos <= source.size()) {
        const std::size_t nl = source.find('\n', pos);
        std::string_view text = source.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? source.size() + 1 : nl + 1;
        ++line_no;
        if (!text.empty() && text.back() == '\r') {
            text.remove_suffix(1);
        }

        LineParser line(text, line_no);
        Cursor cur(line, line.tokenize(), text.size());
        if (cur.done()) {
            continue;
        }

        const Token& keyword = cur.expect(Tok::Word, "statement keyword");
        if (!net) {
            if (keyword.text != "net") {
                cur.fail_at(keyword.column, "expected header 'net MODE \"name\"' before any other statement");
            }
            const std::size_t mode_column = cur.column();
            const Token& mode_tok = cur.expect(Tok::Word, "net mode (fnsn, pnsn or pfnsn)");
            NetMode mode{};
            if (mode_tok.text == "fnsn") {
                mode = NetMode::FNSN;
            } else if (mode_tok.text == "pnsn") {
                mode = NetMode::PNSN;
            } else if (mode_tok.text == "pfnsn") {
                mode = NetMode::PFNSN;
            } else {
                cur.fail_at(mode_column, "unknown net mode '" + mode_tok.text + "', expected fnsn, pnsn or pfnsn");
            }
            std::string name = cur.expect(Tok::String, "quoted net name").text;
            Scale scale = kDefaultScale;
            std::array<std::size_t, 3> scale_columns{};
            if (cur.accept_word("scale")) {
                for (std::size_t k = 0; k < 3; ++k) {
                    scale_columns[k] = cur.column();
                    scale[k] = expect_number(cur, "channel maximum (number)");
                }
            }
            const bool undirected = cur.accept_word("undirected");
            cur.expect_end();
            try {
                net.emplace(mode, std::move(name), scale, !undirected);
            } catch (const NetError& err) {
                cur.fail_at(column_for(err, scale_columns, keyword.column), err.what());
            }
            continue;
        }

        if (keyword.text == "vertex") {
            auto [label, label_column] = expect_label(cur);
            TripleTokens membership = expect_triple(cur);
            const bool indeterminate = cur.accept_word("indeterminate");
            cur.expect_end();
            try {
                net->add_vertex(label, membership.triple, indeterminate);
            } catch (const NetError& err) {
                cur.fail_at(column_for(err, membership.columns, label_column), err.what());
            }
        } else if (keyword.text == "edge") {
            auto [src_label, src_column] = expect_label(cur);
            cur.expect(Tok::Arrow, "'->'");
            auto [dst_label, dst_column] = expect_label(cur);
            std::string relation;
            if (cur.accept_word("label")) {
                relation = cur.expect(Tok::String, "quoted relation label").text;
            }
            TripleTokens weight = expect_triple(cur);
            const bool indeterminate = cur.accept_word("indeterminate");
            cur.expect_end();
            auto src = net->find_vertex(src_label);
            if (!src) {
                cur.fail_at(src_column, "unknown vertex '" + src_label + "'");
            }
            auto dst = net->find_vertex(dst_label);
            if (!dst) {
                cur.fail_at(dst_column, "unknown vertex '" + dst_label + "'");
            }
            try {
                net->add_edge(*src, *dst, std::move(relation), weight.triple, indeterminate);
            } catch (const NetError& err) {
                cur.fail_at(column_for(err, weight.columns, src_column), err.what());
            }
        } else if (keyword.text == "net") {
            cur.fail_at(keyword.column, "duplicate 'net' header");
        } else {
            cur.fail_at(keyword.column, "unknown statement '" + keyword.text + "', expected 'vertex' or 'edge'");
        }
    }
    if (!net) {
        throw ParseError(1, 1, "expected header 'net MODE \"name\"', found end of input", "");
    }
    return std::move(*net);
}

namespace {

std::string quote(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    out += '"';
    return out;
}

std::string label_token(std::string_view label) { return is_ident(label) ? std::string(label) : quote(label); }

std::string triple_text(const ChannelTriple& t) {
    return "(" + detail::format_value(t[0]) + ", " + detail::format_value(t[1]) + ", " +
           detail::format_value(t[2]) + ")";
}

std::string mode_keyword(NetMode mode) {
    switch (mode) {
        case NetMode::FNSN: return "fnsn";
        case NetMode::PNSN: return "pnsn";
        case NetMode::PFNSN: break;
    }
    return "pfnsn";
}

}  // namespace

std::string format_net(const SemanticNet& net) {
    std::string out = "net " + mode_keyword(net.mode()) + " " + quote(net.name()) + " scale " +
                      detail::format_number(net.scale()[0]) + " " + detail::format_number(net.scale()[1]) + " " +
                      detail::format_number(net.scale()[2]);
    if (!net.directed()) {
        out += " undirected";
    }
    out += '\n';
    for (const Vertex& v : net.vertices()) {
        out += "vertex " + label_token(v.label) + " " + triple_text(v.membership);
        if (v.indeterminate) {
            out += " indeterminate";
        }
        out += '\n';
    }
    for (const Edge& e : net.edges()) {
        out += "edge " + label_token(net.vertex(e.src).label) + " -> " + label_token(net.vertex(e.dst).label);
        if (!e.label.empty()) {
            out += " label " + quote(e.label);
        }
        out += " " + triple_text(e.weight);
        if (e.indeterminate) {
            out += " indeterminate";
        }
        out += '\n';
    }
    return out;
}

}  // namespace pfnsn
