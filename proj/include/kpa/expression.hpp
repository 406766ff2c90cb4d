#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "kpa/algebra.hpp"

namespace kpa {

/// Element literals:
///
///     expr   := term (('+' | '-') term)*
///     term   := factor ('*' factor)*
///     factor := '-' factor | integer | 's(' word ')' | 't(' word ')' | '(' expr ')'
///     word   := name (('.' | ' ') name)*
///
/// A word is a vertex name or a sequence of edge names read from range to source. t(w) is s(w)*.
/// A bare integer n stands for n times the unit, the sum of all s_v.
class ExpressionParser {
public:
    ExpressionParser(GraphPtr g, Ring ring, std::string text)
        : graph_(std::move(g)), ring_(std::move(ring)), text_(std::move(text)) {}

    AlgebraElement parse() {
        pos_ = 0;
        AlgebraElement out = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return out;
    }

    Path parse_word(const std::string& word) const {
        std::vector<std::string> names;
        std::string cur;
        for (char c : word) {
            if (c == '.' || std::isspace(static_cast<unsigned char>(c))) {
                if (!cur.empty()) names.push_back(std::move(cur));
                cur.clear();
            } else {
                cur += c;
            }
        }
        if (!cur.empty()) names.push_back(std::move(cur));
        if (names.empty()) throw ParseError("empty path word");
        const KGraph& g = *graph_;
        if (names.size() == 1) {
            auto v = g.find_vertex(names[0]);
            auto e = g.find_edge(names[0]);
            if (v && e) throw ParseError("'" + names[0] + "' names both a vertex and an edge");
            if (v) return g.vertex_path(*v);
        }
        std::vector<EdgeId> edges;
        for (const auto& n : names) {
            auto e = g.find_edge(n);
            if (!e) throw ParseError("unknown edge '" + n + "'");
            edges.push_back(*e);
        }
        return g.path_from_word(edges);
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("column " + std::to_string(pos_ + 1) + ": " + what);
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    AlgebraElement unit() const {
        AlgebraElement out(graph_, ring_);
        for (VertexId v = 0; v < graph_->vertex_count(); ++v) out += vertex_element(graph_, v, ring_);
        return out;
    }

    AlgebraElement expr() {
        AlgebraElement out = term();
        for (;;) {
            if (eat('+'))
                out += term();
            else if (eat('-'))
                out -= term();
            else
                return out;
        }
    }

    AlgebraElement term() {
        AlgebraElement out = factor();
        while (eat('*')) out = out * factor();
        return out;
    }

    AlgebraElement factor() {
        skip();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        if (eat('-')) return -factor();
        if (eat('(')) {
            AlgebraElement inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return unit().scaled(Scalar(Integer(text_.substr(start, pos_ - start))));
        }
        if ((c == 's' || c == 't') && pos_ + 1 < text_.size() && text_[pos_ + 1] == '(') {
            pos_ += 2;
            const std::size_t close = text_.find(')', pos_);
            if (close == std::string::npos) fail("unclosed generator");
            const Path p = parse_word(text_.substr(pos_, close - pos_));
            pos_ = close + 1;
            return generator(graph_, p, c == 't', ring_);
        }
        fail("expected s(...), t(...), an integer or '('");
    }

    GraphPtr graph_;
    Ring ring_;
    std::string text_;
    std::size_t pos_ = 0;
};

inline AlgebraElement parse_element(const GraphPtr& g, const Ring& ring, const std::string& text) {
    return ExpressionParser(g, ring, text).parse();
}

}  // namespace kpa
