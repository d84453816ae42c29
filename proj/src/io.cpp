#include "lexidim/io.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <vector>

#include "lexidim/error.hpp"

namespace lexidim {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_space();
        return pos_ == text_.size();
    }
    std::size_t position() const { return pos_; }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    bool accept_word(std::string_view word) {
        skip_space();
        if (text_.substr(pos_, word.size()) == word) {
            pos_ += word.size();
            return true;
        }
        return false;
    }
    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    std::size_t number() {
        skip_space();
        std::size_t value = 0;
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec == std::errc::result_out_of_range) fail("number out of range");
        if (ec != std::errc{}) fail("expected a number");
        pos_ += static_cast<std::size_t>(ptr - first);
        return value;
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

// Vertex counts above this are refused by the text formats; distance
// matrices are quadratic.
constexpr std::size_t kMaxParsedOrder = 1u << 16;

std::size_t checked_order(Cursor& in, std::size_t n) {
    if (n == 0) in.fail("graph order must be at least 1");
    if (n > kMaxParsedOrder) in.fail("graph order too large");
    return n;
}

Graph parse_expr(Cursor& in);

Graph parse_binary(Cursor& in, bool is_join) {
    in.expect('(');
    Graph left = parse_expr(in);
    in.expect(',');
    Graph right = parse_expr(in);
    in.expect(')');
    return is_join ? join(left, right) : lex_product(left, right);
}

Graph parse_expr(Cursor& in) {
    in.skip_space();
    const std::size_t start = in.position();
    if (in.accept_word("comp")) {
        in.expect('(');
        Graph inner = parse_expr(in);
        in.expect(')');
        return complement(inner);
    }
    if (in.accept_word("join")) return parse_binary(in, true);
    if (in.accept_word("lex")) return parse_binary(in, false);
    if (in.accept_word("wheel")) {
        in.expect('(');
        std::size_t n = in.number();
        in.expect(')');
        if (n < 3) throw ParseError("wheel requires n >= 3", start);
        return family::wheel(n);
    }
    if (in.accept_word("fan")) {
        in.expect('(');
        std::size_t n = checked_order(in, in.number());
        in.expect(')');
        return family::fan(n);
    }
    const char head = in.peek();
    if (head == 'P' || head == 'C' || head == 'K' || head == 'E') {
        in.accept(head);
        if (head == 'K' && in.accept('(')) {
            std::vector<std::size_t> parts;
            do {
                std::size_t part = in.number();
                if (part == 0) in.fail("part sizes must be positive");
                parts.push_back(part);
            } while (in.accept(','));
            in.expect(')');
            std::size_t total = 0;
            for (std::size_t p : parts) total += p;
            checked_order(in, total);
            return family::complete_multipartite(parts);
        }
        std::size_t n = checked_order(in, in.number());
        switch (head) {
            case 'P': return family::path(n);
            case 'C':
                if (n < 3) throw ParseError("cycle requires n >= 3", start);
                return family::cycle(n);
            case 'K': return family::complete(n);
            default: return family::empty(n);
        }
    }
    in.fail("unknown family; expected P, C, K, E, K(...), wheel, fan, comp, join or lex");
}

std::size_t graph6_order(std::string_view text, std::size_t& pos) {
    auto byte = [&](std::size_t i) -> std::size_t {
        if (i >= text.size()) throw ParseError("graph6 text truncated in order field", i);
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw ParseError("graph6 byte outside [63,126]", i);
        return c - 63u;
    };
    const std::size_t first = byte(0);
    if (first < 63) {
        pos = 1;
        return first;
    }
    if (byte(1) < 63) {
        std::size_t n = 0;
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | byte(i);
        pos = 4;
        return n;
    }
    std::size_t n = 0;
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | byte(i);
    pos = 8;
    return n;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    Cursor in(text);
    const std::size_t n = checked_order(in, in.number());
    in.expect(';');
    std::vector<Edge> edges;
    if (!in.at_end()) {
        do {
            const std::size_t at = in.position();
            Vertex u = in.number();
            in.expect('-');
            Vertex v = in.number();
            if (u >= n || v >= n) throw ParseError("edge endpoint out of range", at);
            if (u == v) throw ParseError("self-loop", at);
            edges.emplace_back(u, v);
        } while (in.accept(','));
    }
    if (!in.at_end()) in.fail("unexpected trailing text");
    return Graph(n, edges);
}

std::string emit_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + ";";
    bool first = true;
    for (const auto& [u, v] : g.edges()) {
        out += first ? " " : ",";
        first = false;
        out += std::to_string(u) + "-" + std::to_string(v);
    }
    return out;
}

Graph parse_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    std::size_t offset = 0;
    if (text.substr(0, header.size()) == header) offset = header.size();
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    std::string_view body = text.substr(offset);
    if (body.empty()) throw ParseError("empty graph6 text", offset);

    std::size_t pos = 0;
    const std::size_t n = graph6_order(body, pos);
    if (n == 0) throw ParseError("graph order must be at least 1", offset);
    if (n > kMaxParsedOrder) throw ParseError("graph order too large", offset);
    const std::size_t bits = n * (n - 1) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (body.size() - pos != bytes) {
        throw ParseError("graph6 body has " + std::to_string(body.size() - pos) +
                             " bytes, expected " + std::to_string(bytes),
                         offset + pos);
    }

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u, ++k) {
            const std::size_t at = pos + k / 6;
            const unsigned char c = static_cast<unsigned char>(body[at]);
            if (c < 63 || c > 126) throw ParseError("graph6 byte outside [63,126]", offset + at);
            if (((c - 63u) >> (5 - k % 6)) & 1u) edges.emplace_back(u, v);
        }
    }
    if (bytes != 0) {
        const std::size_t last = pos + bytes - 1;
        const unsigned value = static_cast<unsigned char>(body[last]) - 63u;
        if (value > 63) throw ParseError("graph6 byte outside [63,126]", offset + last);
        const std::size_t padding = bytes * 6 - bits;
        if ((value & ((1u << padding) - 1u)) != 0) {
            throw ParseError("graph6 padding bits are nonzero", offset + last);
        }
    }
    return Graph(n, edges);
}

std::string emit_graph6(const Graph& g) {
    const std::size_t n = g.order();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
    unsigned acc = 0;
    int filled = 0;
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled != 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

Graph parse_family(std::string_view text) {
    Cursor in(text);
    Graph g = parse_expr(in);
    if (!in.at_end()) in.fail("unexpected trailing text");
    return g;
}

Graph parse(std::string_view text, GraphFormat format) {
    switch (format) {
        case GraphFormat::edge_list: return parse_edge_list(text);
        case GraphFormat::graph6: return parse_graph6(text);
        case GraphFormat::family: return parse_family(text);
    }
    throw InputError("unknown graph format");
}

}  // namespace lexidim
