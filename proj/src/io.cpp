#include "ramseypack/io.hpp"

#include <fstream>
#include <sstream>

namespace ramseypack {

namespace {

void append_bextet_groups(std::string& out, unsigned long long value, int groups) {
    for (int i = groups - 1; i >= 0; --i)
        out.push_back(char(63 + ((value >> (6 * i)) & 63)));
}

std::string size_header(long long n) {
    std::string out;
    if (n <= 62) {
        out.push_back(char(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        append_bextet_groups(out, (unsigned long long)n, 3);
    } else {
        out.push_back(126);
        out.push_back(126);
        append_bextet_groups(out, (unsigned long long)n, 6);
    }
    return out;
}

} // namespace

std::string to_graph6(const Graph& g) {
    long long n = g.vertex_count();
    std::string out = size_header(n);
    int acc = 0, bits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(char(63 + acc));
                acc = 0;
                bits = 0;
            }
        }
    }
    if (bits > 0) out.push_back(char(63 + (acc << (6 - bits))));
    return out;
}

Graph from_graph6(const std::string& input) {
    std::string s = input;
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s = s.substr(header.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw ParseError("graph6", "empty input");

    size_t pos = 0;
    auto need = [&](size_t count) {
        if (pos + count > s.size()) throw ParseError("graph6", "truncated input");
    };
    auto group = [&](size_t at) -> int {
        int v = int(uint8_t(s[at])) - 63;
        if (v < 0 || v > 63) throw ParseError("graph6", "byte out of range");
        return v;
    };

    long long n;
    need(1);
    if (s[0] != 126) {
        n = group(0);
        pos = 1;
    } else {
        need(2);
        if (s[1] != 126) {
            need(4);
            n = 0;
            for (int i = 1; i <= 3; ++i) n = (n << 6) | group(size_t(i));
            pos = 4;
        } else {
            need(8);
            n = 0;
            for (int i = 2; i <= 7; ++i) n = (n << 6) | group(size_t(i));
            pos = 8;
        }
    }

    Graph g{int(n)};
    long long total_bits = n * (n - 1) / 2;
    long long expected_bytes = (total_bits + 5) / 6;
    if ((long long)(s.size() - pos) != expected_bytes)
        throw ParseError("graph6", "wrong body length for n=" + std::to_string(n));
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int v = group(pos + size_t(bit / 6));
            if ((v >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

namespace {

// Whitespace-token reader that tracks line numbers for diagnostics.
struct TokenReader {
    std::istream& in;
    int line = 1;
    int token_line = 1; // line where the last token started

    explicit TokenReader(std::istream& stream) : in(stream) {}

    std::string where() const { return "line " + std::to_string(token_line); }

    bool next_token(std::string& tok) {
        tok.clear();
        int c;
        while ((c = in.get()) != EOF && isspace(c)) {
            if (c == '\n') ++line;
        }
        if (c == EOF) {
            token_line = line;
            return false;
        }
        token_line = line;
        tok.push_back(char(c));
        while ((c = in.get()) != EOF && !isspace(c)) tok.push_back(char(c));
        if (c == '\n') ++line;
        return true;
    }

    std::string expect_token(const char* what) {
        std::string tok;
        if (!next_token(tok)) throw ParseError(where(), std::string("expected ") + what + ", got end of input");
        return tok;
    }

    long long expect_int(const char* what) {
        std::string tok = expect_token(what);
        try {
            size_t used = 0;
            long long v = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument("trailing");
            return v;
        } catch (const std::exception&) {
            throw ParseError(where(), std::string("expected ") + what + ", got '" + tok + "'");
        }
    }

    void expect_keyword(const char* kw) {
        std::string tok = expect_token(kw);
        if (tok != kw) throw ParseError(where(), std::string("expected '") + kw + "', got '" + tok + "'");
    }
};

int checked_vertex(TokenReader& r, long long v, long long n) {
    if (v < 0 || v >= n)
        throw ParseError(r.where(), "vertex " + std::to_string(v) + " out of range [0," + std::to_string(n) + ")");
    return int(v);
}

} // namespace

Graph graph_from_stream(std::istream& in) {
    TokenReader r(in);
    long long n = r.expect_int("vertex count");
    long long m = r.expect_int("edge count");
    if (n < 0 || m < 0) throw ParseError(r.where(), "negative header value");
    Graph g{int(n)};
    for (long long e = 0; e < m; ++e) {
        int u = checked_vertex(r, r.expect_int("edge endpoint"), n);
        int v = checked_vertex(r, r.expect_int("edge endpoint"), n);
        if (u == v) throw ParseError(r.where(), "loop edge");
        g.add_edge(u, v);
    }
    return g;
}

std::string to_container(const ColourPattern& p) {
    std::ostringstream out;
    out << "pattern " << p.vertex_count() << ' ' << p.layer_count() << '\n';
    for (int c = 1; c <= p.layer_count(); ++c) {
        const Graph& g = p.layer(c);
        out << "layer " << c << ' ' << g.edge_count() << '\n';
        for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    }
    return out.str();
}

ColourPattern pattern_from_stream(std::istream& in) {
    TokenReader r(in);
    r.expect_keyword("pattern");
    long long n = r.expect_int("vertex count");
    long long layers = r.expect_int("layer count");
    if (n < 0) throw ParseError(r.where(), "negative vertex count");
    if (layers < 1) throw ParseError(r.where(), "layer count must be >= 1");
    ColourPattern p{int(n), int(layers)};
    for (int c = 1; c <= int(layers); ++c) {
        r.expect_keyword("layer");
        long long idx = r.expect_int("layer index");
        if (idx != c)
            throw ParseError(r.where(), "expected layer " + std::to_string(c) + ", got " + std::to_string(idx));
        long long m = r.expect_int("edge count");
        for (long long e = 0; e < m; ++e) {
            int u = checked_vertex(r, r.expect_int("edge endpoint"), n);
            int v = checked_vertex(r, r.expect_int("edge endpoint"), n);
            try {
                p.add_edge(c, u, v);
            } catch (const std::invalid_argument& ex) {
                throw ParseError(r.where(), ex.what());
            }
        }
    }
    return p;
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

Graph read_graph_file(const std::string& path) {
    std::string content = read_file(path);
    // graph6 lines never start with a digit token; edge lists always do
    size_t first = content.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError(path, "empty file");
    if (isdigit((unsigned char)content[first])) {
        std::istringstream in(content);
        return graph_from_stream(in);
    }
    return from_graph6(content);
}

ColourPattern read_pattern_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return pattern_from_stream(in);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace ramseypack
