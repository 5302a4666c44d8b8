#ifndef KHTREE_IO_HPP
#define KHTREE_IO_HPP

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "core.hpp"

namespace khtree {

// .khg format:
//   khg <k> <n> <m>
//   m lines of k ascending 1-based vertex indices
// Lines starting with '#' are comments. Output is newline-terminated and
// lists edges in lexicographic order, so equal hypergraphs serialize to
// identical bytes.

inline std::string serialize(const Hypergraph& h) {
    std::string out = "khg " + std::to_string(h.k()) + " " + std::to_string(h.n()) + " " +
                      std::to_string(h.edge_count()) + "\n";
    for (const auto& e : h.edges()) {
        out += to_string(e);
        out += '\n';
    }
    return out;
}

/// A family of equally-uniform hypergraphs on a common ground set, stored
/// as `khgpart <n> <lambda> <count>` followed by one .khg block per class.
struct HypergraphFamily {
    int n = 0;
    int lambda = 0;
    std::vector<Hypergraph> members;
};

inline std::string serialize(const HypergraphFamily& family) {
    std::string out = "khgpart " + std::to_string(family.n) + " " + std::to_string(family.lambda) + " " +
                      std::to_string(family.members.size()) + "\n";
    for (const auto& h : family.members) {
        out += serialize(h);
    }
    return out;
}

namespace detail {

class LineReader {
public:
    explicit LineReader(std::string_view text) : text_(text) {
        if (text.empty() || text.back() != '\n') {
            throw Error(Errc::MalformedInput, "input must end with a newline");
        }
    }

    // Next non-comment line, split into whitespace-separated tokens.
    std::vector<std::string_view> next_tokens() {
        while (pos_ < text_.size()) {
            const auto end = text_.find('\n', pos_);
            std::string_view line = text_.substr(pos_, end - pos_);
            pos_ = end + 1;
            ++line_no_;
            if (!line.empty() && line.back() == '\r') {
                line.remove_suffix(1);
            }
            if (!line.empty() && line.front() == '#') {
                continue;
            }
            std::vector<std::string_view> tokens;
            std::size_t i = 0;
            while (i < line.size()) {
                while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
                    ++i;
                }
                const auto start = i;
                while (i < line.size() && line[i] != ' ' && line[i] != '\t') {
                    ++i;
                }
                if (i > start) {
                    tokens.push_back(line.substr(start, i - start));
                }
            }
            if (tokens.empty()) {
                fail("blank line");
            }
            return tokens;
        }
        fail("unexpected end of input");
    }

    bool at_end() {
        // skip trailing comments
        while (pos_ < text_.size() && text_[pos_] == '#') {
            pos_ = text_.find('\n', pos_) + 1;
            ++line_no_;
        }
        return pos_ >= text_.size();
    }

    long long to_int(std::string_view token) const {
        long long value = 0;
        const auto* first = token.data();
        const auto* last = token.data() + token.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last) {
            fail("not an integer: '" + std::string(token) + "'");
        }
        return value;
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw Error(Errc::MalformedInput, "line " + std::to_string(line_no_) + ": " + why);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_no_ = 0;
};

inline Hypergraph parse_block(LineReader& in) {
    const auto header = in.next_tokens();
    if (header.size() != 4 || header[0] != "khg") {
        in.fail("expected header 'khg <k> <n> <m>'");
    }
    const auto k = in.to_int(header[1]);
    const auto n = in.to_int(header[2]);
    const auto m = in.to_int(header[3]);
    if (k < 1 || n < 0 || m < 0) {
        in.fail("header values out of range");
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        const auto tokens = in.next_tokens();
        if (tokens.size() != static_cast<std::size_t>(k)) {
            throw Error(Errc::WrongCardinality, "edge line has " + std::to_string(tokens.size()) +
                                                    " entries, expected " + std::to_string(k));
        }
        std::vector<Vertex> vs;
        for (auto t : tokens) {
            const auto v = in.to_int(t);
            if (v < 1 || v > n) {
                throw Error(Errc::VertexOutOfRange, "vertex " + std::string(t) + " outside [1," + std::to_string(n) + "]");
            }
            vs.push_back(static_cast<Vertex>(v));
        }
        edges.emplace_back(std::move(vs));
    }
    if (m == 0 && k > n) {
        return Hypergraph::edgeless(static_cast<int>(k), static_cast<int>(n));
    }
    return Hypergraph::create(static_cast<int>(k), static_cast<int>(n), std::move(edges));
}

} // namespace detail

inline Hypergraph parse(std::string_view text) {
    detail::LineReader in(text);
    auto h = detail::parse_block(in);
    if (!in.at_end()) {
        in.fail("trailing content after the last edge");
    }
    return h;
}

inline HypergraphFamily parse_family(std::string_view text) {
    detail::LineReader in(text);
    const auto header = in.next_tokens();
    if (header.size() != 4 || header[0] != "khgpart") {
        in.fail("expected header 'khgpart <n> <lambda> <count>'");
    }
    HypergraphFamily family;
    family.n = static_cast<int>(in.to_int(header[1]));
    family.lambda = static_cast<int>(in.to_int(header[2]));
    const auto count = in.to_int(header[3]);
    for (long long i = 0; i < count; ++i) {
        auto h = detail::parse_block(in);
        if (h.n() != family.n || h.k() != family.lambda) {
            in.fail("class header disagrees with the family header");
        }
        family.members.push_back(std::move(h));
    }
    if (!in.at_end()) {
        in.fail("trailing content after the last class");
    }
    return family;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(Errc::InvalidArgument, "cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(Errc::InvalidArgument, "cannot write " + path);
    }
    out << content;
}

} // namespace khtree

#endif // KHTREE_IO_HPP
