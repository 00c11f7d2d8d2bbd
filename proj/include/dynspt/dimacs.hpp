#pragma once

// Text formats. Graphs use the DIMACS shortest-path layout with 1-based ids
// and signed weights:
//
//   c any comment
//   c name <id> <label>
//   p sp <n> <m>
//   a <tail> <head> <weight>
//
// Update streams hold one `<tail> <head> <new_weight>` per line, ids 1-based
// or labels; blank lines and lines starting with '#' are skipped.

#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "dynspt/graph.hpp"
#include "dynspt/tree.hpp"
#include "dynspt/types.hpp"
#include "dynspt/update.hpp"

namespace dynspt {

class VertexNames {
  public:
    VertexNames() = default;
    explicit VertexNames(std::size_t n) : labels_(n) {}

    std::size_t size() const { return labels_.size(); }
    bool empty() const { return index_.empty(); }

    void set(Vertex v, std::string label) {
        if (!labels_[v].empty()) {
            index_.erase(labels_[v]);
        }
        index_[label] = v;
        labels_[v] = std::move(label);
    }

    // The label of v, or its 1-based id when it has none.
    std::string display(Vertex v) const {
        if (v < labels_.size() && !labels_[v].empty()) {
            return labels_[v];
        }
        return std::to_string(static_cast<std::uint64_t>(v) + 1);
    }

    const std::string& label(Vertex v) const { return labels_[v]; }

    std::optional<Vertex> find(std::string_view label) const {
        auto it = index_.find(std::string(label));
        if (it == index_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

  private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, Vertex> index_;
};

struct ParsedGraph {
    Graph graph;
    VertexNames names;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') {
            ++j;
        }
        if (j > i) {
            out.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

template <class Int>
std::optional<Int> parse_int(std::string_view token) {
    Int value{};
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        return std::nullopt;
    }
    return value;
}

template <class F>
void for_each_line(std::string_view text, F&& f) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        ++line_no;
        f(line_no, text.substr(pos, end - pos));
        pos = end + 1;
    }
}

// 1-based id in [1, n] to a 0-based vertex.
inline Vertex parse_vertex(std::string_view token, std::size_t n, std::size_t line) {
    auto id = parse_int<std::uint64_t>(token);
    if (!id) {
        throw SyntaxError(Errc::syntax_error, line, "bad vertex id '" + std::string(token) + "'");
    }
    if (*id < 1 || *id > n) {
        throw SyntaxError(Errc::syntax_error, line, "vertex id " + std::to_string(*id) + " out of range");
    }
    return static_cast<Vertex>(*id - 1);
}

inline Weight parse_weight(std::string_view token, std::size_t line) {
    auto w = parse_int<Weight>(token);
    if (!w) {
        throw SyntaxError(Errc::syntax_error, line, "bad weight '" + std::string(token) + "'");
    }
    return *w;
}

} // namespace detail

// `source` is 0-based.
inline ParsedGraph parse_graph(std::string_view text, Vertex source = 0) {
    std::optional<std::size_t> n;
    std::size_t m = 0;
    std::size_t last_line = 0;
    std::vector<Arc> arcs;
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::pair<std::size_t, std::pair<std::uint64_t, std::string>>> pending_names;

    detail::for_each_line(text, [&](std::size_t line, std::string_view raw) {
        auto tok = detail::split_ws(raw);
        if (tok.empty()) {
            return;
        }
        last_line = line;
        if (tok[0] == "c") {
            if (tok.size() >= 4 && tok[1] == "name") {
                auto id = detail::parse_int<std::uint64_t>(tok[2]);
                if (!id) {
                    throw SyntaxError(Errc::syntax_error, line, "bad vertex id in name line");
                }
                pending_names.push_back({line, {*id, std::string(tok[3])}});
            }
            return;
        }
        if (tok[0] == "p") {
            if (n) {
                throw SyntaxError(Errc::syntax_error, line, "second problem line");
            }
            if (tok.size() != 4 || tok[1] != "sp") {
                throw SyntaxError(Errc::syntax_error, line, "expected 'p sp <n> <m>'");
            }
            auto nv = detail::parse_int<std::size_t>(tok[2]);
            auto mv = detail::parse_int<std::size_t>(tok[3]);
            if (!nv || !mv || *nv == 0 || *nv >= kNoVertex) {
                throw SyntaxError(Errc::syntax_error, line, "bad problem sizes");
            }
            n = *nv;
            m = *mv;
            arcs.reserve(m);
            return;
        }
        if (tok[0] == "a") {
            if (!n) {
                throw SyntaxError(Errc::syntax_error, line, "arc before problem line");
            }
            if (tok.size() != 4) {
                throw SyntaxError(Errc::syntax_error, line, "expected 'a <tail> <head> <weight>'");
            }
            Vertex t = detail::parse_vertex(tok[1], *n, line);
            Vertex h = detail::parse_vertex(tok[2], *n, line);
            Weight w = detail::parse_weight(tok[3], line);
            if (t == h) {
                throw SyntaxError(Errc::syntax_error, line, "self-loop");
            }
            if (!seen.insert((static_cast<std::uint64_t>(t) << 32) | h).second) {
                throw SyntaxError(Errc::duplicate_arc, line,
                                  "arc " + std::string(tok[1]) + " -> " + std::string(tok[2]) + " repeated");
            }
            arcs.push_back({t, h, w});
            return;
        }
        throw SyntaxError(Errc::syntax_error, line, "unknown line type '" + std::string(tok[0]) + "'");
    });

    if (!n) {
        throw SyntaxError(Errc::syntax_error, last_line, "missing problem line");
    }
    if (arcs.size() != m) {
        throw SyntaxError(Errc::count_mismatch, last_line,
                          "problem line declares " + std::to_string(m) + " arcs, found " +
                              std::to_string(arcs.size()));
    }
    if (source >= *n) {
        throw Error(Errc::id_out_of_range, "source " + std::to_string(static_cast<std::uint64_t>(source) + 1) +
                                               " not in [1, " + std::to_string(*n) + "]");
    }
    ParsedGraph out{Graph::build(*n, source, arcs), VertexNames(*n)};
    for (auto& [line, entry] : pending_names) {
        if (entry.first < 1 || entry.first > *n) {
            throw SyntaxError(Errc::syntax_error, line, "name for vertex out of range");
        }
        out.names.set(static_cast<Vertex>(entry.first - 1), std::move(entry.second));
    }
    return out;
}

inline std::string write_graph(const Graph& g, const VertexNames* names = nullptr) {
    std::ostringstream os;
    os << "p sp " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    if (names) {
        for (Vertex v = 0; v < names->size(); ++v) {
            if (!names->label(v).empty()) {
                os << "c name " << v + 1 << ' ' << names->label(v) << '\n';
            }
        }
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        os << "a " << g.tail(e) + 1 << ' ' << g.head(e) + 1 << ' ' << g.weight(e) << '\n';
    }
    return os.str();
}

// With `names`, endpoints may also be labels. With vertex_count > 0, numeric
// ids are range-checked.
inline std::vector<WeightUpdate> parse_updates(std::string_view text, const VertexNames* names = nullptr,
                                               std::size_t vertex_count = 0) {
    std::vector<WeightUpdate> out;
    const std::size_t limit = vertex_count ? vertex_count : static_cast<std::size_t>(kNoVertex);
    auto endpoint = [&](std::string_view token, std::size_t line) -> Vertex {
        if (names) {
            if (auto v = names->find(token)) {
                return *v;
            }
        }
        return detail::parse_vertex(token, limit, line);
    };
    detail::for_each_line(text, [&](std::size_t line, std::string_view raw) {
        auto tok = detail::split_ws(raw);
        if (tok.empty() || tok[0].front() == '#') {
            return;
        }
        if (tok.size() != 3) {
            throw SyntaxError(Errc::syntax_error, line, "expected '<tail> <head> <new_weight>'");
        }
        out.push_back({endpoint(tok[0], line), endpoint(tok[1], line), detail::parse_weight(tok[2], line)});
    });
    return out;
}

// One `t <vertex> <parent> <dist>` line per vertex, 1-based, parent 0 at the
// source.
inline std::string write_tree(const ShortestPathTree& tree) {
    std::ostringstream os;
    for (Vertex v = 0; v < tree.size(); ++v) {
        Vertex p = tree.parent_or_none(v);
        os << "t " << v + 1 << ' ' << (p == kNoVertex ? 0 : static_cast<std::uint64_t>(p) + 1) << ' '
           << tree.dist(v) << '\n';
    }
    return os.str();
}

// Graphviz dump; tree edges are drawn bold.
inline std::string write_dot(const Graph& g, const ShortestPathTree& tree, const VertexNames* names = nullptr) {
    auto label = [&](Vertex v) { return names ? names->display(v) : std::to_string(v + 1); };
    std::ostringstream os;
    os << "digraph spt {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        os << "  n" << v << " [label=\"" << label(v) << "\\n" << tree.dist(v) << "\"];\n";
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        os << "  n" << g.tail(e) << " -> n" << g.head(e) << " [label=\"" << g.weight(e) << '"';
        if (tree.has_edge(g.tail(e), g.head(e))) {
            os << ", style=bold";
        }
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace dynspt
