#pragma once

// Circulant (Cayley over Z_n) graphs and the Andrasfai family And(k) = Cay(Z_{3k-1}, {x : x = 1 mod 3}).
//
// Vertices are the residues 0..n-1 and every index computation is exact integer arithmetic mod n.
// A graph object stores only (n, connection set); the dense adjacency matrix is built on demand.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace andrasfai {

using Edge = std::pair<std::size_t, std::size_t>;

// Negation-closed subset of Z_n \ {0}, stored sorted and deduplicated.
class ConnectionSet {
public:
    // Throws ValidationError on n < 2, out-of-range residues, 0, or a missing negation
    // (the message names the first offending residue).
    ConnectionSet(std::size_t n, std::vector<std::size_t> members);

    std::size_t n() const noexcept { return n_; }
    std::span<const std::size_t> members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool contains(std::size_t residue) const noexcept;

    friend bool operator==(const ConnectionSet&, const ConnectionSet&) = default;

private:
    std::size_t n_;
    std::vector<std::size_t> members_;
};

// {x in 1..n-1 : x = 1 mod 3} with n = 3k-1. Throws InvalidParameter for k = 0.
ConnectionSet andrasfai_connection_set(std::size_t k);

class CirculantGraph {
public:
    CirculantGraph(ConnectionSet connection, std::optional<std::size_t> k_param = std::nullopt);

    std::size_t n() const noexcept { return connection_.n(); }
    const ConnectionSet& connection() const noexcept { return connection_; }
    // Present iff the graph was built as And(k).
    std::optional<std::size_t> k_param() const noexcept { return k_param_; }
    std::size_t degree() const noexcept { return connection_.size(); }

    bool adjacent(std::size_t u, std::size_t v) const;

    // Row 0 of the adjacency matrix; a_j = 1 iff j is in the connection set.
    std::vector<std::uint8_t> first_row() const;

    // Every edge once as (u, v) with u < v, ascending lexicographically.
    std::vector<Edge> edges() const;

    friend bool operator==(const CirculantGraph&, const CirculantGraph&) = default;

private:
    ConnectionSet connection_;
    std::optional<std::size_t> k_param_;
};

// Throws ValidationError when connection.n() != n.
CirculantGraph build_circulant(std::size_t n, const ConnectionSet& connection);

// And(k); k = 1 gives K_2.
CirculantGraph andrasfai_graph(std::size_t k);

// Dense 0/1 adjacency matrix, row-major.
class AdjacencyMatrix {
public:
    explicit AdjacencyMatrix(std::size_t n) : n_(n), entries_(n * n, 0) {}

    std::size_t n() const noexcept { return n_; }
    std::uint8_t operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    std::uint8_t& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    std::span<const std::uint8_t> row(std::size_t i) const {
        return std::span<const std::uint8_t>(entries_).subspan(i * n_, n_);
    }

    bool is_symmetric() const;

private:
    std::size_t n_;
    std::vector<std::uint8_t> entries_;
};

AdjacencyMatrix adjacency_matrix(const CirculantGraph& g);

// Breadth-first traversal from vertex 0.
bool is_connected(const CirculantGraph& g);

enum class GraphFormat { dot, edge_list, json };

// Throws InvalidParameter for unknown names. Accepts "dot", "edge-list", "json".
GraphFormat parse_graph_format(std::string_view name);

// DOT:       "graph andrasfai_k {\n  0 -- 1;\n ...}\n"
// edge list: "u v\n" per edge
// JSON:      {"n": int, "connection": [int], "edges": [[int,int]]}
// Edge order is canonical in all three, so outputs are byte-stable.
std::string export_graph(const CirculantGraph& g, GraphFormat format);

// Rebuilds a circulant graph on n vertices from edge-list text. The connection set is read off
// the neighbours of vertex 0; throws ValidationError if the edges are not exactly that circulant.
CirculantGraph parse_edge_list(std::string_view text, std::size_t n);

}  // namespace andrasfai
