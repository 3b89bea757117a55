#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace istab {

/// Vertices are 0-based inside the library; the graph file format is 1-based.
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

enum class Part { A, B };

/// Undirected simple graph with an optional bipartition.
class Graph {
public:
    explicit Graph(int vertex_count = 0);
    Graph(int vertex_count, const std::vector<Edge> & edges);

    /// Throws std::invalid_argument on loops, repeated edges or bad endpoints.
    void add_edge(Vertex u, Vertex v);
    /// Appends an isolated vertex and returns it. Any bipartition must be
    /// extended with set_bipartition afterwards.
    Vertex add_vertex();
    /// Throws std::invalid_argument unless every edge crosses the partition.
    void set_bipartition(std::vector<Part> parts);

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    /// Edges as (u, v) with u < v, in insertion order.
    const std::vector<Edge> & edges() const { return edges_; }
    const std::vector<Vertex> & neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    bool has_edge(Vertex u, Vertex v) const;
    const std::optional<std::vector<Part>> & bipartition() const { return parts_; }
    std::vector<Vertex> part(Part p) const;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<Edge> edges_;
    std::optional<std::vector<Part>> parts_;
};

/// Maximum-cardinality matching of a general graph (Edmonds' blossom
/// algorithm, O(V^3)). Edges are returned as (u, v) with u < v.
std::vector<Edge> max_matching(const Graph & g);
bool has_perfect_matching(const Graph & g);

/// True iff no edge of g can be added to m. Throws std::invalid_argument
/// when m is not a matching of g.
bool is_maximal_matching(const Graph & g, std::span<const Edge> m);

/// Size of a smallest maximal matching, by exhaustive search. Exponential;
/// throws PreconditionError when the graph has more than `max_vertices` vertices.
int minimum_maximal_matching(const Graph & g, int max_vertices = 40);

/// Replaces every edge uv with a path u - e - v. Original vertices keep
/// their ids and form part A; edge vertices follow in edge order and form part B.
Graph subdivision_graph(const Graph & base);

struct PaddedGraph {
    Graph graph;
    /// Number of gadgets added; minimum maximal matching grows by exactly r.
    int r = 0;
    /// Side that received the r centre vertices (the other got 2r leaves).
    Part centre_side = Part::A;
};

/// Balances the two parts of a bipartite graph: when |A| = |B| + r, adds r
/// centres to A and 2r leaves to B, each centre adjacent to its two leaves
/// (mirrored when B is larger). Throws std::invalid_argument without a bipartition.
PaddedGraph pad_bipartition(const Graph & g);

/// `graph <n> <m>` followed by m lines `u v`, 1-based, `#` comments. Throws ParseError.
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph & g);

} // namespace istab
