#include <istab/errors.hpp>
#include <istab/graph_matching.hpp>

#include "text_util.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace istab {

Graph::Graph(int vertex_count)
{
    if (vertex_count < 0)
        throw std::invalid_argument("negative vertex count");
    adjacency_.resize(static_cast<std::size_t>(vertex_count));
}

Graph::Graph(int vertex_count, const std::vector<Edge> & edges) : Graph(vertex_count)
{
    for (auto [u, v] : edges)
        add_edge(u, v);
}

void Graph::add_edge(Vertex u, Vertex v)
{
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v)
        throw std::invalid_argument("self-loop");
    if (has_edge(u, v))
        throw std::invalid_argument("repeated edge");
    if (parts_ && (*parts_)[static_cast<std::size_t>(u)] == (*parts_)[static_cast<std::size_t>(v)])
        throw std::invalid_argument("edge does not cross the bipartition");
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
    edges_.emplace_back(std::min(u, v), std::max(u, v));
}

Vertex Graph::add_vertex()
{
    adjacency_.emplace_back();
    parts_.reset();
    return vertex_count() - 1;
}

void Graph::set_bipartition(std::vector<Part> parts)
{
    if (parts.size() != adjacency_.size())
        throw std::invalid_argument("bipartition must label every vertex");
    for (auto [u, v] : edges_)
        if (parts[static_cast<std::size_t>(u)] == parts[static_cast<std::size_t>(v)])
            throw std::invalid_argument("edge does not cross the bipartition");
    parts_ = std::move(parts);
}

bool Graph::has_edge(Vertex u, Vertex v) const
{
    const auto & nu = neighbors(u);
    return std::find(nu.begin(), nu.end(), v) != nu.end();
}

std::vector<Vertex> Graph::part(Part p) const
{
    std::vector<Vertex> result;
    if (!parts_)
        return result;
    for (Vertex v = 0; v < vertex_count(); ++v)
        if ((*parts_)[static_cast<std::size_t>(v)] == p)
            result.push_back(v);
    return result;
}

namespace {

class Blossom {
public:
    explicit Blossom(const Graph & g)
        : g_(g), n_(static_cast<std::size_t>(g.vertex_count())), match_(n_, -1), parent_(n_), base_(n_),
          used_(n_), in_blossom_(n_)
    {
    }

    std::vector<Edge> run()
    {
        // Greedy start; augmenting paths do the rest.
        for (auto [u, v] : g_.edges())
            if (match_[idx(u)] == -1 && match_[idx(v)] == -1) {
                match_[idx(u)] = v;
                match_[idx(v)] = u;
            }
        for (Vertex root = 0; root < static_cast<Vertex>(n_); ++root) {
            if (match_[idx(root)] != -1)
                continue;
            for (Vertex v = find_path(root); v != -1;) {
                Vertex pv = parent_[idx(v)];
                Vertex next = match_[idx(pv)];
                match_[idx(v)] = pv;
                match_[idx(pv)] = v;
                v = next;
            }
        }
        std::vector<Edge> result;
        for (Vertex v = 0; v < static_cast<Vertex>(n_); ++v)
            if (match_[idx(v)] > v)
                result.emplace_back(v, match_[idx(v)]);
        return result;
    }

private:
    static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

    Vertex lowest_common_ancestor(Vertex a, Vertex b) const
    {
        std::vector<bool> seen(n_, false);
        while (true) {
            a = base_[idx(a)];
            seen[idx(a)] = true;
            if (match_[idx(a)] == -1)
                break;
            a = parent_[idx(match_[idx(a)])];
        }
        while (true) {
            b = base_[idx(b)];
            if (seen[idx(b)])
                return b;
            b = parent_[idx(match_[idx(b)])];
        }
    }

    void mark_path(Vertex v, Vertex b, Vertex child)
    {
        while (base_[idx(v)] != b) {
            in_blossom_[idx(base_[idx(v)])] = true;
            in_blossom_[idx(base_[idx(match_[idx(v)])])] = true;
            parent_[idx(v)] = child;
            child = match_[idx(v)];
            v = parent_[idx(match_[idx(v)])];
        }
    }

    Vertex find_path(Vertex root)
    {
        std::fill(used_.begin(), used_.end(), false);
        std::fill(parent_.begin(), parent_.end(), -1);
        std::iota(base_.begin(), base_.end(), 0);
        used_[idx(root)] = true;
        std::queue<Vertex> queue;
        queue.push(root);
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop();
            for (Vertex to : g_.neighbors(v)) {
                if (base_[idx(v)] == base_[idx(to)] || match_[idx(v)] == to)
                    continue;
                if (to == root || (match_[idx(to)] != -1 && parent_[idx(match_[idx(to)])] != -1)) {
                    Vertex current_base = lowest_common_ancestor(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), false);
                    mark_path(v, current_base, to);
                    mark_path(to, current_base, v);
                    for (std::size_t i = 0; i < n_; ++i)
                        if (in_blossom_[idx(base_[i])]) {
                            base_[i] = current_base;
                            if (!used_[i]) {
                                used_[i] = true;
                                queue.push(static_cast<Vertex>(i));
                            }
                        }
                }
                else if (parent_[idx(to)] == -1) {
                    parent_[idx(to)] = v;
                    if (match_[idx(to)] == -1)
                        return to;
                    used_[idx(match_[idx(to)])] = true;
                    queue.push(match_[idx(to)]);
                }
            }
        }
        return -1;
    }

    const Graph & g_;
    std::size_t n_;
    std::vector<Vertex> match_, parent_, base_;
    std::vector<bool> used_, in_blossom_;
};

void check_matching(const Graph & g, std::span<const Edge> m)
{
    std::vector<bool> covered(static_cast<std::size_t>(g.vertex_count()), false);
    for (auto [u, v] : m) {
        if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count() || !g.has_edge(u, v))
            throw std::invalid_argument("matching contains a non-edge");
        if (covered[static_cast<std::size_t>(u)] || covered[static_cast<std::size_t>(v)])
            throw std::invalid_argument("matching edges share a vertex");
        covered[static_cast<std::size_t>(u)] = covered[static_cast<std::size_t>(v)] = true;
    }
}

} // namespace

std::vector<Edge> max_matching(const Graph & g)
{
    return Blossom(g).run();
}

bool has_perfect_matching(const Graph & g)
{
    return 2 * static_cast<int>(max_matching(g).size()) == g.vertex_count();
}

bool is_maximal_matching(const Graph & g, std::span<const Edge> m)
{
    check_matching(g, m);
    std::vector<bool> covered(static_cast<std::size_t>(g.vertex_count()), false);
    for (auto [u, v] : m)
        covered[static_cast<std::size_t>(u)] = covered[static_cast<std::size_t>(v)] = true;
    for (auto [u, v] : g.edges())
        if (!covered[static_cast<std::size_t>(u)] && !covered[static_cast<std::size_t>(v)])
            return false;
    return true;
}

int minimum_maximal_matching(const Graph & g, int max_vertices)
{
    if (g.vertex_count() > max_vertices)
        throw PreconditionError("minimum maximal matching search is capped at " + std::to_string(max_vertices)
                                + " vertices");
    // Enumerate every matching (each edge in or out), keep the maximal ones.
    const auto & edges = g.edges();
    std::vector<bool> covered(static_cast<std::size_t>(g.vertex_count()), false);
    std::vector<Edge> chosen;
    int best = g.vertex_count() / 2 + 1;
    auto search = [&](auto && self, std::size_t next) -> void {
        if (static_cast<int>(chosen.size()) >= best)
            return;
        if (next == edges.size()) {
            if (is_maximal_matching(g, chosen))
                best = static_cast<int>(chosen.size());
            return;
        }
        auto [u, v] = edges[next];
        if (!covered[static_cast<std::size_t>(u)] && !covered[static_cast<std::size_t>(v)]) {
            covered[static_cast<std::size_t>(u)] = covered[static_cast<std::size_t>(v)] = true;
            chosen.push_back(edges[next]);
            self(self, next + 1);
            chosen.pop_back();
            covered[static_cast<std::size_t>(u)] = covered[static_cast<std::size_t>(v)] = false;
        }
        self(self, next + 1);
    };
    search(search, 0);
    return best;
}

Graph subdivision_graph(const Graph & base)
{
    const int n = base.vertex_count();
    Graph result(n + base.edge_count());
    std::vector<Part> parts(static_cast<std::size_t>(n), Part::A);
    parts.resize(static_cast<std::size_t>(n + base.edge_count()), Part::B);
    result.set_bipartition(parts);
    Vertex e = n;
    for (auto [u, v] : base.edges()) {
        result.add_edge(u, e);
        result.add_edge(v, e);
        ++e;
    }
    return result;
}

PaddedGraph pad_bipartition(const Graph & g)
{
    if (!g.bipartition())
        throw std::invalid_argument("padding needs a bipartite graph with declared parts");
    const int a = static_cast<int>(g.part(Part::A).size());
    const int b = static_cast<int>(g.part(Part::B).size());
    PaddedGraph padded{g, std::abs(a - b), a >= b ? Part::A : Part::B};
    if (padded.r == 0)
        return padded;
    const Part centre = padded.centre_side;
    const Part leaf = centre == Part::A ? Part::B : Part::A;
    std::vector<Part> parts = *g.bipartition();
    Graph & out = padded.graph;
    for (int i = 0; i < padded.r; ++i) {
        Vertex c = out.add_vertex();
        Vertex l1 = out.add_vertex();
        Vertex l2 = out.add_vertex();
        parts.insert(parts.end(), {centre, leaf, leaf});
        out.add_edge(c, l1);
        out.add_edge(c, l2);
    }
    out.set_bipartition(std::move(parts));
    return padded;
}

Graph parse_graph(std::string_view text)
{
    auto lines = detail::content_lines(text);
    if (lines.empty())
        throw ParseError(ParseErrorKind::Syntax, 1, 0, "empty graph file");
    auto header = detail::tokenize(lines.front().text);
    if (header.size() != 3 || header[0].text != "graph")
        throw ParseError(ParseErrorKind::Syntax, lines.front().number, 0, "expected 'graph <n> <m>'");
    auto n = detail::to_integer(header[1].text);
    auto m = detail::to_integer(header[2].text);
    if (!n || !m || *n < 0 || *m < 0)
        throw ParseError(ParseErrorKind::Syntax, lines.front().number, 0, "bad vertex or edge count");
    if (static_cast<long long>(lines.size()) - 1 != *m)
        throw ParseError(ParseErrorKind::Syntax, lines.back().number, 0,
                         "expected " + std::to_string(*m) + " edge lines, found " + std::to_string(lines.size() - 1));
    Graph g(static_cast<int>(*n));
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const auto & line = lines[li];
        auto tokens = detail::tokenize(line.text);
        if (tokens.size() != 2)
            throw ParseError(ParseErrorKind::Syntax, line.number, 0, "expected 'u v'");
        Vertex ends[2];
        for (int t = 0; t < 2; ++t) {
            auto value = detail::to_integer(tokens[static_cast<std::size_t>(t)].text);
            if (!value)
                throw ParseError(ParseErrorKind::Syntax, line.number, tokens[static_cast<std::size_t>(t)].column, "expected a vertex");
            if (*value < 1 || *value > *n)
                throw ParseError(ParseErrorKind::OutOfRange, line.number, tokens[static_cast<std::size_t>(t)].column,
                                 "vertex out of range");
            ends[t] = static_cast<Vertex>(*value - 1);
        }
        if (ends[0] == ends[1])
            throw ParseError(ParseErrorKind::SelfReference, line.number, 0, "self-loop");
        if (g.has_edge(ends[0], ends[1]))
            throw ParseError(ParseErrorKind::DuplicateEntry, line.number, 0, "repeated edge");
        g.add_edge(ends[0], ends[1]);
    }
    return g;
}

std::string format_graph(const Graph & g)
{
    std::ostringstream out;
    out << "graph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

} // namespace istab
