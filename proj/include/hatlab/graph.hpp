#pragma once

// Undirected simple graphs as sorted adjacency lists, orientations (one arc
// per edge), quotient multigraphs over vertex partitions, girth and
// bounded-length cycle enumeration, plus the HATG v1 text format.

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "perm.hpp"

namespace hatlab {

struct NonConstantDegree : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotACycle : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class Graph {
public:
    Graph() = default;

    /// Builds from an edge list; rejects loops and multi-edges.
    Graph(int order, const std::vector<std::pair<int, int>>& edge_list) : adj_(order) {
        for (auto [u, v] : edge_list) {
            if (u < 0 || v < 0 || u >= order || v >= order)
                throw std::invalid_argument("Graph: vertex out of range");
            if (u == v)
                throw std::invalid_argument("Graph: loop edge");
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& nb : adj_) {
            std::sort(nb.begin(), nb.end());
            if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
                throw std::invalid_argument("Graph: multi-edge");
        }
        for (int u = 0; u < order; ++u)
            for (int v : adj_[u])
                if (u < v)
                    edges_.emplace_back(u, v);
        std::sort(edges_.begin(), edges_.end());
    }

    int order() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool adjacent(int u, int v) const {
        const auto& nb = adj_[u];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    /// Index into edges() of {u,v}; -1 if absent.
    int edge_index(int u, int v) const {
        if (u > v)
            std::swap(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
        if (it == edges_.end() || *it != std::make_pair(u, v))
            return -1;
        return static_cast<int>(it - edges_.begin());
    }

    bool is_regular(int k) const {
        for (int v = 0; v < order(); ++v)
            if (degree(v) != k)
                return false;
        return true;
    }

    bool connected() const {
        if (order() == 0)
            return true;
        std::vector<char> seen(order(), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj_[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    ++count;
                    stack.push_back(v);
                }
        }
        return count == order();
    }

    /// Relabels vertices: vertex v becomes p(v).
    Graph relabeled(const Permutation& p) const {
        std::vector<std::pair<int, int>> es;
        es.reserve(edges_.size());
        for (auto [u, v] : edges_)
            es.emplace_back(p(u), p(v));
        return Graph(order(), es);
    }

private:
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
};

/// One arc per edge of a base graph: head[e] is the head endpoint of edges()[e].
struct Orientation {
    const Graph* base = nullptr;
    std::vector<int> head; // head[e] in {edges()[e].first, edges()[e].second}

    int tail_of(int e) const {
        auto [u, v] = base->edges()[e];
        return head[e] == u ? v : u;
    }

    /// +1 if (u,v) is traversed along the arc, -1 against; u~v required.
    int direction(int u, int v) const {
        int e = base->edge_index(u, v);
        if (e < 0)
            throw std::invalid_argument("Orientation::direction: not an edge");
        return head[e] == v ? +1 : -1;
    }

    int out_degree(int v) const {
        int d = 0;
        for (int w : base->neighbors(v))
            if (direction(v, w) == +1)
                ++d;
        return d;
    }
};

/// Length of the shortest cycle; nullopt for forests.
inline std::optional<int> girth(const Graph& g) {
    int best = -1;
    std::vector<int> dist(g.order()), parent(g.order());
    for (int root = 0; root < g.order(); ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::vector<int> queue{root};
        dist[root] = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            if (best > 0 && 2 * dist[u] >= best)
                break;
            for (int v : g.neighbors(u)) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (v != parent[u]) {
                    int len = dist[u] + dist[v] + 1;
                    if (best < 0 || len < best)
                        best = len;
                }
            }
        }
    }
    if (best < 0)
        return std::nullopt;
    return best;
}

/// Canonical vertex sequence of a cycle: lexicographically least among all
/// rotations and reflections. Shared by every module that deduplicates cycles.
inline std::vector<int> canonical_cycle(const std::vector<int>& cycle) {
    const int len = static_cast<int>(cycle.size());
    std::vector<int> best, cand(len);
    for (int dir = 0; dir < 2; ++dir) {
        for (int s = 0; s < len; ++s) {
            for (int k = 0; k < len; ++k) {
                int idx = dir == 0 ? (s + k) % len : (s - k % len + len) % len;
                cand[k] = cycle[idx];
            }
            if (best.empty() || cand < best)
                best = cand;
        }
    }
    return best;
}

namespace detail {

inline void cycle_dfs(const Graph& g, int start, int len, int min_vertex,
                      const std::vector<int>& dist, std::vector<int>& path,
                      std::vector<char>& in_path, std::vector<std::vector<int>>& out) {
    int depth = static_cast<int>(path.size());
    int u = path.back();
    if (depth == len) {
        if (g.adjacent(u, start) && path[1] < path[len - 1])
            out.push_back(canonical_cycle(path));
        return;
    }
    for (int v : g.neighbors(u)) {
        if (v < min_vertex || in_path[v])
            continue;
        if (dist[v] > len - depth) // cannot return to start in time
            continue;
        path.push_back(v);
        in_path[v] = 1;
        cycle_dfs(g, start, len, min_vertex, dist, path, in_path, out);
        in_path[v] = 0;
        path.pop_back();
    }
}

inline std::vector<int> bfs_dist(const Graph& g, int root) {
    std::vector<int> dist(g.order(), g.order() + 1);
    std::vector<int> queue{root};
    dist[root] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
        for (int v : g.neighbors(queue[qi]))
            if (dist[v] > dist[queue[qi]] + 1) {
                dist[v] = dist[queue[qi]] + 1;
                queue.push_back(v);
            }
    return dist;
}

} // namespace detail

/// All simple cycles of exactly length len through v, each reported once as a
/// canonical vertex sequence. Restricting to vertices >= min_vertex lets the
/// all-cycles scan below discover each cycle at its smallest vertex only.
inline std::vector<std::vector<int>> cycles_through(const Graph& g, int v, int len,
                                                    int min_vertex = 0) {
    if (len < 3)
        throw std::invalid_argument("cycles_through: len must be >= 3");
    auto dist = detail::bfs_dist(g, v);
    std::vector<int> path{v};
    std::vector<char> in_path(g.order(), 0);
    in_path[v] = 1;
    std::vector<std::vector<int>> out;
    detail::cycle_dfs(g, v, len, min_vertex, dist, path, in_path, out);
    std::sort(out.begin(), out.end());
    return out;
}

/// Every simple cycle of exactly length len in g, canonical, sorted.
inline std::vector<std::vector<int>> all_cycles(const Graph& g, int len) {
    std::vector<std::vector<int>> out;
    for (int v = 0; v < g.order(); ++v) {
        auto cs = cycles_through(g, v, len, v);
        out.insert(out.end(), cs.begin(), cs.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Quotient of g by a vertex partition coming from a semiregular automorphism:
/// per-vertex neighbor counts into each class, checked constant across classes.
struct QuotientMultigraph {
    std::vector<std::vector<int>> classes;
    std::vector<std::vector<int>> multiplicity; // multiplicity[a][b], a != b
    std::vector<int> inner_degree;              // induced degree inside class
    std::vector<int> loop_multiplicity;         // inner_degree / 2

    int class_count() const { return static_cast<int>(classes.size()); }
};

inline QuotientMultigraph quotient(const Graph& g, const std::vector<std::vector<int>>& partition) {
    const int n = g.order();
    std::vector<int> cls(n, -1);
    int covered = 0;
    for (std::size_t a = 0; a < partition.size(); ++a)
        for (int v : partition[a]) {
            if (v < 0 || v >= n || cls[v] != -1)
                throw std::invalid_argument("quotient: partition invalid");
            cls[v] = static_cast<int>(a);
            ++covered;
        }
    if (covered != n)
        throw std::invalid_argument("quotient: partition does not cover vertex set");

    const int C = static_cast<int>(partition.size());
    QuotientMultigraph q;
    q.classes = partition;
    q.multiplicity.assign(C, std::vector<int>(C, 0));
    q.inner_degree.assign(C, 0);
    q.loop_multiplicity.assign(C, 0);

    std::vector<int> counts(C);
    for (int a = 0; a < C; ++a) {
        bool first = true;
        std::vector<int> expected(C, 0);
        for (int v : q.classes[a]) {
            std::fill(counts.begin(), counts.end(), 0);
            for (int w : g.neighbors(v))
                ++counts[cls[w]];
            if (first) {
                expected = counts;
                first = false;
            } else if (counts != expected) {
                throw NonConstantDegree("quotient: class-degree not constant; partition is not "
                                        "from a semiregular automorphism");
            }
        }
        for (int b = 0; b < C; ++b)
            if (b != a)
                q.multiplicity[a][b] = expected[b];
        q.inner_degree[a] = expected[a];
        if (expected[a] % 2 != 0)
            throw NonConstantDegree("quotient: odd induced class degree");
        q.loop_multiplicity[a] = expected[a] / 2;
    }
    return q;
}

// ---- HATG v1 text format ----------------------------------------------------
// line 1: "hatg 1"; line 2: "n <order>"; then "u v" per edge, u < v, sorted.

inline void write_hatg(std::ostream& os, const Graph& g) {
    os << "hatg 1\n";
    os << "n " << g.order() << "\n";
    for (auto [u, v] : g.edges())
        os << u << " " << v << "\n";
}

inline std::string to_hatg(const Graph& g) {
    std::ostringstream os;
    write_hatg(os, g);
    return os.str();
}

inline Graph read_hatg(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != "hatg 1")
        throw std::invalid_argument("read_hatg: missing 'hatg 1' header");
    if (!std::getline(is, line) || line.rfind("n ", 0) != 0)
        throw std::invalid_argument("read_hatg: missing 'n <order>' line");
    int order = std::stoi(line.substr(2));
    std::vector<std::pair<int, int>> es;
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u >> v))
            throw std::invalid_argument("read_hatg: bad edge line: " + line);
        if (u >= v)
            throw std::invalid_argument("read_hatg: edges must satisfy u < v");
        if (!es.empty() && std::make_pair(u, v) <= es.back())
            throw std::invalid_argument("read_hatg: edges not sorted");
        es.emplace_back(u, v);
    }
    return Graph(order, es);
}

inline Graph from_hatg(const std::string& text) {
    std::istringstream is(text);
    return read_hatg(is);
}

} // namespace hatlab
