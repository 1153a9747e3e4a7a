#include "core/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace maxpi {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw std::out_of_range("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        adj_[static_cast<std::size_t>(u)].add(v);
        adj_[static_cast<std::size_t>(v)].add(u);
    }
    for (int v = 0; v < n_; ++v) m_ += degree(v);
    m_ /= 2;
    parent_ids_.resize(static_cast<std::size_t>(n));
    std::iota(parent_ids_.begin(), parent_ids_.end(), 0);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[static_cast<std::size_t>(u)].next(u); v != -1;
             v = adj_[static_cast<std::size_t>(u)].next(v))
            out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(const VertexSet& w) const {
    if (w.universe() != n_) throw std::out_of_range("induced set does not match graph universe");
    std::vector<int> verts = w.members();
    std::vector<int> pos(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) pos[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);

    Graph h;
    h.n_ = static_cast<int>(verts.size());
    h.adj_.assign(verts.size(), VertexSet(h.n_));
    for (std::size_t i = 0; i < verts.size(); ++i) {
        VertexSet nb = adj_[static_cast<std::size_t>(verts[i])] & w;
        nb.for_each([&](int v) { h.adj_[i].add(pos[static_cast<std::size_t>(v)]); });
        h.m_ += h.adj_[i].size();
    }
    h.m_ /= 2;
    h.parent_ids_ = std::move(verts);
    return h;
}

VertexSet Graph::lift(const VertexSet& sub, int parent_universe) const {
    VertexSet out(parent_universe);
    sub.for_each([&](int v) { out.add(parent_ids_[static_cast<std::size_t>(v)]); });
    return out;
}

VertexSet Graph::open_neighborhood(const VertexSet& w) const {
    if (w.universe() != n_) throw std::out_of_range("neighborhood set does not match graph universe");
    VertexSet out(n_);
    w.for_each([&](int v) { out |= adj_[static_cast<std::size_t>(v)]; });
    out -= w;
    return out;
}

VertexSet Graph::closed_neighborhood(const VertexSet& w) const {
    VertexSet out = open_neighborhood(w);
    out |= w;
    return out;
}

std::vector<VertexSet> Graph::components(const VertexSet& w) const {
    if (w.universe() != n_) throw std::out_of_range("component set does not match graph universe");
    std::vector<VertexSet> out;
    VertexSet todo = w;
    while (!todo.empty()) {
        int start = todo.first();
        VertexSet comp(n_);
        comp.add(start);
        VertexSet frontier(n_);
        frontier.add(start);
        while (!frontier.empty()) {
            VertexSet next(n_);
            frontier.for_each([&](int v) { next |= adj_[static_cast<std::size_t>(v)]; });
            next &= w;
            next -= comp;
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        todo -= comp;
    }
    return out;
}

bool Graph::is_connected_set(const VertexSet& w) const {
    if (w.empty()) return false;
    return components(w).size() == 1;
}

bool Graph::is_clique(const VertexSet& s) const {
    if (s.universe() != n_) throw std::out_of_range("clique set does not match graph universe");
    bool ok = true;
    s.for_each([&](int v) {
        VertexSet rest = s;
        rest.remove(v);
        if (!rest.is_subset_of(adj_[static_cast<std::size_t>(v)])) ok = false;
    });
    return ok;
}

bool Graph::operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

namespace {

// Greedy colouring upper bound on the clique number of g[p].
int color_bound(const Graph& g, const VertexSet& p) {
    std::vector<VertexSet> classes;
    p.for_each([&](int v) {
        for (auto& cls : classes) {
            if (!cls.intersects(g.neighbors(v))) {
                cls.add(v);
                return;
            }
        }
        VertexSet cls(g.vertex_count());
        cls.add(v);
        classes.push_back(std::move(cls));
    });
    return static_cast<int>(classes.size());
}

void expand_max(const Graph& g, VertexSet& r, const VertexSet& p, int& best) {
    if (p.empty()) {
        best = std::max(best, r.size());
        return;
    }
    if (r.size() + color_bound(g, p) <= best) return;
    VertexSet rest = p;
    for (int v = rest.first(); v != -1; v = rest.first()) {
        if (r.size() + rest.size() <= best) return;
        rest.remove(v);
        r.add(v);
        VertexSet p2 = rest & g.neighbors(v);
        if (r.size() + p2.size() > best) expand_max(g, r, p2, best);
        r.remove(v);
    }
}

// First clique of exactly `want` vertices found by ascending DFS; with
// candidates scanned in increasing order this is the lexicographically
// smallest one.
bool expand_lex(const Graph& g, VertexSet& r, const VertexSet& p, int want, VertexSet& out) {
    if (r.size() == want) {
        out = r;
        return true;
    }
    if (r.size() + color_bound(g, p) < want) return false;
    VertexSet rest = p;
    for (int v = rest.first(); v != -1; v = rest.first()) {
        if (r.size() + rest.size() < want) return false;
        rest.remove(v);
        r.add(v);
        if (expand_lex(g, r, rest & g.neighbors(v), want, out)) return true;
        r.remove(v);
    }
    return false;
}

}  // namespace

VertexSet maximum_clique(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return VertexSet(0);
    int best = 0;
    VertexSet r(n);
    expand_max(g, r, g.vertex_set(), best);
    VertexSet out(n);
    r.clear();
    expand_lex(g, r, g.vertex_set(), best, out);
    return out;
}

}  // namespace maxpi
