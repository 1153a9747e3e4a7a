#include "core/recognition.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_set>

#include "core/errors.hpp"

namespace maxpi {

namespace {

// Maximum-cardinality search. Returns an elimination order (position 0 is
// eliminated first); for chordal graphs this is a perfect elimination order.
std::vector<int> mcs_order(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    std::vector<int> order(static_cast<std::size_t>(n), -1);
    for (int i = n - 1; i >= 0; --i) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!done[static_cast<std::size_t>(v)] &&
                (pick == -1 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(pick)]))
                pick = v;
        done[static_cast<std::size_t>(pick)] = true;
        order[static_cast<std::size_t>(i)] = pick;
        g.neighbors(pick).for_each([&](int u) {
            if (!done[static_cast<std::size_t>(u)]) ++weight[static_cast<std::size_t>(u)];
        });
    }
    return order;
}

// Shortest path from src to dst inside `allowed`, neighbors scanned in
// ascending order. Returns the path including endpoints, or empty.
std::vector<int> bfs_path(const Graph& g, int src, int dst, const VertexSet& allowed) {
    int n = g.vertex_count();
    std::vector<int> parent(static_cast<std::size_t>(n), -2);
    std::deque<int> queue;
    parent[static_cast<std::size_t>(src)] = -1;
    queue.push_back(src);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (v == dst) break;
        VertexSet nb = g.neighbors(v) & allowed;
        nb.for_each([&](int u) {
            if (parent[static_cast<std::size_t>(u)] == -2) {
                parent[static_cast<std::size_t>(u)] = v;
                queue.push_back(u);
            }
        });
    }
    if (parent[static_cast<std::size_t>(dst)] == -2) return {};
    std::vector<int> path;
    for (int v = dst; v != -1; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

std::optional<VertexSet> shortest_hole(const Graph& g, int max_len) {
    int n = g.vertex_count();
    int best_len = n + 1;
    std::optional<VertexSet> best;
    for (int v = 0; v < n; ++v) {
        std::vector<int> nb = g.neighbors(v).members();
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                int x = nb[i], y = nb[j];
                if (g.adjacent(x, y)) continue;
                VertexSet allowed = g.closed_neighborhood(VertexSet(n, {v})).complement();
                allowed.add(x);
                allowed.add(y);
                std::vector<int> path = bfs_path(g, x, y, allowed);
                if (path.empty()) continue;
                int len = static_cast<int>(path.size()) + 1;
                if (len < best_len) {
                    best_len = len;
                    VertexSet hole(n, {v});
                    for (int u : path) hole.add(u);
                    best = hole;
                    if (best_len == 4) break;
                }
            }
            if (best_len == 4) break;
        }
        if (best_len == 4) break;
    }
    if (!best || best_len > max_len) return std::nullopt;
    return best;
}

ChordalityResult is_chordal(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> order = mcs_order(g);
    std::vector<int> pos(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    for (int i = 0; i < n; ++i) {
        int v = order[static_cast<std::size_t>(i)];
        VertexSet later(n);
        g.neighbors(v).for_each([&](int u) {
            if (pos[static_cast<std::size_t>(u)] > i) later.add(u);
        });
        if (later.size() <= 1) continue;
        int parent = -1;
        later.for_each([&](int u) {
            if (parent == -1 || pos[static_cast<std::size_t>(u)] < pos[static_cast<std::size_t>(parent)]) parent = u;
        });
        VertexSet rest = later;
        rest.remove(parent);
        if (rest.is_subset_of(g.neighbors(parent))) continue;
        // Failed: some later neighbor w of v is not adjacent to the parent.
        // Complete parent..w to a chordless cycle through v.
        int w = -1;
        rest.for_each([&](int u) {
            if (w == -1 && !g.adjacent(parent, u)) w = u;
        });
        VertexSet allowed = g.closed_neighborhood(VertexSet(n, {v})).complement();
        allowed.add(parent);
        allowed.add(w);
        std::vector<int> path = bfs_path(g, parent, w, allowed);
        if (!path.empty()) {
            VertexSet hole(n, {v});
            for (int u : path) hole.add(u);
            return {false, hole};
        }
        return {false, shortest_hole(g, n)};
    }
    return {true, std::nullopt};
}

CliqueTree clique_tree(const Graph& g) {
    if (!is_chordal(g).chordal) throw Error(ErrorCode::invalid_argument, "clique tree requires a chordal graph");
    int n = g.vertex_count();
    CliqueTree t;
    if (n == 0) return t;

    std::vector<int> order = mcs_order(g);
    std::vector<int> pos(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    std::vector<VertexSet> cands;
    for (int i = 0; i < n; ++i) {
        int v = order[static_cast<std::size_t>(i)];
        VertexSet c(n, {v});
        g.neighbors(v).for_each([&](int u) {
            if (pos[static_cast<std::size_t>(u)] > i) c.add(u);
        });
        cands.push_back(c);
    }
    for (std::size_t i = 0; i < cands.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < cands.size(); ++j)
            if (i != j && cands[i].is_subset_of(cands[j]) && !(cands[j].is_subset_of(cands[i]) && i < j)) {
                maximal = false;
                break;
            }
        if (maximal) t.bags.push_back(cands[i]);
    }
    std::sort(t.bags.begin(), t.bags.end());

    // Maximum-weight spanning tree of the bag graph (weights = intersection
    // sizes) is a clique tree; Prim with smallest-index tie-break.
    int m = static_cast<int>(t.bags.size());
    std::vector<bool> in_tree(static_cast<std::size_t>(m), false);
    std::vector<int> best_w(static_cast<std::size_t>(m), -1), best_e(static_cast<std::size_t>(m), -1);
    in_tree[0] = true;
    for (int j = 1; j < m; ++j) {
        best_w[static_cast<std::size_t>(j)] = (t.bags[0] & t.bags[static_cast<std::size_t>(j)]).size();
        best_e[static_cast<std::size_t>(j)] = 0;
    }
    for (int it = 1; it < m; ++it) {
        int pick = -1;
        for (int j = 0; j < m; ++j)
            if (!in_tree[static_cast<std::size_t>(j)] &&
                (pick == -1 || best_w[static_cast<std::size_t>(j)] > best_w[static_cast<std::size_t>(pick)]))
                pick = j;
        in_tree[static_cast<std::size_t>(pick)] = true;
        t.edges.emplace_back(std::min(best_e[static_cast<std::size_t>(pick)], pick),
                             std::max(best_e[static_cast<std::size_t>(pick)], pick));
        for (int j = 0; j < m; ++j) {
            if (in_tree[static_cast<std::size_t>(j)]) continue;
            int w = (t.bags[static_cast<std::size_t>(pick)] & t.bags[static_cast<std::size_t>(j)]).size();
            if (w > best_w[static_cast<std::size_t>(j)]) {
                best_w[static_cast<std::size_t>(j)] = w;
                best_e[static_cast<std::size_t>(j)] = pick;
            }
        }
    }
    std::sort(t.edges.begin(), t.edges.end());
    return t;
}

bool valid_clique_tree(const Graph& g, const CliqueTree& t) {
    int n = g.vertex_count();
    if (n == 0) return t.bags.empty();
    if (static_cast<int>(t.bags.size()) > n) return false;
    for (const auto& b : t.bags) {
        if (!g.is_clique(b)) return false;
        VertexSet nb = VertexSet::full(n);
        b.for_each([&](int v) { nb &= g.closed_neighborhood(VertexSet(n, {v})); });
        if (nb != b) return false;  // not maximal
    }
    // Every edge of g inside some bag, every vertex in some bag.
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (const auto& b : t.bags)
            if (b.contains(u) && b.contains(v)) covered = true;
        if (!covered) return false;
    }
    // Running intersection: bags containing v form a connected subtree.
    int m = static_cast<int>(t.bags.size());
    if (m > 0 && static_cast<int>(t.edges.size()) != m - 1) return false;
    for (int v = 0; v < n; ++v) {
        std::vector<int> holds;
        for (int j = 0; j < m; ++j)
            if (t.bags[static_cast<std::size_t>(j)].contains(v)) holds.push_back(j);
        if (holds.empty()) return false;
        std::unordered_set<int> want(holds.begin(), holds.end());
        std::unordered_set<int> seen{holds[0]};
        std::deque<int> q{holds[0]};
        while (!q.empty()) {
            int b = q.front();
            q.pop_front();
            for (auto [a, c] : t.edges) {
                int other = (a == b) ? c : (c == b ? a : -1);
                if (other >= 0 && want.count(other) && !seen.count(other)) {
                    seen.insert(other);
                    q.push_back(other);
                }
            }
        }
        if (seen.size() != want.size()) return false;
    }
    return true;
}

SeparatorSplit balanced_clique_separator(const Graph& h) {
    int n = h.vertex_count();
    if (n < 1) throw Error(ErrorCode::invalid_argument, "balanced separator requires a non-empty graph");
    CliqueTree t = clique_tree(h);  // throws on non-chordal input

    std::vector<VertexSet> cands;
    cands.emplace_back(n);  // empty separator, legal for disconnected graphs
    for (auto [a, b] : t.edges) cands.push_back(t.bags[static_cast<std::size_t>(a)] & t.bags[static_cast<std::size_t>(b)]);
    for (const auto& b : t.bags) cands.push_back(b);
    std::sort(cands.begin(), cands.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

    for (const auto& s : cands) {
        std::vector<VertexSet> comps = h.components(h.vertex_set() - s);
        std::stable_sort(comps.begin(), comps.end(),
                         [](const VertexSet& a, const VertexSet& b) { return a.size() > b.size(); });
        VertexSet x1(n), x2(n);
        int s1 = 0, s2 = 0;
        for (const auto& c : comps) {
            if (s1 <= s2) {
                x1 |= c;
                s1 += c.size();
            } else {
                x2 |= c;
                s2 += c.size();
            }
        }
        if (3 * std::max(s1, s2) <= 2 * n) return {s, x1, x2};
    }
    throw Error(ErrorCode::invalid_argument, "no balanced clique separator found");
}

namespace {

// A bag ordering has the consecutive property iff at each step the next bag
// contains every vertex that is started but not finished. DFS over placed-bag
// subsets with memoized dead states.
bool consecutive_arrangement(const std::vector<VertexSet>& bags, int n) {
    int t = static_cast<int>(bags.size());
    if (t <= 2) return true;
    std::unordered_set<VertexSet, VertexSetHash> dead;

    VertexSet all_bags = VertexSet::full(t);
    auto union_of = [&](const VertexSet& idx) {
        VertexSet u(n);
        idx.for_each([&](int b) { u |= bags[static_cast<std::size_t>(b)]; });
        return u;
    };

    std::function<bool(const VertexSet&)> dfs = [&](const VertexSet& placed) -> bool {
        if (placed == all_bags) return true;
        if (dead.count(placed)) return false;
        VertexSet unplaced = all_bags - placed;
        VertexSet open = union_of(placed) & union_of(unplaced);
        bool ok = false;
        for (int b = unplaced.first(); b != -1 && !ok; b = unplaced.next(b)) {
            if (!open.is_subset_of(bags[static_cast<std::size_t>(b)])) continue;
            VertexSet next = placed;
            next.add(b);
            ok = dfs(next);
        }
        if (!ok) dead.insert(placed);
        return ok;
    };
    return dfs(VertexSet(t));
}

}  // namespace

bool is_interval(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    if (!is_chordal(g).chordal) return false;
    CliqueTree t = clique_tree(g);
    std::vector<VertexSet> comps = g.components();
    for (const auto& comp : comps) {
        std::vector<VertexSet> bags;
        for (const auto& b : t.bags)
            if (b.first() != -1 && comp.contains(b.first())) bags.push_back(b);
        if (!consecutive_arrangement(bags, g.vertex_count())) return false;
    }
    return true;
}

bool separator_test_chordal(const Graph& g, const VertexSet& s) {
    if (!g.is_clique(s)) throw Error(ErrorCode::invalid_argument, "separator test requires a clique");
    return is_chordal(g).chordal;
}

bool separator_test_interval(const Graph& g, const VertexSet& s) {
    if (!g.is_clique(s)) throw Error(ErrorCode::invalid_argument, "separator test requires a clique");
    // Apex construction: v adjacent to v' and all of S, v' adjacent only to v;
    // this forces S into an end bag of any clique path.
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges = g.edges();
    s.for_each([&](int u) { edges.emplace_back(n, u); });
    edges.emplace_back(n, n + 1);
    return is_interval(Graph(n + 2, edges));
}

std::optional<VertexSet> find_forbidden_chordal(const Graph& g, int ell) {
    if (ell < 4) throw Error(ErrorCode::invalid_argument, "forbidden subgraph bound must be at least 4");
    return shortest_hole(g, ell);
}

namespace {

// Searches for the four non-cycle Lekkerkerker-Boland shapes. Each finder
// returns the smallest embedding it can find, scanning anchors in ascending
// order.

std::optional<VertexSet> find_bipartite_claw(const Graph& g) {
    int n = g.vertex_count();
    if (n < 7) return std::nullopt;
    for (int c = 0; c < n; ++c) {
        std::vector<int> nb = g.neighbors(c).members();
        std::size_t d = nb.size();
        if (d < 3) continue;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j) {
                if (g.adjacent(nb[i], nb[j])) continue;
                for (std::size_t k = j + 1; k < d; ++k) {
                    if (g.adjacent(nb[i], nb[k]) || g.adjacent(nb[j], nb[k])) continue;
                    int a[3] = {nb[i], nb[j], nb[k]};
                    VertexSet reach = g.closed_neighborhood(VertexSet(n, {c}));
                    VertexSet cand[3];
                    bool feasible = true;
                    for (int t = 0; t < 3 && feasible; ++t) {
                        cand[t] = g.neighbors(a[t]) - reach;
                        for (int o = 0; o < 3; ++o)
                            if (o != t) cand[t] -= g.neighbors(a[o]);
                        if (cand[t].empty()) feasible = false;
                    }
                    if (!feasible) continue;
                    for (int b0 = cand[0].first(); b0 != -1; b0 = cand[0].next(b0)) {
                        VertexSet c1 = cand[1] - g.closed_neighborhood(VertexSet(n, {b0}));
                        for (int b1 = c1.first(); b1 != -1; b1 = c1.next(b1)) {
                            VertexSet c2 = cand[2] - g.closed_neighborhood(VertexSet(n, {b0}));
                            c2 -= g.closed_neighborhood(VertexSet(n, {b1}));
                            int b2 = c2.first();
                            if (b2 != -1)
                                return VertexSet(n, {c, a[0], a[1], a[2], b0, b1, b2});
                        }
                    }
                }
            }
    }
    return std::nullopt;
}

// Enumerate induced paths of exactly `len` vertices inside `universe`,
// calling fn(path); stops when fn returns true.
bool induced_paths(const Graph& g, const VertexSet& universe, int len,
                   const std::function<bool(const std::vector<int>&)>& fn) {
    std::vector<int> path;
    std::function<bool()> extend = [&]() -> bool {
        if (static_cast<int>(path.size()) == len) return fn(path);
        int last = path.back();
        VertexSet cand = g.neighbors(last) & universe;
        // keep the path induced: candidate may touch only the last vertex
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            cand -= g.closed_neighborhood(VertexSet(g.vertex_count(), {path[i]}));
        for (int w = cand.first(); w != -1; w = cand.next(w)) {
            path.push_back(w);
            if (extend()) return true;
            path.pop_back();
        }
        return false;
    };
    for (int v = universe.first(); v != -1; v = universe.next(v)) {
        path.assign(1, v);
        if (extend()) return true;
    }
    return false;
}

std::optional<VertexSet> find_umbrella(const Graph& g) {
    int n = g.vertex_count();
    if (n < 7) return std::nullopt;
    std::optional<VertexSet> found;
    for (int u = 0; u < n && !found; ++u) {
        if (g.degree(u) < 5) continue;
        induced_paths(g, g.neighbors(u), 5, [&](const std::vector<int>& row) {
            int c = row[2];
            VertexSet cand = g.neighbors(c) - g.closed_neighborhood(VertexSet(n, {u}));
            for (std::size_t i = 0; i < 5; ++i)
                if (i != 2) cand -= g.neighbors(row[i]);
            int b = cand.first();
            if (b == -1) return false;
            VertexSet res(n, {u, b});
            for (int v : row) res.add(v);
            found = res;
            return true;
        });
    }
    return found;
}

std::optional<VertexSet> find_net(const Graph& g, int k) {
    int n = g.vertex_count();
    if (n < k + 4) return std::nullopt;
    std::optional<VertexSet> found;
    for (int u1 = 0; u1 < n && !found; ++u1) {
        if (g.degree(u1) < k + 1) continue;
        induced_paths(g, g.neighbors(u1), k, [&](const std::vector<int>& row) {
            VertexSet rowset(n);
            for (int v : row) rowset.add(v);
            VertexSet row_reach(n);
            for (int v : row) row_reach |= g.closed_neighborhood(VertexSet(n, {v}));
            VertexSet u1_reach = g.closed_neighborhood(VertexSet(n, {u1}));

            VertexSet ll_cand = g.neighbors(row.front()) - u1_reach;
            for (std::size_t i = 1; i < row.size(); ++i) ll_cand -= g.neighbors(row[static_cast<std::size_t>(i)]);
            ll_cand -= rowset;
            VertexSet rr_base = g.neighbors(row.back()) - u1_reach;
            for (std::size_t i = 0; i + 1 < row.size(); ++i) rr_base -= g.neighbors(row[static_cast<std::size_t>(i)]);
            rr_base -= rowset;
            VertexSet u2_base = g.neighbors(u1) - row_reach;

            for (int ll = ll_cand.first(); ll != -1; ll = ll_cand.next(ll)) {
                VertexSet rr_cand = rr_base - g.closed_neighborhood(VertexSet(n, {ll}));
                for (int rr = rr_cand.first(); rr != -1; rr = rr_cand.next(rr)) {
                    VertexSet u2_cand = u2_base - g.closed_neighborhood(VertexSet(n, {ll}));
                    u2_cand -= g.closed_neighborhood(VertexSet(n, {rr}));
                    int u2 = u2_cand.first();
                    if (u2 != -1) {
                        VertexSet res(n, {u1, u2, ll, rr});
                        for (int v : row) res.add(v);
                        found = res;
                        return true;
                    }
                }
            }
            return false;
        });
    }
    return found;
}

std::optional<VertexSet> find_tent(const Graph& g, int k) {
    int n = g.vertex_count();
    if (n < k + 3) return std::nullopt;
    for (int l = 0; l < n; ++l) {
        for (int r = g.neighbors(l).first(); r != -1; r = g.neighbors(l).next(r)) {
            if (r == l) continue;
            VertexSet wings = g.neighbors(l) & g.neighbors(r);
            VertexSet starts = g.neighbors(l) - g.closed_neighborhood(VertexSet(n, {r}));
            VertexSet ends_base = g.neighbors(r) - g.closed_neighborhood(VertexSet(n, {l}));

            // row: v0 in starts, k-2 middles in wings, last in ends; induced path
            std::vector<int> row;
            std::function<bool()> extend = [&]() -> bool {
                int len = static_cast<int>(row.size());
                if (len == k) {
                    // apex not adjacent to any row vertex
                    VertexSet apex = wings;
                    for (int v : row) apex -= g.closed_neighborhood(VertexSet(n, {v}));
                    return apex.first() != -1;
                }
                VertexSet cand = (len == k - 1) ? ends_base : wings;
                cand &= g.neighbors(row.back());
                for (int i = 0; i + 1 < len; ++i)
                    cand -= g.closed_neighborhood(VertexSet(n, {row[static_cast<std::size_t>(i)]}));
                for (int w = cand.first(); w != -1; w = cand.next(w)) {
                    row.push_back(w);
                    if (extend()) return true;
                    row.pop_back();
                }
                return false;
            };
            for (int v0 = starts.first(); v0 != -1; v0 = starts.next(v0)) {
                row.assign(1, v0);
                if (extend()) {
                    VertexSet apex = wings;
                    for (int v : row) apex -= g.closed_neighborhood(VertexSet(n, {v}));
                    VertexSet res(n, {l, r, apex.first()});
                    for (int v : row) res.add(v);
                    return res;
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<VertexSet> find_forbidden_interval(const Graph& g, int ell) {
    if (ell < 4) throw Error(ErrorCode::invalid_argument, "forbidden subgraph bound must be at least 4");
    std::optional<VertexSet> best;
    auto consider = [&](const std::optional<VertexSet>& cand) {
        if (!cand) return;
        if (cand->size() > ell) return;
        if (!best || cand->size() < best->size()) best = cand;
    };
    consider(shortest_hole(g, ell));
    int n = g.vertex_count();
    for (int k = 2; k + 4 <= std::min(ell, n); ++k) {
        if (best && best->size() <= k + 4) break;
        consider(find_net(g, k));
        if (best && best->size() == k + 4) break;
    }
    for (int k = 3; k + 3 <= std::min(ell, n); ++k) {
        if (best && best->size() <= k + 3) break;
        consider(find_tent(g, k));
        if (best && best->size() == k + 3) break;
    }
    if (ell >= 7 && (!best || best->size() > 7)) {
        consider(find_bipartite_claw(g));
        consider(find_umbrella(g));
    }
    return best;
}

}  // namespace maxpi
