#include "core/oracle.hpp"

#include <algorithm>
#include <random>

#include "core/errors.hpp"

namespace maxpi {

VertexSet brute_force_max_induced(const Graph& g, const PiClass& pi, int cap) {
    int n = g.vertex_count();
    if (n > cap)
        throw Error(ErrorCode::cap_exceeded,
                    "oracle refuses n=" + std::to_string(n) + " above cap " + std::to_string(cap));
    // Subsets of each size in lexicographic member order, sizes descending.
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int s = n; s >= 0; --s) {
        for (int i = 0; i < s; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            VertexSet cand(n);
            for (int i = 0; i < s; ++i) cand.add(idx[static_cast<std::size_t>(i)]);
            if (pi.membership(g.induced(cand))) return cand;
            int i = s - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - s + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < s; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return VertexSet(n);
}

std::vector<VertexSet> brute_force_connected_sets(const Graph& g, int v, int b, int f, int cap) {
    int n = g.vertex_count();
    if (n > cap)
        throw Error(ErrorCode::cap_exceeded,
                    "oracle refuses n=" + std::to_string(n) + " above cap " + std::to_string(cap));
    if (v < 0 || v >= n) throw Error(ErrorCode::invalid_argument, "anchor out of range");
    std::vector<VertexSet> out;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        if (!(mask & (1ull << v))) continue;
        VertexSet cand(n);
        for (int i = 0; i < n; ++i)
            if (mask & (1ull << i)) cand.add(i);
        if (cand.size() != b + 1) continue;
        if (!g.is_connected_set(cand)) continue;
        if (g.open_neighborhood(cand).size() != f) continue;
        out.push_back(cand);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask & (1ull << bit)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph random_chordal(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    if (n <= 0) return Graph(0, {});
    int tree_n = std::max(2, n / 2 + 1);
    std::vector<int> tree_parent(static_cast<std::size_t>(tree_n), 0);
    for (int i = 1; i < tree_n; ++i)
        tree_parent[static_cast<std::size_t>(i)] = static_cast<int>(rng() % static_cast<std::uint64_t>(i));
    std::vector<std::vector<int>> tree_adj(static_cast<std::size_t>(tree_n));
    for (int i = 1; i < tree_n; ++i) {
        tree_adj[static_cast<std::size_t>(i)].push_back(tree_parent[static_cast<std::size_t>(i)]);
        tree_adj[static_cast<std::size_t>(tree_parent[static_cast<std::size_t>(i)])].push_back(i);
    }
    // vertex -> random subtree, grown from a random node
    std::vector<std::vector<bool>> covers(static_cast<std::size_t>(n),
                                          std::vector<bool>(static_cast<std::size_t>(tree_n), false));
    for (int v = 0; v < n; ++v) {
        int start = static_cast<int>(rng() % static_cast<std::uint64_t>(tree_n));
        int grow = static_cast<int>(rng() % static_cast<std::uint64_t>(tree_n));
        covers[static_cast<std::size_t>(v)][static_cast<std::size_t>(start)] = true;
        std::vector<int> frontier{start};
        for (int step = 0; step < grow && !frontier.empty(); ++step) {
            int at = frontier[rng() % frontier.size()];
            std::vector<int> fresh;
            for (int nb : tree_adj[static_cast<std::size_t>(at)])
                if (!covers[static_cast<std::size_t>(v)][static_cast<std::size_t>(nb)]) fresh.push_back(nb);
            if (fresh.empty()) continue;
            int pick = fresh[rng() % fresh.size()];
            covers[static_cast<std::size_t>(v)][static_cast<std::size_t>(pick)] = true;
            frontier.push_back(pick);
        }
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool meet = false;
            for (int t = 0; t < tree_n && !meet; ++t)
                meet = covers[static_cast<std::size_t>(u)][static_cast<std::size_t>(t)] &&
                       covers[static_cast<std::size_t>(v)][static_cast<std::size_t>(t)];
            if (meet) edges.emplace_back(u, v);
        }
    return Graph(n, edges);
}

Graph random_interval(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> segs;
    int line = std::max(2 * n, 4);
    for (int v = 0; v < n; ++v) {
        int a = static_cast<int>(rng() % static_cast<std::uint64_t>(line));
        int b = static_cast<int>(rng() % static_cast<std::uint64_t>(line));
        segs.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (std::max(segs[static_cast<std::size_t>(u)].first, segs[static_cast<std::size_t>(v)].first) <=
                std::min(segs[static_cast<std::size_t>(u)].second, segs[static_cast<std::size_t>(v)].second))
                edges.emplace_back(u, v);
    return Graph(n, edges);
}

PlantedInstance generate_planted_b2_instance(const B2InstanceSpec& spec, const PiClass& pi) {
    if (spec.edge_components < 0 || spec.component_size < 1 || spec.apex_clique < 0 ||
        spec.distractors < 0 || spec.distractors > spec.edge_components)
        throw Error(ErrorCode::invalid_argument, "inconsistent planted-instance parameters");
    if (spec.distractors > 0 && spec.component_size < 3)
        throw Error(ErrorCode::invalid_argument, "distractors need components of at least 3 vertices");

    std::vector<std::pair<int, int>> edges;
    int next = 0;
    std::vector<std::vector<int>> comps;
    for (int c = 0; c < spec.edge_components; ++c) {
        std::vector<int> verts;
        for (int i = 0; i < spec.component_size; ++i) {
            if (i > 0) edges.emplace_back(next - 1, next);
            verts.push_back(next++);
        }
        comps.push_back(verts);
    }
    std::vector<int> apex;
    for (int i = 0; i < spec.apex_clique; ++i) apex.push_back(next++);
    for (std::size_t i = 0; i < apex.size(); ++i)
        for (std::size_t j = i + 1; j < apex.size(); ++j) edges.emplace_back(apex[i], apex[j]);
    for (int a : apex)
        for (const auto& comp : comps)
            for (int v : comp) edges.emplace_back(a, v);
    // Each distractor closes a 4-cycle with the endpoints of one path
    // component, forcing one deletion there.
    for (int d = 0; d < spec.distractors; ++d) {
        int z = next++;
        edges.emplace_back(z, comps[static_cast<std::size_t>(d)].front());
        edges.emplace_back(z, comps[static_cast<std::size_t>(d)].back());
    }
    // Seed relabels the vertices; the planted optimum size is unaffected.
    if (spec.seed != 0) {
        std::mt19937_64 rng(spec.seed);
        std::vector<int> perm(static_cast<std::size_t>(next));
        for (int i = 0; i < next; ++i) perm[static_cast<std::size_t>(i)] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        for (auto& [u, v] : edges) {
            u = perm[static_cast<std::size_t>(u)];
            v = perm[static_cast<std::size_t>(v)];
        }
    }
    Graph g(next, edges);

    int expected = next - spec.distractors;
    VertexSet opt = brute_force_max_induced(g, pi, std::max(next, 22));
    if (opt.size() != expected)
        throw Error(ErrorCode::invalid_argument, "planted optimum failed oracle verification");
    return {g, expected};
}

PlantedInstance generate_planted_separator_instance(int side_n, int clique_size, std::uint64_t seed,
                                                    const PiClass& pi) {
    if (side_n < 0 || clique_size < 0) throw Error(ErrorCode::invalid_argument, "negative sizes");
    // clique S = {0..k-1}; two sides, each side vertex adjacent to all of S
    int k = clique_size;
    int n = k + 2 * side_n;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
    std::mt19937_64 rng(seed);
    for (int side = 0; side < 2; ++side) {
        int base = k + side * side_n;
        for (int i = 0; i < side_n; ++i) {
            for (int s = 0; s < k; ++s) edges.emplace_back(s, base + i);
            if (i > 0 && rng() % 2 == 0) edges.emplace_back(base + i - 1, base + i);
        }
    }
    Graph g(n, edges);
    VertexSet opt = brute_force_max_induced(g, pi, std::max(n, 22));
    if (opt.size() != n) throw Error(ErrorCode::invalid_argument, "planted separator instance is not a Pi-member");
    return {g, n};
}

}  // namespace maxpi
