#include "core/enumeration.hpp"

#include <algorithm>
#include <numeric>

#include "core/errors.hpp"

namespace maxpi {

namespace {

// Branch on the smallest undecided frontier vertex: either it joins B or it is
// forbidden forever. Forbidden vertices adjacent to B stay in N(B), so a
// branch dies once more than f of them accumulate.
void collect(const Graph& g, VertexSet& b, VertexSet& forb, int want_size, int want_nbrs,
             std::vector<VertexSet>& out) {
    VertexSet nb = g.open_neighborhood(b);
    if ((nb & forb).size() > want_nbrs) return;
    if (b.size() == want_size) {
        if (nb.size() == want_nbrs) out.push_back(b);
        return;
    }
    VertexSet frontier = nb - forb;
    int u = frontier.first();
    if (u == -1) return;
    b.add(u);
    collect(g, b, forb, want_size, want_nbrs, out);
    b.remove(u);
    forb.add(u);
    collect(g, b, forb, want_size, want_nbrs, out);
    forb.remove(u);
}

}  // namespace

std::vector<VertexSet> enumerate_connected_sets(const Graph& g, int v, int b, int f) {
    if (v < 0 || v >= g.vertex_count()) throw Error(ErrorCode::invalid_argument, "anchor vertex out of range");
    if (b < 0 || f < 0) throw Error(ErrorCode::invalid_argument, "set and neighborhood sizes must be non-negative");
    std::vector<VertexSet> out;
    VertexSet base(g.vertex_count(), {v});
    VertexSet forb(g.vertex_count());
    collect(g, base, forb, b + 1, f, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> enumerate_connected_supersets(const Graph& g, const VertexSet& p, int size,
                                                     int nbr_size) {
    if (p.empty()) throw Error(ErrorCode::invalid_argument, "superset enumeration requires a non-empty seed");
    if (size < p.size()) throw Error(ErrorCode::invalid_argument, "requested size smaller than the seed");
    int n = g.vertex_count();

    std::vector<std::pair<int, int>> edges = g.edges();
    p.for_each([&](int v) { edges.emplace_back(n, v); });
    Graph aug(n + 1, edges);

    VertexSet p_aug(n + 1);
    p.for_each([&](int v) { p_aug.add(v); });

    std::vector<VertexSet> out;
    for (const auto& with_apex : enumerate_connected_sets(aug, n, size, nbr_size)) {
        if (!p_aug.is_subset_of(with_apex)) continue;
        VertexSet b(n);
        with_apex.for_each([&](int v) {
            if (v != n) b.add(v);
        });
        if (g.open_neighborhood(b).size() != nbr_size) continue;
        out.push_back(b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::pair<int, int>> two_table_solve(const TableInstance& inst, TwoTableStats* stats) {
    TwoTableStats local;
    TwoTableStats& st = stats ? *stats : local;

    auto compare = [&](const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) {
        ++st.vector_comparisons;
        for (int i = 0; i < inst.k; ++i) {
            ++st.element_comparisons;
            if (a[static_cast<std::size_t>(i)] != b[static_cast<std::size_t>(i)])
                return a[static_cast<std::size_t>(i)] < b[static_cast<std::size_t>(i)];
        }
        return false;
    };

    std::vector<int> idx(inst.cols1.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (compare(inst.cols1[static_cast<std::size_t>(a)], inst.cols1[static_cast<std::size_t>(b)])) return true;
        if (compare(inst.cols1[static_cast<std::size_t>(b)], inst.cols1[static_cast<std::size_t>(a)])) return false;
        return a < b;
    });

    std::optional<std::pair<int, int>> best;
    std::vector<std::uint8_t> need(static_cast<std::size_t>(inst.k));
    for (std::size_t j = 0; j < inst.cols2.size(); ++j) {
        bool feasible = true;
        for (int i = 0; i < inst.k && feasible; ++i) {
            int d = inst.target[static_cast<std::size_t>(i)] - inst.cols2[j][static_cast<std::size_t>(i)];
            if (d < 0 || d > 1) feasible = false;
            else need[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(d);
        }
        if (!feasible) continue;
        auto it = std::lower_bound(idx.begin(), idx.end(), need, [&](int a, const std::vector<std::uint8_t>& key) {
            return compare(inst.cols1[static_cast<std::size_t>(a)], key);
        });
        // among equal columns, the sort placed the smallest original index first
        if (it != idx.end() && !compare(need, inst.cols1[static_cast<std::size_t>(*it)])) {
            std::pair<int, int> cand{*it, static_cast<int>(j)};
            if (!best || cand < *best) best = cand;
        }
    }
    return best;
}

}  // namespace maxpi
