#include "core/pi_class.hpp"

#include <algorithm>

#include "core/errors.hpp"
#include "core/recognition.hpp"

namespace maxpi {

int PiClass::overlay_bound() const {
    int b = 0;
    for (const auto& f : overlay_family) b = std::max(b, f.vertex_count());
    return b;
}

PiClass make_chordal_class() {
    PiClass c;
    c.name = "chordal";
    c.aleph = 2;
    c.membership = [](const Graph& g) { return is_chordal(g).chordal; };
    c.separator_test = [](const Graph& g, const VertexSet& s) { return separator_test_chordal(g, s); };
    c.forbidden_finder = [](const Graph& g, int ell) { return find_forbidden_chordal(g, ell); };
    return c;
}

PiClass make_interval_class() {
    PiClass c;
    c.name = "interval";
    c.aleph = 4;
    c.membership = [](const Graph& g) { return is_interval(g); };
    c.separator_test = [](const Graph& g, const VertexSet& s) { return separator_test_interval(g, s); };
    c.forbidden_finder = [](const Graph& g, int ell) { return find_forbidden_interval(g, ell); };
    return c;
}

namespace {

// Pattern vertices are matched in an order that keeps the partial mapping
// connected where possible; candidates are pruned by degree.
std::vector<int> matching_order(const Graph& pattern) {
    int k = pattern.vertex_count();
    std::vector<int> order;
    VertexSet placed(k);
    while (static_cast<int>(order.size()) < k) {
        int pick = -1;
        for (int v = 0; v < k; ++v) {
            if (placed.contains(v)) continue;
            bool touches = order.empty() || pattern.neighbors(v).intersects(placed);
            if (touches && (pick == -1 || pattern.degree(v) > pattern.degree(pick))) pick = v;
        }
        if (pick == -1) {
            for (int v = 0; v < k && pick == -1; ++v)
                if (!placed.contains(v)) pick = v;
        }
        order.push_back(pick);
        placed.add(pick);
    }
    return order;
}

bool extend_match(const Graph& g, const Graph& pattern, const std::vector<int>& order, std::size_t idx,
                  std::vector<int>& image, VertexSet& used) {
    if (idx == order.size()) return true;
    int pv = order[idx];
    for (int gv = 0; gv < g.vertex_count(); ++gv) {
        if (used.contains(gv)) continue;
        if (g.degree(gv) < pattern.degree(pv)) continue;
        bool ok = true;
        for (std::size_t j = 0; j < idx && ok; ++j) {
            bool pe = pattern.adjacent(pv, order[j]);
            bool ge = g.adjacent(gv, image[static_cast<std::size_t>(order[j])]);
            if (pe != ge) ok = false;
        }
        if (!ok) continue;
        image[static_cast<std::size_t>(pv)] = gv;
        used.add(gv);
        if (extend_match(g, pattern, order, idx + 1, image, used)) return true;
        used.remove(gv);
    }
    return false;
}

}  // namespace

std::optional<VertexSet> find_induced_copy(const Graph& g, const Graph& pattern) {
    if (pattern.vertex_count() == 0) return VertexSet(g.vertex_count());
    if (pattern.vertex_count() > g.vertex_count()) return std::nullopt;
    std::vector<int> order = matching_order(pattern);
    std::vector<int> image(static_cast<std::size_t>(pattern.vertex_count()), -1);
    VertexSet used(g.vertex_count());
    if (!extend_match(g, pattern, order, 0, image, used)) return std::nullopt;
    VertexSet out(g.vertex_count());
    for (int v : image) out.add(v);
    return out;
}

PiClass overlay_finite_family(const PiClass& base, const std::vector<Graph>& family) {
    for (const auto& f : family)
        if (f.vertex_count() < 1)
            throw Error(ErrorCode::invalid_argument, "overlay family members must have at least one vertex");

    PiClass c = base;
    c.name = base.name + "+F";
    c.overlay_family.insert(c.overlay_family.end(), family.begin(), family.end());
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (family[i].vertex_count() > 0 && family[i].components().size() > 1)
            c.warnings.push_back("overlay member " + std::to_string(i) +
                                 " is disconnected; the branching analysis assumes connected forbidden subgraphs");
    }

    std::vector<Graph> fam = c.overlay_family;
    auto base_membership = base.membership;
    c.membership = [base_membership, fam](const Graph& g) {
        if (!base_membership(g)) return false;
        for (const auto& f : fam)
            if (find_induced_copy(g, f)) return false;
        return true;
    };
    auto base_finder = base.forbidden_finder;
    c.forbidden_finder = [base_finder, fam](const Graph& g, int ell) -> std::optional<VertexSet> {
        std::optional<VertexSet> best = base_finder(g, ell);
        for (const auto& f : fam) {
            if (f.vertex_count() > ell) continue;
            if (best && best->size() <= f.vertex_count()) continue;
            if (auto copy = find_induced_copy(g, f)) {
                if (!best || copy->size() < best->size()) best = copy;
            }
        }
        return best;
    };
    return c;
}

}  // namespace maxpi
