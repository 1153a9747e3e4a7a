#include "core/branching.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_map>

#include "core/errors.hpp"

namespace maxpi {

SigmaConstants SigmaConstants::standard() {
    SigmaConstants sc;
    sc.sigma_prime = std::log2(1.89);
    sc.sigma = std::log2((1.0 + std::sqrt(1.0 + 4.0 * 1.89)) / 2.0);
    sc.rho = (3.0 + sc.sigma) / 4.0;
    return sc;
}

double branch_pair_potential(const BranchPair& pair, int host_size, const SigmaConstants& sc) {
    int undecided = host_size - pair.assumed_in.size() - pair.assumed_out.size();
    return std::pow(2.0, sc.sigma * undecided);
}

namespace {

// Subsets of `from` with at most max_take members, passed to fn.
void for_each_bounded_subset(const std::vector<int>& from, int max_take,
                             const std::function<void(const VertexSet&)>& fn, int universe) {
    std::vector<int> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        VertexSet s(universe);
        for (int v : chosen) s.add(v);
        fn(s);
        if (static_cast<int>(chosen.size()) == max_take) return;
        for (std::size_t i = idx; i < from.size(); ++i) {
            chosen.push_back(from[i]);
            rec(i + 1);
            chosen.pop_back();
        }
    };
    if (max_take >= 0) rec(0);
}

struct DegreeReduction {
    const Graph& r;
    double cap;       // C: component size bound
    double heavy_at;  // 3C: heavy degree threshold
    std::vector<BranchPair> out;

    void run() {
        VertexSet a(r.vertex_count()), d(r.vertex_count());
        recurse(a, d);
    }

    void recurse(const VertexSet& a, const VertexSet& d) {
        // A branch where some assumed-in vertex already has C assumed-in
        // neighbours cannot describe a set with components of size <= C.
        for (int v = a.first(); v != -1; v = a.next(v))
            if ((r.neighbors(v) & a).size() >= cap) return;

        VertexSet alive = r.vertex_set() - d;
        int heavy = -1;
        for (int v = alive.first(); v != -1; v = alive.next(v)) {
            if ((r.neighbors(v) & alive).size() >= heavy_at) {
                heavy = v;
                break;
            }
        }
        if (heavy == -1) {
            out.push_back({a, d});
            return;
        }

        VertexSet undecided_nb = (r.neighbors(heavy) & alive) - a;
        if (!a.contains(heavy)) {
            VertexSet d2 = d;
            d2.add(heavy);
            recurse(a, d2);
        }
        if (undecided_nb.empty()) return;  // joining A is impossible: >= 3C neighbours already in A

        int m = undecided_nb.size();
        int already = (r.neighbors(heavy) & a).size();
        std::vector<int> nb = undecided_nb.members();
        for_each_bounded_subset(
            nb, m / 3,
            [&](const VertexSet& take) {
                if (already + take.size() >= cap) return;
                VertexSet a2 = a | take;
                a2.add(heavy);
                VertexSet d2 = d | (undecided_nb - take);
                recurse(a2, d2);
            },
            r.vertex_count());
    }
};

}  // namespace

std::vector<BranchPair> degree_reduction_branch(const Graph& r, double component_cap,
                                                const SigmaConstants& sc) {
    (void)sc;
    if (component_cap < 1) throw Error(ErrorCode::invalid_argument, "component cap must be at least 1");
    DegreeReduction dr{r, component_cap, 3.0 * component_cap, {}};
    dr.run();
    return std::move(dr.out);
}

std::vector<VertexSet> enumerate_small_side_candidates(const Graph& r, double component_cap,
                                                       const SigmaConstants& sc) {
    std::vector<BranchPair> pairs = degree_reduction_branch(r, component_cap, sc);
    int n = r.vertex_count();
    std::vector<VertexSet> out;
    for (const auto& pr : pairs) {
        VertexSet q = r.vertex_set() - pr.assumed_in - pr.assumed_out;
        std::vector<int> qm = q.members();
        bool small_side = 4 * (pr.assumed_in.size() + pr.assumed_out.size()) >= n;
        int qs = static_cast<int>(qm.size());
        if (qs >= 60) throw Error(ErrorCode::unsupported, "undecided part too large to enumerate");
        int min_take = small_side ? 0 : (2 * qs + 2) / 3;  // ceil(2|Q|/3)
        for (std::uint64_t mask = 0; mask < (1ull << qs); ++mask) {
            if (std::popcount(mask) < min_take) continue;
            VertexSet cand = pr.assumed_in;
            for (int i = 0; i < qs; ++i)
                if (mask & (1ull << i)) cand.add(qm[static_cast<std::size_t>(i)]);
            out.push_back(cand);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

VertexSet finite_deletion_solve(const Graph& g, const PiClass& pi, int ell,
                                const std::function<VertexSet(const Graph&)>& inner, double epsilon,
                                const std::function<void(const std::string&)>& trace) {
    if (epsilon <= 0 || epsilon >= 1)
        throw Error(ErrorCode::invalid_argument, "finite deletion branching needs 0 < epsilon < 1");
    int n = g.vertex_count();
    VertexSet best(n);
    bool have_best = false;

    auto offer = [&](const VertexSet& cand) {
        if (!have_best || cand.size() > best.size() || (cand.size() == best.size() && cand < best)) {
            best = cand;
            have_best = true;
        }
    };

    std::function<void(const VertexSet&, const VertexSet&)> branch = [&](const VertexSet& a, const VertexSet& d) {
        if (a.size() + d.size() > (1.0 - epsilon) * n) {
            // brute force over the undecided vertices, keeping A
            VertexSet undecided = g.vertex_set() - a - d;
            std::vector<int> um = undecided.members();
            if (um.size() >= 60) throw Error(ErrorCode::unsupported, "brute-force tail too large");
            for (std::uint64_t mask = 0; mask < (1ull << um.size()); ++mask) {
                VertexSet cand = a;
                for (std::size_t i = 0; i < um.size(); ++i)
                    if (mask & (1ull << i)) cand.add(um[i]);
                Graph sub = g.induced(cand);
                if (pi.membership(sub) && !pi.forbidden_finder(sub, ell)) offer(cand);
            }
            return;
        }

        Graph rest = g.without(d);
        std::optional<VertexSet> forb = pi.forbidden_finder(rest, ell);
        if (!forb) {
            // rest is already clean; the inner solver may ignore A
            if (trace) trace("{\"event\":\"finite_deletion_inner\",\"n\":" + std::to_string(rest.vertex_count()) + "}");
            offer(rest.lift(inner(rest), n));
            return;
        }
        VertexSet s = rest.lift(*forb, n);
        if (trace)
            trace("{\"event\":\"finite_deletion_branch\",\"forbidden\":" + std::to_string(s.size()) +
                  ",\"assumed\":" + std::to_string(a.size() + d.size()) + "}");
        VertexSet undecided = s - a;
        std::vector<int> um = undecided.members();
        if (um.empty()) return;  // the forbidden set is fully assumed in: dead branch
        if (um.size() >= 60) throw Error(ErrorCode::unsupported, "forbidden subgraph too large to branch on");
        // all splits of S minus A with a non-empty deleted part
        for (std::uint64_t mask = 0; mask + 1 < (1ull << um.size()); ++mask) {
            VertexSet a2 = a, d2 = d;
            for (std::size_t i = 0; i < um.size(); ++i) {
                if (mask & (1ull << i)) a2.add(um[i]);
                else d2.add(um[i]);
            }
            branch(a2, d2);
        }
    };

    branch(VertexSet(n), VertexSet(n));
    return best;
}

namespace {

// Nonempty subsets of K of size at most aleph, smallest first; fn returns true
// to stop.
bool for_each_small_subset(const std::vector<int>& k, int aleph,
                           const std::function<bool(const VertexSet&)>& fn, int universe) {
    std::vector<int> chosen;
    std::function<bool(std::size_t)> rec = [&](std::size_t idx) -> bool {
        if (!chosen.empty()) {
            VertexSet s(universe);
            for (int v : chosen) s.add(v);
            if (fn(s)) return true;
        }
        if (static_cast<int>(chosen.size()) == aleph) return false;
        for (std::size_t i = idx; i < k.size(); ++i) {
            chosen.push_back(k[i]);
            if (rec(i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return rec(0);
}

}  // namespace

VertexSet max_clique_extension(const Graph& g, const VertexSet& p, const VertexSet& k, const PiClass& pi) {
    if (!g.is_clique(k)) throw Error(ErrorCode::invalid_argument, "extension requires a clique");
    if (p.intersects(k)) throw Error(ErrorCode::invalid_argument, "P and K must be disjoint");
    if (!pi.membership(g.induced(p))) throw Error(ErrorCode::invalid_argument, "P must induce a Pi-member");

    int n = g.vertex_count();
    std::vector<int> km = k.members();

    // Colour the small subsets: W red iff G[W + P] is in Pi. A subset X of K
    // works iff all its nonempty subsets of size <= aleph are red.
    std::unordered_map<VertexSet, bool, VertexSetHash> red;
    auto is_red = [&](const VertexSet& w) {
        auto it = red.find(w);
        if (it != red.end()) return it->second;
        bool r = pi.membership(g.induced(w | p));
        red.emplace(w, r);
        return r;
    };

    VertexSet best_x(n);
    bool have = false;
    auto offer = [&](const VertexSet& x) {
        if (!have || x.size() > best_x.size() || (x.size() == best_x.size() && x < best_x)) {
            best_x = x;
            have = true;
        }
    };

    std::function<void(const VertexSet&, const VertexSet&)> branch = [&](const VertexSet& a, const VertexSet& d) {
        VertexSet alive = k - d;
        std::vector<int> am = alive.members();
        VertexSet bad(n);
        bool found_bad = for_each_small_subset(am, pi.aleph,
                                               [&](const VertexSet& w) {
                                                   if (!is_red(w)) {
                                                       bad = w;
                                                       return true;
                                                   }
                                                   return false;
                                               },
                                               n);
        if (!found_bad) {
            offer(alive);
            return;
        }
        VertexSet undecided = bad - a;
        std::vector<int> um = undecided.members();
        if (um.empty()) return;  // a non-red subset is fully assumed in
        for (std::uint64_t mask = 0; mask + 1 < (1ull << um.size()); ++mask) {
            VertexSet a2 = a, d2 = d;
            for (std::size_t i = 0; i < um.size(); ++i) {
                if (mask & (1ull << i)) a2.add(um[i]);
                else d2.add(um[i]);
            }
            branch(a2, d2);
        }
    };

    branch(VertexSet(n), VertexSet(n));
    return have ? (p | best_x) : p;
}

}  // namespace maxpi
