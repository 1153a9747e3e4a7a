#include "core/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <sstream>
#include <thread>
#include <tuple>
#include <unordered_map>

#include "core/branching.hpp"
#include "core/enumeration.hpp"
#include "core/errors.hpp"

namespace maxpi {

std::optional<SolveMode> parse_mode(const std::string& name) {
    if (name == "auto") return SolveMode::automatic;
    if (name == "structured") return SolveMode::structured;
    if (name == "brute") return SolveMode::brute;
    if (name == "forced-B1" || name == "forced-b1") return SolveMode::forced_b1;
    if (name == "forced-B2" || name == "forced-b2") return SolveMode::forced_b2;
    return std::nullopt;
}

std::string mode_name(SolveMode mode) {
    switch (mode) {
        case SolveMode::automatic: return "auto";
        case SolveMode::structured: return "structured";
        case SolveMode::brute: return "brute";
        case SolveMode::forced_b1: return "forced-B1";
        case SolveMode::forced_b2: return "forced-B2";
    }
    return "?";
}

namespace {

// Deterministic best-solution fold: larger wins, lexicographically smaller
// breaks ties.
struct Best {
    std::optional<VertexSet> value;

    void offer(const VertexSet& cand) {
        if (!value || cand.size() > value->size() || (cand.size() == value->size() && cand < *value))
            value = cand;
    }
};

// Ascending lexicographic combinations of `pool` of size k; fn returns true to
// stop the scan.
bool for_each_combination(const std::vector<int>& pool, int k,
                          const std::function<bool(const std::vector<int>&)>& fn) {
    if (k < 0 || k > static_cast<int>(pool.size())) return false;
    std::vector<int> chosen;
    std::function<bool(std::size_t)> rec = [&](std::size_t idx) -> bool {
        if (static_cast<int>(chosen.size()) == k) return fn(chosen);
        if (pool.size() - idx < static_cast<std::size_t>(k) - chosen.size()) return false;
        for (std::size_t i = idx; i < pool.size(); ++i) {
            chosen.push_back(pool[i]);
            if (rec(i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return rec(0);
}

VertexSet to_set(const std::vector<int>& verts, int universe) {
    VertexSet s(universe);
    for (int v : verts) s.add(v);
    return s;
}

// All cliques of g with at most max_size vertices (the empty set included),
// ascending DFS order.
void for_each_clique(const Graph& g, int max_size, const std::function<void(const VertexSet&)>& fn) {
    int n = g.vertex_count();
    VertexSet cur(n);
    std::function<void(int)> rec = [&](int from) {
        fn(cur);
        if (cur.size() == max_size) return;
        for (int v = from; v < n; ++v) {
            bool ok = cur.is_subset_of(g.neighbors(v));
            if (!ok) continue;
            cur.add(v);
            rec(v + 1);
            cur.remove(v);
        }
    };
    if (max_size >= 0) rec(0);
}

struct Ctx {
    const PiClass& pi;
    const ConstantSchedule& sched;
    SigmaConstants sc;
    SolveStats& stats;
    const SolveOptions& opts;
    const Graph& root;

    std::unordered_map<VertexSet, bool, VertexSetHash> member_cache;  // keyed on root-universe sets

    // host must map straight into the root (one induced-subgraph hop)
    bool member(const Graph& host, const VertexSet& cand_in_host) {
        const bool is_root = &host == &root;
        VertexSet key = is_root ? cand_in_host : host.lift(cand_in_host, root.vertex_count());
        auto it = member_cache.find(key);
        if (it != member_cache.end()) return it->second;
        bool r = pi.membership(root.induced(key));
        member_cache.emplace(key, r);
        return r;
    }

    void trace(const std::string& line) {
        if (opts.trace) opts.trace(line);
    }
};

std::string trace_event(const std::string& name, std::initializer_list<std::pair<const char*, long long>> kv) {
    std::ostringstream os;
    os << "{\"event\":\"" << name << "\"";
    for (const auto& [k, v] : kv) os << ",\"" << k << "\":" << v;
    os << "}";
    return os.str();
}

// ---------------------------------------------------------------------------
// Case A

VertexSet case_a_impl(Ctx& ctx, const Graph& g, const VertexSet& k) {
    int n = g.vertex_count();
    std::vector<int> rest = (g.vertex_set() - k).members();
    Best best;
    for (int s = static_cast<int>(rest.size()); s >= 0; --s) {
        if (best.value && s + k.size() < best.value->size()) break;
        for_each_combination(rest, s, [&](const std::vector<int>& pv) {
            ++ctx.stats.branches.case_a;
            VertexSet p = to_set(pv, n);
            if (ctx.member(g, p)) {
                VertexSet ext = max_clique_extension(g, p, k, ctx.pi);
                best.offer(ext);
            }
            return false;
        });
    }
    ctx.trace(trace_event("case_a", {{"clique", k.size()}, {"best", best.value ? best.value->size() : 0}}));
    return *best.value;
}

// ---------------------------------------------------------------------------
// Step 2 band scan

BandResult band_impl(Ctx* ctx, const Graph& g, const PiClass& pi, double beta) {
    int n = g.vertex_count();
    int hi = static_cast<int>(std::ceil(n / 2.0 + beta * n));
    int lo = static_cast<int>(std::floor(n / 2.0 - beta * n));
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;

    auto member = [&](const VertexSet& cand) {
        return ctx ? ctx->member(g, cand) : pi.membership(g.induced(cand));
    };

    // Any Pi-set of size >= hi settles the instance.
    for (int s = n; s >= hi; --s) {
        VertexSet found(n);
        bool hit = for_each_combination(all, s, [&](const std::vector<int>& sv) {
            VertexSet cand = to_set(sv, n);
            if (member(cand)) {
                found = cand;
                return true;
            }
            return false;
        });
        if (hit) return {true, found};
    }
    // No Pi-set of size exactly lo means none above it either (heredity).
    VertexSet at_lo(n);
    bool has_lo = for_each_combination(all, lo, [&](const std::vector<int>& sv) {
        VertexSet cand = to_set(sv, n);
        if (member(cand)) {
            at_lo = cand;
            return true;
        }
        return false;
    });
    if (!has_lo) {
        for (int s = lo - 1; s >= 0; --s) {
            VertexSet found(n);
            bool hit = for_each_combination(all, s, [&](const std::vector<int>& sv) {
                VertexSet cand = to_set(sv, n);
                if (member(cand)) {
                    found = cand;
                    return true;
                }
                return false;
            });
            if (hit) return {true, found};
        }
        return {true, VertexSet(n)};
    }
    return {false, at_lo};
}

// ---------------------------------------------------------------------------
// Branch B.1

struct B1Runner {
    Ctx& ctx;
    const Graph& g;  // graph the branch works on
    VertexSet s;
    Graph gp;  // g minus S
    int n = 0, np = 0;
    double delta_n = 0, eps_n = 0, gamma_n = 0, zeta_n = 0;

    std::map<std::pair<int, int>, std::vector<VertexSet>> conn_cands;   // (x, a) -> candidates in gp
    std::unordered_map<VertexSet, bool, VertexSetHash> septest_cache;   // subsets of gp
    std::vector<std::vector<std::pair<VertexSet, VertexSet>>> sep_ok;   // per size: (cand, closed nbhd)
    std::vector<bool> sep_ok_ready;

    B1Runner(Ctx& c, const Graph& graph, const VertexSet& sep)
        : ctx(c), g(graph), s(sep), gp(graph.without(sep)) {
        n = g.vertex_count();
        np = gp.vertex_count();
        delta_n = ctx.sched.delta * n;
        eps_n = ctx.sched.epsilon * n;
        gamma_n = ctx.sched.gamma * n;
        zeta_n = ctx.sched.zeta() * n;
        sep_ok.resize(static_cast<std::size_t>(np) + 1);
        sep_ok_ready.assign(static_cast<std::size_t>(np) + 1, false);
    }

    VertexSet lift(const VertexSet& sub) const { return gp.lift(sub, n); }

    bool member_with_s(const VertexSet& x1, const VertexSet& x2) {
        return ctx.member(g, lift(x1) | lift(x2) | s);
    }

    // Union over seeds P (at most gamma*n vertices) of the apex enumeration:
    // connected-component transversals of every admissible candidate occur as
    // seeds, so all sets of the guessed size and neighborhood size with few
    // enough components are produced.
    const std::vector<VertexSet>& candidates(int x, int a) {
        auto key = std::make_pair(x, a);
        auto it = conn_cands.find(key);
        if (it != conn_cands.end()) return it->second;
        std::vector<VertexSet> out;
        if (x == 0) {
            if (a == 0) out.emplace_back(np);
        } else {
            int max_seed = std::min(x, static_cast<int>(std::floor(gamma_n)));
            std::vector<int> all(static_cast<std::size_t>(np));
            for (int i = 0; i < np; ++i) all[static_cast<std::size_t>(i)] = i;
            for (int ps = 1; ps <= max_seed; ++ps) {
                for_each_combination(all, ps, [&](const std::vector<int>& seed) {
                    VertexSet p = to_set(seed, np);
                    auto found = enumerate_connected_supersets(gp, p, x, a);
                    ctx.stats.candidates_enumerated += static_cast<long long>(found.size());
                    out.insert(out.end(), found.begin(), found.end());
                    return false;
                });
            }
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
        }
        return conn_cands.emplace(key, std::move(out)).first->second;
    }

    bool septest(const VertexSet& cand) {
        auto it = septest_cache.find(cand);
        if (it != septest_cache.end()) return it->second;
        VertexSet lifted = lift(cand) | s;
        Graph sub = g.induced(lifted);
        VertexSet s_in_sub(sub.vertex_count());
        for (int i = 0; i < sub.vertex_count(); ++i)
            if (s.contains(sub.parent_ids()[static_cast<std::size_t>(i)])) s_in_sub.add(i);
        bool ok = ctx.pi.separator_test(sub, s_in_sub);
        septest_cache.emplace(cand, ok);
        return ok;
    }

    // Subsets of V(gp) of the given size passing the separator test, with
    // their closed neighborhoods.
    const std::vector<std::pair<VertexSet, VertexSet>>& sep_candidates(int x) {
        if (sep_ok_ready[static_cast<std::size_t>(x)]) return sep_ok[static_cast<std::size_t>(x)];
        std::vector<std::pair<VertexSet, VertexSet>> out;
        std::vector<int> all(static_cast<std::size_t>(np));
        for (int i = 0; i < np; ++i) all[static_cast<std::size_t>(i)] = i;
        for_each_combination(all, x, [&](const std::vector<int>& cv) {
            VertexSet cand = to_set(cv, np);
            if (septest(cand)) out.emplace_back(cand, gp.closed_neighborhood(cand));
            return false;
        });
        sep_ok[static_cast<std::size_t>(x)] = std::move(out);
        sep_ok_ready[static_cast<std::size_t>(x)] = true;
        return sep_ok[static_cast<std::size_t>(x)];
    }

    // Case B.1.1: one side has a neighborhood much bigger or smaller than
    // itself; enumerate it around seeds and brute-force the other side.
    void case_b11(int xd, int ad, int xo, Best& best) {
        ++ctx.stats.branches.b11;
        ctx.trace(trace_event("case_b11", {{"x", xd}, {"a", ad}, {"other", xo}}));
        for (const auto& x1 : candidates(xd, ad)) {
            VertexSet outside = gp.vertex_set() - gp.closed_neighborhood(x1);
            std::vector<int> pool = outside.members();
            for_each_combination(pool, xo, [&](const std::vector<int>& xv) {
                VertexSet x2 = to_set(xv, np);
                if (member_with_s(x1, x2)) best.offer(lift(x1) | lift(x2) | s);
                return false;
            });
        }
    }

    // Case B.1.2: both sides enumerated; the second side lives in the graph
    // with N'[X1] removed, where its neighborhood shrank by the overlap.
    void case_b12(int x1, int a1, int x2, int f2, Best& best) {
        ++ctx.stats.branches.b12;
        ctx.trace(trace_event("case_b12", {{"x1", x1}, {"a1", a1}, {"x2", x2}, {"f2", f2}}));
        if (x2 == 0) return;  // an empty side has no overlap with the other
        int max_seed = std::min(x2, static_cast<int>(std::floor(gamma_n)));
        for (const auto& c1 : candidates(x1, a1)) {
            VertexSet closed = gp.closed_neighborhood(c1);
            Graph gpp = gp.without(closed);
            std::vector<int> pool;
            pool.reserve(static_cast<std::size_t>(gpp.vertex_count()));
            for (int i = 0; i < gpp.vertex_count(); ++i) pool.push_back(i);
            for (int ps = 1; ps <= max_seed; ++ps) {
                for_each_combination(pool, ps, [&](const std::vector<int>& seed) {
                    VertexSet p2(gpp.vertex_count());
                    for (int v : seed) p2.add(v);
                    auto found = enumerate_connected_supersets(gpp, p2, x2, f2);
                    ctx.stats.candidates_enumerated += static_cast<long long>(found.size());
                    for (const auto& c2_sub : found) {
                        VertexSet c2 = gpp.lift(c2_sub, np);
                        if (member_with_s(c1, c2)) best.offer(lift(c1) | lift(c2) | s);
                    }
                    return false;
                });
            }
        }
    }

    // Case B.1.3: guess the doubly-covered and uncovered vertex sets, filter
    // side candidates, and match closed neighborhoods with the 2-Table.
    void case_b13(int x1, int x2, Best& best) {
        ++ctx.stats.branches.b13;
        ctx.trace(trace_event("case_b13", {{"x1", x1}, {"x2", x2}}));
        const auto& cands1 = sep_candidates(x1);
        const auto& cands2 = sep_candidates(x2);
        if (cands1.empty() || cands2.empty()) return;

        std::vector<int> all(static_cast<std::size_t>(np));
        for (int i = 0; i < np; ++i) all[static_cast<std::size_t>(i)] = i;
        int ub_max = std::min(np, static_cast<int>(std::floor(eps_n)));
        int un_max = std::min(np, static_cast<int>(std::floor(zeta_n)));

        for (int ub_size = 0; ub_size <= ub_max; ++ub_size) {
            for_each_combination(all, ub_size, [&](const std::vector<int>& ubv) {
                VertexSet u_both = to_set(ubv, np);
                std::vector<int> rest_pool = (gp.vertex_set() - u_both).members();
                for (int un_size = 0; un_size <= std::min(un_max, static_cast<int>(rest_pool.size())); ++un_size) {
                    for_each_combination(rest_pool, un_size, [&](const std::vector<int>& unv) {
                        VertexSet u_none = to_set(unv, np);
                        run_two_table(u_both, u_none, cands1, cands2, best);
                        return false;
                    });
                }
                return false;
            });
        }
    }

    void run_two_table(const VertexSet& u_both, const VertexSet& u_none,
                       const std::vector<std::pair<VertexSet, VertexSet>>& cands1,
                       const std::vector<std::pair<VertexSet, VertexSet>>& cands2, Best& best) {
        VertexSet i_set = gp.vertex_set() - u_both - u_none;
        std::vector<int> i_verts = i_set.members();
        TableInstance inst;
        inst.k = static_cast<int>(i_verts.size());
        inst.target.assign(static_cast<std::size_t>(inst.k), 1);

        std::vector<const VertexSet*> picked1, picked2;
        auto build = [&](const std::vector<std::pair<VertexSet, VertexSet>>& cands,
                         std::vector<std::vector<std::uint8_t>>& cols, std::vector<const VertexSet*>& picked) {
            for (const auto& [cand, closed] : cands) {
                if (!cand.is_subset_of(i_set)) continue;
                VertexSet open = closed - cand;
                if (open.intersects(u_none)) continue;     // N'(cand) must avoid U_none
                if (!u_both.is_subset_of(open)) continue;  // U_both is covered from both sides
                std::vector<std::uint8_t> col(static_cast<std::size_t>(inst.k));
                for (std::size_t i = 0; i < i_verts.size(); ++i)
                    col[i] = closed.contains(i_verts[i]) ? 1 : 0;
                cols.push_back(std::move(col));
                picked.push_back(&cand);
            }
        };
        build(cands1, inst.cols1, picked1);
        build(cands2, inst.cols2, picked2);
        ctx.stats.two_table_columns += static_cast<long long>(inst.cols1.size() + inst.cols2.size());
        if (inst.cols1.empty() || inst.cols2.empty()) return;

        if (auto hit = two_table_solve(inst)) {
            const VertexSet& c1 = *picked1[static_cast<std::size_t>(hit->first)];
            const VertexSet& c2 = *picked2[static_cast<std::size_t>(hit->second)];
            // Property (4): both sides passed the separator test and the
            // match guarantees no edges between them, so the union is in Pi.
            best.offer(lift(c1) | lift(c2) | s);
        }
    }

    std::optional<VertexSet> run_sizes(int x1, int x2) {
        if (x1 < 0 || x2 < 0 || x1 + x2 > np) return std::nullopt;
        Best best;
        int rem = np - x1 - x2;
        bool b13_done = false;
        std::map<std::tuple<int, int, int>, bool> done11;
        std::map<std::tuple<int, int, int, int>, bool> done12;
        for (int a1 = 0; a1 <= rem; ++a1) {
            for (int a2 = 0; a2 <= rem; ++a2) {
                for (int o = 0; o <= std::min(a1, a2); ++o) {
                    if (std::abs(a1 - x1) >= delta_n || std::abs(a2 - x2) >= delta_n) {
                        bool first_side = std::abs(a1 - x1) >= delta_n;
                        int xd = first_side ? x1 : x2;
                        int ad = first_side ? a1 : a2;
                        int xo = first_side ? x2 : x1;
                        if (!done11.emplace(std::make_tuple(first_side ? 0 : 1, xd, ad), true).second) continue;
                        case_b11(xd, ad, xo, best);
                    } else if (o >= eps_n && o > 0) {
                        int f2 = a2 - o;
                        if (!done12.emplace(std::make_tuple(x1, a1, x2, f2), true).second) continue;
                        case_b12(x1, a1, x2, f2, best);
                    } else if (!b13_done) {
                        b13_done = true;
                        case_b13(x1, x2, best);
                    }
                }
            }
        }
        return best.value;
    }
};

// ---------------------------------------------------------------------------
// Branch B.2

struct B2Runner {
    Ctx& ctx;
    const Graph& g;
    VertexSet s;
    Graph gp;
    int n = 0, np = 0;

    std::unordered_map<VertexSet, std::vector<VertexSet>, VertexSetHash> small_side_cache;

    B2Runner(Ctx& c, const Graph& graph, const VertexSet& sep)
        : ctx(c), g(graph), s(sep), gp(graph.without(sep)) {
        n = g.vertex_count();
        np = gp.vertex_count();
    }

    VertexSet lift(const VertexSet& sub) const { return gp.lift(sub, n); }

    std::optional<VertexSet> run() {
        Best best;
        double gamma_n = ctx.sched.gamma * n;
        double cap = ctx.sched.component_cap();
        int rl_max = std::min(np, static_cast<int>(std::floor(gamma_n / ctx.sched.big_l)));
        std::vector<int> all(static_cast<std::size_t>(np));
        for (int i = 0; i < np; ++i) all[static_cast<std::size_t>(i)] = i;

        // X is a union of rl large components, so it has more than C*rl vertices
        int min_large = static_cast<int>(std::floor(cap)) + 1;
        for (int rl = 0; rl <= rl_max; ++rl) {
            for (int x = rl * min_large; x <= np; ++x) {
                if (rl == 0 && x > 0) break;
                for (int nxc = x; nxc <= np; ++nxc) {
                    std::vector<VertexSet> xs;
                    if (rl == 0) {
                        if (x == 0 && nxc == 0) xs.emplace_back(np);
                    } else {
                        for_each_combination(all, rl, [&](const std::vector<int>& seed) {
                            VertexSet p = to_set(seed, np);
                            auto found = enumerate_connected_supersets(gp, p, x, nxc - x);
                            ctx.stats.candidates_enumerated += static_cast<long long>(found.size());
                            xs.insert(xs.end(), found.begin(), found.end());
                            return false;
                        });
                        std::sort(xs.begin(), xs.end());
                        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
                    }
                    for (const auto& xset : xs) {
                        VertexSet r_verts = gp.vertex_set() - gp.closed_neighborhood(xset);
                        if (r_verts.size() < gamma_n / 2.0) continue;  // cannot hold the small side
                        ctx.trace(trace_event("b2_residual", {{"x", xset.size()}, {"r", r_verts.size()}}));
                        auto it = small_side_cache.find(r_verts);
                        if (it == small_side_cache.end()) {
                            Graph r = gp.induced(r_verts);
                            auto cands = enumerate_small_side_candidates(r, cap, ctx.sc);
                            std::vector<VertexSet> lifted;
                            lifted.reserve(cands.size());
                            for (const auto& c : cands) lifted.push_back(r.lift(c, np));
                            ctx.stats.candidates_enumerated += static_cast<long long>(lifted.size());
                            it = small_side_cache.emplace(r_verts, std::move(lifted)).first;
                        }
                        for (int y = 0; y <= r_verts.size(); ++y) {
                            ++ctx.stats.branches.b2;
                            ++ctx.stats.branches.step5;
                            for (const auto& yset : it->second) {
                                if (yset.size() != y) continue;
                                VertexSet cand = lift(xset) | lift(yset) | s;
                                if (ctx.member(g, cand)) best.offer(cand);
                            }
                        }
                    }
                }
            }
        }
        return best.value;
    }
};

// ---------------------------------------------------------------------------
// Structured pipeline

VertexSet structured_inner(Ctx& ctx, const Graph& g) {
    ++ctx.stats.branches.step1;
    int n = g.vertex_count();
    VertexSet k = maximum_clique(g);
    if (k.size() >= ctx.sched.alpha * n) {
        ctx.trace(trace_event("step1_case_a", {{"n", n}, {"clique", k.size()}}));
        return case_a_impl(ctx, g, k);
    }

    ++ctx.stats.branches.step2;
    BandResult band = band_impl(&ctx, g, ctx.pi, ctx.sched.beta);
    if (band.terminal) {
        ctx.trace(trace_event("step2_terminal", {{"size", band.best.size()}}));
        return band.best;
    }

    Best best;
    best.offer(band.best);
    int s_cap = static_cast<int>(std::floor(ctx.sched.alpha * n));
    for_each_clique(g, s_cap, [&](const VertexSet& s) {
        ++ctx.stats.branches.step3;
        ctx.trace(trace_event("step3_separator", {{"size", s.size()}}));
        B1Runner b1(ctx, g, s);
        int np = n - s.size();
        for (int x1 = 0; x1 <= np; ++x1)
            for (int x2 = 0; x2 + x1 <= np; ++x2) {
                ++ctx.stats.branches.step4;
                if (auto r = b1.run_sizes(x1, x2)) best.offer(*r);
            }
        ++ctx.stats.branches.step4;
        B2Runner b2(ctx, g, s);
        if (auto r = b2.run()) best.offer(*r);
    });
    return *best.value;
}

VertexSet structured_solve(Ctx& ctx, const Graph& g) {
    int n = g.vertex_count();
    double ell_real = std::max(ctx.sched.ell(), static_cast<double>(ctx.pi.overlay_bound()));
    int ell = static_cast<int>(std::min(ell_real, static_cast<double>(std::max(n, 4))));
    ell = std::max(ell, 4);
    auto inner = [&](const Graph& sub) { return structured_inner(ctx, sub); };
    return finite_deletion_solve(g, ctx.pi, ell, inner, ctx.sched.epsilon, ctx.opts.trace);
}

// ---------------------------------------------------------------------------
// Brute-force scan (solver-side baseline)

VertexSet brute_scan(const Graph& g, const PiClass& pi, int threads = 1) {
    int n = g.vertex_count();
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    for (int s = n; s >= 0; --s) {
        if (threads > 1 && s >= 1) {
            // Shard by the smallest member; shard f sees only combinations
            // starting at f, so per-shard first hits merge deterministically.
            int shards = n - s + 1;
            std::vector<std::optional<VertexSet>> results(static_cast<std::size_t>(shards));
            std::vector<std::thread> pool;
            int t = std::min(threads, shards);
            for (int w = 0; w < t; ++w) {
                pool.emplace_back([&, w]() {
                    for (int f = w; f < shards; f += t) {
                        std::vector<int> tail(all.begin() + f + 1, all.end());
                        for_each_combination(tail, s - 1, [&](const std::vector<int>& sv) {
                            VertexSet cand = to_set(sv, n);
                            cand.add(f);
                            if (pi.membership(g.induced(cand))) {
                                results[static_cast<std::size_t>(f)] = cand;
                                return true;
                            }
                            return false;
                        });
                    }
                });
            }
            for (auto& th : pool) th.join();
            for (const auto& r : results)
                if (r) return *r;
            continue;
        }
        VertexSet found(n);
        bool hit = for_each_combination(all, s, [&](const std::vector<int>& sv) {
            VertexSet cand = to_set(sv, n);
            if (pi.membership(g.induced(cand))) {
                found = cand;
                return true;
            }
            return false;
        });
        if (hit) return found;
    }
    return VertexSet(n);
}

}  // namespace

VertexSet brute_force_inner(const Graph& g, const PiClass& pi) { return brute_scan(g, pi); }

Solution solve_case_a(const Graph& g, const PiClass& pi, const VertexSet& k) {
    if (!g.is_clique(k)) throw Error(ErrorCode::invalid_argument, "case A requires a clique");
    ConstantSchedule c = ConstantSchedule::defaults();
    SolveOptions opts;
    Solution sol{VertexSet(g.vertex_count()), {}};
    Ctx ctx{pi, c, SigmaConstants::standard(), sol.stats, opts, g, {}};
    sol.vertices = case_a_impl(ctx, g, k);
    return sol;
}

BandResult solve_step2_band(const Graph& g, const PiClass& pi, double beta) {
    if (beta <= 0 || beta >= 1.0 / 16.0)
        throw Error(ErrorCode::invalid_argument, "band scan needs 0 < beta < 1/16");
    return band_impl(nullptr, g, pi, beta);
}

std::optional<Solution> solve_branch_b1(const Graph& g, const PiClass& pi, const VertexSet& s,
                                        const ConstantSchedule& c, std::pair<int, int> sizes) {
    if (!g.is_clique(s)) throw Error(ErrorCode::invalid_argument, "branch B.1 requires a clique separator");
    SolveOptions opts;
    Solution sol{VertexSet(g.vertex_count()), {}};
    Ctx ctx{pi, c, SigmaConstants::standard(), sol.stats, opts, g, {}};
    B1Runner runner(ctx, g, s);
    auto r = runner.run_sizes(sizes.first, sizes.second);
    if (!r) return std::nullopt;
    sol.vertices = *r;
    return sol;
}

std::optional<Solution> solve_branch_b2(const Graph& g, const PiClass& pi, const VertexSet& s,
                                        const ConstantSchedule& c) {
    if (!g.is_clique(s)) throw Error(ErrorCode::invalid_argument, "branch B.2 requires a clique separator");
    SolveOptions opts;
    Solution sol{VertexSet(g.vertex_count()), {}};
    Ctx ctx{pi, c, SigmaConstants::standard(), sol.stats, opts, g, {}};
    B2Runner runner(ctx, g, s);
    auto r = runner.run();
    if (!r) return std::nullopt;
    sol.vertices = *r;
    return sol;
}

Solution solve(const Graph& g, const PiClass& pi, const ConstantSchedule& c, SolveMode mode,
               const SolveOptions& opts) {
    auto start = std::chrono::steady_clock::now();
    int n = g.vertex_count();
    Solution sol{VertexSet(n), {}};
    Ctx ctx{pi, c, SigmaConstants::standard(), sol.stats, opts, g, {}};

    if (mode == SolveMode::automatic || mode == SolveMode::structured) {
        auto violations = validate_constants(c, n);
        if (!violations.empty()) {
            std::string msg = "invalid constant schedule:";
            for (const auto& v : violations) msg += " [" + v + "]";
            throw Error(ErrorCode::constants, msg);
        }
    }

    switch (mode) {
        case SolveMode::brute:
            sol.vertices = brute_scan(g, pi, std::max(1, opts.threads));
            break;
        case SolveMode::automatic:
            if (pi.membership(g)) {
                sol.vertices = g.vertex_set();
                break;
            }
            sol.vertices = structured_solve(ctx, g);
            break;
        case SolveMode::structured:
            sol.vertices = structured_solve(ctx, g);
            break;
        case SolveMode::forced_b1: {
            Best best;
            best.offer(VertexSet(n));
            for_each_clique(g, n, [&](const VertexSet& s) {
                ++ctx.stats.branches.step3;
                B1Runner runner(ctx, g, s);
                int np = n - s.size();
                for (int x1 = 0; x1 <= np; ++x1)
                    for (int x2 = 0; x2 + x1 <= np; ++x2)
                        if (auto r = runner.run_sizes(x1, x2)) best.offer(*r);
            });
            sol.vertices = *best.value;
            break;
        }
        case SolveMode::forced_b2: {
            Best best;
            best.offer(VertexSet(n));
            for_each_clique(g, n, [&](const VertexSet& s) {
                ++ctx.stats.branches.step3;
                B2Runner runner(ctx, g, s);
                if (auto r = runner.run()) best.offer(*r);
            });
            sol.vertices = *best.value;
            break;
        }
    }

    if (!pi.membership(g.induced(sol.vertices)))
        throw Error(ErrorCode::invalid_argument, "internal error: solver produced a non-member");
    auto end = std::chrono::steady_clock::now();
    sol.stats.elapsed_ms = std::chrono::duration<double, std::milli>(end - start).count();
    return sol;
}

}  // namespace maxpi
