#include <doctest.h>

#include <cmath>
#include <random>
#include <unordered_set>

#include "core/branching.hpp"
#include "core/errors.hpp"
#include "core/oracle.hpp"
#include "test_helpers.hpp"

using namespace maxpi;
using namespace maxpi::test;

namespace {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

VertexSet mask_set(std::uint64_t mask, int n) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        if (mask & (1ull << v)) s.add(v);
    return s;
}

// random Y with all components of size at most cap, by trimming
VertexSet planted_y(const Graph& r, double cap, std::mt19937_64& rng) {
    int n = r.vertex_count();
    VertexSet y(n);
    for (int v = 0; v < n; ++v)
        if (rng() % 2) y.add(v);
    for (const auto& comp : r.components(y)) {
        if (comp.size() <= cap) continue;
        int keep = static_cast<int>(cap);
        int kept = 0;
        comp.for_each([&](int v) {
            if (++kept > keep) y.remove(v);
        });
    }
    return y;
}

bool pair_covers(const BranchPair& p, const VertexSet& y) {
    return p.assumed_in.is_subset_of(y) && !p.assumed_out.intersects(y);
}

}  // namespace

TEST_CASE("sigma constants") {
    SigmaConstants sc = SigmaConstants::standard();
    CHECK(std::pow(2.0, sc.sigma_prime) == doctest::Approx(1.89).epsilon(1e-12));
    CHECK(sc.sigma_prime < sc.sigma);
    CHECK(sc.sigma < 1.0);
    double x = std::pow(2.0, sc.sigma);
    CHECK(x * (x - 1) >= 1.89 - 1e-9);
    CHECK(sc.rho == doctest::Approx((3.0 + sc.sigma) / 4.0));
    CHECK(sc.sigma == doctest::Approx(0.973).epsilon(1e-3));
}

TEST_CASE("subsets of size at most a third number at most 1.89^n") {
    for (int n = 0; n <= 30; ++n) {
        std::uint64_t total = 0;
        for (int k = 0; 3 * k <= n; ++k) total += binomial(n, k);
        CHECK(static_cast<double>(total) <= std::pow(1.89, n));
    }
}

TEST_CASE("finite deletion branching solves the forbidden examples") {
    PiClass chordal = make_chordal_class();
    auto inner = [&](const Graph& g) { return brute_force_max_induced(g, chordal); };

    CHECK(finite_deletion_solve(cycle(4), chordal, 4, inner, 0.5).size() == 3);
    CHECK(finite_deletion_solve(cycle(5), chordal, 5, inner, 0.5).size() == 4);

    // already clean: one inner call decides
    int calls = 0;
    auto counting = [&](const Graph& g) {
        ++calls;
        return brute_force_max_induced(g, chordal);
    };
    Graph clean = random_chordal(8, 555);
    VertexSet r = finite_deletion_solve(clean, chordal, 8, counting, 0.5);
    CHECK(r.size() == 8);
    CHECK(calls == 1);

    CHECK_THROWS(finite_deletion_solve(cycle(4), chordal, 4, inner, 0.0));
    CHECK_THROWS(finite_deletion_solve(cycle(4), chordal, 4, inner, 1.0));
}

TEST_CASE("finite deletion equals brute force on random graphs") {
    PiClass classes[] = {make_chordal_class(), make_interval_class()};
    for (const auto& pi : classes) {
        auto inner = [&](const Graph& g) { return brute_force_max_induced(g, pi); };
        for (double eps : {0.3, 0.7}) {
            for (int trial = 0; trial < 40; ++trial) {
                int n = 1 + trial % 8;
                Graph g = random_gnp(n, 0.25 + 0.1 * (trial % 5), 41000 + trial);
                VertexSet got = finite_deletion_solve(g, pi, std::max(4, n), inner, eps);
                VertexSet want = brute_force_max_induced(g, pi);
                CHECK(got.size() == want.size());
                CHECK(pi.membership(g.induced(got)));
            }
        }
    }
}

TEST_CASE("clique extension basics") {
    PiClass chordal = make_chordal_class();

    // empty P takes the whole clique
    Graph k3 = complete(3);
    CHECK(max_clique_extension(k3, VertexSet(3), VertexSet::full(3), chordal) == VertexSet::full(3));

    // path 0-1-2-3 plus 4 adjacent to both ends: adding 4 closes a C5
    Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {3, 4}});
    VertexSet p(5, {0, 1, 2, 3});
    VertexSet k(5, {4});
    CHECK(max_clique_extension(g, p, k, chordal) == p);

    CHECK_THROWS(max_clique_extension(cycle(4), VertexSet::full(4), VertexSet(4), chordal));  // P not in Pi
    CHECK_THROWS(max_clique_extension(cycle(4), VertexSet(4, {0}), VertexSet(4, {1, 3}), chordal));  // K not clique
    CHECK_THROWS(max_clique_extension(cycle(4), VertexSet(4, {0}), VertexSet(4, {0, 1}), chordal));  // overlap
}

TEST_CASE("clique extension equals the exhaustive oracle") {
    PiClass classes[] = {make_chordal_class(), make_interval_class()};
    std::mt19937_64 rng(98765);
    for (const auto& pi : classes) {
        int done = 0;
        for (int trial = 0; done < 60 && trial < 4000; ++trial) {
            int n = 4 + trial % 6;  // up to 9
            Graph g = random_gnp(n, 0.35 + 0.1 * (trial % 4), 43000 + trial);
            // grow a clique greedily from a random seed, cap 6
            VertexSet k(n);
            int seed = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
            k.add(seed);
            for (int v = 0; v < n && k.size() < 6; ++v)
                if (!k.contains(v) && k.is_subset_of(g.neighbors(v))) k.add(v);
            // random P disjoint from K inducing a member
            VertexSet p(n);
            for (int v = 0; v < n; ++v)
                if (!k.contains(v) && rng() % 2) p.add(v);
            if (!pi.membership(g.induced(p))) continue;
            ++done;

            VertexSet got = max_clique_extension(g, p, k, pi);
            CHECK(p.is_subset_of(got));
            CHECK(pi.membership(g.induced(got)));

            int best = -1;
            std::vector<int> km = k.members();
            for (std::uint64_t mask = 0; mask < (1ull << km.size()); ++mask) {
                VertexSet x = p;
                for (std::size_t i = 0; i < km.size(); ++i)
                    if (mask & (1ull << i)) x.add(km[i]);
                if (pi.membership(g.induced(x))) best = std::max(best, x.size());
            }
            CHECK(got.size() == best);

            // membership cap soundness: every small subset of the added part
            // keeps P in the class
            VertexSet added = got - p;
            std::vector<int> am = added.members();
            for (std::uint64_t mask = 0; mask < (1ull << am.size()); ++mask) {
                VertexSet w = p;
                int cnt = 0;
                for (std::size_t i = 0; i < am.size(); ++i)
                    if (mask & (1ull << i)) {
                        w.add(am[i]);
                        ++cnt;
                    }
                if (cnt > 0 && cnt <= pi.aleph) CHECK(pi.membership(g.induced(w)));
            }
        }
        CHECK(done == 60);
    }
}

TEST_CASE("degree reduction leaves only light vertices and respects the potential") {
    SigmaConstants sc = SigmaConstants::standard();

    // no heavy vertex: a single empty pair
    auto quiet = degree_reduction_branch(path(6), 3, sc);
    REQUIRE(quiet.size() == 1);
    CHECK(quiet[0].assumed_in.empty());
    CHECK(quiet[0].assumed_out.empty());

    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + trial % 13;  // up to 14
        double cap = 1 + trial % 3;
        Graph r = random_gnp(n, 0.2 + 0.2 * (trial % 4), 47000 + trial);
        auto pairs = degree_reduction_branch(r, cap, sc);
        double total = 0;
        for (const auto& pr : pairs) {
            CHECK_FALSE(pr.assumed_in.intersects(pr.assumed_out));
            VertexSet alive = r.vertex_set() - pr.assumed_out;
            for (int v = alive.first(); v != -1; v = alive.next(v))
                CHECK((r.neighbors(v) & alive).size() < 3 * cap);
            total += branch_pair_potential(pr, n, sc);
        }
        CHECK(total <= std::pow(2.0, sc.sigma * n) * (1 + 1e-9));
    }
}

TEST_CASE("degree reduction covers every bounded-component set") {
    SigmaConstants sc = SigmaConstants::standard();

    // star with heavy center: C=3, center degree 9
    Graph s = star(9);
    auto pairs = degree_reduction_branch(s, 3, sc);
    for (std::uint64_t mask = 0; mask < (1ull << 10); ++mask) {
        VertexSet y = mask_set(mask, 10);
        bool bounded = true;
        for (const auto& c : s.components(y))
            if (c.size() > 3) bounded = false;
        if (!bounded) continue;
        bool covered = false;
        for (const auto& pr : pairs)
            if (pair_covers(pr, y)) covered = true;
        CHECK(covered);
    }

    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 4 + trial % 7;  // up to 10
        double cap = 1 + trial % 3;
        Graph r = random_gnp(n, 0.3 + 0.15 * (trial % 3), 49000 + trial);
        auto prs = degree_reduction_branch(r, cap, sc);
        for (int probe = 0; probe < 60; ++probe) {
            VertexSet y = planted_y(r, cap, rng);
            bool covered = false;
            for (const auto& pr : prs)
                if (pair_covers(pr, y)) covered = true;
            CHECK(covered);
        }
    }
}

TEST_CASE("small-side candidates on tiny hosts") {
    SigmaConstants sc = SigmaConstants::standard();

    auto empty_host = enumerate_small_side_candidates(Graph(0, {}), 1, sc);
    REQUIRE(empty_host.size() == 1);
    CHECK(empty_host[0].empty());

    // a single vertex: the pair (empty, empty) is large-side, so only the
    // two-thirds-or-more subsets appear and the empty set does not
    auto k1 = enumerate_small_side_candidates(Graph(1, {}), 1, sc);
    REQUIRE(k1.size() == 1);
    CHECK(k1[0].members() == std::vector<int>{0});
}

TEST_CASE("small-side candidate count and conditional containment") {
    SigmaConstants sc = SigmaConstants::standard();
    std::mt19937_64 rng(171717);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + trial % 12;  // up to 13
        double cap = 1 + trial % 3;
        Graph r = random_gnp(n, 0.25 + 0.15 * (trial % 4), 51000 + trial);
        auto cands = enumerate_small_side_candidates(r, cap, sc);
        CHECK(static_cast<double>(cands.size()) <= 2.0 * std::pow(2.0, sc.rho * n) * (1 + 1e-9));

        std::unordered_set<VertexSet, VertexSetHash> cand_set(cands.begin(), cands.end());
        auto pairs = degree_reduction_branch(r, cap, sc);
        for (int probe = 0; probe < 100; ++probe) {
            VertexSet y = planted_y(r, cap, rng);
            bool must_contain = false;
            for (const auto& pr : pairs) {
                if (!pair_covers(pr, y)) continue;
                VertexSet q = r.vertex_set() - pr.assumed_in - pr.assumed_out;
                int qy = (q & y).size();
                bool small_side = 4 * (pr.assumed_in.size() + pr.assumed_out.size()) >= n;
                if (small_side || 3 * qy >= 2 * q.size()) must_contain = true;
            }
            if (must_contain) CHECK(cand_set.count(y) == 1);
        }
    }
}
