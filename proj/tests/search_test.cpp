#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "turanlab/constructions.hpp"
#include "turanlab/search.hpp"

using namespace turanlab;

namespace {

bool contains(const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

std::string all_graphs_on(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) slots.emplace_back(i, j);
    std::set<std::string> seen;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        Graph g(n);
        for (std::size_t e = 0; e < slots.size(); ++e)
            if ((mask >> e) & 1U) g.add_edge(slots[e].first, slots[e].second);
        seen.insert(oracle::canonical(g));
    }
    std::string out;
    for (const auto& s : seen) out += s + "\n";
    return out;
}

}  // namespace

TEST(Search, SmallExamples) {
    const ExtremalRecord a = brute_force_ex(4, make_path(1), Forbidden::single(make_path(3)));
    EXPECT_EQ(a.max_count, 3U);
    EXPECT_TRUE(contains(a.witnesses, "CJ"));  // triangle plus isolated vertex
    EXPECT_TRUE(contains(a.witnesses, "CF"));  // star K_{1,3}
    EXPECT_EQ(a.witnesses.size(), 2U);

    const ExtremalRecord b = brute_force_ex(5, make_path(1), Forbidden::single(make_path(4)));
    EXPECT_EQ(b.max_count, 6U);
    EXPECT_TRUE(contains(b.witnesses, canonical_graph6(complete_graph(4).disjoint_union(Graph(1)))));

    const ExtremalRecord c = brute_force_ex(6, make_path(2), Forbidden::single(make_path(3)));
    EXPECT_EQ(c.max_count, 10U);
    EXPECT_EQ(c.witnesses, std::vector<std::string>{canonical_graph6(star_graph(5))});
}

TEST(Search, AgreesWithExhaustiveOracle) {
    struct Case {
        Pattern target;
        Forbidden forbidden;
        bool connected;
    };
    const std::vector<Case> cases{
        {make_path(1), Forbidden::single(make_path(3)), false},
        {make_path(2), Forbidden::single(make_path(4)), false},
        {make_cycle(3), Forbidden::single(make_path(4)), false},
        {make_star(3), Forbidden::single(make_path(3)), true},
        {make_path(1), Forbidden::long_cycles(4), false},
        {make_clique(3), Forbidden::long_cycles(5), true},
        {make_cycle(4), Forbidden::single(make_clique(4)), false},
    };
    for (const auto& cs : cases) {
        for (int n = 1; n <= 6; ++n) {
            const auto admissible = [&](const Graph& g) {
                if (cs.connected && !oracle::connected(g)) return false;
                if (cs.forbidden.kind == Forbidden::Kind::long_cycles) return oracle::circumference(g) < cs.forbidden.k;
                if (cs.forbidden.pattern.kind == MotifKind::path)
                    return oracle::longest_path(g) < cs.forbidden.pattern.size;
                return oracle::embeddings(cs.forbidden.pattern.graph, g) == 0;
            };
            const auto value = [&](const Graph& g) {
                return static_cast<std::int64_t>(oracle::copies(cs.target.graph, g));
            };
            const oracle::Extremal want = oracle::exhaustive(n, admissible, value);
            SearchOptions o;
            o.connected_only = cs.connected;
            const ExtremalRecord got = brute_force_ex(n, cs.target, cs.forbidden, o);
            const std::string label = cs.target.name() + " " + cs.forbidden.name() + " n=" + std::to_string(n);
            ASSERT_TRUE(got.max_count.has_value()) << label;
            EXPECT_EQ(static_cast<std::int64_t>(*got.max_count), want.best) << label;
            EXPECT_EQ(got.witnesses, want.witnesses) << label;
        }
    }
}

TEST(Search, CanonicalFormMatchesOracle) {
    std::mt19937_64 rng(73);
    for (int rep = 0; rep < 300; ++rep) {
        const int n = rep % 8;
        const Graph g = oracle::random_graph(n, 0.2 + 0.002 * rep, rng);
        const std::string c = canonical_graph6(g);
        EXPECT_EQ(c, oracle::canonical(g)) << to_graph6(g);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        EXPECT_EQ(canonical_graph6(g.relabel(perm)), c);
    }
    // larger regular-ish inputs stay fast and invariant
    const Graph petersen = parse_graph6("IheA@GUAo");
    std::vector<int> perm{3, 7, 1, 9, 0, 5, 2, 8, 6, 4};
    EXPECT_EQ(canonical_graph6(petersen.relabel(perm)), canonical_graph6(petersen));
    EXPECT_EQ(canonical_graph6(cycle_graph(12).relabel(std::vector<int>{5, 2, 11, 0, 7, 1, 9, 3, 10, 4, 8, 6})),
              canonical_graph6(cycle_graph(12)));
}

TEST(Search, DeterministicAcrossThreads) {
    for (int threads : {1, 2, 4}) {
        SearchOptions o;
        o.threads = threads;
        const ExtremalRecord r = brute_force_ex(7, make_path(3), Forbidden::single(make_path(4)), o);
        SearchOptions one;
        one.threads = 1;
        const ExtremalRecord base = brute_force_ex(7, make_path(3), Forbidden::single(make_path(4)), one);
        EXPECT_EQ(r.max_count, base.max_count);
        EXPECT_EQ(r.witnesses, base.witnesses);
        EXPECT_EQ(r.graphs_scanned, base.graphs_scanned);
    }
}

TEST(Search, MonotoneInN) {
    Count prev = 0;
    for (int n = 1; n <= 7; ++n) {
        const ExtremalRecord r = brute_force_ex(n, make_path(2), Forbidden::single(make_path(5)));
        ASSERT_TRUE(r.max_count);
        EXPECT_GE(*r.max_count, prev);
        prev = *r.max_count;
    }
}

TEST(Search, ConstructionsAreLowerBounds) {
    for (int k = 3; k <= 6; ++k) {
        for (int n = k; n <= 7; ++n) {
            const ExtremalRecord r = brute_force_ex(n, make_path(1), Forbidden::single(make_path(k)));
            EXPECT_GE(*r.max_count, static_cast<Count>(build(ConstructionParams::gnkt(n, k)).edge_count()));
        }
    }
}

TEST(Search, ConnectedWithNoAdmissibleGraph) {
    SearchOptions o;
    o.connected_only = true;
    const ExtremalRecord r = brute_force_ex(5, make_path(1), Forbidden::single(make_path(2)), o);
    EXPECT_FALSE(r.max_count.has_value());
    EXPECT_TRUE(r.witnesses.empty());
}

TEST(Search, Caps) {
    EXPECT_THROW(brute_force_ex(8, make_path(1), Forbidden::single(make_path(3))), std::invalid_argument);
    EXPECT_THROW(brute_force_ex(9, make_path(1), Forbidden::single(make_path(3)), {false, 0, true}),
                 std::invalid_argument);
    EXPECT_THROW(brute_force_ex(5, make_path(6), Forbidden::single(make_path(3))), std::invalid_argument);
}

TEST(Stream, AllFourVertexGraphs) {
    std::istringstream in(">>graph6<<\n" + all_graphs_on(4) + "\n");
    const ExtremalRecord r = stream_ex(in, make_path(1), Forbidden::single(make_path(3)));
    EXPECT_EQ(r.mode, SearchMode::stream);
    EXPECT_EQ(r.graphs_scanned, 11U);
    EXPECT_EQ(r.max_count, 3U);
    EXPECT_EQ(r.witnesses, (std::vector<std::string>{"CF", "CJ"}));
}

TEST(Stream, MatchesExhaustiveOnFiveVertices) {
    std::istringstream in(all_graphs_on(5));
    const ExtremalRecord s = stream_ex(in, make_cycle(3), Forbidden::long_cycles(5));
    const ExtremalRecord e = brute_force_ex(5, make_cycle(3), Forbidden::long_cycles(5));
    EXPECT_EQ(s.max_count, e.max_count);
    EXPECT_EQ(s.witnesses, e.witnesses);
}

TEST(Stream, Errors) {
    std::istringstream empty(">>graph6<<\n\n");
    try {
        stream_ex(empty, make_path(1), Forbidden::single(make_path(3)));
        FAIL() << "expected StreamError";
    } catch (const StreamError& e) {
        EXPECT_EQ(e.line(), 0U);
    }
    std::istringstream bad("CF\nCJ\nC!!\n");
    try {
        stream_ex(bad, make_path(1), Forbidden::single(make_path(3)));
        FAIL() << "expected StreamError";
    } catch (const StreamError& e) {
        EXPECT_EQ(e.line(), 3U);
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    }
    std::istringstream mixed("CF\nDQc\n");
    try {
        stream_ex(mixed, make_path(1), Forbidden::single(make_path(3)));
        FAIL() << "expected StreamError";
    } catch (const StreamError& e) {
        EXPECT_EQ(e.line(), 2U);
    }
}

TEST(Stream, NoAdmissibleGraph) {
    std::istringstream in("C~\n");
    const ExtremalRecord r = stream_ex(in, make_path(1), Forbidden::single(make_path(3)));
    EXPECT_FALSE(r.max_count.has_value());
    EXPECT_EQ(r.graphs_scanned, 1U);
}
