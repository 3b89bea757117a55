#include <istab/graph_matching.hpp>
#include <istab/instance_io.hpp>
#include <istab/reductions.hpp>
#include <istab/solvers.hpp>
#include <istab/stability.hpp>

#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace istab;

namespace {

Graph single_edge() { return Graph(2, {{0, 1}}); }

bool exists_stable(const Game & g, Concept c)
{
    if (g.size() <= kDefaultBruteForceCap)
        return brute_force(g, c).count > 0;
    return exhaustive_search(g, c).has_value();
}

std::size_t count_role(const ReductionArtifact & a, RoleKind kind)
{
    return static_cast<std::size_t>(
        std::count_if(a.roles.begin() + 1, a.roles.end(), [&](const Role & r) { return r.kind == kind; }));
}

} // namespace

TEST_SUITE("reductions") {

TEST_CASE("cyclic triplet has no individually stable matching")
{
    Game g = cyclic_triplet();
    CHECK(g.size() == 3);
    CHECK(g.strictly_prefers(1, 2, 3));
    CHECK(g.strictly_prefers(1, 3, 1));
    CHECK(g.strictly_prefers(2, 3, 1));
    CHECK(g.strictly_prefers(3, 1, 2));
    CHECK(brute_force(g, Concept::IS).count == 0);
    CHECK(brute_force(g, Concept::NS).count == 0);
}

TEST_CASE("marriage construction on a single edge")
{
    auto a = mmm_to_marriage_ns(single_edge(), 1);
    CHECK(a.n == 3);
    CHECK(a.r == 1);
    CHECK(a.game.size() == 9);
    CHECK(a.game.is_marriage());
    CHECK(count_role(a, RoleKind::AVertex) == 3);
    CHECK(count_role(a, RoleKind::BVertex) == 3);
    CHECK(count_role(a, RoleKind::Gadget) == 2);
    CHECK(count_role(a, RoleKind::Sink) == 1);
    int mmm = minimum_maximal_matching(a.padded);
    CHECK(mmm == 2);
    CHECK(exists_stable(a.game, Concept::NS) == (mmm <= 1));
    CHECK(exists_stable(mmm_to_marriage_ns(single_edge(), 2).game, Concept::NS));
    CHECK(exists_stable(mmm_to_marriage_ns(single_edge(), 3).game, Concept::NS));

    auto full = mmm_to_marriage_ns(single_edge(), 3);
    CHECK(count_role(full, RoleKind::Gadget) == 0);
    CHECK(full.game.size() == 7);
}

TEST_CASE("marriage construction preferences")
{
    auto a = mmm_to_marriage_ns(Graph(3, {{0, 1}, {1, 2}}), 1);
    const Game & g = a.game;
    PlayerId sink = 0;
    std::vector<PlayerId> gadgets;
    for (PlayerId p = 1; p <= g.size(); ++p) {
        if (a.roles[static_cast<std::size_t>(p)].kind == RoleKind::Sink)
            sink = p;
        if (a.roles[static_cast<std::size_t>(p)].kind == RoleKind::Gadget)
            gadgets.push_back(p);
    }
    REQUIRE(sink != 0);
    CHECK(gadgets.size() == static_cast<std::size_t>(a.n - a.k));
    for (PlayerId q = 1; q <= g.size(); ++q)
        if (q != sink)
            CHECK_FALSE(g.acceptable(sink, q));
    for (PlayerId p = 1; p <= g.size(); ++p) {
        const Role & role = a.roles[static_cast<std::size_t>(p)];
        for (PlayerId q = 1; q <= g.size(); ++q) {
            if (p == q)
                continue;
            const Role & other = a.roles[static_cast<std::size_t>(q)];
            if (!g.opposite_sides(p, q))
                CHECK_FALSE(g.acceptable(p, q));
            bool adjacent = (role.kind == RoleKind::AVertex || role.kind == RoleKind::BVertex)
                            && (other.kind == RoleKind::AVertex || other.kind == RoleKind::BVertex)
                            && a.padded.has_edge(role.index, other.index);
            if (role.kind == RoleKind::AVertex && other.kind == RoleKind::Gadget) {
                CHECK(g.acceptable(p, q));
                for (PlayerId b = 1; b <= g.size(); ++b)
                    if (a.roles[static_cast<std::size_t>(b)].kind == RoleKind::BVertex
                        && a.padded.has_edge(role.index, a.roles[static_cast<std::size_t>(b)].index))
                        CHECK(g.strictly_prefers(p, b, q));
            }
            if (role.kind == RoleKind::BVertex)
                CHECK(g.acceptable(p, q) == adjacent);
            if (role.kind == RoleKind::Gadget) {
                bool wanted = other.kind == RoleKind::AVertex || other.kind == RoleKind::Sink;
                CHECK(g.acceptable(p, q) == wanted);
                if (wanted)
                    CHECK(g.level(p, q) == g.level(p, sink));
            }
        }
    }
}

TEST_CASE("roommate construction on a single edge")
{
    auto a = mmm_to_roommate_is(single_edge(), 2);
    CHECK(a.game.size() == 9);
    CHECK_FALSE(a.game.is_marriage());
    CHECK(count_role(a, RoleKind::Gadget) == 3);
    CHECK(count_role(a, RoleKind::Sink) == 0);
    CHECK(exists_stable(a.game, Concept::IS) == (minimum_maximal_matching(a.padded) <= 2));

    auto full = mmm_to_roommate_is(single_edge(), 3);
    CHECK(full.game.size() == 6);
    CHECK(brute_force(full.game, Concept::IS).count > 0);

    auto tight = mmm_to_roommate_is(single_edge(), 1);
    CHECK(tight.game.size() == 12);
    CHECK_FALSE(exists_stable(tight.game, Concept::IS));
}

TEST_CASE("roommate triplets are wired cyclically")
{
    auto a = mmm_to_roommate_is(Graph(1), 0);
    CHECK(a.n == 2);
    CHECK(a.game.size() == 4 + 6);
    for (PlayerId p = 1; p <= a.game.size(); ++p) {
        const Role & role = a.roles[static_cast<std::size_t>(p)];
        if (role.kind != RoleKind::Gadget)
            continue;
        PlayerId next = 0, prev = 0;
        for (PlayerId q = 1; q <= a.game.size(); ++q) {
            const Role & other = a.roles[static_cast<std::size_t>(q)];
            if (other.kind == RoleKind::Gadget && other.index == role.index) {
                if (other.layer == (role.layer + 1) % 3)
                    next = q;
                if (other.layer == (role.layer + 2) % 3)
                    prev = q;
            }
        }
        REQUIRE(next != 0);
        REQUIRE(prev != 0);
        CHECK(a.game.strictly_prefers(p, next, prev));
        CHECK(a.game.strictly_prefers(p, prev, p));
    }
    CHECK(exists_stable(a.game, Concept::IS) == (minimum_maximal_matching(a.padded) <= 0));
}

TEST_CASE("role counts and invariants over small graphs")
{
    for (const Graph & base : testing::small_graphs(2, 4)) {
        auto sub = pad_bipartition(subdivision_graph(base));
        int n = static_cast<int>(sub.graph.part(Part::A).size());
        for (int k = 0; k <= n; ++k) {
            auto m = mmm_to_marriage_ns(base, k);
            CHECK(m.game.size() == 2 * n + (n - k) + 1);
            CHECK(count_role(m, RoleKind::Gadget) == static_cast<std::size_t>(n - k));
            for (PlayerId p = 1; p <= m.game.size(); ++p)
                for (PlayerId q = 1; q <= m.game.size(); ++q)
                    if (p != q && !m.game.opposite_sides(p, q))
                        CHECK_FALSE(m.game.acceptable(p, q));
            auto r = mmm_to_roommate_is(base, k);
            CHECK(r.game.size() == 2 * n + 3 * (n - k));
            CHECK(count_role(r, RoleKind::Gadget) == static_cast<std::size_t>(3 * (n - k)));
        }
        CHECK_THROWS_AS(mmm_to_marriage_ns(base, n + 1), std::invalid_argument);
        CHECK_THROWS_AS(mmm_to_roommate_is(base, -1), std::invalid_argument);
    }
}

TEST_CASE("role map text")
{
    auto a = mmm_to_marriage_ns(single_edge(), 2);
    std::string text = format_role_map(a);
    CHECK(text.find("# n=3 k=2 r=1") != std::string::npos);
    CHECK(text.find("# role 4 Y") != std::string::npos);
    CHECK(text.find("# role 1 A 1") != std::string::npos);
    CHECK(text.find("X 1 -") != std::string::npos);
    auto r = mmm_to_roommate_is(single_edge(), 2);
    CHECK(format_role_map(r).find("X 1 2") != std::string::npos);
}

} // TEST_SUITE
