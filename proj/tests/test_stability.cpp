#include <istab/instance_io.hpp>
#include <istab/reductions.hpp>
#include <istab/solvers.hpp>
#include <istab/stability.hpp>

#include "test_support.hpp"

#include <doctest.h>

#include <random>

using namespace istab;

namespace {

// Independent restatement of the definitions: try every move of every player.
bool reference_stable(const Game & g, const Matching & m, Concept c)
{
    const int n = g.size();
    for (PlayerId i = 1; i <= n; ++i) {
        PlayerId p = m.partner(i);
        for (PlayerId t = 0; t <= n; ++t) {
            if (t == i)
                continue;
            if (t != 0 && !m.is_single(t))
                continue; // joining a pair makes a coalition of three
            if (t == 0 && p == i)
                continue;
            PlayerId dest = t == 0 ? i : t;
            if (g.level(i, dest) >= g.level(i, p))
                continue;
            bool target_ok = t == 0 || g.level(t, i) <= g.level(t, t);
            bool partner_ok = p == i || g.level(p, p) <= g.level(p, i);
            bool allowed = c == Concept::NS || (c == Concept::IS && target_ok) || (c == Concept::CNS && partner_ok)
                           || (c == Concept::CIS && target_ok && partner_ok);
            if (allowed)
                return false;
        }
    }
    return true;
}

} // namespace

TEST_SUITE("stability") {

TEST_CASE("individual rationality")
{
    Game g = parse_instance("roommate 3\n1: 2\n2:\n3: 1\n");
    CHECK(is_individually_rational(g, Matching::singletons(3)));
    CHECK_FALSE(is_individually_rational(g, Matching::from_pairs(3, {{1, 2}})));
    CHECK(find_ir_violation(g, Matching::from_pairs(3, {{1, 2}})) == 2);

    Game mg = parse_instance("marriage 2 1\n1: 3\n2: 3\n3: 1 2\n");
    CHECK_FALSE(is_individually_rational(mg, Matching::from_pairs(3, {{1, 2}})));
}

TEST_CASE("cyclic triplet witnesses")
{
    Game g = cyclic_triplet();
    Matching m = Matching::from_pairs(3, {{1, 2}});
    CHECK(find_deviation(g, m, Concept::NS) == DeviationWitness{2, 3, Concept::NS});
    CHECK(find_deviation(g, m, Concept::IS) == DeviationWitness{2, 3, Concept::IS});
    // Player 1 would be left worse off, so no contractual move exists.
    CHECK_FALSE(find_deviation(g, m, Concept::CNS));
    CHECK_FALSE(find_deviation(g, m, Concept::CIS));
}

TEST_CASE("mutual top choices are stable under every concept")
{
    Game g = parse_instance("roommate 2\n1: 2\n2: 1\n");
    Matching m = Matching::from_pairs(2, {{1, 2}});
    for (Concept c : {Concept::IR, Concept::NS, Concept::IS, Concept::CNS, Concept::CIS, Concept::Core,
                      Concept::StrictCore})
        CHECK(is_stable(g, m, c));
    CHECK_FALSE(find_pair_block(g, m, false));
    CHECK_FALSE(find_pair_block(g, m, true));
}

TEST_CASE("a player stuck with an unwilling partner is CNS but not IR")
{
    Game g = parse_instance("roommate 2\n1: 2\n2:\n");
    Matching m = Matching::from_pairs(2, {{1, 2}});
    CHECK_FALSE(find_deviation(g, m, Concept::CNS));
    CHECK_FALSE(is_individually_rational(g, m));
    CHECK(find_deviation(g, m, Concept::NS) == DeviationWitness{2, kAlone, Concept::NS});
    CHECK(find_deviation(g, m, Concept::IS) == DeviationWitness{2, kAlone, Concept::IS});
    CHECK_FALSE(find_deviation(g, m, Concept::CIS));
}

TEST_CASE("witness prefers the mover's best target, alone first on ties")
{
    // 1 is matched with 4, which it ranks below everything; 2 and 3 are single.
    Game g = parse_instance("roommate 4\n1: 3 ( 2 self ) 4\n2: 1\n3: 1\n4: 1\n");
    Matching m = Matching::from_pairs(4, {{1, 4}});
    CHECK(find_deviation(g, m, Concept::NS) == DeviationWitness{1, 3, Concept::NS});
    Game tie = parse_instance("roommate 4\n1: ( 2 self ) 4\n2: 1\n3:\n4: 1\n");
    CHECK(find_deviation(tie, m, Concept::NS) == DeviationWitness{1, kAlone, Concept::NS});
}

TEST_CASE("core blocks")
{
    SUBCASE("two single players who like each other")
    {
        Game g = parse_instance("marriage 1 1\n1: 2\n2: 1\n");
        CHECK(find_pair_block(g, Matching::singletons(2), false) == PairBlockWitness{1, 2});
    }
    SUBCASE("strict core catches a weak improvement the core misses")
    {
        // men 1, 2; woman 3 indifferent between them; 4 is an unrelated woman.
        Game g = parse_instance("marriage 2 2\n1: 3\n2: 3\n3: ( 1 2 )\n4:\n");
        Matching m = Matching::from_pairs(4, {{1, 3}});
        CHECK_FALSE(find_pair_block(g, m, false));
        CHECK(find_pair_block(g, m, true) == PairBlockWitness{2, 3});
    }
    SUBCASE("individual rationality failures come first")
    {
        Game g = parse_instance("roommate 3\n1: 3\n2:\n3: 1\n");
        auto block = find_pair_block(g, Matching::from_pairs(3, {{1, 2}}), false);
        REQUIRE(block);
        CHECK(block->degenerate());
        CHECK(block->first == 1);
    }
}

TEST_CASE("find_deviation agrees with a direct restatement of the definitions")
{
    std::mt19937_64 rng(5);
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        Game g = seed % 2 ? testing::small_roommate(seed, 6, 0.4, 0.6) : testing::small_marriage(seed, 3, 3, 0.4, 0.6);
        for (int t = 0; t < 10; ++t) {
            Matching m = testing::random_matching(g.size(), rng);
            for (Concept c : {Concept::NS, Concept::IS, Concept::CNS, Concept::CIS}) {
                auto w = find_deviation(g, m, c);
                REQUIRE(w.has_value() != reference_stable(g, m, c));
                if (w) {
                    CHECK(is_valid_deviation(g, m, *w));
                    CHECK(find_deviation(g, m, c) == w);
                    Matching next = apply_deviation(m, *w);
                    PlayerId dest = w->target == kAlone ? w->mover : w->target;
                    CHECK(next.partner(w->mover) == dest);
                    CHECK(g.strictly_prefers(w->mover, next.partner(w->mover), m.partner(w->mover)));
                }
            }
        }
    }
}

TEST_CASE("is_valid_deviation rejects bogus moves")
{
    Game g = cyclic_triplet();
    Matching m = Matching::from_pairs(3, {{1, 2}});
    CHECK_FALSE(is_valid_deviation(g, m, {1, 3, Concept::NS}));  // not an improvement
    CHECK_FALSE(is_valid_deviation(g, m, {3, 1, Concept::NS}));  // 1 is not single
    CHECK_FALSE(is_valid_deviation(g, m, {3, kAlone, Concept::NS}));
    CHECK_FALSE(is_valid_deviation(g, m, {2, 3, Concept::CNS})); // 1 objects
    CHECK(is_valid_deviation(g, m, {2, 3, Concept::IS}));
}

TEST_CASE("concept names round-trip")
{
    for (Concept c : {Concept::IR, Concept::NS, Concept::IS, Concept::CNS, Concept::CIS, Concept::Core,
                      Concept::StrictCore})
        CHECK(parse_concept(name(c)) == c);
    CHECK(parse_concept("strict-core") == Concept::StrictCore);
    CHECK_FALSE(parse_concept("nash"));
    CHECK_THROWS_AS(find_deviation(cyclic_triplet(), Matching::singletons(3), Concept::Core), std::invalid_argument);
}

} // TEST_SUITE
