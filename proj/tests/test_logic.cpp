// Checks for the logic core: model-set algebra, belief-base ordering, family
// enumeration for all four family kinds, the strict model-intersection law of
// the abstract union, semantic classes, and the structural report flags.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>

#include "revkit/errors.hpp"
#include "revkit/logic.hpp"

using namespace revkit;

namespace {

// Three interpretations; p = {a, b}, q = {b, c}, r = {c}.
BaseLogic tiny_arbitrary(bool allow_empty = true) {
    return BaseLogic({"a", "b", "c"},
                     {{"p", ModelSet::of(3, {0, 1})},
                      {"q", ModelSet::of(3, {1, 2})},
                      {"r", ModelSet::of(3, {2})}},
                     FamilySpec{FamilyKind::ArbitrarySets, allow_empty, {}});
}

}  // namespace

TEST_CASE("model sets support the usual boolean algebra") {
    ModelSet s = ModelSet::of(4, {0, 2});
    CHECK(s.count() == 2);
    CHECK(s.contains(0));
    CHECK(!s.contains(1));
    CHECK(s.members() == std::vector<int>{0, 2});
    CHECK(s.unite(ModelSet::of(4, {1})).members() == std::vector<int>{0, 1, 2});
    CHECK(s.intersect(ModelSet::of(4, {2, 3})).members() == std::vector<int>{2});
    CHECK(s.minus(ModelSet::of(4, {0})).members() == std::vector<int>{2});
    CHECK(s.complement().members() == std::vector<int>{1, 3});
    CHECK(s.subset_of(ModelSet::full(4)));
    CHECK(!ModelSet::full(4).subset_of(s));
    CHECK(ModelSet::empty(4).is_empty());
    CHECK(ModelSet::full(4).is_full());
    // The bit constructor masks anything beyond the universe.
    CHECK(ModelSet(2, 0xffu) == ModelSet::full(2));
}

TEST_CASE("belief bases are sorted, deduplicated, and ordered size-then-lex") {
    BeliefBase b({3, 1, 3, 2});
    CHECK(b.ids() == std::vector<int>{1, 2, 3});
    CHECK(b.size() == 3);
    CHECK(b.contains(2));
    CHECK(!b.contains(0));

    // Canonical order: fewer sentences first, then lexicographic.
    CHECK(BeliefBase({5}) < BeliefBase({0, 1}));
    CHECK(BeliefBase({0, 2}) < BeliefBase({1, 2}));
    CHECK(!(BeliefBase({1, 2}) < BeliefBase({1, 2})));

    // Pure lexicographic order disagrees on the first pair.
    CHECK(lex_less(BeliefBase({0, 1}), BeliefBase({5})));
    CHECK(!lex_less(BeliefBase({5}), BeliefBase({0, 1})));
}

TEST_CASE("arbitrary-set families enumerate every subset in canonical order") {
    BaseLogic logic = tiny_arbitrary();
    CHECK(logic.interpretation_count() == 3);
    CHECK(logic.sentence_count() == 3);
    REQUIRE(logic.all_bases().size() == 8);
    CHECK(logic.all_bases()[0] == BeliefBase());
    CHECK(logic.all_bases()[1] == BeliefBase({0}));
    CHECK(logic.all_bases()[3] == BeliefBase({2}));
    CHECK(logic.all_bases()[4] == BeliefBase({0, 1}));
    CHECK(logic.all_bases()[7] == BeliefBase({0, 1, 2}));

    BaseLogic no_empty = tiny_arbitrary(false);
    CHECK(no_empty.all_bases().size() == 7);
    CHECK(no_empty.all_bases()[0] == BeliefBase({0}));
}

TEST_CASE("semantic classes appear in first-use order with the first base as rep") {
    BaseLogic logic = tiny_arbitrary();
    // Base order: {}, {p}, {q}, {r}, {p,q}, {p,r}, {q,r}, {p,q,r}.
    // Models:     O,  ab,  bc,  c,   b,     0,     c,     0.
    REQUIRE(logic.class_count() == 6);
    CHECK(logic.class_models(0) == ModelSet::full(3));
    CHECK(logic.class_models(1) == ModelSet::of(3, {0, 1}));
    CHECK(logic.class_models(2) == ModelSet::of(3, {1, 2}));
    CHECK(logic.class_models(3) == ModelSet::of(3, {2}));
    CHECK(logic.class_models(4) == ModelSet::of(3, {1}));
    CHECK(logic.class_models(5) == ModelSet::empty(3));
    CHECK(logic.class_representative(4) == BeliefBase({0, 1}));
    CHECK(logic.class_representative(5) == BeliefBase({0, 2}));
    CHECK(logic.class_of(BeliefBase({1, 2})) == 3);  // {q, r} has models {c}
    CHECK(logic.class_of_models(ModelSet::of(3, {0})) == -1);
}

TEST_CASE("entailment, equivalence, and closure follow the model semantics") {
    BaseLogic logic = tiny_arbitrary();
    BeliefBase p({0}), q({1}), pq({0, 1});
    CHECK(logic.models_of(BeliefBase()) == ModelSet::full(3));
    CHECK(logic.entails(pq, p));
    CHECK(!logic.entails(p, q));
    CHECK(logic.equivalent(BeliefBase({1, 2}), BeliefBase({2})));
    // Closure collects every sentence true in all models of the base.
    CHECK(logic.consequence_closure(pq) == pq);  // r is false at b
    CHECK(logic.consequence_closure(BeliefBase({2})) == BeliefBase({1, 2}));  // q holds wherever r does
    CHECK(logic.consequence_closure(BeliefBase()) == BeliefBase());
}

TEST_CASE("the abstract union intersects models in every family") {
    SUBCASE("arbitrary sets take the literal union") {
        BaseLogic logic = tiny_arbitrary();
        BeliefBase u = logic.abstract_union(BeliefBase({0}), BeliefBase({1}));
        CHECK(u == BeliefBase({0, 1}));
        CHECK(logic.models_of(u) ==
              logic.models_of(BeliefBase({0})).intersect(logic.models_of(BeliefBase({1}))));
    }
    SUBCASE("belief sets close the union") {
        BaseLogic logic({"a", "b", "c"},
                        {{"p", ModelSet::of(3, {0, 1})},
                         {"q", ModelSet::of(3, {1, 2})},
                         {"r", ModelSet::of(3, {1, 2})}},
                        FamilySpec{FamilyKind::BeliefSets, true, {}});
        for (const auto& base : logic.all_bases())
            CHECK(base == logic.consequence_closure(base));
        BeliefBase u = logic.abstract_union(BeliefBase({0}), BeliefBase({1}));
        CHECK(u == BeliefBase({0, 1, 2}));  // q and r hold on the same models
        CHECK(logic.models_of(u) == ModelSet::of(3, {1}));
        CHECK(logic.in_family(u));
    }
    SUBCASE("single sentences use the conjunction table first") {
        BaseLogic logic({"a", "b"},
                        {{"p", ModelSet::of(2, {0, 1})},
                         {"q", ModelSet::of(2, {1})},
                         {"bottom", ModelSet::empty(2)}},
                        FamilySpec{FamilyKind::SingleSentences, false, {}},
                        {{0, 1, 1}});
        CHECK(logic.abstract_union(BeliefBase({0}), BeliefBase({1})) == BeliefBase({1}));
        CHECK(logic.abstract_union(BeliefBase({1}), BeliefBase({1})) == BeliefBase({1}));
        // No table entry for (q, bottom): the semantic fallback finds the
        // least sentence with the intersected models.
        CHECK(logic.abstract_union(BeliefBase({1}), BeliefBase({2})) == BeliefBase({2}));
    }
    SUBCASE("single sentences without any match report the pair") {
        BaseLogic logic({"a", "b"},
                        {{"p", ModelSet::of(2, {0})}, {"q", ModelSet::of(2, {1})}},
                        FamilySpec{FamilyKind::SingleSentences, false, {}});
        CHECK_THROWS_AS((void)logic.abstract_union(BeliefBase({0}), BeliefBase({1})),
                        UnsupportedConjunction);
    }
    SUBCASE("finite-set families look the union up among the listed bases") {
        FamilySpec spec{FamilyKind::FiniteSets, false,
                        {BeliefBase({0}), BeliefBase({1}), BeliefBase({0, 1})}};
        BaseLogic logic({"a", "b", "c"},
                        {{"p", ModelSet::of(3, {0, 1})}, {"q", ModelSet::of(3, {1, 2})}},
                        spec);
        CHECK(logic.abstract_union(BeliefBase({0}), BeliefBase({1})) == BeliefBase({0, 1}));

        FamilySpec open_spec{FamilyKind::FiniteSets, false,
                             {BeliefBase({0}), BeliefBase({1})}};
        BaseLogic open_logic({"a", "b", "c"},
                             {{"p", ModelSet::of(3, {0, 1})}, {"q", ModelSet::of(3, {1, 2})}},
                             open_spec);
        CHECK_THROWS_AS((void)open_logic.abstract_union(BeliefBase({0}), BeliefBase({1})),
                        FamilyNotClosed);
    }
}

TEST_CASE("construction validates names and enumeration size") {
    CHECK_THROWS_AS(BaseLogic({"a", "a"}, {{"p", ModelSet::full(2)}},
                              FamilySpec{FamilyKind::ArbitrarySets, true, {}}),
                    LogicFormatError);
    CHECK_THROWS_AS(BaseLogic({"a"}, {{"p", ModelSet::full(1)}, {"p", ModelSet::empty(1)}},
                              FamilySpec{FamilyKind::ArbitrarySets, true, {}}),
                    LogicFormatError);

    // Thirteen sentences exceed the default powerset cap of twelve.
    std::vector<Sentence> many;
    for (int i = 0; i < 13; ++i)
        many.push_back({"s" + std::to_string(i), ModelSet::of(1, {0})});
    CHECK_THROWS_AS(
        BaseLogic({"a"}, many, FamilySpec{FamilyKind::ArbitrarySets, true, {}}),
        EnumerationTooLarge);

    // The environment variable raises the cap for this construction.
    setenv("REVKIT_ENUM_CAP", "13", 1);
    CHECK(BaseLogic::enumeration_cap() == 13);
    CHECK_NOTHROW(BaseLogic({"a"}, many, FamilySpec{FamilyKind::ArbitrarySets, true, {}}));
    unsetenv("REVKIT_ENUM_CAP");
    CHECK(BaseLogic::enumeration_cap() == 12);

    // Single-sentence families ignore the cap: no powerset is built.
    std::vector<Sentence> wide;
    for (int i = 0; i < 20; ++i)
        wide.push_back({"s" + std::to_string(i), ModelSet::of(2, {i % 2})});
    BaseLogic singles({"a", "b"}, wide, FamilySpec{FamilyKind::SingleSentences, false, {}});
    CHECK(singles.all_bases().size() == 20);
}

TEST_CASE("the structural report captures conjunction, disjunction, and universal bases") {
    BaseLogic logic = tiny_arbitrary();
    const StructureReport& report = logic.structure_report();
    CHECK(report.supports_conjunction.value);
    CHECK(report.has_universal_base.value);
    // Expressible sets: O, {a,b}, {b,c}, {c}, {b}, {}. Every pairwise union
    // lands back in that list, so this small logic happens to be disjunctive.
    CHECK(report.is_disjunctive.value);
    // The only three-interpretation subset is the whole universe.
    CHECK(report.is_trio_expressible.value);

    // p = {a}, q = {c}: the union {a, c} has no expressing base.
    BaseLogic gap({"a", "b", "c"},
                  {{"p", ModelSet::of(3, {0})}, {"q", ModelSet::of(3, {2})}},
                  FamilySpec{FamilyKind::ArbitrarySets, true, {}});
    CHECK(!gap.structure_report().is_disjunctive.value);

    // One sentence over four worlds: no three-element subset is expressible.
    BaseLogic sparse({"a", "b", "c", "d"}, {{"p", ModelSet::of(4, {0, 1})}},
                     FamilySpec{FamilyKind::ArbitrarySets, false, {}});
    CHECK(!sparse.structure_report().is_trio_expressible.value);

    BaseLogic no_universe({"a", "b"},
                          {{"p", ModelSet::of(2, {0})}, {"q", ModelSet::of(2, {1})}},
                          FamilySpec{FamilyKind::SingleSentences, false, {}});
    CHECK(!no_universe.structure_report().has_universal_base.value);
}

TEST_CASE("bases are resolved by sentence name") {
    BaseLogic logic = tiny_arbitrary();
    CHECK(base_from_names(logic, {"q", "p"}) == BeliefBase({0, 1}));
    CHECK(base_from_names(logic, {}) == BeliefBase());
    CHECK_THROWS_AS((void)base_from_names(logic, {"nope"}), LogicFormatError);
}

TEST_CASE("membership and class lookups reject bases outside the family") {
    FamilySpec spec{FamilyKind::FiniteSets, false, {BeliefBase({0})}};
    BaseLogic logic({"a", "b"},
                    {{"p", ModelSet::of(2, {0})}, {"q", ModelSet::of(2, {1})}}, spec);
    CHECK(logic.in_family(BeliefBase({0})));
    CHECK(!logic.in_family(BeliefBase({1})));
    CHECK_THROWS_AS((void)logic.class_of(BeliefBase({1})), RevkitError);
}
