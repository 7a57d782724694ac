// Checks for preference relations: the universally-quantified minimum, the
// transitive closure, per-class property reports with first-found witnesses,
// minimum expressibility, and the weak-order enumeration (counts follow the
// ordered-Bell numbers and the first order emitted is the all-ties relation).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "revkit/errors.hpp"
#include "revkit/logic.hpp"
#include "revkit/relation.hpp"

using namespace revkit;

namespace {

PreferenceRelation chain3() {
    // 0 < 1 < 2 as a total preorder.
    PreferenceRelation rel(3);
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) rel.set(i, j);
    return rel;
}

}  // namespace

TEST_CASE("relations expose pairs, comparability, and strictness") {
    PreferenceRelation rel = PreferenceRelation::from_pairs(2, {{1, 0}, {0, 0}, {1, 1}});
    CHECK(rel.size() == 2);
    CHECK(rel.leq(1, 0));
    CHECK(!rel.leq(0, 1));
    CHECK(rel.strictly_less(1, 0));
    CHECK(!rel.strictly_less(0, 0));
    CHECK(rel.pairs() == std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {1, 1}});
    CHECK(rel.pair_count() == 3);
    CHECK(rel.is_reflexive());
    CHECK(rel.is_total());
    CHECK(rel.is_transitive());

    rel.set(1, 0, false);
    CHECK(!rel.is_total());  // 0 and 1 are now incomparable
    CHECK(rel.subset_of(PreferenceRelation::from_pairs(2, {{0, 0}, {1, 0}, {1, 1}})));
    CHECK(!PreferenceRelation::from_pairs(2, {{0, 1}}).subset_of(rel));
}

TEST_CASE("minimum keeps exactly the candidates that relate to every candidate") {
    PreferenceRelation rel = chain3();
    CHECK(min_models(ModelSet::full(3), rel) == ModelSet::of(3, {0}));
    CHECK(min_models(ModelSet::of(3, {1, 2}), rel) == ModelSet::of(3, {1}));
    CHECK(min_models(ModelSet::empty(3), rel).is_empty());

    // A tie keeps both members.
    PreferenceRelation tie(2);
    tie.set(0, 0); tie.set(1, 1); tie.set(0, 1); tie.set(1, 0);
    CHECK(min_models(ModelSet::full(2), tie) == ModelSet::full(2));

    // A strict cycle without reflexive loops has an empty minimum: no element
    // relates to itself, so none relates to *every* candidate.
    PreferenceRelation cycle(3);
    cycle.set(0, 1); cycle.set(1, 2); cycle.set(2, 0);
    CHECK(min_models(ModelSet::full(3), cycle).is_empty());
}

TEST_CASE("transitive closure adds exactly the reachable pairs") {
    PreferenceRelation rel(4);
    rel.set(0, 1); rel.set(1, 2); rel.set(3, 3);
    PreferenceRelation closed = transitive_closure(rel);
    CHECK(closed.leq(0, 2));
    CHECK(closed.leq(0, 1));
    CHECK(!closed.leq(2, 0));
    CHECK(!closed.leq(0, 3));
    CHECK(rel.subset_of(closed));
    CHECK(transitive_closure(closed) == closed);
}

TEST_CASE("weak-order enumeration counts match the ordered Bell numbers") {
    CHECK(count_weak_orders(1) == 1);
    CHECK(count_weak_orders(2) == 3);
    CHECK(count_weak_orders(3) == 13);
    CHECK(count_weak_orders(4) == 75);
    CHECK(count_weak_orders(5) == 541);
    CHECK(count_weak_orders(6) == 4683);
    CHECK(count_weak_orders(7) == 47293);

    int seen = 0;
    for_each_weak_order(3, [&](const PreferenceRelation& rel) {
        ++seen;
        CHECK(rel.is_total());
        CHECK(rel.is_transitive());
        if (seen == 1) {
            // The all-zero level map comes first: everything tied.
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) CHECK(rel.leq(i, j));
        }
        return true;
    });
    CHECK(seen == 13);

    // Early exit stops the enumeration.
    int visits = 0;
    for_each_weak_order(4, [&](const PreferenceRelation&) { return ++visits < 5; });
    CHECK(visits == 5);
}

TEST_CASE("property reports quantify over semantic classes with witnesses") {
    // Universe {a, b, c}; p = {a, b}, q = {b, c}, r = {c}.
    BaseLogic logic({"a", "b", "c"},
                    {{"p", ModelSet::of(3, {0, 1})},
                     {"q", ModelSet::of(3, {1, 2})},
                     {"r", ModelSet::of(3, {2})}},
                    FamilySpec{FamilyKind::ArbitrarySets, true, {}});

    SUBCASE("a clean chain satisfies everything") {
        // c < b < a: every minimum ({c}, {b}, or the class itself) has a base.
        PreferenceRelation rel(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j <= i; ++j) rel.set(i, j);
        RelationReport report = property_report(logic, rel);
        CHECK(report.total);
        CHECK(report.reflexive);
        CHECK(report.transitive);
        CHECK(report.min_complete);
        CHECK(report.min_retractive);
        CHECK(report.min_friendly);
        CHECK(report.min_expressible);
        CHECK(report.expressibility_witnesses.size() ==
              static_cast<std::size_t>(logic.class_count()));
    }

    SUBCASE("an irreflexive point empties a minimum and breaks completeness") {
        PreferenceRelation rel = chain3();
        rel.set(2, 2, false);  // class of r = {c}: its only candidate drops out
        RelationReport report = property_report(logic, rel);
        CHECK(!report.min_complete);
        REQUIRE(report.min_complete_witness.has_value());
        CHECK(logic.class_models(report.min_complete_witness->class_id) ==
              ModelSet::of(3, {2}));
    }

    SUBCASE("an inexpressible minimum is reported with the class and the set") {
        // p = {a}, q = {c}: min over the whole universe under a<b<c is {a},
        // expressible; flip the chain so min is {a, c}... not constructible
        // over one class, so use ties instead: a ~ c < b over class of {}.
        BaseLogic gap({"a", "b", "c"},
                      {{"p", ModelSet::of(3, {0})}, {"q", ModelSet::of(3, {2})}},
                      FamilySpec{FamilyKind::ArbitrarySets, true, {}});
        PreferenceRelation rel(3);
        for (int i = 0; i < 3; ++i) rel.set(i, i);
        rel.set(0, 2); rel.set(2, 0);        // a ~ c
        rel.set(0, 1); rel.set(2, 1);        // both below b
        RelationReport report = property_report(gap, rel);
        CHECK(!report.min_expressible);
        REQUIRE(report.min_inexpressible.has_value());
        CHECK(report.min_inexpressible->second == ModelSet::of(3, {0, 2}));
    }

    SUBCASE("retractivity fails when a comparable point is left out of a minimum") {
        // b ~ a in the class of p = {a, b}, but over the full universe only a
        // survives while b does not: pick a relation where b <= a holds yet b
        // is excluded from min of a set containing both. Use: a<=a, b<=b,
        // c<=c, b<=a, a<=b, a<=c, b<=c -- min(O) = {a, b}; then remove b<=c so
        // min(O) = {a} while b <= a keeps b comparable-to-minimal.
        PreferenceRelation rel(3);
        for (int i = 0; i < 3; ++i) rel.set(i, i);
        rel.set(0, 1); rel.set(1, 0); rel.set(0, 2);
        RelationReport report = property_report(logic, rel);
        CHECK(!report.min_retractive);
        REQUIRE(report.min_retractive_witness.has_value());
        // b relates to the minimal a but is not itself minimal.
        CHECK(report.min_retractive_witness->omega1 == 1);
        CHECK(report.min_retractive_witness->omega2 == 0);
    }
}

TEST_CASE("expressibility witnesses pick the canonical base or throw") {
    BaseLogic logic({"a", "b", "c"},
                    {{"p", ModelSet::of(3, {0, 1})},
                     {"q", ModelSet::of(3, {1, 2})},
                     {"r", ModelSet::of(3, {2})}},
                    FamilySpec{FamilyKind::ArbitrarySets, true, {}});
    // {b} is expressed maximally by {p, q}: every sentence true on all of {b}.
    CHECK(min_expressibility_witness(logic, ModelSet::of(3, {1})) == BeliefBase({0, 1}));
    // The whole universe is the empty base.
    CHECK(min_expressibility_witness(logic, ModelSet::full(3)) == BeliefBase());
    CHECK_THROWS_AS((void)min_expressibility_witness(logic, ModelSet::of(3, {0})),
                    MinSetInexpressible);
}
