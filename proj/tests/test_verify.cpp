// Checks for the verification harness: seeded generator determinism and
// bounds, the representation report on the three reference operators (clause
// applicability included), the preorder-enforcing scan against the trio
// expressibility flag, and the six property sweeps with thread invariance.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "revkit/errors.hpp"
#include "revkit/gallery.hpp"
#include "revkit/logic.hpp"
#include "revkit/relation.hpp"
#include "revkit/verify.hpp"

using namespace revkit;

TEST_CASE("generated logics are reproducible and respect the profile bounds") {
    GeneratorProfile profile = micro_profile();
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        BaseLogic a = generate_logic(seed, profile);
        BaseLogic b = generate_logic(seed, profile);
        CHECK(a.interpretation_count() == b.interpretation_count());
        CHECK(a.sentence_count() == b.sentence_count());
        for (int s = 0; s < a.sentence_count(); ++s) {
            CHECK(a.sentence(s).name == b.sentence(s).name);
            CHECK(a.sentence(s).models == b.sentence(s).models);
        }
        CHECK(a.family().kind == b.family().kind);

        CHECK(a.interpretation_count() >= profile.min_interpretations);
        CHECK(a.interpretation_count() <= profile.max_interpretations);
        CHECK(a.sentence_count() >= profile.min_sentences);
        CHECK(a.sentence_count() <= profile.max_sentences);
        CHECK((a.family().kind == FamilyKind::ArbitrarySets ||
               a.family().kind == FamilyKind::BeliefSets));
    }
    // Different seeds eventually produce different logics.
    CHECK((generate_logic(1).sentence_count() != generate_logic(2).sentence_count() ||
           generate_logic(1).interpretation_count() !=
               generate_logic(2).interpretation_count() ||
           generate_logic(1).sentence(0).models != generate_logic(2).sentence(0).models));
}

TEST_CASE("profiles resolve by name and reject unknown ones") {
    CHECK(profile_by_name("micro").name == "micro");
    CHECK(micro_profile().max_interpretations <= 7);
    CHECK_THROWS_AS((void)profile_by_name("galactic"), RevkitError);
}

TEST_CASE("generated assignments deliver what their names promise") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        BaseLogic logic = generate_logic(seed);
        Assignment faithful = generate_faithful_assignment(logic, seed + 100);
        FaithfulnessReport report = faithfulness_report(logic, faithful);
        CHECK(report.keying == Keying::Semantic);
        CHECK(report.faithful);
        CHECK(report.total_relations);
        CHECK(report.min_friendly);
        CHECK(report.min_expressible);

        Assignment quasi = generate_quasi_faithful_assignment(logic, seed + 200);
        FaithfulnessReport quasi_report = faithfulness_report(logic, quasi);
        CHECK(quasi_report.keying == Keying::Syntactic);
        CHECK(quasi_report.f1);
        CHECK(quasi_report.f2);
        CHECK(quasi_report.quasi_faithful);
    }
}

TEST_CASE("representation verdicts for the three reference operators") {
    SUBCASE("ex10_12: everything applies and everything passes") {
        GalleryEntry entry = load_gallery("ex10_12");
        RepresentationReport report = check_representation(entry.logic, *entry.op);
        CHECK(report.postulates.core_pass());
        CHECK(report.loop_free);
        CHECK(report.faithful_clause.applicable);
        CHECK(report.faithful_clause.pass);
        CHECK(report.quasi_faithful_clause.applicable);
        CHECK(report.quasi_faithful_clause.pass);
        CHECK(report.preorder_clause.applicable);
        CHECK(report.preorder_clause.pass);
    }
    SUBCASE("B_four: G5/G6 fail, so only the postulate table is meaningful") {
        GalleryEntry entry = load_gallery("B_four");
        RepresentationReport report = check_representation(entry.logic, *entry.op);
        CHECK(!report.postulates.core_pass());
        CHECK(report.loop_free);
        CHECK(!report.faithful_clause.applicable);
        CHECK(!report.quasi_faithful_clause.applicable);
        CHECK(!report.preorder_clause.applicable);
    }
    SUBCASE("L_Ex: faithful clauses pass, the preorder clause cannot apply") {
        GalleryEntry entry = load_gallery("L_Ex");
        RepresentationReport report = check_representation(entry.logic, *entry.op);
        CHECK(report.postulates.core_pass());
        CHECK(!report.loop_free);
        CHECK(report.faithful_clause.applicable);
        CHECK(report.faithful_clause.pass);
        CHECK(report.quasi_faithful_clause.applicable);
        CHECK(report.quasi_faithful_clause.pass);
        CHECK(!report.preorder_clause.applicable);
    }
}

TEST_CASE("the enforcing scan matches trio expressibility") {
    SUBCASE("a full propositional language enforces preorders") {
        GalleryEntry entry = load_gallery("pl2");
        PreorderEnforcingReport report = check_preorder_enforcing(entry.logic);
        CHECK(report.exhaustive);
        CHECK(report.relations_checked == 65536);  // 2^(4*4)
        CHECK(report.trio_expressible);
        CHECK(report.enforcing);
        CHECK(!report.witness.has_value());
    }
    SUBCASE("three pair sentences leave a non-transitive min-friendly order") {
        BaseLogic logic({"a", "b", "c"},
                        {{"ab", ModelSet::of(3, {0, 1})},
                         {"bc", ModelSet::of(3, {1, 2})},
                         {"ac", ModelSet::of(3, {0, 2})}},
                        FamilySpec{FamilyKind::SingleSentences, false, {}});
        CHECK(!logic.structure_report().is_trio_expressible.value);
        PreorderEnforcingReport report = check_preorder_enforcing(logic);
        CHECK(report.exhaustive);
        // The scan stops at the first witness, partway through the 2^(3*3) grid.
        CHECK(report.relations_checked > 0);
        CHECK(report.relations_checked <= 512);
        CHECK(!report.trio_expressible);
        CHECK(!report.enforcing);
        REQUIRE(report.witness.has_value());
        RelationReport props = property_report(logic, *report.witness);
        CHECK(props.total);
        CHECK(props.min_friendly);
        CHECK(!props.transitive);
    }
}

TEST_CASE("the six property sweeps pass on seeded micro cases") {
    for (char property : {'a', 'b', 'c', 'd', 'e', 'f'}) {
        SweepReport report = run_sweep(property, 25, 7);
        CHECK(report.property == property);
        CHECK(!report.description.empty());
        CHECK(report.cases == 25);
        CHECK(report.applicable > 0);
        for (const auto& failure : report.failures)
            MESSAGE("property ", property, " case ", failure.case_index, ": ",
                    failure.detail);
        CHECK(report.pass());
    }
}

TEST_CASE("sweeps aggregate identically across thread counts") {
    SweepReport one = run_sweep('b', 30, 11, micro_profile(), 1);
    SweepReport four = run_sweep('b', 30, 11, micro_profile(), 4);
    CHECK(one.cases == four.cases);
    CHECK(one.applicable == four.applicable);
    CHECK(one.failures.size() == four.failures.size());
    CHECK(one.pass());
    CHECK(four.pass());
}

TEST_CASE("unknown sweep properties are rejected") {
    CHECK_THROWS_AS((void)run_sweep('z', 1, 1), RevkitError);
}
