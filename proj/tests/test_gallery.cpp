// Checks for the built-in gallery: the published name lists, per-entry
// structure (universe sizes, family kinds, class counts), the propositional
// construction where sentence ids equal truth-table masks, the table-backed
// ex10_12 operator, and the builtin-rule lookup used by deserialization.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "revkit/errors.hpp"
#include "revkit/gallery.hpp"
#include "revkit/logic.hpp"

using namespace revkit;

TEST_CASE("the gallery publishes nine loadable and four reserved names") {
    CHECK(gallery_names() ==
          std::vector<std::string>{"L_Ex", "ex10_12", "pl2", "pl3", "pl4", "B_four",
                                   "B_mr", "B_rps", "B_nb"});
    CHECK(reserved_gallery_names() ==
          std::vector<std::string>{"PL_inf", "B_Z", "B_f1", "B_f2"});

    for (const auto& name : gallery_names()) {
        GalleryEntry entry = load_gallery(name);
        CHECK(entry.name == name);
        CHECK(!entry.description.empty());
    }
    CHECK_THROWS_AS((void)load_gallery("PL_inf"), OutOfScopeInfinite);
    CHECK_THROWS_AS((void)load_gallery("B_Z"), OutOfScopeInfinite);
    CHECK_THROWS_AS((void)load_gallery("does_not_exist"), UnknownGalleryName);
}

TEST_CASE("L_Ex: six interpretations, ten sentences, twelve classes") {
    GalleryEntry entry = load_gallery("L_Ex");
    const BaseLogic& logic = entry.logic;
    CHECK(logic.interpretation_count() == 6);
    CHECK(logic.sentence_count() == 10);
    CHECK(logic.family().kind == FamilyKind::ArbitrarySets);
    CHECK(logic.family().allow_empty);
    CHECK(logic.all_bases().size() == 1024);
    CHECK(logic.class_count() == 12);

    // The sentence pool: six singletons, three pair sentences, one wide one.
    for (int i = 0; i < 6; ++i) {
        CHECK(logic.sentence(i).name == "psi" + std::to_string(i));
        CHECK(logic.sentence(i).models == ModelSet::of(6, {i}));
    }
    CHECK(logic.models_of(base_from_names(logic, {"phi0"})) == ModelSet::of(6, {0, 1}));
    CHECK(logic.models_of(base_from_names(logic, {"phi1"})) == ModelSet::of(6, {1, 2}));
    CHECK(logic.models_of(base_from_names(logic, {"phi2"})) == ModelSet::of(6, {0, 2}));
    CHECK(logic.models_of(base_from_names(logic, {"chi_prime"})) ==
          ModelSet::of(6, {0, 1, 2, 4, 5}));

    REQUIRE(entry.op.has_value());
    CHECK(entry.op->kind() == OperatorKind::Builtin);
    CHECK(entry.op->name() == "op_ex");
    CHECK(!entry.assignment.has_value());
}

TEST_CASE("ex10_12: a seven-by-seven table over single sentences") {
    GalleryEntry entry = load_gallery("ex10_12");
    const BaseLogic& logic = entry.logic;
    CHECK(logic.interpretation_count() == 4);
    CHECK(logic.sentence_count() == 7);
    CHECK(logic.family().kind == FamilyKind::SingleSentences);
    CHECK(logic.all_bases().size() == 7);
    CHECK(logic.class_count() == 7);

    REQUIRE(entry.op.has_value());
    CHECK(entry.op->kind() == OperatorKind::Table);
    CHECK(entry.op->fallback() == TableFallback::Error);
    CHECK(entry.op->entries().size() == 49);
    // Every pair of family bases is covered; out-of-family inputs hit the
    // error fallback.
    CHECK_THROWS_AS((void)entry.op->revise(logic, BeliefBase({0, 1}), BeliefBase({2})),
                    OperatorDomainError);
}

TEST_CASE("pl_n: sentence ids equal truth-table masks with readable names") {
    GalleryEntry entry = load_gallery("pl2");
    const BaseLogic& logic = entry.logic;
    CHECK(logic.interpretation_count() == 4);
    CHECK(logic.sentence_count() == 16);
    CHECK(logic.family().kind == FamilyKind::SingleSentences);
    CHECK(!entry.op.has_value());

    for (int id = 0; id < 16; ++id)
        CHECK(logic.sentence(id).models == ModelSet(4, static_cast<std::uint64_t>(id)));
    CHECK(logic.sentence_id("bot") == 0);
    CHECK(logic.sentence_id("top") == 15);
    CHECK(logic.sentence_id("p1") == 10);   // atom 1 true at worlds 1 and 3
    CHECK(logic.sentence_id("np1") == 5);
    CHECK(logic.sentence_id("p2") == 12);   // atom 2 true at worlds 2 and 3
    CHECK(logic.sentence_id("np2") == 3);
    CHECK(logic.sentence(11).name == "f_b");  // anonymous tables use hex

    CHECK(logic.structure_report().is_disjunctive.value);
    CHECK(logic.structure_report().is_trio_expressible.value);

    CHECK(load_gallery("pl3").logic.sentence_count() == 256);
    CHECK(load_gallery("pl3").logic.interpretation_count() == 8);
}

TEST_CASE("counterexample entries carry their assignments") {
    GalleryEntry mr = load_gallery("B_mr");
    CHECK(mr.logic.family().kind == FamilyKind::FiniteSets);
    CHECK(mr.logic.all_bases().size() == 1);
    CHECK(mr.logic.class_count() == 1);
    CHECK(!mr.logic.in_family(BeliefBase()));
    REQUIRE(mr.assignment.has_value());
    CHECK(mr.assignment->keying() == Keying::Syntactic);

    GalleryEntry rps = load_gallery("B_rps");
    CHECK(rps.logic.interpretation_count() == 3);
    CHECK(rps.logic.class_count() == 1);
    REQUIRE(rps.assignment.has_value());

    GalleryEntry nb = load_gallery("B_nb");
    CHECK(nb.logic.interpretation_count() == 2);
    CHECK(nb.logic.class_count() == 2);
    REQUIRE(nb.assignment.has_value());
    CHECK(nb.assignment->keying() == Keying::Semantic);

    GalleryEntry four = load_gallery("B_four");
    CHECK(four.logic.interpretation_count() == 4);
    CHECK(four.logic.sentence_count() == 5);
    CHECK(four.logic.family().kind == FamilyKind::SingleSentences);
    CHECK(!four.logic.conjunction_entries().empty());
    REQUIRE(four.op.has_value());
    CHECK(four.op->name() == "op_four");
}

TEST_CASE("builtin rules resolve by name for deserialization") {
    Operator op_ex = gallery_builtin("op_ex");
    CHECK(op_ex.kind() == OperatorKind::Builtin);
    CHECK(op_ex.name() == "op_ex");
    Operator op_four = gallery_builtin("op_four");
    CHECK(op_four.name() == "op_four");
    CHECK_THROWS_AS((void)gallery_builtin("op_unknown"), UnknownGalleryName);
}
