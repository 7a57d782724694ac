// Checks for the critical-loop machinery: the frozen loop found on L_Ex, the
// operator synthesized from it (agreeing with op_ex at the loop's base and
// trivial elsewhere), every rejection branch of the loop validator, strict
// circles as a non-transitivity diagnostic, and the loop-free gallery logics.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "revkit/critical_loop.hpp"
#include "revkit/errors.hpp"
#include "revkit/gallery.hpp"
#include "revkit/logic.hpp"
#include "revkit/op.hpp"

using namespace revkit;

namespace {

// Universe {a, b, c, d}: three singleton nodes, three pair edges, and a
// universal sentence whose class covers all nodes but leaves no certificate
// (nothing expresses a consistent subset of {d}).
BaseLogic certificate_free_logic() {
    return BaseLogic({"a", "b", "c", "d"},
                     {{"n0", ModelSet::of(4, {0})},
                      {"n1", ModelSet::of(4, {1})},
                      {"n2", ModelSet::of(4, {2})},
                      {"e0", ModelSet::of(4, {0, 1})},
                      {"e1", ModelSet::of(4, {1, 2})},
                      {"e2", ModelSet::of(4, {0, 2})},
                      {"all", ModelSet::full(4)}},
                     FamilySpec{FamilyKind::ArbitrarySets, true, {}});
}

CriticalLoop triangle_loop(const BeliefBase& k) {
    CriticalLoop loop;
    loop.k = k;
    loop.node_bases = {BeliefBase({0}), BeliefBase({1}), BeliefBase({2})};
    loop.edge_bases = {BeliefBase({3}), BeliefBase({4}), BeliefBase({5})};
    return loop;
}

}  // namespace

TEST_CASE("detection on L_Ex finds the canonical three-loop") {
    GalleryEntry entry = load_gallery("L_Ex");
    std::optional<CriticalLoop> loop = detect_critical_loop(entry.logic);
    REQUIRE(loop.has_value());
    CHECK(loop->length() == 3);
    CHECK(loop->node_classes == std::vector<int>{1, 2, 3});
    CHECK(loop->edge_classes == std::vector<int>{7, 8, 9});
    CHECK(loop->k_class == 4);
    CHECK(loop->k == base_from_names(entry.logic, {"psi3"}));
    CHECK(loop->node_bases == std::vector<BeliefBase>{BeliefBase({0}), BeliefBase({1}),
                                                      BeliefBase({2})});
    CHECK(loop->edge_bases == std::vector<BeliefBase>{BeliefBase({6}), BeliefBase({7}),
                                                      BeliefBase({8})});
    // Certificates: the universe class falls back to psi3's class, the
    // chi_prime class to psi4's.
    REQUIRE(loop->certificates.size() == 2);
    CHECK(loop->certificates.at(0) == 4);
    CHECK(loop->certificates.at(10) == 5);
    CHECK_NOTHROW(validate_loop(entry.logic, *loop));

    // A length bound below three leaves nothing to search.
    CHECK(!detect_critical_loop(entry.logic, 2).has_value());
    // The bound equal to the loop length still finds it.
    CHECK(detect_critical_loop(entry.logic, 3).has_value());
}

TEST_CASE("the loop-derived operator reproduces op_ex at the loop base") {
    GalleryEntry entry = load_gallery("L_Ex");
    REQUIRE(entry.op.has_value());
    const BaseLogic& logic = entry.logic;
    std::optional<CriticalLoop> loop = detect_critical_loop(logic);
    REQUIRE(loop.has_value());

    Operator synthesized = operator_from_loop(logic, *loop);
    CHECK(synthesized.kind() == OperatorKind::FromLoop);
    REQUIRE(synthesized.source_loop() != nullptr);
    CHECK(synthesized.source_loop()->k_class == 4);

    const BeliefBase k = loop->k;
    for (int c = 0; c < logic.class_count(); ++c) {
        const BeliefBase gamma = logic.class_representative(c);
        CHECK(logic.models_of(synthesized.revise(logic, k, gamma)) ==
              logic.models_of(entry.op->revise(logic, k, gamma)));
    }

    // Spot values: edges answer with the node they strictly prefer, the
    // certificate base answers chi_prime, consistency keeps the prior.
    auto revised_models = [&](const char* gamma) {
        return logic.models_of(synthesized.revise(logic, k, base_from_names(logic, {gamma})));
    };
    CHECK(revised_models("phi0") == ModelSet::of(6, {0}));
    CHECK(revised_models("phi1") == ModelSet::of(6, {1}));
    CHECK(revised_models("phi2") == ModelSet::of(6, {2}));
    CHECK(revised_models("chi_prime") == ModelSet::of(6, {4}));
    CHECK(logic.models_of(synthesized.revise(logic, k, BeliefBase())) ==
          ModelSet::of(6, {3}));

    // Away from the loop base the rule is trivial.
    BeliefBase other = base_from_names(logic, {"psi4"});
    BeliefBase gamma = base_from_names(logic, {"phi0"});
    CHECK(synthesized.revise(logic, other, gamma) == trivial_revision(logic, other, gamma));

    // The synthesized rule passes the six core postulates but, by design,
    // cannot be captured by any total preorder.
    PostulateReport report = postulate_report(logic, synthesized);
    CHECK(report.g4_verified);
    CHECK(report.core_pass());
}

TEST_CASE("the validator rejects each malformed loop with its own message") {
    GalleryEntry entry = load_gallery("L_Ex");
    const BaseLogic& logic = entry.logic;
    std::optional<CriticalLoop> good = detect_critical_loop(logic);
    REQUIRE(good.has_value());

    auto expect_invalid = [&](const CriticalLoop& loop, const std::string& needle) {
        try {
            validate_loop(logic, loop);
            FAIL_CHECK("expected InvalidLoop containing '" << needle << "'");
        } catch (const InvalidLoop& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };

    CriticalLoop short_loop = *good;
    short_loop.edge_bases.pop_back();
    short_loop.node_bases.pop_back();
    expect_invalid(short_loop, "at least three edges");

    CriticalLoop lopsided = *good;
    lopsided.node_bases.push_back(BeliefBase({5}));
    expect_invalid(lopsided, "counts differ");

    CriticalLoop bad_k = *good;
    bad_k.k = BeliefBase({6});  // phi0 overlaps the edges
    expect_invalid(bad_k, "k shares models");

    CriticalLoop dead_node = *good;
    dead_node.node_bases[0] = BeliefBase({0, 1});  // psi0 and psi1: inconsistent
    expect_invalid(dead_node, "node base is inconsistent");

    CriticalLoop uncovered = *good;
    uncovered.edge_bases[0] = BeliefBase({0});  // psi0 cannot cover psi0 and psi1
    expect_invalid(uncovered, "does not cover");

    CriticalLoop overlapping = *good;
    overlapping.node_bases[0] = BeliefBase({1});  // duplicate of node 1
    expect_invalid(overlapping, "share models");
}

TEST_CASE("a covering class without certificates invalidates the triangle") {
    BaseLogic logic = certificate_free_logic();
    // The only base disjoint from every edge is inconsistent (e.g. {n0, n1}).
    CriticalLoop loop = triangle_loop(BeliefBase({0, 1}));
    try {
        validate_loop(logic, loop);
        FAIL_CHECK("expected InvalidLoop");
    } catch (const InvalidLoop& e) {
        CHECK(std::string(e.what()).find("no certificate") != std::string::npos);
    }
    // Detection agrees: no loop exists anywhere in this logic.
    CHECK(!detect_critical_loop(logic).has_value());
    CHECK(!logic.structure_report().is_disjunctive.value);
}

TEST_CASE("strict circles reveal the forced three-cycle on L_Ex") {
    GalleryEntry entry = load_gallery("L_Ex");
    REQUIRE(entry.op.has_value());
    BeliefBase k = base_from_names(entry.logic, {"psi3"});
    std::vector<StrictCircle> circles = strict_circles(entry.logic, *entry.op, k);
    REQUIRE(circles.size() == 1);
    CHECK(circles[0].k == k);
    CHECK(circles[0].interpretations == std::vector<int>{0, 1, 2});

    // The gate: operators failing the prerequisites are rejected.
    GalleryEntry four = load_gallery("B_four");
    REQUIRE(four.op.has_value());
    CHECK_THROWS_AS((void)strict_circles(four.logic, *four.op,
                                         base_from_names(four.logic, {"geq0"})),
                    PostulatePrerequisiteFailed);
}

TEST_CASE("disjunctive and chain-like logics are loop-free") {
    CHECK(!detect_critical_loop(load_gallery("pl2").logic).has_value());
    CHECK(!detect_critical_loop(load_gallery("pl3").logic).has_value());
    CHECK(!detect_critical_loop(load_gallery("B_four").logic).has_value());
    CHECK(!detect_critical_loop(load_gallery("ex10_12").logic).has_value());
}
