// The gallery instances are spelled out value by value; every model set and
// table row here is asserted by the regression tests, so any edit that
// changes semantics will be caught.

#include "revkit/gallery.hpp"

#include <cstdio>

#include "revkit/errors.hpp"

namespace revkit {

namespace {

// --- L_Ex ------------------------------------------------------------------
// Six interpretations; singleton sentences psi0..psi5, the three two-element
// sentences phi0..phi2 over {w0, w1, w2}, and chi_prime missing only w3.
// Bases are arbitrary sentence sets (union is literal set union).

BaseLogic make_l_ex() {
    const int n = 6;
    std::vector<std::string> interps;
    for (int i = 0; i < n; ++i) interps.push_back("w" + std::to_string(i));

    std::vector<Sentence> sentences;
    for (int i = 0; i < n; ++i)
        sentences.push_back({"psi" + std::to_string(i), ModelSet::of(n, {i})});
    sentences.push_back({"phi0", ModelSet::of(n, {0, 1})});
    sentences.push_back({"phi1", ModelSet::of(n, {1, 2})});
    sentences.push_back({"phi2", ModelSet::of(n, {0, 2})});
    sentences.push_back({"chi_prime", ModelSet::of(n, {0, 1, 2, 4, 5})});

    FamilySpec family;
    family.kind = FamilyKind::ArbitrarySets;
    family.allow_empty = true;
    return BaseLogic(std::move(interps), std::move(sentences), family);
}

// Fixed-point revision rule around the base {psi3}: keep it when consistent
// with the input, otherwise fall through a fixed cascade of single-model
// escapes; other belief bases get the trivial rule.
BeliefBase op_ex_fn(const BaseLogic& logic, const BeliefBase& k, const BeliefBase& gamma) {
    const BeliefBase anchor = base_from_names(logic, {"psi3"});
    if (!logic.equivalent(k, anchor)) return trivial_revision(logic, k, gamma);

    const ModelSet gm = logic.models_of(gamma);
    auto meets = [&](const char* name) {
        return !logic.models_of(base_from_names(logic, {name})).intersect(gm).is_empty();
    };
    auto join = [&](const char* name) {
        return logic.abstract_union(gamma, base_from_names(logic, {name}));
    };

    if (!logic.models_of(anchor).intersect(gm).is_empty())
        return logic.abstract_union(anchor, gamma);
    if (meets("psi4")) return join("psi4");
    if (meets("psi0") && !meets("psi2")) return join("psi0");
    if (meets("psi1") && !meets("psi0")) return join("psi1");
    if (meets("psi2") && !meets("psi1")) return join("psi2");
    return gamma;
}

// --- ex10_12 ---------------------------------------------------------------
// Four interpretations, single-sentence bases, an explicit conjunction table
// and a 7x7 operator table.

BaseLogic make_ex10_12() {
    const int n = 4;
    std::vector<std::string> interps = {"w1", "w2", "w3", "w4"};
    std::vector<Sentence> sentences = {
        {"bot", ModelSet::empty(n)},          // 0
        {"phi", ModelSet::of(n, {0, 1, 3})},  // 1
        {"psi", ModelSet::of(n, {0, 2})},     // 2
        {"gamma1", ModelSet::of(n, {0})},     // 3
        {"gamma2", ModelSet::of(n, {1})},     // 4
        {"gamma3", ModelSet::of(n, {2})},     // 5
        {"gamma4", ModelSet::of(n, {3})},     // 6
    };

    // All 28 unordered sentence pairs; the result's models are always the
    // intersection of the operands' models.
    std::vector<ConjunctionEntry> conjunction;
    for (int i = 0; i < 7; ++i) conjunction.push_back({i, i, i});
    for (int other = 1; other < 7; ++other) conjunction.push_back({0, other, 0});
    conjunction.push_back({1, 2, 3}); // phi, psi -> gamma1
    conjunction.push_back({1, 3, 3}); // phi, gamma1 -> gamma1
    conjunction.push_back({1, 4, 4}); // phi, gamma2 -> gamma2
    conjunction.push_back({1, 5, 0}); // phi, gamma3 -> bot
    conjunction.push_back({1, 6, 6}); // phi, gamma4 -> gamma4
    conjunction.push_back({2, 3, 3}); // psi, gamma1 -> gamma1
    conjunction.push_back({2, 4, 0}); // psi, gamma2 -> bot
    conjunction.push_back({2, 5, 5}); // psi, gamma3 -> gamma3
    conjunction.push_back({2, 6, 0}); // psi, gamma4 -> bot
    for (int i = 3; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) conjunction.push_back({i, j, 0});

    FamilySpec family;
    family.kind = FamilyKind::SingleSentences;
    family.allow_empty = false;
    return BaseLogic(std::move(interps), std::move(sentences), family, std::move(conjunction));
}

Operator make_ex10_12_op() {
    // Row K, column Gamma, both over [bot, phi, psi, gamma1..gamma4];
    // cell = the single sentence of the result base.
    static constexpr int table[7][7] = {
        // bot phi psi g1 g2 g3 g4            K:
        {0, 1, 2, 3, 4, 5, 6},  // bot
        {0, 1, 3, 3, 4, 5, 6},  // phi
        {0, 3, 2, 3, 4, 5, 6},  // psi
        {0, 3, 3, 3, 4, 5, 6},  // gamma1
        {0, 4, 2, 3, 4, 5, 6},  // gamma2
        {0, 1, 5, 3, 4, 5, 6},  // gamma3
        {0, 6, 5, 3, 4, 5, 6},  // gamma4
    };
    std::vector<TableEntry> entries;
    for (int k = 0; k < 7; ++k)
        for (int g = 0; g < 7; ++g)
            entries.push_back({BeliefBase({k}), BeliefBase({g}), BeliefBase({table[k][g]})});
    return Operator::table(std::move(entries), TableFallback::Error);
}

// --- B_four ----------------------------------------------------------------
// Numeric thresholds: interpretation i satisfies geq_k exactly when i >= k.

BaseLogic make_b_four() {
    const int n = 4;
    std::vector<std::string> interps = {"0", "1", "2", "3"};
    std::vector<Sentence> sentences;
    for (int k = 0; k <= 4; ++k) {
        ModelSet models = ModelSet::empty(n);
        for (int i = k; i < n; ++i) models.insert(i);
        sentences.push_back({"geq" + std::to_string(k), models});
    }
    std::vector<ConjunctionEntry> conjunction;
    for (int a = 0; a <= 4; ++a)
        for (int b = a; b <= 4; ++b) conjunction.push_back({a, b, std::max(a, b)});

    FamilySpec family;
    family.kind = FamilyKind::SingleSentences;
    family.allow_empty = false;
    return BaseLogic(std::move(interps), std::move(sentences), family, std::move(conjunction));
}

// Combine when consistent; a revision by the second-lowest threshold escapes
// to the top interpretation; everything else falls back to the input.
BeliefBase op_four_fn(const BaseLogic& logic, const BeliefBase& k, const BeliefBase& gamma) {
    const BeliefBase joined = logic.abstract_union(k, gamma);
    if (logic.consistent(joined)) return joined;
    if (logic.equivalent(gamma, base_from_names(logic, {"geq1"})))
        return base_from_names(logic, {"geq3"});
    return gamma;
}

// --- counterexample logics --------------------------------------------------

BaseLogic make_b_mr() {
    const int n = 4;
    std::vector<std::string> interps;
    for (int i = 0; i < n; ++i) interps.push_back("w" + std::to_string(i));
    std::vector<Sentence> sentences = {{"top", ModelSet::full(n)}};
    FamilySpec family;
    family.kind = FamilyKind::FiniteSets;
    family.allow_empty = false;
    family.listed_bases = {BeliefBase({0})};
    return BaseLogic(std::move(interps), std::move(sentences), family);
}

BaseLogic make_b_rps() {
    std::vector<std::string> interps = {"rock", "paper", "scissors"};
    std::vector<Sentence> sentences = {{"all_three", ModelSet::full(3)}};
    FamilySpec family;
    family.kind = FamilyKind::ArbitrarySets;
    family.allow_empty = true;
    return BaseLogic(std::move(interps), std::move(sentences), family);
}

BaseLogic make_b_nb() {
    std::vector<std::string> interps = {"w1", "w2"};
    std::vector<Sentence> sentences = {{"none", ModelSet::empty(2)},
                                       {"both", ModelSet::full(2)}};
    FamilySpec family;
    family.kind = FamilyKind::ArbitrarySets;
    family.allow_empty = true;
    return BaseLogic(std::move(interps), std::move(sentences), family);
}

// --- pl_n -------------------------------------------------------------------
// Propositional logic over n atoms, one sentence per truth table; the
// sentence id equals its model mask.  Interpretation w_i assigns atom p_k
// the bit (k-1) of i.

std::string pl_sentence_name(int n, std::uint64_t mask) {
    const int worlds = 1 << n;
    const std::uint64_t full = ModelSet::mask_for(worlds);
    if (mask == 0) return "bot";
    if (mask == full) return "top";
    for (int k = 1; k <= n; ++k) {
        std::uint64_t atom = 0;
        for (int w = 0; w < worlds; ++w)
            if ((w >> (k - 1)) & 1) atom |= std::uint64_t{1} << w;
        if (mask == atom) return "p" + std::to_string(k);
        if (mask == (full & ~atom)) return "np" + std::to_string(k);
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "f_%llx", static_cast<unsigned long long>(mask));
    return buf;
}

BaseLogic make_pl(int n) {
    const int worlds = 1 << n;
    std::vector<std::string> interps;
    for (int w = 0; w < worlds; ++w) interps.push_back("w" + std::to_string(w));

    std::vector<Sentence> sentences;
    const std::uint64_t count = std::uint64_t{1} << worlds;
    sentences.reserve(static_cast<std::size_t>(count));
    for (std::uint64_t mask = 0; mask < count; ++mask)
        sentences.push_back({pl_sentence_name(n, mask), ModelSet(worlds, mask)});

    FamilySpec family;
    family.kind = FamilyKind::SingleSentences;
    family.allow_empty = false;
    return BaseLogic(std::move(interps), std::move(sentences), family);
}

PreferenceRelation relation_from_rows(const std::vector<std::vector<int>>& rows) {
    const int n = static_cast<int>(rows.size());
    PreferenceRelation rel(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (rows[i][j]) rel.set(i, j);
    return rel;
}

} // namespace

Operator gallery_builtin(const std::string& name) {
    if (name == "op_ex") return Operator::builtin("op_ex", op_ex_fn);
    if (name == "op_four") return Operator::builtin("op_four", op_four_fn);
    throw UnknownGalleryName(name);
}

const std::vector<std::string>& gallery_names() {
    static const std::vector<std::string> names = {"L_Ex", "ex10_12", "pl2",  "pl3", "pl4",
                                                   "B_four", "B_mr",  "B_rps", "B_nb"};
    return names;
}

const std::vector<std::string>& reserved_gallery_names() {
    static const std::vector<std::string> names = {"PL_inf", "B_Z", "B_f1", "B_f2"};
    return names;
}

GalleryEntry load_gallery(const std::string& name) {
    if (name == "L_Ex")
        return {name,
                "six interpretations, arbitrary sentence sets, revision rule op_ex",
                make_l_ex(),
                gallery_builtin("op_ex"),
                std::nullopt};
    if (name == "ex10_12")
        return {name,
                "four interpretations, single-sentence bases, 7x7 operator table",
                make_ex10_12(),
                make_ex10_12_op(),
                std::nullopt};
    if (name == "pl2" || name == "pl3" || name == "pl4")
        return {name,
                "propositional logic over " + std::string(1, name.back()) +
                    " atoms, one sentence per truth table",
                make_pl(name.back() - '0'),
                std::nullopt,
                std::nullopt};
    if (name == "B_four")
        return {name,
                "threshold sentences geq0..geq4 with revision rule op_four",
                make_b_four(),
                gallery_builtin("op_four"),
                std::nullopt};
    if (name == "B_mr") {
        BaseLogic logic = make_b_mr();
        // Total, min-retractive, not transitive (w0 -> w1 -> w2 -> w0).
        Assignment a = Assignment::syntactic(
            {{BeliefBase({0}), relation_from_rows({{1, 1, 0, 0},
                                                   {0, 1, 1, 0},
                                                   {1, 0, 1, 0},
                                                   {1, 1, 1, 1}})}});
        return {name, "one four-interpretation base with a min-retractive cyclic relation",
                std::move(logic), std::nullopt, std::move(a)};
    }
    if (name == "B_rps") {
        BaseLogic logic = make_b_rps();
        // Three-cycle: every interpretation beaten by the next one over.
        Assignment a = Assignment::semantic({relation_from_rows({{1, 0, 1},
                                                                 {1, 1, 0},
                                                                 {0, 1, 1}})});
        return {name, "rock-paper-scissors cycle failing min-completeness",
                std::move(logic), std::nullopt, std::move(a)};
    }
    if (name == "B_nb") {
        BaseLogic logic = make_b_nb();
        PreferenceRelation ties(2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) ties.set(i, j);
        PreferenceRelation strict(2);
        strict.set(0, 0);
        strict.set(0, 1);
        strict.set(1, 1);
        // Class 0 is the universe, class 1 the empty set; the strict relation
        // has minimum {w1}, which no base expresses.
        Assignment a = Assignment::semantic({ties, strict});
        return {name, "two-sentence logic whose minima are not all expressible",
                std::move(logic), std::nullopt, std::move(a)};
    }
    for (const auto& reserved : reserved_gallery_names())
        if (name == reserved) throw OutOfScopeInfinite(name);
    throw UnknownGalleryName(name);
}

} // namespace revkit
