// Implementation of the relation encodings.  All of them observe the
// operator only through model sets of revision results, so quantifying over
// class representatives is sound exactly when the operator is
// syntax-independent; the ByBase mode exists for operators that are not.

#include "revkit/encoding.hpp"

#include <algorithm>

namespace revkit {

namespace {

struct RevisionSample {
    ModelSet gamma_models;  // models of the revising base
    ModelSet result_models; // models of the revision result
};

std::vector<RevisionSample> sample_revisions(const BaseLogic& logic, const Operator& op,
                                             const BeliefBase& k, QuantifierMode mode) {
    std::vector<RevisionSample> samples;
    if (mode == QuantifierMode::ByClass) {
        samples.reserve(static_cast<std::size_t>(logic.class_count()));
        for (int c = 0; c < logic.class_count(); ++c)
            samples.push_back({logic.class_models(c),
                               logic.models_of(op.revise(logic, k, logic.class_representative(c)))});
    } else {
        samples.reserve(logic.all_bases().size());
        for (const auto& gamma : logic.all_bases())
            samples.push_back(
                {logic.models_of(gamma), logic.models_of(op.revise(logic, k, gamma))});
    }
    return samples;
}

} // namespace

PreferenceRelation sqrel(const BaseLogic& logic, const Operator& op, const BeliefBase& k,
                         QuantifierMode mode) {
    const int n = logic.interpretation_count();
    const auto samples = sample_revisions(logic, op, k, mode);
    PreferenceRelation rel(n);
    for (int w1 = 0; w1 < n; ++w1)
        for (int w2 = 0; w2 < n; ++w2) {
            bool related = true;
            for (const auto& s : samples) {
                if (!s.gamma_models.contains(w1) || !s.gamma_models.contains(w2)) continue;
                if (s.result_models.contains(w2) && !s.result_models.contains(w1)) {
                    related = false;
                    break;
                }
            }
            rel.set(w1, w2, related);
        }
    return rel;
}

PreferenceRelation canonical_rel(const BaseLogic& logic, const Operator& op, const BeliefBase& k,
                                 QuantifierMode mode) {
    const int n = logic.interpretation_count();
    const ModelSet k_models = logic.models_of(k);
    PreferenceRelation base = sqrel(logic, op, k, mode);
    PreferenceRelation rel(n);
    for (int w1 = 0; w1 < n; ++w1)
        for (int w2 = 0; w2 < n; ++w2) {
            bool related = k_models.contains(w1) ||
                           (!k_models.contains(w1) && !k_models.contains(w2) && base.leq(w1, w2));
            rel.set(w1, w2, related);
        }
    return rel;
}

bool DetachedPairs::contains(int omega1, int omega2) const {
    std::pair<int, int> key{std::min(omega1, omega2), std::max(omega1, omega2)};
    return std::find(pairs.begin(), pairs.end(), key) != pairs.end();
}

DetachedPairs detached_pairs(const BaseLogic& logic, const Operator& op, const BeliefBase& k,
                             QuantifierMode mode) {
    const int n = logic.interpretation_count();
    const auto samples = sample_revisions(logic, op, k, mode);
    DetachedPairs result;
    for (int w1 = 0; w1 < n; ++w1)
        for (int w2 = w1 + 1; w2 < n; ++w2) {
            bool detached = true;
            for (const auto& s : samples) {
                if (!s.gamma_models.contains(w1) || !s.gamma_models.contains(w2)) continue;
                if (s.result_models.contains(w1) || s.result_models.contains(w2)) {
                    detached = false;
                    break;
                }
            }
            if (detached) result.pairs.emplace_back(w1, w2);
        }
    return result;
}

BeliefBase km_pair_base(const BaseLogic& logic, int omega1, int omega2) {
    ModelSet pair = ModelSet::of(logic.interpretation_count(), {omega1, omega2});
    int cls = logic.class_of_models(pair);
    if (cls < 0) throw FormInexpressible(omega1, omega2);
    return logic.class_representative(cls);
}

KmResult km_rel(const BaseLogic& logic, const Operator& op, const BeliefBase& k) {
    const int n = logic.interpretation_count();
    const ModelSet k_models = logic.models_of(k);
    KmResult result{PreferenceRelation(n), {}};
    for (int w1 = 0; w1 < n; ++w1)
        for (int w2 = w1; w2 < n; ++w2) {
            ModelSet pair = ModelSet::of(n, {w1, w2});
            int cls = logic.class_of_models(pair);
            if (cls < 0) {
                result.inexpressible_pairs.emplace_back(w1, w2);
                result.rel.set(w1, w2, k_models.contains(w1));
                result.rel.set(w2, w1, k_models.contains(w2));
                continue;
            }
            ModelSet out =
                logic.models_of(op.revise(logic, k, logic.class_representative(cls)));
            result.rel.set(w1, w2, k_models.contains(w1) || out.contains(w1));
            result.rel.set(w2, w1, k_models.contains(w2) || out.contains(w2));
        }
    return result;
}

namespace {

// The set of all sentences true at every interpretation of `points`, as a
// candidate base (may fall outside restricted families).
BeliefBase sentences_true_at(const BaseLogic& logic, std::initializer_list<int> points) {
    std::vector<int> ids;
    for (int s = 0; s < logic.sentence_count(); ++s) {
        const ModelSet& models = logic.sentence(s).models;
        bool all = true;
        for (int w : points)
            if (!models.contains(w)) {
                all = false;
                break;
            }
        if (all) ids.push_back(s);
    }
    return BeliefBase(std::move(ids));
}

std::string tset_note(const BaseLogic& logic, const std::vector<std::pair<int, int>>& skipped) {
    std::string note;
    if (logic.family().kind != FamilyKind::ArbitrarySets)
        note = "pair bases are built inside a restricted family";
    if (!skipped.empty()) {
        if (!note.empty()) note += "; ";
        note += std::to_string(skipped.size()) + " pair base(s) outside the family skipped";
    }
    return note;
}

} // namespace

TsetResult dpw_rel(const BaseLogic& logic, const Operator& op, const BeliefBase& k) {
    const int n = logic.interpretation_count();
    PreferenceRelation raw(n);
    TsetResult result{PreferenceRelation(n), {}, {}};
    for (int w1 = 0; w1 < n; ++w1)
        for (int w2 = w1; w2 < n; ++w2) {
            BeliefBase tset = sentences_true_at(logic, {w1, w2});
            if (!logic.in_family(tset)) {
                result.skipped_pairs.emplace_back(w1, w2);
                continue;
            }
            ModelSet out = logic.models_of(op.revise(logic, k, tset));
            if (out.contains(w1)) raw.set(w1, w2, true);
            if (out.contains(w2)) raw.set(w2, w1, true);
        }
    result.rel = transitive_closure(raw);
    result.note = tset_note(logic, result.skipped_pairs);
    return result;
}

TsetResult aiguier_rel(const BaseLogic& logic, const Operator& op, const BeliefBase& k) {
    const int n = logic.interpretation_count();
    const ModelSet k_models = logic.models_of(k);
    TsetResult result{PreferenceRelation(n), {}, {}};
    for (int w1 = 0; w1 < n; ++w1)
        for (int w2 = w1; w2 < n; ++w2) {
            BeliefBase tset = sentences_true_at(logic, {w1, w2});
            if (!logic.in_family(tset)) {
                result.skipped_pairs.emplace_back(w1, w2);
                result.rel.set(w1, w2, k_models.contains(w1));
                result.rel.set(w2, w1, k_models.contains(w2));
                continue;
            }
            ModelSet out = logic.models_of(op.revise(logic, k, tset));
            result.rel.set(w1, w2, k_models.contains(w1) || out.contains(w1));
            result.rel.set(w2, w1, k_models.contains(w2) || out.contains(w2));
        }
    result.note = tset_note(logic, result.skipped_pairs);
    return result;
}

Assignment extract_assignment(const BaseLogic& logic, const Operator& op) {
    PostulateReport report = postulate_report(logic, op, CheckMode::Semantic);
    if (!report.g4_verified) report = postulate_report(logic, op, CheckMode::Full);

    std::string failed;
    if (!report.pass(PostulateId::G5)) failed = "G5";
    if (!report.pass(PostulateId::G6)) failed += failed.empty() ? "G6" : ", G6";
    if (!failed.empty()) throw PostulatePrerequisiteFailed(failed);

    if (report.pass(PostulateId::G4)) {
        std::vector<PreferenceRelation> by_class;
        by_class.reserve(static_cast<std::size_t>(logic.class_count()));
        for (int c = 0; c < logic.class_count(); ++c)
            by_class.push_back(
                canonical_rel(logic, op, logic.class_representative(c), QuantifierMode::ByClass));
        return Assignment::semantic(std::move(by_class));
    }

    std::vector<std::pair<BeliefBase, PreferenceRelation>> by_base;
    by_base.reserve(logic.all_bases().size());
    for (const auto& base : logic.all_bases())
        by_base.emplace_back(base, canonical_rel(logic, op, base, QuantifierMode::ByBase));
    return Assignment::syntactic(std::move(by_base));
}

} // namespace revkit
