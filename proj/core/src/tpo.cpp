// Pipeline and brute-force oracle.  The linearization is the only step with
// freedom of choice; it is pinned to a topological order of the condensation
// with least-interpretation-index tie-breaking so results are reproducible.

#include "revkit/tpo.hpp"

#include <algorithm>
#include <string>

#include "revkit/critical_loop.hpp"
#include "revkit/errors.hpp"

namespace revkit {

PreferenceRelation linearize(const PreferenceRelation& pre) {
    const int n = pre.size();
    for (int i = 0; i < n; ++i)
        if (!pre.leq(i, i)) throw NotAPreorder(i, i, i, "relation is not reflexive");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!pre.leq(i, j)) continue;
            for (int k = 0; k < n; ++k)
                if (pre.leq(j, k) && !pre.leq(i, k))
                    throw NotAPreorder(i, j, k, "relation is not transitive");
        }

    // Condense mutually related groups; each group is identified by its
    // least member, so group ids inherit the interpretation order.
    std::vector<int> group(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j)
            if (pre.leq(i, j) && pre.leq(j, i)) {
                group[i] = j;
                break;
            }

    std::vector<int> heads;
    for (int i = 0; i < n; ++i)
        if (group[i] == i) heads.push_back(i);

    // Kahn's algorithm over the strict order between groups, always taking
    // the ready group with the least head.
    std::map<int, int> indegree;
    for (int h : heads) indegree[h] = 0;
    for (int a : heads)
        for (int b : heads)
            if (a != b && pre.leq(a, b)) ++indegree[b];

    std::vector<int> level(static_cast<std::size_t>(n), -1);
    std::vector<char> placed(static_cast<std::size_t>(n), 0);
    for (int next_level = 0; next_level < static_cast<int>(heads.size()); ++next_level) {
        int pick = -1;
        for (int h : heads)
            if (!placed[h] && indegree[h] == 0) {
                pick = h;
                break;
            }
        // Transitivity rules out strict cycles, so a ready group always exists.
        if (pick < 0) throw RevkitError("linearize: no ready group in a transitive relation");
        placed[pick] = 1;
        level[pick] = next_level;
        for (int b : heads)
            if (!placed[b] && pre.leq(pick, b)) --indegree[b];
    }
    for (int i = 0; i < n; ++i) level[i] = level[group[i]];

    PreferenceRelation out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (level[i] <= level[j]) out.set(i, j);
    return out;
}

namespace {

// Class-level results are trusted only when the operator provably ignores
// syntax; otherwise fall back to the exhaustive report.
PostulateReport reliable_report(const BaseLogic& logic, const Operator& op) {
    PostulateReport report = postulate_report(logic, op, CheckMode::Semantic);
    if (!report.g4_verified) report = postulate_report(logic, op, CheckMode::Full);
    return report;
}

} // namespace

PipelineTrace to_total_preorder(const BaseLogic& logic, const Operator& op, const BeliefBase& k) {
    const PostulateReport report = reliable_report(logic, op);
    std::string failed;
    for (PostulateId id : {PostulateId::G1, PostulateId::G2, PostulateId::G3, PostulateId::G5,
                           PostulateId::G6})
        if (!report.pass(id)) failed += (failed.empty() ? "" : ", ") + postulate_name(id);
    if (!failed.empty()) throw PostulatePrerequisiteFailed(failed);

    if (auto loop = detect_critical_loop(logic)) {
        std::string summary = "nodes";
        for (const auto& base : loop->node_bases) summary += " " + logic.base_to_string(base);
        throw CriticalLoopPresent(loop->length(), summary);
    }

    const QuantifierMode mode =
        report.g4_verified ? QuantifierMode::ByClass : QuantifierMode::ByBase;

    PipelineTrace trace;
    trace.k = k;
    trace.step0 = canonical_rel(logic, op, k, mode);
    trace.detached = detached_pairs(logic, op, k, mode);
    trace.step1 = trace.step0;
    for (const auto& [a, b] : trace.detached.pairs) {
        trace.step1.set(a, b, false);
        trace.step1.set(b, a, false);
    }
    trace.step2 = transitive_closure(trace.step1);
    trace.step3 = linearize(trace.step2);

    const PreferenceRelation* steps[4] = {&trace.step0, &trace.step1, &trace.step2, &trace.step3};
    for (int s = 0; s < 4; ++s) {
        trace.minima[s].reserve(static_cast<std::size_t>(logic.class_count()));
        for (int c = 0; c < logic.class_count(); ++c)
            trace.minima[s].push_back(min_models(logic.class_models(c), *steps[s]));
    }

    trace.compatible = true;
    if (report.g4_verified) {
        for (int c = 0; c < logic.class_count() && trace.compatible; ++c) {
            BeliefBase out = op.revise(logic, k, logic.class_representative(c));
            trace.compatible = logic.models_of(out) == trace.minima[3][c];
        }
    } else {
        for (const auto& gamma : logic.all_bases()) {
            BeliefBase out = op.revise(logic, k, gamma);
            if (logic.models_of(out) != trace.minima[3][logic.class_of(gamma)]) {
                trace.compatible = false;
                break;
            }
        }
    }
    return trace;
}

std::optional<PreferenceRelation> brute_force_tpo_for_base(const BaseLogic& logic,
                                                           const Operator& op,
                                                           const BeliefBase& k) {
    const int n = logic.interpretation_count();
    if (n > 7) throw OmegaTooLarge(n, 7);
    const ModelSet k_models = logic.models_of(k);

    // Expected output models per class.  If two equivalent inputs produce
    // different models, no single relation can match both; the minimum over
    // a class's models does not depend on how the class is written down.
    std::vector<ModelSet> expected;
    expected.reserve(static_cast<std::size_t>(logic.class_count()));
    for (int c = 0; c < logic.class_count(); ++c)
        expected.push_back(logic.models_of(op.revise(logic, k, logic.class_representative(c))));
    for (const auto& gamma : logic.all_bases())
        if (logic.models_of(op.revise(logic, k, gamma)) != expected[logic.class_of(gamma)])
            return std::nullopt;

    std::optional<PreferenceRelation> found;
    for_each_weak_order(n, [&](const PreferenceRelation& rel) {
        for (int w1 : k_models.members())
            for (int w2 = 0; w2 < n; ++w2) {
                if (w1 == w2) continue;
                if (k_models.contains(w2)) {
                    if (rel.strictly_less(w1, w2)) return true; // ties required inside k
                } else if (!rel.strictly_less(w1, w2)) {
                    return true; // k's models must beat the rest strictly
                }
            }
        // Weak orders always have nonempty minima over nonempty sets, so
        // min-completeness reduces to the compatibility comparison.
        for (int c = 0; c < logic.class_count(); ++c)
            if (min_models(logic.class_models(c), rel) != expected[c]) return true;
        found = rel;
        return false;
    });
    return found;
}

std::optional<Assignment> brute_force_tpo_search(const BaseLogic& logic, const Operator& op) {
    std::vector<PreferenceRelation> by_class;
    by_class.reserve(static_cast<std::size_t>(logic.class_count()));
    for (int c = 0; c < logic.class_count(); ++c) {
        auto rel = brute_force_tpo_for_base(logic, op, logic.class_representative(c));
        if (!rel) return std::nullopt;
        by_class.push_back(std::move(*rel));
    }
    return Assignment::semantic(std::move(by_class));
}

} // namespace revkit
