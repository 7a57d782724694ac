// Assignment storage, lookup, the faithfulness/min-property report, and
// re-keying by semantic class.

#include "revkit/assignment.hpp"

#include <algorithm>

namespace revkit {

Assignment Assignment::semantic(std::vector<PreferenceRelation> by_class) {
    Assignment a;
    a.keying_ = Keying::Semantic;
    a.by_class_ = std::move(by_class);
    return a;
}

Assignment Assignment::syntactic(std::vector<std::pair<BeliefBase, PreferenceRelation>> by_base) {
    Assignment a;
    a.keying_ = Keying::Syntactic;
    a.by_base_ = std::move(by_base);
    std::sort(a.by_base_.begin(), a.by_base_.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t i = 1; i < a.by_base_.size(); ++i)
        if (a.by_base_[i].first == a.by_base_[i - 1].first)
            throw RevkitError("duplicate base entry in syntactic assignment");
    return a;
}

const PreferenceRelation& Assignment::rel_for(const BaseLogic& logic, const BeliefBase& k) const {
    if (keying_ == Keying::Semantic) return rel_for_class(logic.class_of(k));
    auto it = std::lower_bound(by_base_.begin(), by_base_.end(), k,
                               [](const auto& entry, const BeliefBase& key) { return entry.first < key; });
    if (it == by_base_.end() || !(it->first == k))
        throw RevkitError("assignment has no relation for base " + logic.base_to_string(k));
    return it->second;
}

const PreferenceRelation& Assignment::rel_for_class(int class_id) const {
    if (keying_ != Keying::Semantic)
        throw RevkitError("class lookup on a syntactically keyed assignment");
    if (class_id < 0 || class_id >= static_cast<int>(by_class_.size()))
        throw RevkitError("assignment has no relation for class " + std::to_string(class_id));
    return by_class_[class_id];
}

bool Assignment::covers(const BaseLogic& logic) const {
    if (keying_ == Keying::Semantic)
        return static_cast<int>(by_class_.size()) == logic.class_count();
    if (static_cast<int>(by_base_.size()) != static_cast<int>(logic.all_bases().size()))
        return false;
    for (const auto& base : logic.all_bases()) {
        auto it = std::lower_bound(by_base_.begin(), by_base_.end(), base,
                                   [](const auto& entry, const BeliefBase& key) { return entry.first < key; });
        if (it == by_base_.end() || !(it->first == base)) return false;
    }
    return true;
}

FaithfulnessReport faithfulness_report(const BaseLogic& logic, const Assignment& assignment) {
    FaithfulnessReport report;
    report.keying = assignment.keying();

    // Collect (key base, key models, relation) in deterministic order.
    std::vector<std::pair<BeliefBase, const PreferenceRelation*>> keys;
    if (assignment.keying() == Keying::Semantic) {
        for (int c = 0; c < logic.class_count(); ++c)
            keys.emplace_back(logic.class_representative(c), &assignment.rel_for_class(c));
    } else {
        for (const auto& [base, rel] : assignment.base_entries()) keys.emplace_back(base, &rel);
    }

    const int n = logic.interpretation_count();
    report.f1 = report.f2 = true;
    report.total_relations = report.preorder_relations = true;
    report.min_complete = report.min_retractive = report.min_expressible = true;

    for (const auto& [key, relptr] : keys) {
        const PreferenceRelation& rel = *relptr;
        ModelSet key_models = logic.models_of(key);

        if (report.f1)
            for (int i = 0; i < n && report.f1; ++i)
                for (int j = 0; j < n; ++j)
                    if (key_models.contains(i) && key_models.contains(j) && rel.strictly_less(i, j)) {
                        report.f1 = false;
                        report.f1_witness = AssignmentWitness{key, i, j, -1};
                        break;
                    }
        if (report.f2)
            for (int i = 0; i < n && report.f2; ++i)
                for (int j = 0; j < n; ++j)
                    if (key_models.contains(i) && !key_models.contains(j) && !rel.strictly_less(i, j)) {
                        report.f2 = false;
                        report.f2_witness = AssignmentWitness{key, i, j, -1};
                        break;
                    }

        RelationReport props = property_report(logic, rel);
        if (report.total_relations && !props.total) {
            report.total_relations = false;
            report.total_witness = AssignmentWitness{key, props.total_witness->omega1,
                                                     props.total_witness->omega2, -1};
        }
        if (report.preorder_relations && !(props.reflexive && props.transitive)) {
            report.preorder_relations = false;
            AssignmentWitness w{key, -1, -1, -1};
            if (props.transitive_witness) {
                w.omega1 = props.transitive_witness->omega1;
                w.omega2 = props.transitive_witness->omega2;
            }
            report.preorder_witness = w;
        }
        if (report.min_complete && !props.min_complete) {
            report.min_complete = false;
            report.min_complete_witness =
                AssignmentWitness{key, -1, -1, props.min_complete_witness->class_id};
        }
        if (report.min_retractive && !props.min_retractive) {
            report.min_retractive = false;
            report.min_retractive_witness =
                AssignmentWitness{key, props.min_retractive_witness->omega1,
                                  props.min_retractive_witness->omega2,
                                  props.min_retractive_witness->class_id};
        }
        if (report.min_expressible && !props.min_expressible) {
            report.min_expressible = false;
            report.min_inexpressible = std::make_pair(key, props.min_inexpressible->second);
        }
    }

    // F3: equivalent keys carry identical relations.  Structural for semantic
    // keying; for syntactic keying compare every base against its class's
    // first listed base.
    report.f3 = true;
    if (assignment.keying() == Keying::Syntactic) {
        std::map<int, const BeliefBase*> first_of_class;
        for (const auto& [base, rel] : assignment.base_entries()) {
            int c = logic.class_of(base);
            auto [it, inserted] = first_of_class.emplace(c, &base);
            if (inserted) continue;
            if (!(rel == assignment.rel_for(logic, *it->second))) {
                report.f3 = false;
                report.f3_witness = std::make_pair(*it->second, base);
                break;
            }
        }
    }

    report.faithful = report.f1 && report.f2 && report.f3;
    report.quasi_faithful = report.f1 && report.f2;
    report.min_friendly = report.min_complete && report.min_retractive;
    return report;
}

Assignment faithfulize(const BaseLogic& logic, const Assignment& assignment) {
    if (assignment.keying() == Keying::Semantic) return assignment;
    std::vector<PreferenceRelation> by_class;
    by_class.reserve(logic.class_count());
    for (int c = 0; c < logic.class_count(); ++c)
        by_class.push_back(assignment.rel_for(logic, logic.class_representative(c)));
    return Assignment::semantic(std::move(by_class));
}

} // namespace revkit
