// Assignments map every belief base to a preference relation over the
// interpretations.  Semantic keying stores one relation per semantic class
// (equivalent bases automatically share), syntactic keying stores one
// relation per base.  The faithfulness report checks the three faithfulness
// conditions and the min-* properties, with first-found witnesses.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "revkit/logic.hpp"
#include "revkit/relation.hpp"

namespace revkit {

enum class Keying { Semantic, Syntactic };

class Assignment {
public:
    // One relation per semantic class, indexed by class id.
    static Assignment semantic(std::vector<PreferenceRelation> by_class);
    // One relation per base; entries are sorted canonically and must be unique.
    static Assignment syntactic(std::vector<std::pair<BeliefBase, PreferenceRelation>> by_base);

    Keying keying() const { return keying_; }

    const PreferenceRelation& rel_for(const BaseLogic& logic, const BeliefBase& k) const;
    const PreferenceRelation& rel_for_class(int class_id) const;

    const std::vector<PreferenceRelation>& class_entries() const { return by_class_; }
    const std::vector<std::pair<BeliefBase, PreferenceRelation>>& base_entries() const {
        return by_base_;
    }

    // Whether a relation exists for every class (semantic) or base (syntactic).
    bool covers(const BaseLogic& logic) const;

private:
    Keying keying_ = Keying::Semantic;
    std::vector<PreferenceRelation> by_class_;
    std::vector<std::pair<BeliefBase, PreferenceRelation>> by_base_;
};

struct AssignmentWitness {
    BeliefBase key;     // the base whose relation failed
    int omega1 = -1;
    int omega2 = -1;
    int class_id = -1;  // class involved in min-* failures
};

struct FaithfulnessReport {
    Keying keying = Keying::Semantic;
    bool f1 = false;            // no strict preference between models of the key
    bool f2 = false;            // models of the key strictly below non-models
    bool f3 = false;            // equivalent keys share the same relation
    bool faithful = false;      // f1 && f2 && f3
    bool quasi_faithful = false; // f1 && f2
    bool total_relations = false;
    bool preorder_relations = false; // every relation reflexive and transitive
    bool min_complete = false;
    bool min_retractive = false;
    bool min_friendly = false;
    bool min_expressible = false;

    std::optional<AssignmentWitness> f1_witness;
    std::optional<AssignmentWitness> f2_witness;
    std::optional<std::pair<BeliefBase, BeliefBase>> f3_witness;
    std::optional<AssignmentWitness> total_witness;
    std::optional<AssignmentWitness> preorder_witness;
    std::optional<AssignmentWitness> min_complete_witness;
    std::optional<AssignmentWitness> min_retractive_witness;
    std::optional<std::pair<BeliefBase, ModelSet>> min_inexpressible;
};

FaithfulnessReport faithfulness_report(const BaseLogic& logic, const Assignment& assignment);

// Re-key an assignment by semantic class, taking each class representative's
// relation; the identity on semantically keyed assignments.
Assignment faithfulize(const BaseLogic& logic, const Assignment& assignment);

} // namespace revkit
