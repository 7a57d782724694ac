// Transforming the operator-derived order into a compatible total preorder:
// drop detached pairs, close transitively, then linearize deterministically.
// A brute-force weak-order search provides the independent oracle for
// "some/no compatible preorder exists" questions.

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "revkit/assignment.hpp"
#include "revkit/encoding.hpp"
#include "revkit/logic.hpp"
#include "revkit/op.hpp"
#include "revkit/relation.hpp"

namespace revkit {

// Full record of the transformation for one belief base.  minima[s][c] is
// the minimum of class c's models under the step-s relation; the four
// snapshots agree per class whenever the pipeline's preconditions hold.
struct PipelineTrace {
    BeliefBase k;
    PreferenceRelation step0;  // operator-derived order
    DetachedPairs detached;
    PreferenceRelation step1;  // step0 minus detached pairs (both directions)
    PreferenceRelation step2;  // transitive closure of step1
    PreferenceRelation step3;  // total linearization of step2
    std::array<std::vector<ModelSet>, 4> minima;
    bool compatible = false;  // step3 minima reproduce the operator's outputs
};

// Extends a preorder to a total preorder without losing strict preferences:
// mutually related groups are condensed, the resulting strict order is
// topologically sorted (ties broken by least interpretation index), and the
// positions become integer levels.  Throws NotAPreorder on bad input.
PreferenceRelation linearize(const PreferenceRelation& pre);

// Runs the full pipeline for one base.  The operator must pass G1, G2, G3,
// G5 and G6 (PostulatePrerequisiteFailed otherwise) and the logic must be
// free of critical loops (CriticalLoopPresent otherwise).
PipelineTrace to_total_preorder(const BaseLogic& logic, const Operator& op, const BeliefBase& k);

// First weak order over the interpretations, in level-map enumeration order,
// that places the models of k strictly below every other interpretation with
// no strict preferences among themselves, and whose minima over each class's
// models equal the operator's output models for that class.  Requires
// |interpretations| <= 7 (OmegaTooLarge otherwise).
std::optional<PreferenceRelation> brute_force_tpo_for_base(const BaseLogic& logic,
                                                           const Operator& op,
                                                           const BeliefBase& k);

// Per-class brute-force search: succeeds when every class representative has
// a hit, returning the hits as one semantically keyed assignment.
std::optional<Assignment> brute_force_tpo_search(const BaseLogic& logic, const Operator& op);

} // namespace revkit
