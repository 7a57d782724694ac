// Relation extraction: turning a revision operator's observable behaviour
// into preference relations over interpretations.  The primary encoding
// relates two interpretations unless some revision provides evidence against
// it; three classical pairwise encodings are provided for comparison.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "revkit/assignment.hpp"
#include "revkit/logic.hpp"
#include "revkit/op.hpp"
#include "revkit/relation.hpp"

namespace revkit {

// Whether quantified bases range over class representatives (sound whenever
// the operator is syntax-independent) or over every base in the family.
enum class QuantifierMode { ByClass, ByBase };

// omega1 is at-least-as-preferred than omega2 when every revision by a base
// covering both that keeps omega2 also keeps omega1; vacuously true when no
// base covers the pair.
PreferenceRelation sqrel(const BaseLogic& logic, const Operator& op, const BeliefBase& k,
                         QuantifierMode mode = QuantifierMode::ByClass);

// sqrel with the prior beliefs pinned to the bottom: models of K are below
// everything, non-models compare via sqrel, and nothing is below a K-model
// except another K-model.
PreferenceRelation canonical_rel(const BaseLogic& logic, const Operator& op, const BeliefBase& k,
                                 QuantifierMode mode = QuantifierMode::ByClass);

// Unordered pairs of distinct interpretations that no revision ever rewards:
// every revision by a base covering both excludes both.
struct DetachedPairs {
    std::vector<std::pair<int, int>> pairs; // stored with first < second
    bool contains(int omega1, int omega2) const;
};

DetachedPairs detached_pairs(const BaseLogic& logic, const Operator& op, const BeliefBase& k,
                             QuantifierMode mode = QuantifierMode::ByClass);

// Classical pairwise encoding: omega1 <= omega2 when omega1 models K or
// omega1 models the revision of K by a base whose models are exactly
// {omega1, omega2}.  Pairs without such a base stay unrelated and are listed.
struct KmResult {
    PreferenceRelation rel;
    std::vector<std::pair<int, int>> inexpressible_pairs; // first <= second
};

KmResult km_rel(const BaseLogic& logic, const Operator& op, const BeliefBase& k);

// The base used by km_rel for one pair; throws FormInexpressible if the
// family has no base with exactly that model set.
BeliefBase km_pair_base(const BaseLogic& logic, int omega1, int omega2);

// Result of the two encodings that revise by the set of all sentences true
// at both interpretations.  When that set is not a base of the family the
// pair contributes nothing and is listed in skipped_pairs.
struct TsetResult {
    PreferenceRelation rel;
    std::vector<std::pair<int, int>> skipped_pairs; // first <= second
    std::string note;
};

// Transitive closure of { (omega1, omega2) : omega1 models the revision of K
// by the sentences true at both }.
TsetResult dpw_rel(const BaseLogic& logic, const Operator& op, const BeliefBase& k);

// omega1 <= omega2 when omega1 models K or omega1 models the revision of K
// by the sentences true at both.
TsetResult aiguier_rel(const BaseLogic& logic, const Operator& op, const BeliefBase& k);

// Extracts the whole assignment via canonical_rel.  Requires the operator to
// satisfy G5 and G6 (otherwise the relations need not be total); throws
// PostulatePrerequisiteFailed.  Keyed by class when the operator also
// satisfies G4, by base otherwise.
Assignment extract_assignment(const BaseLogic& logic, const Operator& op);

} // namespace revkit
