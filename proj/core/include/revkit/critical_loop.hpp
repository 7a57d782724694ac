// Critical-loop machinery: detecting the circular base arrangements that
// force every compatible preference relation into a strict cycle, building
// the canonical operator that exploits such an arrangement, and enumerating
// strict circles of an extracted relation as a diagnostic.

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "revkit/logic.hpp"
#include "revkit/op.hpp"

namespace revkit {

// A circular arrangement of bases witnessing that some operator on this
// logic cannot be represented by any total preorder assignment:
//   (1) every edge base is inconsistent with k;
//   (2) edge i covers the models of nodes i and i+1 (cyclically) and node
//       model sets are pairwise disjoint and nonempty;
//   (3) every base consistent with three or more nodes has a consistent
//       sub-base avoiding all edge models (the certificate).
struct CriticalLoop {
    BeliefBase k;
    int k_class = -1;
    std::vector<BeliefBase> node_bases;
    std::vector<BeliefBase> edge_bases;
    std::vector<int> node_classes;
    std::vector<int> edge_classes;
    // Covering class -> least consistent class inside it avoiding all edges.
    std::map<int, int> certificates;

    int length() const { return static_cast<int>(edge_bases.size()); }
};

// Exhaustive search over class tuples, increasing length then lexicographic;
// returns the least loop or nothing.  max_len <= 0 means the natural bound
// min(|Omega|, number of consistent classes).
std::optional<CriticalLoop> detect_critical_loop(const BaseLogic& logic, int max_len = -1);

// Check the three loop conditions against a logic; throws InvalidLoop with
// the first violated condition.  Used by operator_from_loop and by loaders
// that accept loops from external files.
void validate_loop(const BaseLogic& logic, const CriticalLoop& loop);

// The four-branch operator built from a loop: keep K when consistent,
// otherwise fall back to the least loop certificate consistent with the
// input, then to the unique applicable node, then to the input alone.
// Bases not equivalent to loop.k are revised trivially.  Validates the loop
// and throws InvalidLoop.
Operator operator_from_loop(const BaseLogic& logic, const CriticalLoop& loop);

// A cyclic sequence of interpretations with a strict first preference edge,
// weak edges elsewhere, and no detached consecutive pair; any such circle
// witnesses non-transitivity of the extracted relation.
struct StrictCircle {
    BeliefBase k;
    std::vector<int> interpretations;
};

// All simple strict circles of length 3..max_len for the relation extracted
// at k, canonically rotated and sorted.  Requires the operator to pass G1,
// G2, G3, G5, G6; throws PostulatePrerequisiteFailed.  max_len <= 0 means
// |Omega|.
std::vector<StrictCircle> strict_circles(const BaseLogic& logic, const Operator& op,
                                         const BeliefBase& k, int max_len = -1);

} // namespace revkit
