// Verification harness: seeded random generators for logics, assignments and
// operators, representation checks that tie postulates to extracted
// assignments, the preorder-enforcing scan over all total relations, and the
// property sweeps used as regression oracles.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "revkit/assignment.hpp"
#include "revkit/logic.hpp"
#include "revkit/op.hpp"
#include "revkit/relation.hpp"

namespace revkit {

// Bounds for the random generators; the defaults are the "micro" profile.
// Hard limits: at most 7 interpretations and 12 sentences.
struct GeneratorProfile {
    std::string name = "micro";
    int min_interpretations = 2;
    int max_interpretations = 5;
    int min_sentences = 1;
    int max_sentences = 8;
};

GeneratorProfile micro_profile();
GeneratorProfile profile_by_name(const std::string& name);

// Seeded and reproducible: same seed, same logic.  Rotates between the
// arbitrary-sets and belief-sets families.
BaseLogic generate_logic(std::uint64_t seed, const GeneratorProfile& profile = {});

// Semantically keyed assignment whose relations are total, keep the key's
// models strictly at the bottom, and are min-friendly and min-expressible
// (randomized above the bottom level, with a two-level fallback).
Assignment generate_faithful_assignment(const BaseLogic& logic, std::uint64_t seed);

// Syntactically keyed variant: each base gets its own relation, so
// equivalent bases usually disagree and F3 fails while F1/F2 hold per key.
Assignment generate_quasi_faithful_assignment(const BaseLogic& logic, std::uint64_t seed);

// Revision by minimization over a generated assignment, with the trivial
// rule mixed in for variety.
Operator generate_operator(const BaseLogic& logic, std::uint64_t seed);

struct ClauseReport {
    bool applicable = false;
    bool pass = false;
    std::string detail;
};

struct RepresentationReport {
    PostulateReport postulates;
    bool loop_free = false;
    // G1-G6 hold: the extracted assignment must be faithful, min-friendly,
    // min-expressible, and compatible.
    ClauseReport faithful_clause;
    // G1-G3, G5, G6 hold: same but quasi-faithful.
    ClauseReport quasi_faithful_clause;
    // Loop-free logic and G1-G3, G5, G6: the pipeline must yield a
    // compatible total preorder for every class representative.
    ClauseReport preorder_clause;
};

RepresentationReport check_representation(const BaseLogic& logic, const Operator& op);

struct PreorderEnforcingReport {
    bool enforcing = false;      // every total min-friendly relation is transitive
    bool exhaustive = false;     // all 2^(n^2) relations scanned (n <= 4)
    long long relations_checked = 0;
    bool trio_expressible = false; // structure flag, for cross-checking
    std::optional<PreferenceRelation> witness; // total, min-friendly, not transitive
};

// Exhaustive scan for |interpretations| <= 4; seeded sampling above that.
PreorderEnforcingReport check_preorder_enforcing(const BaseLogic& logic, std::uint64_t seed = 0,
                                                 int samples = 20000);

struct SweepFailure {
    int case_index = -1;
    std::uint64_t case_seed = 0;
    std::string detail;
};

struct SweepReport {
    char property = '?';
    std::string description;
    int cases = 0;       // cases generated
    int applicable = 0;  // cases whose precondition held and was verified
    std::vector<SweepFailure> failures;
    bool pass() const { return failures.empty(); }
};

// Seeded property sweeps:
//   a: minimization over faithful min-friendly min-expressible assignments
//      passes G1-G6
//   b: re-extracting an assignment from such an operator gives a faithful,
//      min-friendly, min-expressible, compatible assignment
//   c: operators passing G1, G5, G6 pass the weak syntax-independence G4w
//   d: every relation the weak-order oracle finds is pointwise below the
//      operator-derived order
//   e: with a universal base the two derived orders coincide
//   f: on loop-free cases the transitive closure step adds only detached
//      pairs
// Cases run independently; `threads` parallelizes them and the report
// aggregates in case order regardless of scheduling.
SweepReport run_sweep(char property, int cases, std::uint64_t seed,
                      const GeneratorProfile& profile = {}, int threads = 1);

} // namespace revkit
