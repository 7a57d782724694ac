// Binary preference relations over the interpretations of a logic, the
// minimum operator used throughout (an interpretation is minimal in a set
// when it relates to every member), property reports (totality, transitivity,
// min-completeness, min-retractivity, min-expressibility) with first-found
// witnesses, and the weak-order enumeration used by the brute-force oracles.

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "revkit/logic.hpp"
#include "revkit/model_set.hpp"

namespace revkit {

class PreferenceRelation {
public:
    PreferenceRelation() = default;
    explicit PreferenceRelation(int size) : n_(size), leq_(static_cast<std::size_t>(size) * size, 0) {}

    static PreferenceRelation from_pairs(int size, const std::vector<std::pair<int, int>>& pairs);

    int size() const { return n_; }
    bool leq(int i, int j) const { return leq_[static_cast<std::size_t>(i) * n_ + j] != 0; }
    void set(int i, int j, bool value = true) { leq_[static_cast<std::size_t>(i) * n_ + j] = value; }
    bool strictly_less(int i, int j) const { return leq(i, j) && !leq(j, i); }

    std::vector<std::pair<int, int>> pairs() const; // sorted (i, j)
    int pair_count() const;

    bool operator==(const PreferenceRelation&) const = default;

    bool is_reflexive() const;
    bool is_total() const;      // every two interpretations comparable (implies reflexive)
    bool is_transitive() const;
    bool subset_of(const PreferenceRelation& other) const;

private:
    int n_ = 0;
    std::vector<unsigned char> leq_;
};

// Minimal members of `candidates`: those relating to every other candidate.
ModelSet min_models(const ModelSet& candidates, const PreferenceRelation& rel);

PreferenceRelation transitive_closure(const PreferenceRelation& rel);

struct RelationPropertyWitness {
    int omega1 = -1;
    int omega2 = -1;
    int omega3 = -1;
    int class_id = -1; // the base class the failure occurred in, when applicable
};

struct RelationReport {
    bool total = false;
    bool reflexive = false;
    bool transitive = false;
    bool min_complete = false;
    bool min_retractive = false;
    bool min_friendly = false;
    bool min_expressible = false;

    std::optional<RelationPropertyWitness> total_witness;       // incomparable pair
    std::optional<RelationPropertyWitness> transitive_witness;  // broken triple
    std::optional<RelationPropertyWitness> min_complete_witness; // class with empty minimum
    std::optional<RelationPropertyWitness> min_retractive_witness; // (omega1 below minimal omega2)
    std::optional<std::pair<int, ModelSet>> min_inexpressible;  // (class, minimum set)
    std::map<int, BeliefBase> expressibility_witnesses;         // class -> base expressing the minimum
};

// Quantifies base-dependent properties over the logic's semantic classes.
RelationReport property_report(const BaseLogic& logic, const PreferenceRelation& rel);

// A base whose models are exactly `models`, chosen canonically (maximal base
// for set families, least sentence for single-sentence families); throws
// MinSetInexpressible when no such base exists.
BeliefBase min_expressibility_witness(const BaseLogic& logic, const ModelSet& models);

// Weak orders (total preorders) on n elements, enumerated as level maps in
// lexicographic order:  omega_i |-> level, levels forming an initial segment.
// The callback may return false to stop early.
void for_each_weak_order(int n, const std::function<bool(const PreferenceRelation&)>& fn);
long long count_weak_orders(int n);

} // namespace revkit
