// Relation utilities: minima, closure, property reports with deterministic
// first-found witnesses, canonical expressibility witnesses, and the
// weak-order enumeration behind the brute-force oracles.

#include "revkit/relation.hpp"

#include <algorithm>

namespace revkit {

PreferenceRelation PreferenceRelation::from_pairs(int size,
                                                  const std::vector<std::pair<int, int>>& pairs) {
    PreferenceRelation rel(size);
    for (auto [i, j] : pairs) {
        if (i < 0 || i >= size || j < 0 || j >= size)
            throw RevkitError("relation pair out of range");
        rel.set(i, j);
    }
    return rel;
}

std::vector<std::pair<int, int>> PreferenceRelation::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (leq(i, j)) out.emplace_back(i, j);
    return out;
}

int PreferenceRelation::pair_count() const {
    int c = 0;
    for (unsigned char v : leq_) c += v != 0;
    return c;
}

bool PreferenceRelation::is_reflexive() const {
    for (int i = 0; i < n_; ++i)
        if (!leq(i, i)) return false;
    return true;
}

bool PreferenceRelation::is_total() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j)
            if (!leq(i, j) && !leq(j, i)) return false;
    return true;
}

bool PreferenceRelation::is_transitive() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if (!leq(i, j)) continue;
            for (int k = 0; k < n_; ++k)
                if (leq(j, k) && !leq(i, k)) return false;
        }
    return true;
}

bool PreferenceRelation::subset_of(const PreferenceRelation& other) const {
    if (n_ != other.n_) return false;
    for (std::size_t idx = 0; idx < leq_.size(); ++idx)
        if (leq_[idx] && !other.leq_[idx]) return false;
    return true;
}

ModelSet min_models(const ModelSet& candidates, const PreferenceRelation& rel) {
    ModelSet out = ModelSet::empty(candidates.universe_size());
    for (int i = 0; i < candidates.universe_size(); ++i) {
        if (!candidates.contains(i)) continue;
        bool minimal = true;
        for (int j = 0; j < candidates.universe_size() && minimal; ++j)
            if (candidates.contains(j) && !rel.leq(i, j)) minimal = false;
        if (minimal) out.insert(i);
    }
    return out;
}

PreferenceRelation transitive_closure(const PreferenceRelation& rel) {
    PreferenceRelation out = rel;
    const int n = rel.size();
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (!out.leq(i, k)) continue;
            for (int j = 0; j < n; ++j)
                if (out.leq(k, j)) out.set(i, j);
        }
    return out;
}

BeliefBase min_expressibility_witness(const BaseLogic& logic, const ModelSet& models) {
    switch (logic.family().kind) {
    case FamilyKind::ArbitrarySets:
    case FamilyKind::BeliefSets: {
        // Canonical candidate: the set of all sentences true on `models`.
        std::vector<int> ids;
        for (int s = 0; s < logic.sentence_count(); ++s)
            if (models.subset_of(logic.sentence(s).models)) ids.push_back(s);
        BeliefBase candidate(std::move(ids));
        if (candidate.empty() && !logic.family().allow_empty)
            throw MinSetInexpressible(models, logic.models_to_string(models));
        if (logic.models_of(candidate) == models) return candidate;
        throw MinSetInexpressible(models, logic.models_to_string(models));
    }
    case FamilyKind::SingleSentences: {
        for (int s = 0; s < logic.sentence_count(); ++s)
            if (logic.sentence(s).models == models) return BeliefBase({s});
        if (models.is_full() && logic.family().allow_empty) return BeliefBase();
        throw MinSetInexpressible(models, logic.models_to_string(models));
    }
    case FamilyKind::FiniteSets: {
        for (const auto& base : logic.all_bases())
            if (logic.models_of(base) == models) return base;
        throw MinSetInexpressible(models, logic.models_to_string(models));
    }
    }
    throw RevkitError("unreachable family kind");
}

RelationReport property_report(const BaseLogic& logic, const PreferenceRelation& rel) {
    RelationReport report;
    const int n = rel.size();

    report.reflexive = rel.is_reflexive();

    report.total = true;
    for (int i = 0; i < n && report.total; ++i)
        for (int j = i; j < n; ++j)
            if (!rel.leq(i, j) && !rel.leq(j, i)) {
                report.total = false;
                report.total_witness = RelationPropertyWitness{i, j, -1, -1};
                break;
            }

    report.transitive = true;
    for (int i = 0; i < n && report.transitive; ++i)
        for (int j = 0; j < n && report.transitive; ++j) {
            if (!rel.leq(i, j)) continue;
            for (int k = 0; k < n; ++k)
                if (rel.leq(j, k) && !rel.leq(i, k)) {
                    report.transitive = false;
                    report.transitive_witness = RelationPropertyWitness{i, j, k, -1};
                    break;
                }
        }

    // Base-dependent properties quantify over the semantic classes, visiting
    // classes in canonical order and interpretations in index order.
    report.min_complete = true;
    for (int c = 0; c < logic.class_count() && report.min_complete; ++c) {
        const ModelSet& m = logic.class_models(c);
        if (m.is_empty()) continue;
        if (min_models(m, rel).is_empty()) {
            report.min_complete = false;
            report.min_complete_witness = RelationPropertyWitness{-1, -1, -1, c};
        }
    }

    report.min_retractive = true;
    for (int c = 0; c < logic.class_count() && report.min_retractive; ++c) {
        const ModelSet& m = logic.class_models(c);
        ModelSet minima = min_models(m, rel);
        for (int below = 0; below < n && report.min_retractive; ++below) {
            if (!m.contains(below) || minima.contains(below)) continue;
            for (int minimal = 0; minimal < n; ++minimal)
                if (m.contains(minimal) && minima.contains(minimal) && rel.leq(below, minimal)) {
                    report.min_retractive = false;
                    report.min_retractive_witness = RelationPropertyWitness{below, minimal, -1, c};
                    break;
                }
        }
    }

    report.min_friendly = report.min_complete && report.min_retractive;

    report.min_expressible = true;
    for (int c = 0; c < logic.class_count(); ++c) {
        ModelSet minima = min_models(logic.class_models(c), rel);
        try {
            report.expressibility_witnesses.emplace(c, min_expressibility_witness(logic, minima));
        } catch (const MinSetInexpressible&) {
            report.min_expressible = false;
            report.min_inexpressible = std::make_pair(c, minima);
            break;
        }
    }

    return report;
}

void for_each_weak_order(int n, const std::function<bool(const PreferenceRelation&)>& fn) {
    // Level maps in lexicographic order; a map is canonical when its used
    // levels form an initial segment 0..max.
    std::vector<int> level(n, 0);
    while (true) {
        int max_level = 0;
        bool canonical = true;
        std::vector<char> used(n, 0);
        for (int v : level) {
            used[v] = 1;
            max_level = std::max(max_level, v);
        }
        for (int l = 0; l <= max_level && canonical; ++l)
            if (!used[l]) canonical = false;
        if (canonical) {
            PreferenceRelation rel(n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (level[i] <= level[j]) rel.set(i, j);
            if (!fn(rel)) return;
        }
        int pos = n - 1;
        while (pos >= 0 && level[pos] == n - 1) {
            level[pos] = 0;
            --pos;
        }
        if (pos < 0) return;
        ++level[pos];
    }
}

long long count_weak_orders(int n) {
    long long count = 0;
    for_each_weak_order(n, [&](const PreferenceRelation&) {
        ++count;
        return true;
    });
    return count;
}

} // namespace revkit
