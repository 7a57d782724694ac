// Loop detection, the loop-derived operator, and strict-circle enumeration.
// Every loop condition depends only on model sets, so the search runs over
// semantic classes and reports class representatives.

#include "revkit/critical_loop.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <set>

#include "revkit/encoding.hpp"
#include "revkit/relation.hpp"

namespace revkit {

namespace {

// Least consistent class whose models fit inside `budget`; -1 if none.
int least_class_within(const BaseLogic& logic, const ModelSet& budget) {
    for (int c = 0; c < logic.class_count(); ++c) {
        const ModelSet& m = logic.class_models(c);
        if (!m.is_empty() && m.subset_of(budget)) return c;
    }
    return -1;
}

struct LoopSearch {
    const BaseLogic& logic;
    int classes;
    std::vector<int> nodes;       // chosen node classes
    std::vector<int> edge_choice; // edge classes under construction
    std::optional<CriticalLoop> found;

    explicit LoopSearch(const BaseLogic& l) : logic(l), classes(l.class_count()) {}

    bool disjoint_from_chosen(const ModelSet& m) const {
        for (int c : nodes)
            if (!logic.class_models(c).intersect(m).is_empty()) return false;
        return true;
    }

    // If the union of any three chosen node model sets is itself a class,
    // that class is consistent with three nodes yet lies inside every
    // possible edge union, so condition (3) can never hold.
    bool three_union_expressible(int fresh) const {
        const int d = static_cast<int>(nodes.size());
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                if (nodes[i] == fresh || nodes[j] == fresh) continue;
                ModelSet u = logic.class_models(nodes[i])
                                 .unite(logic.class_models(nodes[j]))
                                 .unite(logic.class_models(fresh));
                if (logic.class_of_models(u) >= 0) return true;
            }
        return false;
    }

    // Complete node tuple: enumerate edge class tuples lexicographically and
    // check conditions (1) and (3) for each.
    bool try_edges() {
        const int len = static_cast<int>(nodes.size());
        ModelSet node_union = ModelSet::empty(logic.interpretation_count());
        for (int c : nodes) node_union = node_union.unite(logic.class_models(c));

        // Classes consistent with at least three nodes; if any is confined
        // to the node union no edge choice can satisfy condition (3).
        std::vector<int> covering;
        for (int c = 0; c < classes; ++c) {
            if (logic.class_models(c).is_empty()) continue;
            int hits = 0;
            for (int nc : nodes)
                if (!logic.class_models(c).intersect(logic.class_models(nc)).is_empty()) ++hits;
            if (hits >= 3) {
                if (logic.class_models(c).subset_of(node_union)) return false;
                covering.push_back(c);
            }
        }

        std::vector<std::vector<int>> candidates(len);
        for (int i = 0; i < len; ++i) {
            ModelSet need =
                logic.class_models(nodes[i]).unite(logic.class_models(nodes[(i + 1) % len]));
            for (int c = 0; c < classes; ++c)
                if (need.subset_of(logic.class_models(c))) candidates[i].push_back(c);
            if (candidates[i].empty()) return false;
        }

        edge_choice.clear();
        return pick_edge(0, candidates, covering);
    }

    bool pick_edge(std::size_t pos, const std::vector<std::vector<int>>& candidates,
                   const std::vector<int>& covering) {
        if (pos == candidates.size()) return finish(edge_choice, covering);
        for (int c : candidates[pos]) {
            edge_choice.push_back(c);
            if (pick_edge(pos + 1, candidates, covering)) return true;
            edge_choice.pop_back();
        }
        return false;
    }

    bool finish(const std::vector<int>& edges, const std::vector<int>& covering) {
        ModelSet edge_union = ModelSet::empty(logic.interpretation_count());
        for (int c : edges) edge_union = edge_union.unite(logic.class_models(c));

        int k_class = -1;
        for (int c = 0; c < classes; ++c)
            if (logic.class_models(c).intersect(edge_union).is_empty()) {
                k_class = c;
                break;
            }
        if (k_class < 0) return false;

        std::map<int, int> certificates;
        for (int c : covering) {
            ModelSet budget = logic.class_models(c).minus(edge_union);
            int cert = least_class_within(logic, budget);
            if (cert < 0) return false;
            certificates.emplace(c, cert);
        }

        CriticalLoop loop;
        loop.k = logic.class_representative(k_class);
        loop.k_class = k_class;
        loop.node_classes = nodes;
        loop.edge_classes = edges;
        for (int c : nodes) loop.node_bases.push_back(logic.class_representative(c));
        for (int c : edges) loop.edge_bases.push_back(logic.class_representative(c));
        loop.certificates = std::move(certificates);
        found = std::move(loop);
        return true;
    }

    // Chooses node classes depth-first in ascending class order.  nodes[0]
    // is the least class of the tuple (rotation canonicalization) and
    // nodes[1] < nodes[len-1] (reflection canonicalization).
    bool extend(int len) {
        const int depth = static_cast<int>(nodes.size());
        if (depth == len) {
            if (nodes[1] > nodes[len - 1]) return false;
            return try_edges();
        }
        for (int c = (depth == 0) ? 0 : nodes[0] + 1; c < classes; ++c) {
            const ModelSet& m = logic.class_models(c);
            if (m.is_empty() || !disjoint_from_chosen(m)) continue;
            nodes.push_back(c);
            bool cut = depth + 1 >= 3 && three_union_expressible(c);
            if (!cut && extend(len)) return true;
            nodes.pop_back();
        }
        return false;
    }
};

} // namespace

std::optional<CriticalLoop> detect_critical_loop(const BaseLogic& logic, int max_len) {
    // In a disjunctive logic every union of node model sets is expressible,
    // so the certificate condition fails for every candidate arrangement:
    // the base expressing three node sets is consistent with all three nodes
    // but lies inside the edge union.  No loop can exist.
    if (logic.structure_report().is_disjunctive.value) return std::nullopt;

    int consistent = 0;
    for (int c = 0; c < logic.class_count(); ++c)
        if (!logic.class_models(c).is_empty()) ++consistent;
    int bound = std::min(logic.interpretation_count(), consistent);
    if (max_len > 0) bound = std::min(bound, max_len);

    LoopSearch search(logic);
    for (int len = 3; len <= bound; ++len) {
        search.nodes.clear();
        if (search.extend(len)) return search.found;
    }
    return std::nullopt;
}

void validate_loop(const BaseLogic& logic, const CriticalLoop& loop) {
    const int len = loop.length();
    if (len < 3) throw InvalidLoop("a loop needs at least three edges");
    if (static_cast<int>(loop.node_bases.size()) != len)
        throw InvalidLoop("node and edge counts differ");

    std::vector<ModelSet> node_models;
    for (const auto& b : loop.node_bases) node_models.push_back(logic.models_of(b));
    std::vector<ModelSet> edge_models;
    for (const auto& b : loop.edge_bases) edge_models.push_back(logic.models_of(b));
    ModelSet k_models = logic.models_of(loop.k);

    ModelSet edge_union = ModelSet::empty(logic.interpretation_count());
    for (const auto& m : edge_models) edge_union = edge_union.unite(m);
    if (!k_models.intersect(edge_union).is_empty())
        throw InvalidLoop("k shares models with an edge base");

    for (int i = 0; i < len; ++i) {
        if (node_models[i].is_empty()) throw InvalidLoop("node base is inconsistent");
        if (!node_models[i].unite(node_models[(i + 1) % len]).subset_of(edge_models[i]))
            throw InvalidLoop("edge base does not cover its adjacent nodes");
        for (int j = i + 1; j < len; ++j)
            if (!node_models[i].intersect(node_models[j]).is_empty())
                throw InvalidLoop("node bases share models");
    }

    for (int c = 0; c < logic.class_count(); ++c) {
        const ModelSet& m = logic.class_models(c);
        if (m.is_empty()) continue;
        int hits = 0;
        for (const auto& nm : node_models)
            if (!m.intersect(nm).is_empty()) ++hits;
        if (hits < 3) continue;
        if (least_class_within(logic, m.minus(edge_union)) < 0)
            throw InvalidLoop("no certificate for a base consistent with three nodes");
    }
}

Operator operator_from_loop(const BaseLogic& logic, const CriticalLoop& loop) {
    validate_loop(logic, loop);

    const int n = logic.interpretation_count();
    ModelSet edge_union = ModelSet::empty(n);
    for (const auto& b : loop.edge_bases) edge_union = edge_union.unite(logic.models_of(b));

    std::vector<ModelSet> node_models;
    for (const auto& b : loop.node_bases) node_models.push_back(logic.models_of(b));

    // Certificate classes: consistent classes that fit inside some covering
    // class minus the edge models.
    std::set<int> certificate_classes;
    for (int c = 0; c < logic.class_count(); ++c) {
        const ModelSet& m = logic.class_models(c);
        if (m.is_empty()) continue;
        int hits = 0;
        for (const auto& nm : node_models)
            if (!m.intersect(nm).is_empty()) ++hits;
        if (hits < 3) continue;
        ModelSet budget = m.minus(edge_union);
        for (int d = 0; d < logic.class_count(); ++d) {
            const ModelSet& dm = logic.class_models(d);
            if (!dm.is_empty() && dm.subset_of(budget)) certificate_classes.insert(d);
        }
    }

    // All member bases of certificate classes that are inconsistent with k,
    // ordered lexicographically by sentence ids (a concrete finite
    // well-order standing in for an arbitrary one).
    ModelSet k_models = logic.models_of(loop.k);
    auto fallbacks = std::make_shared<std::vector<BeliefBase>>();
    for (const auto& base : logic.all_bases()) {
        int c = logic.class_of(base);
        if (!certificate_classes.count(c)) continue;
        if (!logic.class_models(c).intersect(k_models).is_empty()) continue;
        fallbacks->push_back(base);
    }
    std::sort(fallbacks->begin(), fallbacks->end(),
              [](const BeliefBase& a, const BeliefBase& b) { return lex_less(a, b); });

    auto loop_copy = std::make_shared<CriticalLoop>(loop);
    const int k_class = logic.class_of(loop.k);

    Operator::Fn fn = [loop_copy, fallbacks, k_class](const BaseLogic& l, const BeliefBase& k,
                                                      const BeliefBase& gamma) -> BeliefBase {
        if (l.class_of(k) != k_class) return trivial_revision(l, k, gamma);

        const ModelSet gm = l.models_of(gamma);
        const ModelSet km = l.models_of(loop_copy->k);
        if (!km.intersect(gm).is_empty()) return l.abstract_union(gamma, loop_copy->k);

        for (const auto& fallback : *fallbacks)
            if (!l.models_of(fallback).intersect(gm).is_empty())
                return l.abstract_union(gamma, fallback);

        const int len = loop_copy->length();
        for (int i = 0; i < len; ++i) {
            if (l.models_of(loop_copy->node_bases[i]).intersect(gm).is_empty()) continue;
            bool others_empty = true;
            for (int j = 0; j < len; ++j) {
                if (j == i || j == (i + 1) % len) continue;
                if (!l.models_of(loop_copy->node_bases[j]).intersect(gm).is_empty()) {
                    others_empty = false;
                    break;
                }
            }
            if (others_empty) return l.abstract_union(gamma, loop_copy->node_bases[i]);
        }
        return gamma;
    };

    return Operator::from_loop_fn(std::move(fn), loop_copy);
}

std::vector<StrictCircle> strict_circles(const BaseLogic& logic, const Operator& op,
                                         const BeliefBase& k, int max_len) {
    PostulateReport report = postulate_report(logic, op, CheckMode::Semantic);
    if (!report.g4_verified) report = postulate_report(logic, op, CheckMode::Full);
    std::string failed;
    for (PostulateId id : {PostulateId::G1, PostulateId::G2, PostulateId::G3, PostulateId::G5,
                           PostulateId::G6})
        if (!report.pass(id)) failed += (failed.empty() ? "" : ", ") + postulate_name(id);
    if (!failed.empty()) throw PostulatePrerequisiteFailed(failed);

    const QuantifierMode mode =
        report.g4_verified ? QuantifierMode::ByClass : QuantifierMode::ByBase;
    const PreferenceRelation rel = canonical_rel(logic, op, k, mode);
    const DetachedPairs detached = detached_pairs(logic, op, k, mode);

    const int n = logic.interpretation_count();
    if (max_len <= 0 || max_len > n) max_len = n;

    auto edge = [&](int a, int b) { return a != b && rel.leq(a, b) && !detached.contains(a, b); };

    std::vector<StrictCircle> result;
    std::set<std::vector<int>> seen;

    // Simple cycles whose least interpretation is `start`; path entries
    // beyond the start are all greater than it, so each cycle appears once
    // per direction.
    std::vector<int> path;
    std::vector<char> used(static_cast<std::size_t>(n), 0);

    auto canonicalize = [&](const std::vector<int>& cycle) -> std::optional<std::vector<int>> {
        const int len = static_cast<int>(cycle.size());
        std::optional<std::vector<int>> best;
        for (int r = 0; r < len; ++r) {
            if (!rel.strictly_less(cycle[r], cycle[(r + 1) % len])) continue;
            std::vector<int> rotated(static_cast<std::size_t>(len));
            for (int i = 0; i < len; ++i) rotated[i] = cycle[(r + i) % len];
            if (!best || rotated < *best) best = std::move(rotated);
        }
        return best;
    };

    std::function<void(int, int)> dfs = [&](int start, int current) {
        if (static_cast<int>(path.size()) > max_len) return;
        if (static_cast<int>(path.size()) >= 3 && edge(current, start)) {
            if (auto canon = canonicalize(path); canon && seen.insert(*canon).second)
                result.push_back(StrictCircle{k, *canon});
        }
        if (static_cast<int>(path.size()) == max_len) return;
        for (int next = start + 1; next < n; ++next) {
            if (used[next] || !edge(current, next)) continue;
            used[next] = 1;
            path.push_back(next);
            dfs(start, next);
            path.pop_back();
            used[next] = 0;
        }
    };

    for (int start = 0; start < n; ++start) {
        std::fill(used.begin(), used.end(), 0);
        used[start] = 1;
        path.assign(1, start);
        dfs(start, start);
    }

    std::sort(result.begin(), result.end(), [](const StrictCircle& a, const StrictCircle& b) {
        if (a.interpretations.size() != b.interpretations.size())
            return a.interpretations.size() < b.interpretations.size();
        return a.interpretations < b.interpretations;
    });
    return result;
}

} // namespace revkit
