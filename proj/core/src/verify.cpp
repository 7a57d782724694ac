// Generators draw raw 64-bit values and reduce them by hand so the streams
// are identical across standard-library implementations.  Sweep cases are
// fully independent: each derives everything from its own case seed, which
// is what makes the thread parallelization order-insensitive.

#include "revkit/verify.hpp"

#include <map>
#include <random>
#include <thread>

#include "revkit/critical_loop.hpp"
#include "revkit/encoding.hpp"
#include "revkit/errors.hpp"
#include "revkit/tpo.hpp"

namespace revkit {

namespace {

int pick(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

} // namespace

GeneratorProfile micro_profile() { return {}; }

GeneratorProfile profile_by_name(const std::string& name) {
    if (name == "micro") return micro_profile();
    throw RevkitError("unknown generator profile: " + name);
}

BaseLogic generate_logic(std::uint64_t seed, const GeneratorProfile& profile) {
    if (profile.min_interpretations < 1 || profile.max_interpretations > 7 ||
        profile.min_sentences < 1 || profile.max_sentences > 12 ||
        profile.min_interpretations > profile.max_interpretations ||
        profile.min_sentences > profile.max_sentences)
        throw RevkitError("generator profile out of bounds");

    std::mt19937_64 rng(seed);
    const int n = pick(rng, profile.min_interpretations, profile.max_interpretations);
    const int m = pick(rng, profile.min_sentences, profile.max_sentences);

    std::vector<std::string> interps;
    interps.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) interps.push_back("w" + std::to_string(i));

    std::vector<Sentence> sentences;
    sentences.reserve(static_cast<std::size_t>(m));
    for (int s = 0; s < m; ++s)
        sentences.push_back({"s" + std::to_string(s), ModelSet(n, rng())});

    FamilySpec family;
    family.kind = rng() % 2 == 0 ? FamilyKind::ArbitrarySets : FamilyKind::BeliefSets;
    family.allow_empty = rng() % 2 == 0;
    return BaseLogic(std::move(interps), std::move(sentences), family);
}

namespace {

// Two levels: the key's models tied at the bottom, everything else tied
// above.  Always total, faithful, min-friendly and min-expressible (each
// minimum is a model set intersected with the key's, i.e. an abstract
// union's models, or the set itself).
PreferenceRelation two_level(int n, const ModelSet& bottom) {
    PreferenceRelation rel(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (bottom.contains(i) || !bottom.contains(j)) rel.set(i, j);
    return rel;
}

// Total relation keeping `bottom` strictly least and randomizing every other
// pair between the three comparable shapes.
PreferenceRelation random_above_bottom(std::mt19937_64& rng, int n, const ModelSet& bottom) {
    PreferenceRelation rel(n);
    for (int i = 0; i < n; ++i) rel.set(i, i);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const bool bi = bottom.contains(i);
            const bool bj = bottom.contains(j);
            if (bi && bj) {
                rel.set(i, j);
                rel.set(j, i);
            } else if (bi) {
                rel.set(i, j);
            } else if (bj) {
                rel.set(j, i);
            } else {
                switch (rng() % 3) {
                case 0: rel.set(i, j); break;
                case 1: rel.set(j, i); break;
                default:
                    rel.set(i, j);
                    rel.set(j, i);
                    break;
                }
            }
        }
    return rel;
}

PreferenceRelation faithful_relation_for(const BaseLogic& logic, const ModelSet& key_models,
                                         std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 40; ++attempt) {
        PreferenceRelation rel =
            random_above_bottom(rng, logic.interpretation_count(), key_models);
        const RelationReport report = property_report(logic, rel);
        if (report.min_complete && report.min_retractive && report.min_expressible) return rel;
    }
    return two_level(logic.interpretation_count(), key_models);
}

} // namespace

Assignment generate_faithful_assignment(const BaseLogic& logic, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<PreferenceRelation> by_class;
    by_class.reserve(static_cast<std::size_t>(logic.class_count()));
    for (int c = 0; c < logic.class_count(); ++c)
        by_class.push_back(faithful_relation_for(logic, logic.class_models(c), rng));
    return Assignment::semantic(std::move(by_class));
}

Assignment generate_quasi_faithful_assignment(const BaseLogic& logic, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<BeliefBase, PreferenceRelation>> by_base;
    by_base.reserve(logic.all_bases().size());
    for (const auto& base : logic.all_bases())
        by_base.emplace_back(base, faithful_relation_for(logic, logic.models_of(base), rng));
    return Assignment::syntactic(std::move(by_base));
}

Operator generate_operator(const BaseLogic& logic, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    switch (rng() % 4) {
    case 0: return Operator::trivial();
    case 1: return Operator::from_assignment(logic, generate_quasi_faithful_assignment(logic, rng()));
    default: return Operator::from_assignment(logic, generate_faithful_assignment(logic, rng()));
    }
}

namespace {

bool quasi_core_pass(const PostulateReport& report) {
    return report.pass(PostulateId::G1) && report.pass(PostulateId::G2) &&
           report.pass(PostulateId::G3) && report.pass(PostulateId::G5) &&
           report.pass(PostulateId::G6);
}

std::string failing_postulates(const PostulateReport& report) {
    std::string out;
    for (const auto& [id, result] : report.results)
        if (result.checked && !result.pass) out += (out.empty() ? "" : ", ") + postulate_name(id);
    return out;
}

} // namespace

RepresentationReport check_representation(const BaseLogic& logic, const Operator& op) {
    RepresentationReport out;
    out.postulates = postulate_report(logic, op, CheckMode::Semantic);
    if (!out.postulates.g4_verified) out.postulates = postulate_report(logic, op, CheckMode::Full);
    out.loop_free = !detect_critical_loop(logic).has_value();

    const bool quasi_core = quasi_core_pass(out.postulates);
    const bool core = quasi_core && out.postulates.pass(PostulateId::G4);

    auto assignment_clause = [&](bool need_f3) {
        ClauseReport clause;
        clause.applicable = true;
        const Assignment extracted = extract_assignment(logic, op);
        const FaithfulnessReport fr = faithfulness_report(logic, extracted);
        const CompatibilityResult comp = compatibility_check(logic, op, extracted);
        const bool flags = need_f3 ? fr.faithful : fr.quasi_faithful;
        clause.pass = flags && fr.min_friendly && fr.min_expressible && comp.compatible;
        if (clause.pass) {
            clause.detail = "extracted assignment has all required properties";
        } else {
            clause.detail = "extracted assignment lacks:";
            if (!flags) clause.detail += need_f3 ? " faithfulness" : " quasi-faithfulness";
            if (!fr.min_friendly) clause.detail += " min-friendliness";
            if (!fr.min_expressible) clause.detail += " min-expressibility";
            if (!comp.compatible) clause.detail += " compatibility";
        }
        return clause;
    };

    if (core)
        out.faithful_clause = assignment_clause(true);
    else
        out.faithful_clause.detail = "not applicable: failing " + failing_postulates(out.postulates);
    if (quasi_core)
        out.quasi_faithful_clause = assignment_clause(false);
    else
        out.quasi_faithful_clause.detail =
            "not applicable: failing " + failing_postulates(out.postulates);

    if (quasi_core && out.loop_free) {
        out.preorder_clause.applicable = true;
        out.preorder_clause.pass = true;
        out.preorder_clause.detail =
            "pipeline yields a compatible total preorder for every class";
        for (int c = 0; c < logic.class_count(); ++c) {
            const PipelineTrace trace =
                to_total_preorder(logic, op, logic.class_representative(c));
            if (!(trace.compatible && trace.step3.is_total() && trace.step3.is_transitive())) {
                out.preorder_clause.pass = false;
                out.preorder_clause.detail =
                    "pipeline output not a compatible total preorder for " +
                    logic.base_to_string(logic.class_representative(c));
                break;
            }
        }
    } else {
        out.preorder_clause.detail = out.loop_free
                                         ? "not applicable: failing " +
                                               failing_postulates(out.postulates)
                                         : "not applicable: the logic has a critical loop";
    }
    return out;
}

namespace {

bool min_friendly_relation(const std::vector<ModelSet>& consistent_sets,
                           const PreferenceRelation& rel) {
    for (const ModelSet& m : consistent_sets) {
        const ModelSet mins = min_models(m, rel);
        if (mins.is_empty()) return false;
        for (int w1 : m.members()) {
            if (mins.contains(w1)) continue;
            for (int w2 : mins.members())
                if (rel.leq(w1, w2)) return false; // below a minimal element, not minimal
        }
    }
    return true;
}

} // namespace

PreorderEnforcingReport check_preorder_enforcing(const BaseLogic& logic, std::uint64_t seed,
                                                 int samples) {
    const int n = logic.interpretation_count();
    PreorderEnforcingReport out;
    out.trio_expressible = logic.structure_report().is_trio_expressible.value;
    out.exhaustive = n <= 4;

    std::vector<ModelSet> consistent;
    for (int c = 0; c < logic.class_count(); ++c)
        if (!logic.class_models(c).is_empty()) consistent.push_back(logic.class_models(c));

    auto consider = [&](const PreferenceRelation& rel) {
        ++out.relations_checked;
        if (!rel.is_total() || rel.is_transitive()) return false;
        if (!min_friendly_relation(consistent, rel)) return false;
        out.witness = rel;
        return true;
    };

    if (out.exhaustive) {
        const std::uint64_t mask_count = std::uint64_t{1} << (n * n);
        for (std::uint64_t mask = 0; mask < mask_count; ++mask) {
            PreferenceRelation rel(n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (mask & (std::uint64_t{1} << (i * n + j))) rel.set(i, j);
            if (consider(rel)) break;
        }
    } else {
        std::mt19937_64 rng(seed);
        for (int s = 0; s < samples; ++s) {
            PreferenceRelation rel(n);
            for (int i = 0; i < n; ++i) rel.set(i, i);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    switch (rng() % 3) {
                    case 0: rel.set(i, j); break;
                    case 1: rel.set(j, i); break;
                    default:
                        rel.set(i, j);
                        rel.set(j, i);
                        break;
                    }
                }
            if (consider(rel)) break;
        }
    }
    out.enforcing = !out.witness.has_value();
    return out;
}

namespace {

struct CaseOutcome {
    bool applicable = false;
    std::string failure; // empty = no violation
};

// Class-level postulate results are only trusted under verified syntax
// independence; the exhaustive fallback is cubic in the family size, so
// oversized syntax-dependent cases are skipped (reported not applicable)
// rather than checked unsoundly.
std::optional<PostulateReport> guarded_report(const BaseLogic& logic, const Operator& op) {
    PostulateReport report = postulate_report(logic, op, CheckMode::Semantic);
    if (report.g4_verified) return report;
    if (logic.all_bases().size() > 64) return std::nullopt;
    return postulate_report(logic, op, CheckMode::Full);
}

CaseOutcome run_case(char property, std::uint64_t case_seed, const GeneratorProfile& profile) {
    CaseOutcome out;
    std::mt19937_64 rng(case_seed);
    const std::uint64_t logic_seed = rng();
    const std::uint64_t aux_seed = rng();
    const BaseLogic logic = generate_logic(logic_seed, profile);

    switch (property) {
    case 'a': {
        const Operator op =
            Operator::from_assignment(logic, generate_faithful_assignment(logic, aux_seed));
        out.applicable = true;
        const PostulateReport report = postulate_report(logic, op);
        if (!report.core_pass()) out.failure = "failing " + failing_postulates(report);
        break;
    }
    case 'b': {
        const Operator op =
            Operator::from_assignment(logic, generate_faithful_assignment(logic, aux_seed));
        const PostulateReport report = postulate_report(logic, op);
        if (!report.core_pass()) {
            out.applicable = true;
            out.failure = "generated operator unexpectedly failing " + failing_postulates(report);
            break;
        }
        out.applicable = true;
        const Assignment extracted = extract_assignment(logic, op);
        const FaithfulnessReport fr = faithfulness_report(logic, extracted);
        const CompatibilityResult comp = compatibility_check(logic, op, extracted);
        if (!(fr.faithful && fr.min_friendly && fr.min_expressible && comp.compatible)) {
            out.failure = "extracted assignment lacks:";
            if (!fr.faithful) out.failure += " faithfulness";
            if (!fr.min_friendly) out.failure += " min-friendliness";
            if (!fr.min_expressible) out.failure += " min-expressibility";
            if (!comp.compatible) out.failure += " compatibility";
        }
        break;
    }
    case 'c': {
        const Operator op = generate_operator(logic, aux_seed);
        const auto report = guarded_report(logic, op);
        if (!report) break;
        if (!(report->pass(PostulateId::G1) && report->pass(PostulateId::G5) &&
              report->pass(PostulateId::G6)))
            break;
        out.applicable = true;
        if (!report->pass(PostulateId::G4w)) out.failure = "G4w fails though G1, G5, G6 hold";
        break;
    }
    case 'd': {
        const Operator op = generate_operator(logic, aux_seed);
        const auto found = brute_force_tpo_search(logic, op);
        if (!found) break;
        out.applicable = true;
        for (int c = 0; c < logic.class_count(); ++c) {
            const PreferenceRelation upper =
                canonical_rel(logic, op, logic.class_representative(c), QuantifierMode::ByClass);
            if (!found->rel_for_class(c).subset_of(upper)) {
                out.failure = "oracle relation not below the derived order for " +
                              logic.base_to_string(logic.class_representative(c));
                break;
            }
        }
        break;
    }
    case 'e': {
        if (!logic.structure_report().has_universal_base.value) break;
        const Operator op = generate_operator(logic, aux_seed);
        const auto report = guarded_report(logic, op);
        if (!report || !quasi_core_pass(*report)) break;
        out.applicable = true;
        const QuantifierMode mode =
            report->g4_verified ? QuantifierMode::ByClass : QuantifierMode::ByBase;
        for (int c = 0; c < logic.class_count(); ++c) {
            const BeliefBase& k = logic.class_representative(c);
            if (sqrel(logic, op, k, mode) != canonical_rel(logic, op, k, mode)) {
                out.failure = "derived orders differ for " + logic.base_to_string(k);
                break;
            }
        }
        break;
    }
    case 'f': {
        const Operator op =
            Operator::from_assignment(logic, generate_faithful_assignment(logic, aux_seed));
        if (detect_critical_loop(logic).has_value()) break;
        const PostulateReport report = postulate_report(logic, op);
        if (!quasi_core_pass(report)) break;
        out.applicable = true;
        const QuantifierMode mode =
            report.g4_verified ? QuantifierMode::ByClass : QuantifierMode::ByBase;
        const int n = logic.interpretation_count();
        for (int c = 0; c < logic.class_count() && out.failure.empty(); ++c) {
            const BeliefBase& k = logic.class_representative(c);
            const PreferenceRelation step0 = canonical_rel(logic, op, k, mode);
            const DetachedPairs detached = detached_pairs(logic, op, k, mode);
            PreferenceRelation step1 = step0;
            for (const auto& [x, y] : detached.pairs) {
                step1.set(x, y, false);
                step1.set(y, x, false);
            }
            const PreferenceRelation step2 = transitive_closure(step1);
            for (int i = 0; i < n && out.failure.empty(); ++i)
                for (int j = 0; j < n; ++j)
                    if (step2.leq(i, j) && !step1.leq(i, j) && !detached.contains(i, j)) {
                        out.failure = "closure added a non-detached pair (" +
                                      logic.interpretation_name(i) + ", " +
                                      logic.interpretation_name(j) + ") for " +
                                      logic.base_to_string(k);
                        break;
                    }
        }
        break;
    }
    default:
        throw RevkitError(std::string("unknown sweep property: ") + property);
    }
    return out;
}

} // namespace

SweepReport run_sweep(char property, int cases, std::uint64_t seed,
                      const GeneratorProfile& profile, int threads) {
    static const std::map<char, std::string> descriptions = {
        {'a', "minimization over faithful assignments passes G1-G6"},
        {'b', "extracted assignments are faithful, min-friendly, min-expressible, compatible"},
        {'c', "operators passing G1, G5, G6 pass G4w"},
        {'d', "oracle-found relations sit pointwise below the operator-derived order"},
        {'e', "with a universal base the two derived orders coincide"},
        {'f', "transitive closure adds only detached pairs on loop-free cases"},
    };
    const auto it = descriptions.find(property);
    if (it == descriptions.end())
        throw RevkitError(std::string("unknown sweep property: ") + property);

    SweepReport report;
    report.property = property;
    report.description = it->second;
    report.cases = cases;

    std::vector<CaseOutcome> outcomes(static_cast<std::size_t>(cases));
    std::vector<std::uint64_t> case_seeds(static_cast<std::size_t>(cases));
    for (int i = 0; i < cases; ++i)
        case_seeds[i] = seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(i);

    auto work = [&](int start, int stride) {
        for (int i = start; i < cases; i += stride) {
            try {
                outcomes[i] = run_case(property, case_seeds[i], profile);
            } catch (const std::exception& e) {
                outcomes[i].applicable = true;
                outcomes[i].failure = std::string("exception: ") + e.what();
            }
        }
    };

    if (threads <= 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
        for (auto& th : pool) th.join();
    }

    for (int i = 0; i < cases; ++i) {
        if (outcomes[i].applicable) ++report.applicable;
        if (!outcomes[i].failure.empty())
            report.failures.push_back({i, case_seeds[i], outcomes[i].failure});
    }
    return report;
}

} // namespace revkit
