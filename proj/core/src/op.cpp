// Operator construction and the postulate checker.  The checker verifies
// syntax-independence (G4) across every base pair by comparing each output
// against the class-representative output, then checks the remaining
// postulates over class representatives; expressible disjunctive factoring
// and acyclicity are always checked at class level.

#include "revkit/op.hpp"

#include <algorithm>

#include "revkit/relation.hpp"

namespace revkit {

BeliefBase trivial_revision(const BaseLogic& logic, const BeliefBase& k, const BeliefBase& gamma) {
    BeliefBase combined = logic.abstract_union(k, gamma);
    return logic.consistent(combined) ? combined : gamma;
}

Operator Operator::trivial() {
    Operator op;
    op.kind_ = OperatorKind::Trivial;
    op.name_ = "trivial";
    op.fn_ = [](const BaseLogic& logic, const BeliefBase& k, const BeliefBase& gamma) {
        return trivial_revision(logic, k, gamma);
    };
    return op;
}

Operator Operator::plain_union() {
    Operator op;
    op.kind_ = OperatorKind::PlainUnion;
    op.name_ = "plain_union";
    op.fn_ = [](const BaseLogic& logic, const BeliefBase& k, const BeliefBase& gamma) {
        return logic.abstract_union(k, gamma);
    };
    return op;
}

Operator Operator::table(std::vector<TableEntry> entries, TableFallback fallback) {
    Operator op;
    op.kind_ = OperatorKind::Table;
    op.fallback_ = fallback;
    op.name_ = "table";
    auto list = std::make_shared<std::vector<TableEntry>>(std::move(entries));
    auto map = std::make_shared<std::map<std::pair<BeliefBase, BeliefBase>, BeliefBase>>();
    for (const auto& e : *list) {
        auto [it, inserted] = map->emplace(std::make_pair(e.k, e.gamma), e.result);
        if (!inserted && !(it->second == e.result))
            throw RevkitError("conflicting table entries for the same base pair");
    }
    op.entry_list_ = std::move(list);
    op.table_ = std::move(map);
    return op;
}

Operator Operator::from_assignment(const BaseLogic& logic, const Assignment& assignment) {
    if (!assignment.covers(logic))
        throw RevkitError("assignment does not cover the family of bases");

    // Materialize the revision results eagerly so inexpressible minima are
    // reported at construction time.
    if (assignment.keying() == Keying::Semantic) {
        auto results = std::make_shared<std::vector<std::vector<BeliefBase>>>();
        results->resize(logic.class_count());
        for (int ck = 0; ck < logic.class_count(); ++ck) {
            const PreferenceRelation& rel = assignment.rel_for_class(ck);
            (*results)[ck].reserve(logic.class_count());
            for (int cg = 0; cg < logic.class_count(); ++cg)
                (*results)[ck].push_back(
                    min_expressibility_witness(logic, min_models(logic.class_models(cg), rel)));
        }
        Operator op;
        op.kind_ = OperatorKind::FromAssignment;
        op.name_ = "from_assignment";
        op.assignment_ = assignment;
        op.fn_ = [results](const BaseLogic& l, const BeliefBase& k, const BeliefBase& gamma) {
            return (*results)[l.class_of(k)][l.class_of(gamma)];
        };
        return op;
    }

    auto results = std::make_shared<std::map<BeliefBase, std::vector<BeliefBase>>>();
    for (const auto& [base, rel] : assignment.base_entries()) {
        std::vector<BeliefBase> row;
        row.reserve(logic.class_count());
        for (int cg = 0; cg < logic.class_count(); ++cg)
            row.push_back(min_expressibility_witness(logic, min_models(logic.class_models(cg), rel)));
        results->emplace(base, std::move(row));
    }
    Operator op;
    op.kind_ = OperatorKind::FromAssignment;
    op.name_ = "from_assignment";
    op.assignment_ = assignment;
    op.fn_ = [results](const BaseLogic& l, const BeliefBase& k, const BeliefBase& gamma) {
        auto it = results->find(k);
        if (it == results->end())
            throw RevkitError("assignment has no relation for base " + l.base_to_string(k));
        return it->second[l.class_of(gamma)];
    };
    return op;
}

Operator Operator::builtin(std::string name, Fn fn) {
    Operator op;
    op.kind_ = OperatorKind::Builtin;
    op.name_ = std::move(name);
    op.fn_ = std::move(fn);
    return op;
}

Operator Operator::from_loop_fn(Fn fn, std::shared_ptr<const CriticalLoop> loop) {
    Operator op;
    op.kind_ = OperatorKind::FromLoop;
    op.name_ = "from_loop";
    op.fn_ = std::move(fn);
    op.loop_ = std::move(loop);
    return op;
}

const std::vector<TableEntry>& Operator::entries() const {
    static const std::vector<TableEntry> none;
    return entry_list_ ? *entry_list_ : none;
}

BeliefBase Operator::revise(const BaseLogic& logic, const BeliefBase& k,
                            const BeliefBase& gamma) const {
    if (kind_ == OperatorKind::Table) {
        auto it = table_->find(std::make_pair(k, gamma));
        if (it != table_->end()) return it->second;
        if (fallback_ == TableFallback::Trivial) return trivial_revision(logic, k, gamma);
        throw OperatorDomainError("operator table has no entry for (" + logic.base_to_string(k) +
                                  ", " + logic.base_to_string(gamma) + ")");
    }
    return fn_(logic, k, gamma);
}

// ---------------------------------------------------------------------------
// Postulates

std::string postulate_name(PostulateId id) {
    switch (id) {
    case PostulateId::G1: return "G1";
    case PostulateId::G2: return "G2";
    case PostulateId::G3: return "G3";
    case PostulateId::G4: return "G4";
    case PostulateId::G5: return "G5";
    case PostulateId::G6: return "G6";
    case PostulateId::G4w: return "G4w";
    case PostulateId::EDF: return "EDF";
    case PostulateId::Acyc: return "Acyc";
    }
    return "?";
}

namespace {

struct CheckContext {
    const BaseLogic& logic;
    const Operator& op;
    int classes;
    // models of op(rep(ck), rep(cg))
    std::vector<std::vector<ModelSet>> rep_out;
    // class of rep(c1) combined with rep(c2)
    std::vector<std::vector<int>> union_class;
};

CheckContext make_context(const BaseLogic& logic, const Operator& op) {
    CheckContext ctx{logic, op, logic.class_count(), {}, {}};
    ctx.rep_out.assign(ctx.classes, std::vector<ModelSet>(ctx.classes));
    for (int ck = 0; ck < ctx.classes; ++ck)
        for (int cg = 0; cg < ctx.classes; ++cg)
            ctx.rep_out[ck][cg] = logic.models_of(
                op.revise(logic, logic.class_representative(ck), logic.class_representative(cg)));
    ctx.union_class.assign(ctx.classes, std::vector<int>(ctx.classes, -1));
    for (int c1 = 0; c1 < ctx.classes; ++c1)
        for (int c2 = 0; c2 < ctx.classes; ++c2)
            ctx.union_class[c1][c2] = logic.class_of(logic.abstract_union(
                logic.class_representative(c1), logic.class_representative(c2)));
    return ctx;
}

// G4 over every base pair: each output must match its class-representative
// output.  This simultaneously validates that class-level checks are sound.
PostulateResult check_g4_full(const CheckContext& ctx) {
    PostulateResult result{true, true, std::nullopt};
    const auto& logic = ctx.logic;
    for (const auto& k : logic.all_bases()) {
        const int ck = logic.class_of(k);
        for (const auto& gamma : logic.all_bases()) {
            const int cg = logic.class_of(gamma);
            ModelSet out = logic.models_of(ctx.op.revise(logic, k, gamma));
            if (out == ctx.rep_out[ck][cg]) continue;
            result.pass = false;
            result.witness = PostulateWitness{k,
                                              logic.class_representative(ck),
                                              gamma,
                                              logic.class_representative(cg),
                                              {},
                                              {out, ctx.rep_out[ck][cg]},
                                              "output differs from the representative pair's"};
            return result;
        }
    }
    return result;
}

PostulateResult check_g4w_full(const CheckContext& ctx) {
    PostulateResult result{true, true, std::nullopt};
    const auto& logic = ctx.logic;
    for (const auto& k : logic.all_bases()) {
        for (const auto& gamma : logic.all_bases()) {
            const int cg = logic.class_of(gamma);
            ModelSet out = logic.models_of(ctx.op.revise(logic, k, gamma));
            ModelSet rep_out =
                logic.models_of(ctx.op.revise(logic, k, logic.class_representative(cg)));
            if (out == rep_out) continue;
            result.pass = false;
            result.witness = PostulateWitness{
                k, {}, gamma, logic.class_representative(cg), {}, {out, rep_out}, ""};
            return result;
        }
    }
    return result;
}

} // namespace

PostulateReport postulate_report(const BaseLogic& logic, const Operator& op, CheckMode mode,
                                 PostulateOptions options) {
    PostulateReport report;
    report.mode = mode;
    CheckContext ctx = make_context(logic, op);
    const int C = ctx.classes;

    report.results[PostulateId::G4] = check_g4_full(ctx);
    report.g4_verified = report.results[PostulateId::G4].pass;
    if (mode == CheckMode::Semantic && !report.g4_verified)
        report.note = "class-level results are unreliable because G4 failed";

    // Helper quantifying (K, Gamma1[, Gamma2]) either over class
    // representatives (semantic) or over every base (full).
    auto bases_of = [&](bool semantic) -> std::vector<BeliefBase> {
        if (semantic) {
            std::vector<BeliefBase> reps;
            for (int c = 0; c < C; ++c) reps.push_back(logic.class_representative(c));
            return reps;
        }
        return logic.all_bases();
    };
    const bool semantic = mode == CheckMode::Semantic;
    const std::vector<BeliefBase> domain = bases_of(semantic);

    auto out_models = [&](const BeliefBase& k, const BeliefBase& gamma) {
        if (semantic) return ctx.rep_out[logic.class_of(k)][logic.class_of(gamma)];
        return logic.models_of(op.revise(logic, k, gamma));
    };

    // G1: the revision result entails the new information.
    {
        PostulateResult r{true, true, std::nullopt};
        for (const auto& k : domain) {
            for (const auto& gamma : domain) {
                ModelSet out = out_models(k, gamma);
                ModelSet gm = logic.models_of(gamma);
                if (out.subset_of(gm)) continue;
                r.pass = false;
                r.witness = PostulateWitness{k, {}, gamma, {}, {}, {out, gm}, ""};
                break;
            }
            if (!r.pass) break;
        }
        report.results[PostulateId::G1] = r;
    }

    // G2: when K and Gamma are jointly consistent, revision is combination.
    {
        PostulateResult r{true, true, std::nullopt};
        for (const auto& k : domain) {
            ModelSet km = logic.models_of(k);
            for (const auto& gamma : domain) {
                ModelSet inter = km.intersect(logic.models_of(gamma));
                if (inter.is_empty()) continue;
                ModelSet out = out_models(k, gamma);
                if (out == inter) continue;
                r.pass = false;
                r.witness = PostulateWitness{k, {}, gamma, {}, {}, {out, inter}, ""};
                break;
            }
            if (!r.pass) break;
        }
        report.results[PostulateId::G2] = r;
    }

    // G3: revising by something consistent yields something consistent.
    {
        PostulateResult r{true, true, std::nullopt};
        for (const auto& k : domain) {
            for (const auto& gamma : domain) {
                if (logic.models_of(gamma).is_empty()) continue;
                ModelSet out = out_models(k, gamma);
                if (!out.is_empty()) continue;
                r.pass = false;
                r.witness = PostulateWitness{k, {}, gamma, {}, {}, {out}, ""};
                break;
            }
            if (!r.pass) break;
        }
        report.results[PostulateId::G3] = r;
    }

    // G5 and G6 relate revision by combined information to combining after
    // revision:  (K * G1) combined with G2  vs  K * (G1 combined with G2).
    {
        PostulateResult g5{true, true, std::nullopt};
        PostulateResult g6{true, true, std::nullopt};
        for (const auto& k : domain) {
            for (const auto& g1 : domain) {
                for (const auto& g2 : domain) {
                    ModelSet lhs = out_models(k, g1).intersect(logic.models_of(g2));
                    ModelSet rhs;
                    if (semantic) {
                        int cu = ctx.union_class[logic.class_of(g1)][logic.class_of(g2)];
                        rhs = ctx.rep_out[logic.class_of(k)][cu];
                    } else {
                        rhs = logic.models_of(op.revise(logic, k, logic.abstract_union(g1, g2)));
                    }
                    if (g5.pass && !lhs.subset_of(rhs)) {
                        g5.pass = false;
                        g5.witness = PostulateWitness{k, {}, g1, g2, {}, {lhs, rhs}, ""};
                    }
                    if (g6.pass && !lhs.is_empty() && !rhs.subset_of(lhs)) {
                        g6.pass = false;
                        g6.witness = PostulateWitness{k, {}, g1, g2, {}, {lhs, rhs}, ""};
                    }
                    if (!g5.pass && !g6.pass) break;
                }
                if (!g5.pass && !g6.pass) break;
            }
            if (!g5.pass && !g6.pass) break;
        }
        report.results[PostulateId::G5] = g5;
        report.results[PostulateId::G6] = g6;
    }

    // G4w: equivalent new information produces equivalent results (implied by
    // G4; verified over every base when G4 does not hold).
    if (report.g4_verified) {
        PostulateResult r{true, true, std::nullopt};
        r.witness = std::nullopt;
        report.results[PostulateId::G4w] = r;
    } else {
        report.results[PostulateId::G4w] = check_g4w_full(ctx);
    }

    // Expressible disjunctive factoring, class level: whenever the union of
    // two model sets is expressible, revising by it picks one side or their
    // union of results.
    if (options.edf) {
        PostulateResult r{true, true, std::nullopt};
        for (int ck = 0; ck < C && r.pass; ++ck)
            for (int c1 = 0; c1 < C && r.pass; ++c1)
                for (int c2 = c1; c2 < C; ++c2) {
                    int cu = logic.class_of_models(logic.class_models(c1).unite(logic.class_models(c2)));
                    if (cu < 0) continue; // union not expressible: nothing required
                    ModelSet whole = ctx.rep_out[ck][cu];
                    ModelSet left = ctx.rep_out[ck][c1];
                    ModelSet right = ctx.rep_out[ck][c2];
                    if (whole == left || whole == right || whole == left.unite(right)) continue;
                    r.pass = false;
                    r.witness = PostulateWitness{logic.class_representative(ck),
                                                 {},
                                                 logic.class_representative(cu),
                                                 logic.class_representative(c1),
                                                 logic.class_representative(c2),
                                                 {whole, left, right},
                                                 ""};
                    break;
                }
        report.results[PostulateId::EDF] = r;
    }

    // Acyclicity, class level: whenever revision results chain around a
    // cycle of classes, every link must also hold in reverse.
    if (options.acyc) {
        PostulateResult r{true, true, std::nullopt};
        for (int ck = 0; ck < C && r.pass; ++ck) {
            std::vector<std::vector<char>> edge(C, std::vector<char>(C, 0));
            for (int u = 0; u < C; ++u)
                for (int v = 0; v < C; ++v)
                    edge[u][v] = !logic.class_models(u).intersect(ctx.rep_out[ck][v]).is_empty();
            std::vector<std::vector<char>> reach = edge;
            for (int m = 0; m < C; ++m)
                for (int u = 0; u < C; ++u) {
                    if (!reach[u][m]) continue;
                    for (int v = 0; v < C; ++v)
                        if (reach[m][v]) reach[u][v] = 1;
                }
            for (int u = 0; u < C && r.pass; ++u)
                for (int v = 0; v < C; ++v)
                    if (edge[u][v] && reach[v][u] && !edge[v][u]) {
                        r.pass = false;
                        r.witness = PostulateWitness{logic.class_representative(ck),
                                                     {},
                                                     logic.class_representative(u),
                                                     logic.class_representative(v),
                                                     {},
                                                     {},
                                                     "link on a cycle with no reverse link"};
                        break;
                    }
        }
        report.results[PostulateId::Acyc] = r;
    }

    return report;
}

std::optional<std::pair<BeliefBase, BeliefBase>> semantically_equal(const BaseLogic& logic,
                                                                    const Operator& a,
                                                                    const Operator& b,
                                                                    CheckMode mode) {
    auto differs = [&](const BeliefBase& k, const BeliefBase& gamma) {
        return !(logic.models_of(a.revise(logic, k, gamma)) ==
                 logic.models_of(b.revise(logic, k, gamma)));
    };
    if (mode == CheckMode::Semantic) {
        for (int ck = 0; ck < logic.class_count(); ++ck)
            for (int cg = 0; cg < logic.class_count(); ++cg) {
                const auto& k = logic.class_representative(ck);
                const auto& g = logic.class_representative(cg);
                if (differs(k, g)) return std::make_pair(k, g);
            }
        return std::nullopt;
    }
    for (const auto& k : logic.all_bases())
        for (const auto& gamma : logic.all_bases())
            if (differs(k, gamma)) return std::make_pair(k, gamma);
    return std::nullopt;
}

CompatibilityResult compatibility_check(const BaseLogic& logic, const Operator& op,
                                        const Assignment& assignment) {
    CompatibilityResult result;
    result.compatible = true;

    std::vector<std::pair<BeliefBase, const PreferenceRelation*>> keys;
    if (assignment.keying() == Keying::Semantic) {
        for (int c = 0; c < logic.class_count(); ++c)
            keys.emplace_back(logic.class_representative(c), &assignment.rel_for_class(c));
    } else {
        for (const auto& [base, rel] : assignment.base_entries()) keys.emplace_back(base, &rel);
    }

    for (const auto& [key, rel] : keys) {
        for (int cg = 0; cg < logic.class_count(); ++cg) {
            ModelSet expected = min_models(logic.class_models(cg), *rel);
            ModelSet actual =
                logic.models_of(op.revise(logic, key, logic.class_representative(cg)));
            if (actual == expected) continue;
            result.compatible = false;
            result.key = key;
            result.gamma_class = cg;
            result.operator_models = actual;
            result.minimal_models = expected;
            return result;
        }
    }
    return result;
}

Assignment faithfulize(const BaseLogic& logic, const Assignment& assignment, const Operator& op) {
    PostulateReport report = postulate_report(logic, op);
    if (!report.pass(PostulateId::G4)) throw PostulatePrerequisiteFailed("G4");
    return faithfulize(logic, assignment);
}

} // namespace revkit
