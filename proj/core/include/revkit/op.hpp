// Base revision operators and the postulate checker.  Operators are value
// types: a lookup table, one of the built-in revision rules, or a function
// synthesized from an assignment.  The postulate report checks the six core
// postulates plus the weak syntax-independence, expressible-disjunctive-
// factoring, and acyclicity conditions, with deterministic first witnesses.

#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "revkit/assignment.hpp"
#include "revkit/logic.hpp"

namespace revkit {

enum class OperatorKind { Table, Trivial, PlainUnion, FromAssignment, FromLoop, Builtin };
enum class TableFallback { Error, Trivial };

struct TableEntry {
    BeliefBase k, gamma, result;
};

// K * Gamma = K combined with Gamma when consistent, otherwise Gamma.
BeliefBase trivial_revision(const BaseLogic& logic, const BeliefBase& k, const BeliefBase& gamma);

class Operator {
public:
    using Fn = std::function<BeliefBase(const BaseLogic&, const BeliefBase&, const BeliefBase&)>;

    Operator() = default;

    static Operator trivial();
    static Operator plain_union();
    static Operator table(std::vector<TableEntry> entries, TableFallback fallback);
    // Revision by minimization: K * Gamma has exactly the minimal models of
    // Gamma under the relation assigned to K.  Validates every (key, class)
    // pair eagerly and throws MinSetInexpressible when a minimum cannot be
    // expressed as a base.
    static Operator from_assignment(const BaseLogic& logic, const Assignment& assignment);
    // A named revision rule (used by the gallery and JSON round trips).
    static Operator builtin(std::string name, Fn fn);
    // Tag a synthesized function as loop-derived (see critical_loop.hpp).
    // The loop handle is kept so the operator can be serialized; the class
    // is only forward-declared here to avoid a header cycle.
    static Operator from_loop_fn(Fn fn, std::shared_ptr<const struct CriticalLoop> loop = nullptr);

    BeliefBase revise(const BaseLogic& logic, const BeliefBase& k, const BeliefBase& gamma) const;

    OperatorKind kind() const { return kind_; }
    TableFallback fallback() const { return fallback_; }
    const std::vector<TableEntry>& entries() const;
    const std::string& name() const { return name_; }
    const std::optional<Assignment>& source_assignment() const { return assignment_; }
    const std::shared_ptr<const struct CriticalLoop>& source_loop() const { return loop_; }

private:
    OperatorKind kind_ = OperatorKind::Trivial;
    TableFallback fallback_ = TableFallback::Trivial;
    std::string name_;
    Fn fn_;
    std::shared_ptr<const std::map<std::pair<BeliefBase, BeliefBase>, BeliefBase>> table_;
    std::shared_ptr<const std::vector<TableEntry>> entry_list_;
    std::optional<Assignment> assignment_;
    std::shared_ptr<const struct CriticalLoop> loop_;
};

// ---------------------------------------------------------------------------
// Postulates

enum class PostulateId { G1, G2, G3, G4, G5, G6, G4w, EDF, Acyc };

std::string postulate_name(PostulateId id);

enum class CheckMode { Semantic, Full };

struct PostulateWitness {
    BeliefBase k;       // the base revised
    BeliefBase k2;      // second base (G4: the class representative)
    BeliefBase gamma1;
    BeliefBase gamma2;
    BeliefBase gamma3;  // EDF: second disjunct
    std::vector<ModelSet> model_sets; // the conflicting model sets, in check order
    std::string note;
};

struct PostulateResult {
    bool checked = false;
    bool pass = false;
    std::optional<PostulateWitness> witness;
};

struct PostulateOptions {
    bool edf = false;
    bool acyc = false;
};

struct PostulateReport {
    CheckMode mode = CheckMode::Semantic;
    bool g4_verified = false; // class-level quantification is sound
    std::string note;
    std::map<PostulateId, PostulateResult> results;

    bool pass(PostulateId id) const {
        auto it = results.find(id);
        return it != results.end() && it->second.checked && it->second.pass;
    }
    // G1..G6 all pass.
    bool core_pass() const {
        return pass(PostulateId::G1) && pass(PostulateId::G2) && pass(PostulateId::G3) &&
               pass(PostulateId::G4) && pass(PostulateId::G5) && pass(PostulateId::G6);
    }
};

// Checks G1..G6 and G4w; EDF and Acyc on request.  Semantic mode verifies G4
// over every base pair first and then quantifies the remaining postulates
// over class representatives (sound exactly when G4 holds; the report records
// this).  Full mode quantifies everything over all bases.
PostulateReport postulate_report(const BaseLogic& logic, const Operator& op,
                                 CheckMode mode = CheckMode::Semantic,
                                 PostulateOptions options = {});

// First (K, Gamma) on which the two operators produce different model sets;
// quantified over all base pairs in full mode, class representatives
// otherwise.
std::optional<std::pair<BeliefBase, BeliefBase>> semantically_equal(const BaseLogic& logic,
                                                                    const Operator& a,
                                                                    const Operator& b,
                                                                    CheckMode mode);

struct CompatibilityResult {
    bool compatible = false;
    // First failure: key base, class of the revising base, the two sets.
    BeliefBase key;
    int gamma_class = -1;
    ModelSet operator_models;
    ModelSet minimal_models;
};

// Does Mod(K * Gamma) equal the minimal models of Gamma under the K-relation
// for every (key, class) pair?
CompatibilityResult compatibility_check(const BaseLogic& logic, const Operator& op,
                                        const Assignment& assignment);

// Re-keys a syntactic assignment by class, picking each class representative's
// relation, after verifying the operator is syntax-independent (G4); throws
// PostulatePrerequisiteFailed otherwise.  Syntax independence is what makes
// the choice of representative immaterial for compatibility.
Assignment faithfulize(const BaseLogic& logic, const Assignment& assignment, const Operator& op);

} // namespace revkit
