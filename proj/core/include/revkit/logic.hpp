// Finite base logics: a universe of interpretations, named sentences with
// explicit model sets, and a family of belief bases closed under an abstract
// union whose result models are always the intersection of the operands'
// models.  Construction eagerly enumerates the family and its semantic
// classes so that a fully built BaseLogic is immutable and safe to read from
// any number of threads.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "revkit/errors.hpp"
#include "revkit/model_set.hpp"

namespace revkit {

struct Sentence {
    std::string name;
    ModelSet models;
};

// How the family of bases is formed from the sentence pool.
enum class FamilyKind {
    ArbitrarySets,   // every finite set of sentences; union is literal set union
    FiniteSets,      // an explicitly listed family; union looked up by model set
    BeliefSets,      // all consequence-closed sets; union closes the set union
    SingleSentences, // singletons; union needs a conjunction (table or fallback)
};

// A belief base referenced by sentence ids, stored sorted and deduplicated.
class BeliefBase {
public:
    BeliefBase() = default;
    explicit BeliefBase(std::vector<int> ids);

    const std::vector<int>& ids() const { return ids_; }
    bool empty() const { return ids_.empty(); }
    std::size_t size() const { return ids_.size(); }
    bool contains(int id) const;

    bool operator==(const BeliefBase&) const = default;
    // Canonical order: fewer sentences first, then lexicographic on ids.
    bool operator<(const BeliefBase& other) const;

private:
    std::vector<int> ids_;
};

// Pure lexicographic order on the sorted id tuples (ignores size).
bool lex_less(const BeliefBase& a, const BeliefBase& b);

struct ConjunctionEntry {
    int a, b, result;
};

struct FamilySpec {
    FamilyKind kind = FamilyKind::ArbitrarySets;
    bool allow_empty = true;
    std::vector<BeliefBase> listed_bases; // FiniteSets only
};

struct StructureFlag {
    bool value = false;
    std::string witness; // human-readable; empty when nothing useful to show
};

struct StructureReport {
    StructureFlag supports_conjunction;
    StructureFlag is_disjunctive;
    StructureFlag has_universal_base;
    StructureFlag is_trio_expressible;
};

class BaseLogic {
public:
    BaseLogic(std::vector<std::string> interpretation_names,
              std::vector<Sentence> sentences,
              FamilySpec family,
              std::vector<ConjunctionEntry> conjunction = {});

    // --- vocabulary ----------------------------------------------------
    int interpretation_count() const { return static_cast<int>(interpretation_names_.size()); }
    const std::string& interpretation_name(int i) const { return interpretation_names_.at(i); }
    int interpretation_index(const std::string& name) const; // -1 when unknown

    int sentence_count() const { return static_cast<int>(sentences_.size()); }
    const Sentence& sentence(int id) const { return sentences_.at(id); }
    int sentence_id(const std::string& name) const; // -1 when unknown

    const FamilySpec& family() const { return family_; }
    const std::vector<ConjunctionEntry>& conjunction_entries() const { return conjunction_entries_; }

    // --- semantics -----------------------------------------------------
    ModelSet models_of(const BeliefBase& base) const; // empty base denotes the whole universe
    bool consistent(const BeliefBase& base) const { return !models_of(base).is_empty(); }
    bool entails(const BeliefBase& premise, const BeliefBase& conclusion) const;
    bool equivalent(const BeliefBase& a, const BeliefBase& b) const;
    BeliefBase consequence_closure(const BeliefBase& base) const;
    BeliefBase abstract_union(const BeliefBase& a, const BeliefBase& b) const;
    bool in_family(const BeliefBase& base) const;

    // --- enumeration (cached at construction) ---------------------------
    const std::vector<BeliefBase>& all_bases() const { return all_bases_; }
    int class_count() const { return static_cast<int>(class_models_.size()); }
    int class_of(const BeliefBase& base) const;
    int class_of_models(const ModelSet& models) const; // -1 when inexpressible
    const BeliefBase& class_representative(int class_id) const { return class_reps_.at(class_id); }
    const ModelSet& class_models(int class_id) const { return class_models_.at(class_id); }

    const StructureReport& structure_report() const { return structure_; }

    // Cap on |L| for powerset-style enumeration; REVKIT_ENUM_CAP overrides.
    static int enumeration_cap();

    // --- formatting helpers ---------------------------------------------
    std::string base_to_string(const BeliefBase& base) const;   // e.g. "{psi0, phi1}"
    std::string models_to_string(const ModelSet& models) const; // e.g. "{w0, w2}"

private:
    void validate_inputs() const;
    void enumerate_family();
    void build_structure_report();
    std::optional<int> conjunction_lookup(int a, int b) const;

    std::vector<std::string> interpretation_names_;
    std::vector<Sentence> sentences_;
    FamilySpec family_;
    std::vector<ConjunctionEntry> conjunction_entries_;
    std::map<std::pair<int, int>, int> conjunction_map_;

    std::vector<BeliefBase> all_bases_;
    std::vector<BeliefBase> class_reps_;
    std::vector<ModelSet> class_models_;
    std::map<std::uint64_t, int> class_by_mask_;
    StructureReport structure_;
};

// Parse a base from sentence names; throws LogicFormatError on unknown names.
BeliefBase base_from_names(const BaseLogic& logic, const std::vector<std::string>& names);

} // namespace revkit
