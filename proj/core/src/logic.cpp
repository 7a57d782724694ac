// Implementation of the base-logic core: family enumeration, semantic
// classes, the abstract union for each family kind, and the structural
// report (conjunction support, disjunctiveness, universal base, trios).

#include "revkit/logic.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

namespace revkit {

// ---------------------------------------------------------------------------
// BeliefBase

BeliefBase::BeliefBase(std::vector<int> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool BeliefBase::contains(int id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
}

bool BeliefBase::operator<(const BeliefBase& other) const {
    if (ids_.size() != other.ids_.size()) return ids_.size() < other.ids_.size();
    return ids_ < other.ids_;
}

bool lex_less(const BeliefBase& a, const BeliefBase& b) {
    return a.ids() < b.ids();
}

// ---------------------------------------------------------------------------
// Construction

BaseLogic::BaseLogic(std::vector<std::string> interpretation_names,
                     std::vector<Sentence> sentences,
                     FamilySpec family,
                     std::vector<ConjunctionEntry> conjunction)
    : interpretation_names_(std::move(interpretation_names)),
      sentences_(std::move(sentences)),
      family_(std::move(family)),
      conjunction_entries_(std::move(conjunction)) {
    validate_inputs();
    for (std::size_t i = 0; i < conjunction_entries_.size(); ++i) {
        const auto& e = conjunction_entries_[i];
        auto key = std::minmax(e.a, e.b);
        auto [it, inserted] = conjunction_map_.emplace(std::make_pair(key.first, key.second), e.result);
        if (!inserted && it->second != e.result)
            throw LogicFormatError("conjunction[" + std::to_string(i) + "]",
                                   "conflicting conjunction entries for the same pair");
    }
    enumerate_family();
    build_structure_report();
}

void BaseLogic::validate_inputs() const {
    const int n = interpretation_count();
    ModelSet::mask_for(n); // throws for out-of-range universes
    {
        std::set<std::string> seen;
        for (int i = 0; i < n; ++i) {
            if (interpretation_names_[i].empty())
                throw LogicFormatError("interpretations[" + std::to_string(i) + "]", "empty name");
            if (!seen.insert(interpretation_names_[i]).second)
                throw LogicFormatError("interpretations[" + std::to_string(i) + "]",
                                       "duplicate name '" + interpretation_names_[i] + "'");
        }
    }
    {
        std::set<std::string> seen;
        for (int s = 0; s < sentence_count(); ++s) {
            const auto& snt = sentences_[s];
            if (snt.name.empty())
                throw LogicFormatError("sentences[" + std::to_string(s) + "].name", "empty name");
            if (!seen.insert(snt.name).second)
                throw LogicFormatError("sentences[" + std::to_string(s) + "].name",
                                       "duplicate name '" + snt.name + "'");
            if (snt.models.universe_size() != n)
                throw LogicFormatError("sentences[" + std::to_string(s) + "].models",
                                       "universe size mismatch");
        }
    }
    auto check_id = [this](int id, const std::string& path) {
        if (id < 0 || id >= sentence_count())
            throw LogicFormatError(path, "sentence id out of range: " + std::to_string(id));
    };
    for (std::size_t i = 0; i < family_.listed_bases.size(); ++i)
        for (int id : family_.listed_bases[i].ids())
            check_id(id, "family.bases[" + std::to_string(i) + "]");
    if (family_.kind == FamilyKind::FiniteSets && family_.listed_bases.empty())
        throw LogicFormatError("family.bases", "an explicitly listed family must not be empty");
    if (family_.kind != FamilyKind::FiniteSets && !family_.listed_bases.empty())
        throw LogicFormatError("family.bases", "explicit base list is only valid for kind finite_sets");
    for (std::size_t i = 0; i < conjunction_entries_.size(); ++i) {
        const auto& e = conjunction_entries_[i];
        const std::string path = "conjunction[" + std::to_string(i) + "]";
        check_id(e.a, path);
        check_id(e.b, path);
        check_id(e.result, path);
        // The combination law: the result's models must be the intersection.
        if (sentences_[e.result].models !=
            sentences_[e.a].models.intersect(sentences_[e.b].models))
            throw LogicFormatError(path, "conjunction result models are not the intersection");
    }
}

int BaseLogic::enumeration_cap() {
    if (const char* env = std::getenv("REVKIT_ENUM_CAP")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1 && v <= 30) return static_cast<int>(v);
    }
    return 12;
}

namespace {

// Visit all k-subsets of {0..n-1} in lexicographic order, for k = lo..hi.
template <typename Fn>
void for_each_combination(int n, int lo, int hi, Fn&& fn) {
    for (int k = lo; k <= hi; ++k) {
        if (k == 0) {
            fn(std::vector<int>{});
            continue;
        }
        if (k > n) break;
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            fn(idx);
            int pos = k - 1;
            while (pos >= 0 && idx[pos] == n - k + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
}

} // namespace

void BaseLogic::enumerate_family() {
    const int n = interpretation_count();
    const int ns = sentence_count();
    auto add_base = [this](BeliefBase base) {
        ModelSet m = models_of(base);
        if (class_by_mask_.emplace(m.bits(), static_cast<int>(class_reps_.size())).second) {
            class_reps_.push_back(base);
            class_models_.push_back(m);
        }
        all_bases_.push_back(std::move(base));
    };

    switch (family_.kind) {
    case FamilyKind::ArbitrarySets: {
        const int cap = enumeration_cap();
        if (ns > cap) throw EnumerationTooLarge(ns, cap);
        for_each_combination(ns, family_.allow_empty ? 0 : 1, ns,
                             [&](const std::vector<int>& ids) { add_base(BeliefBase(ids)); });
        break;
    }
    case FamilyKind::FiniteSets: {
        std::vector<BeliefBase> bases = family_.listed_bases;
        std::sort(bases.begin(), bases.end());
        bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
        if (!family_.allow_empty)
            std::erase_if(bases, [](const BeliefBase& b) { return b.empty(); });
        for (auto& b : bases) add_base(std::move(b));
        break;
    }
    case FamilyKind::BeliefSets: {
        // The closed sets correspond one-to-one to the intersection-closed
        // model sets; enumerate those by fixpoint instead of the powerset.
        std::set<std::uint64_t> masks;
        masks.insert(ModelSet::mask_for(n)); // models of the empty premise set
        for (const auto& s : sentences_) masks.insert(s.models.bits());
        bool grew = true;
        const std::size_t limit = std::size_t{1} << std::min(enumeration_cap(), 16);
        while (grew) {
            grew = false;
            std::vector<std::uint64_t> snapshot(masks.begin(), masks.end());
            for (std::size_t i = 0; i < snapshot.size(); ++i)
                for (std::size_t j = i + 1; j < snapshot.size(); ++j)
                    if (masks.insert(snapshot[i] & snapshot[j]).second) grew = true;
            if (masks.size() > limit) throw EnumerationTooLarge(ns, enumeration_cap());
        }
        std::vector<BeliefBase> bases;
        for (std::uint64_t mask : masks) {
            std::vector<int> ids;
            for (int s = 0; s < ns; ++s)
                if ((mask & ~sentences_[s].models.bits()) == 0) ids.push_back(s);
            BeliefBase b(std::move(ids));
            if (b.empty() && !family_.allow_empty) continue;
            bases.push_back(std::move(b));
        }
        std::sort(bases.begin(), bases.end());
        for (auto& b : bases) add_base(std::move(b));
        break;
    }
    case FamilyKind::SingleSentences: {
        if (family_.allow_empty) add_base(BeliefBase());
        for (int s = 0; s < ns; ++s) add_base(BeliefBase({s}));
        break;
    }
    }
    if (all_bases_.empty())
        throw LogicFormatError("family", "the family of bases is empty");
}

// ---------------------------------------------------------------------------
// Vocabulary

int BaseLogic::interpretation_index(const std::string& name) const {
    for (int i = 0; i < interpretation_count(); ++i)
        if (interpretation_names_[i] == name) return i;
    return -1;
}

int BaseLogic::sentence_id(const std::string& name) const {
    for (int s = 0; s < sentence_count(); ++s)
        if (sentences_[s].name == name) return s;
    return -1;
}

// ---------------------------------------------------------------------------
// Semantics

ModelSet BaseLogic::models_of(const BeliefBase& base) const {
    ModelSet m = ModelSet::full(interpretation_count());
    for (int id : base.ids()) m = m.intersect(sentences_.at(id).models);
    return m;
}

bool BaseLogic::entails(const BeliefBase& premise, const BeliefBase& conclusion) const {
    return models_of(premise).subset_of(models_of(conclusion));
}

bool BaseLogic::equivalent(const BeliefBase& a, const BeliefBase& b) const {
    return models_of(a) == models_of(b);
}

BeliefBase BaseLogic::consequence_closure(const BeliefBase& base) const {
    ModelSet m = models_of(base);
    std::vector<int> ids;
    for (int s = 0; s < sentence_count(); ++s)
        if (m.subset_of(sentences_[s].models)) ids.push_back(s);
    return BeliefBase(std::move(ids));
}

BeliefBase BaseLogic::abstract_union(const BeliefBase& a, const BeliefBase& b) const {
    switch (family_.kind) {
    case FamilyKind::ArbitrarySets: {
        std::vector<int> merged = a.ids();
        merged.insert(merged.end(), b.ids().begin(), b.ids().end());
        return BeliefBase(std::move(merged));
    }
    case FamilyKind::BeliefSets: {
        std::vector<int> merged = a.ids();
        merged.insert(merged.end(), b.ids().begin(), b.ids().end());
        return consequence_closure(BeliefBase(std::move(merged)));
    }
    case FamilyKind::FiniteSets: {
        ModelSet target = models_of(a).intersect(models_of(b));
        for (const auto& base : all_bases_)
            if (models_of(base) == target) return base;
        throw FamilyNotClosed("no listed base has the models of " + base_to_string(a) +
                              " combined with " + base_to_string(b));
    }
    case FamilyKind::SingleSentences: {
        if (a.empty()) return b;
        if (b.empty()) return a;
        const int sa = a.ids().front(), sb = b.ids().front();
        if (sa == sb) return a;
        if (auto hit = conjunction_lookup(sa, sb)) return BeliefBase({*hit});
        ModelSet target = sentences_[sa].models.intersect(sentences_[sb].models);
        if (int c = class_of_models(target); c >= 0) return class_reps_[c];
        throw UnsupportedConjunction(sa, sb,
                                     "no conjunction available for " + sentences_[sa].name +
                                         " and " + sentences_[sb].name);
    }
    }
    throw RevkitError("unreachable family kind");
}

std::optional<int> BaseLogic::conjunction_lookup(int a, int b) const {
    auto key = std::minmax(a, b);
    auto it = conjunction_map_.find(std::make_pair(key.first, key.second));
    if (it == conjunction_map_.end()) return std::nullopt;
    return it->second;
}

bool BaseLogic::in_family(const BeliefBase& base) const {
    for (int id : base.ids())
        if (id < 0 || id >= sentence_count()) return false;
    if (base.empty() && !family_.allow_empty) return false;
    switch (family_.kind) {
    case FamilyKind::ArbitrarySets:
        return true;
    case FamilyKind::FiniteSets:
        return std::find(all_bases_.begin(), all_bases_.end(), base) != all_bases_.end();
    case FamilyKind::BeliefSets:
        return consequence_closure(base) == base;
    case FamilyKind::SingleSentences:
        return base.size() <= 1;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Classes

int BaseLogic::class_of(const BeliefBase& base) const {
    int c = class_of_models(models_of(base));
    if (c < 0) throw RevkitError("base " + base_to_string(base) + " is outside the enumerated family");
    return c;
}

int BaseLogic::class_of_models(const ModelSet& models) const {
    auto it = class_by_mask_.find(models.bits());
    return it == class_by_mask_.end() ? -1 : it->second;
}

// ---------------------------------------------------------------------------
// Structure report

void BaseLogic::build_structure_report() {
    const int n = interpretation_count();
    const bool every_mask_expressible =
        n < 31 && class_count() == (1 << n); // all 2^n model sets present

    // supports_conjunction: can any two family members be combined?
    switch (family_.kind) {
    case FamilyKind::ArbitrarySets:
    case FamilyKind::BeliefSets:
        structure_.supports_conjunction = {true, "closed under combination by construction"};
        break;
    case FamilyKind::FiniteSets: {
        structure_.supports_conjunction = {true, ""};
        for (std::size_t i = 0; i < all_bases_.size() && structure_.supports_conjunction.value; ++i)
            for (std::size_t j = i; j < all_bases_.size(); ++j) {
                ModelSet target = models_of(all_bases_[i]).intersect(models_of(all_bases_[j]));
                bool found = false;
                for (const auto& base : all_bases_)
                    if (models_of(base) == target) { found = true; break; }
                if (!found) {
                    structure_.supports_conjunction = {false, base_to_string(all_bases_[i]) + " with " +
                                                                  base_to_string(all_bases_[j])};
                    break;
                }
            }
        break;
    }
    case FamilyKind::SingleSentences: {
        if (every_mask_expressible) {
            structure_.supports_conjunction = {true, "every model set is some sentence's"};
            break;
        }
        structure_.supports_conjunction = {true, ""};
        for (int a = 0; a < sentence_count() && structure_.supports_conjunction.value; ++a)
            for (int b = a + 1; b < sentence_count(); ++b) {
                if (conjunction_lookup(a, b)) continue;
                ModelSet target = sentences_[a].models.intersect(sentences_[b].models);
                if (class_of_models(target) < 0) {
                    structure_.supports_conjunction = {false, sentences_[a].name + " with " +
                                                                  sentences_[b].name};
                    break;
                }
            }
        break;
    }
    }

    // is_disjunctive: the union of any two expressible sets is expressible.
    if (every_mask_expressible) {
        structure_.is_disjunctive = {true, "every model set is expressible"};
    } else {
        structure_.is_disjunctive = {true, ""};
        for (int c1 = 0; c1 < class_count() && structure_.is_disjunctive.value; ++c1)
            for (int c2 = c1; c2 < class_count(); ++c2) {
                ModelSet u = class_models_[c1].unite(class_models_[c2]);
                if (class_of_models(u) < 0) {
                    structure_.is_disjunctive = {false, base_to_string(class_reps_[c1]) + " with " +
                                                            base_to_string(class_reps_[c2])};
                    break;
                }
            }
    }

    // has_universal_base: some base has the whole universe as models.
    if (int c = class_of_models(ModelSet::full(n)); c >= 0)
        structure_.has_universal_base = {true, base_to_string(class_reps_[c])};
    else
        structure_.has_universal_base = {false, ""};

    // is_trio_expressible: every 3-element interpretation set is expressible.
    structure_.is_trio_expressible = {true, n < 3 ? "no 3-element subsets exist" : ""};
    for (int i = 0; i < n && structure_.is_trio_expressible.value; ++i)
        for (int j = i + 1; j < n && structure_.is_trio_expressible.value; ++j)
            for (int k = j + 1; k < n; ++k) {
                ModelSet trio = ModelSet::of(n, {i, j, k});
                if (class_of_models(trio) < 0) {
                    structure_.is_trio_expressible = {false, models_to_string(trio)};
                    break;
                }
            }
}

// ---------------------------------------------------------------------------
// Formatting

std::string BaseLogic::base_to_string(const BeliefBase& base) const {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < base.ids().size(); ++i) {
        if (i) out << ", ";
        out << sentences_.at(base.ids()[i]).name;
    }
    out << '}';
    return out.str();
}

std::string BaseLogic::models_to_string(const ModelSet& models) const {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (int i = 0; i < interpretation_count(); ++i) {
        if (!models.contains(i)) continue;
        if (!first) out << ", ";
        out << interpretation_names_[i];
        first = false;
    }
    out << '}';
    return out.str();
}

BeliefBase base_from_names(const BaseLogic& logic, const std::vector<std::string>& names) {
    std::vector<int> ids;
    for (const auto& name : names) {
        int id = logic.sentence_id(name);
        if (id < 0) throw LogicFormatError("base", "unknown sentence '" + name + "'");
        ids.push_back(id);
    }
    return BeliefBase(std::move(ids));
}

} // namespace revkit
