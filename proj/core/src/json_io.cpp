// JSON readers and writers for the revkit value types.  The readers are
// deliberately strict: every structural mistake is reported through
// LogicFormatError with the document origin and a JSON-pointer-style path
// to the first offending element, so a bad file fails fast and precisely.
// Writers emit alphabetically sorted keys with two-space indentation, which
// makes serialization deterministic byte for byte.

#include "revkit/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "revkit/errors.hpp"
#include "revkit/gallery.hpp"

namespace revkit {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& path,
                       const std::string& message) {
    throw LogicFormatError(origin, (path.empty() ? "/" : path) + ": " + message);
}

json parse_or_fail(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw LogicFormatError(origin, e.what());
    }
}

std::string child(const std::string& path, const std::string& key) {
    return path + "/" + key;
}

std::string child(const std::string& path, std::size_t index) {
    return path + "/" + std::to_string(index);
}

const json& need(const json& obj, const std::string& origin, const std::string& path,
                 const char* key) {
    if (!obj.is_object()) fail(origin, path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end())
        fail(origin, path, std::string("missing required key \"") + key + "\"");
    return *it;
}

const json* maybe(const json& obj, const char* key) {
    if (!obj.is_object()) return nullptr;
    auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
}

std::string as_string(const json& v, const std::string& origin, const std::string& path) {
    if (!v.is_string()) fail(origin, path, "expected a string");
    return v.get<std::string>();
}

bool as_bool(const json& v, const std::string& origin, const std::string& path) {
    if (!v.is_boolean()) fail(origin, path, "expected a boolean");
    return v.get<bool>();
}

int as_int(const json& v, const std::string& origin, const std::string& path) {
    if (!v.is_number_integer()) fail(origin, path, "expected an integer");
    return v.get<int>();
}

const json& as_array(const json& v, const std::string& origin, const std::string& path) {
    if (!v.is_array()) fail(origin, path, "expected an array");
    return v;
}

// --- sentence-name arrays <-> BeliefBase ---

json base_value(const BaseLogic& logic, const BeliefBase& base) {
    json out = json::array();
    for (int id : base.ids()) out.push_back(logic.sentence(id).name);
    return out;
}

BeliefBase base_at(const BaseLogic& logic, const json& v, const std::string& origin,
                   const std::string& path) {
    as_array(v, origin, path);
    std::vector<int> ids;
    ids.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string name = as_string(v[i], origin, child(path, i));
        const int id = logic.sentence_id(name);
        if (id < 0) fail(origin, child(path, i), "unknown sentence \"" + name + "\"");
        ids.push_back(id);
    }
    return BeliefBase(std::move(ids));
}

BeliefBase family_base_at(const BaseLogic& logic, const json& v, const std::string& origin,
                          const std::string& path) {
    BeliefBase base = base_at(logic, v, origin, path);
    if (!logic.in_family(base))
        fail(origin, path, "base " + logic.base_to_string(base) +
                               " is not in the logic's family");
    return base;
}

// --- relation pairs ---

json pairs_value(const PreferenceRelation& rel) {
    json out = json::array();
    for (const auto& [i, j] : rel.pairs()) out.push_back(json::array({i, j}));
    return out;
}

PreferenceRelation pairs_at(const BaseLogic& logic, const json& v, const std::string& origin,
                            const std::string& path) {
    as_array(v, origin, path);
    const int n = logic.interpretation_count();
    PreferenceRelation rel(n);
    for (std::size_t e = 0; e < v.size(); ++e) {
        const std::string p = child(path, e);
        const json& pair = v[e];
        if (!pair.is_array() || pair.size() != 2)
            fail(origin, p, "expected an [i, j] index pair");
        const int i = as_int(pair[0], origin, child(p, std::size_t{0}));
        const int j = as_int(pair[1], origin, child(p, std::size_t{1}));
        if (i < 0 || i >= n || j < 0 || j >= n)
            fail(origin, p, "interpretation index out of range");
        rel.set(i, j);
    }
    return rel;
}

json relation_value(const PreferenceRelation& rel) {
    json out;
    out["size"] = rel.size();
    out["pairs"] = pairs_value(rel);
    json matrix = json::array();
    for (int i = 0; i < rel.size(); ++i) {
        std::string row(static_cast<std::size_t>(rel.size()), '0');
        for (int j = 0; j < rel.size(); ++j)
            if (rel.leq(i, j)) row[static_cast<std::size_t>(j)] = '1';
        matrix.push_back(row);
    }
    out["matrix"] = std::move(matrix);
    return out;
}

PreferenceRelation relation_at(const BaseLogic& logic, const json& v,
                               const std::string& origin, const std::string& path) {
    if (!v.is_object()) fail(origin, path, "expected a relation object");
    if (const json* size = maybe(v, "size")) {
        if (as_int(*size, origin, child(path, "size")) != logic.interpretation_count())
            fail(origin, child(path, "size"),
                 "size does not match the logic's interpretation count");
    }
    if (const json* fb = maybe(v, "for_base"))
        family_base_at(logic, *fb, origin, child(path, "for_base"));
    return pairs_at(logic, need(v, origin, path, "pairs"), origin, child(path, "pairs"));
}

// --- assignments ---

json assignment_value(const BaseLogic& logic, const Assignment& assignment) {
    json out;
    json entries = json::array();
    if (assignment.keying() == Keying::Semantic) {
        out["keying"] = "semantic";
        const auto& by_class = assignment.class_entries();
        for (std::size_t c = 0; c < by_class.size(); ++c) {
            json entry;
            entry["class_of"] = base_value(logic, logic.class_representative(static_cast<int>(c)));
            entry["pairs"] = pairs_value(by_class[c]);
            entries.push_back(std::move(entry));
        }
    } else {
        out["keying"] = "syntactic";
        for (const auto& [base, rel] : assignment.base_entries()) {
            json entry;
            entry["base"] = base_value(logic, base);
            entry["pairs"] = pairs_value(rel);
            entries.push_back(std::move(entry));
        }
    }
    out["entries"] = std::move(entries);
    return out;
}

Assignment assignment_at(const BaseLogic& logic, const json& v, const std::string& origin,
                         const std::string& path) {
    const std::string keying =
        as_string(need(v, origin, path, "keying"), origin, child(path, "keying"));
    const json& entries = as_array(need(v, origin, path, "entries"), origin,
                                   child(path, "entries"));
    if (keying == "semantic") {
        std::vector<PreferenceRelation> by_class(
            static_cast<std::size_t>(logic.class_count()),
            PreferenceRelation(logic.interpretation_count()));
        std::vector<bool> seen(static_cast<std::size_t>(logic.class_count()), false);
        for (std::size_t e = 0; e < entries.size(); ++e) {
            const std::string p = child(child(path, "entries"), e);
            const BeliefBase key = family_base_at(
                logic, need(entries[e], origin, p, "class_of"), origin, child(p, "class_of"));
            const int c = logic.class_of(key);
            if (seen[static_cast<std::size_t>(c)])
                fail(origin, child(p, "class_of"),
                     "duplicate entry for the class of " + logic.base_to_string(key));
            seen[static_cast<std::size_t>(c)] = true;
            by_class[static_cast<std::size_t>(c)] = pairs_at(
                logic, need(entries[e], origin, p, "pairs"), origin, child(p, "pairs"));
        }
        for (int c = 0; c < logic.class_count(); ++c)
            if (!seen[static_cast<std::size_t>(c)])
                fail(origin, child(path, "entries"),
                     "no entry for the class of " +
                         logic.base_to_string(logic.class_representative(c)));
        return Assignment::semantic(std::move(by_class));
    }
    if (keying == "syntactic") {
        std::vector<std::pair<BeliefBase, PreferenceRelation>> by_base;
        std::set<BeliefBase> seen;
        for (std::size_t e = 0; e < entries.size(); ++e) {
            const std::string p = child(child(path, "entries"), e);
            BeliefBase key = family_base_at(logic, need(entries[e], origin, p, "base"),
                                            origin, child(p, "base"));
            if (!seen.insert(key).second)
                fail(origin, child(p, "base"),
                     "duplicate entry for base " + logic.base_to_string(key));
            PreferenceRelation rel = pairs_at(
                logic, need(entries[e], origin, p, "pairs"), origin, child(p, "pairs"));
            by_base.emplace_back(std::move(key), std::move(rel));
        }
        return Assignment::syntactic(std::move(by_base));
    }
    fail(origin, child(path, "keying"), "keying must be \"semantic\" or \"syntactic\"");
}

// --- critical loops ---

json loop_value(const BaseLogic& logic, const CriticalLoop& loop) {
    json out;
    out["k"] = base_value(logic, loop.k);
    json nodes = json::array();
    for (const auto& b : loop.node_bases) nodes.push_back(base_value(logic, b));
    out["nodes"] = std::move(nodes);
    json edges = json::array();
    for (const auto& b : loop.edge_bases) edges.push_back(base_value(logic, b));
    out["edges"] = std::move(edges);
    json certs = json::array();
    for (const auto& [covering, certificate] : loop.certificates) {
        json e;
        e["covering"] = base_value(logic, logic.class_representative(covering));
        e["certificate"] = base_value(logic, logic.class_representative(certificate));
        certs.push_back(std::move(e));
    }
    out["certificates"] = std::move(certs);
    return out;
}

CriticalLoop loop_at(const BaseLogic& logic, const json& v, const std::string& origin,
                     const std::string& path) {
    CriticalLoop loop;
    loop.k = family_base_at(logic, need(v, origin, path, "k"), origin, child(path, "k"));
    loop.k_class = logic.class_of(loop.k);

    const json& nodes = as_array(need(v, origin, path, "nodes"), origin, child(path, "nodes"));
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        BeliefBase b = family_base_at(logic, nodes[i], origin,
                                      child(child(path, "nodes"), i));
        loop.node_classes.push_back(logic.class_of(b));
        loop.node_bases.push_back(std::move(b));
    }
    const json& edges = as_array(need(v, origin, path, "edges"), origin, child(path, "edges"));
    for (std::size_t i = 0; i < edges.size(); ++i) {
        BeliefBase b = family_base_at(logic, edges[i], origin,
                                      child(child(path, "edges"), i));
        loop.edge_classes.push_back(logic.class_of(b));
        loop.edge_bases.push_back(std::move(b));
    }
    if (const json* certs = maybe(v, "certificates")) {
        as_array(*certs, origin, child(path, "certificates"));
        for (std::size_t i = 0; i < certs->size(); ++i) {
            const std::string p = child(child(path, "certificates"), i);
            const BeliefBase covering = family_base_at(
                logic, need((*certs)[i], origin, p, "covering"), origin, child(p, "covering"));
            const BeliefBase certificate = family_base_at(
                logic, need((*certs)[i], origin, p, "certificate"), origin,
                child(p, "certificate"));
            const int cov_class = logic.class_of(covering);
            if (loop.certificates.count(cov_class))
                fail(origin, child(p, "covering"),
                     "duplicate certificate for the class of " + logic.base_to_string(covering));
            loop.certificates[cov_class] = logic.class_of(certificate);
        }
    }
    validate_loop(logic, loop);  // throws InvalidLoop on a bad arrangement
    return loop;
}

// --- operators ---

json operator_value(const BaseLogic& logic, const Operator& op) {
    json out;
    switch (op.kind()) {
        case OperatorKind::Trivial:
            out["kind"] = "trivial";
            break;
        case OperatorKind::PlainUnion:
            out["kind"] = "plain_union";
            break;
        case OperatorKind::Builtin:
            out["kind"] = "builtin";
            out["name"] = op.name();
            break;
        case OperatorKind::Table: {
            out["kind"] = "table";
            out["fallback"] = op.fallback() == TableFallback::Error ? "error" : "trivial";
            json entries = json::array();
            for (const auto& entry : op.entries()) {
                json e;
                e["k"] = base_value(logic, entry.k);
                e["gamma"] = base_value(logic, entry.gamma);
                e["result"] = base_value(logic, entry.result);
                entries.push_back(std::move(e));
            }
            out["entries"] = std::move(entries);
            break;
        }
        case OperatorKind::FromAssignment:
            if (!op.source_assignment())
                throw RevkitError("operator claims assignment origin but carries none");
            out["kind"] = "from_assignment";
            out["assignment"] = assignment_value(logic, *op.source_assignment());
            break;
        case OperatorKind::FromLoop:
            if (!op.source_loop())
                throw RevkitError(
                    "cannot serialize a loop-derived operator without its loop");
            out["kind"] = "from_loop";
            out["loop"] = loop_value(logic, *op.source_loop());
            break;
    }
    return out;
}

Operator operator_at(const BaseLogic& logic, const json& v, const std::string& origin,
                     const std::string& path) {
    const std::string kind =
        as_string(need(v, origin, path, "kind"), origin, child(path, "kind"));
    if (kind == "trivial") return Operator::trivial();
    if (kind == "plain_union") return Operator::plain_union();
    if (kind == "builtin") {
        const std::string name =
            as_string(need(v, origin, path, "name"), origin, child(path, "name"));
        return gallery_builtin(name);  // UnknownGalleryName propagates
    }
    if (kind == "table") {
        TableFallback fb = TableFallback::Trivial;
        if (const json* f = maybe(v, "fallback")) {
            const std::string s = as_string(*f, origin, child(path, "fallback"));
            if (s == "error")
                fb = TableFallback::Error;
            else if (s != "trivial")
                fail(origin, child(path, "fallback"),
                     "fallback must be \"trivial\" or \"error\"");
        }
        const json& entries = as_array(need(v, origin, path, "entries"), origin,
                                       child(path, "entries"));
        std::vector<TableEntry> rows;
        rows.reserve(entries.size());
        for (std::size_t e = 0; e < entries.size(); ++e) {
            const std::string p = child(child(path, "entries"), e);
            TableEntry row;
            row.k = base_at(logic, need(entries[e], origin, p, "k"), origin, child(p, "k"));
            row.gamma = base_at(logic, need(entries[e], origin, p, "gamma"), origin,
                                child(p, "gamma"));
            row.result = base_at(logic, need(entries[e], origin, p, "result"), origin,
                                 child(p, "result"));
            rows.push_back(std::move(row));
        }
        return Operator::table(std::move(rows), fb);
    }
    if (kind == "from_assignment")
        return Operator::from_assignment(
            logic, assignment_at(logic, need(v, origin, path, "assignment"), origin,
                                 child(path, "assignment")));
    if (kind == "from_loop")
        return operator_from_loop(logic, loop_at(logic, need(v, origin, path, "loop"),
                                                 origin, child(path, "loop")));
    fail(origin, child(path, "kind"), "unknown operator kind \"" + kind + "\"");
}

std::string dump(const json& value) { return value.dump(2) + "\n"; }

}  // namespace

// ---------------------------------------------------------------------------
// Text files

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw LogicFormatError(path, "cannot open file for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw LogicFormatError(path, "read failure");
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw LogicFormatError(path, "cannot open file for writing");
    out << text;
    out.flush();
    if (!out) throw LogicFormatError(path, "write failure");
}

// ---------------------------------------------------------------------------
// Logics

std::string logic_to_json(const BaseLogic& logic) {
    json out;
    json interps = json::array();
    for (int i = 0; i < logic.interpretation_count(); ++i)
        interps.push_back(logic.interpretation_name(i));
    out["interpretations"] = std::move(interps);

    json sentences = json::array();
    for (int s = 0; s < logic.sentence_count(); ++s) {
        const Sentence& sentence = logic.sentence(s);
        json entry;
        entry["name"] = sentence.name;
        json models = json::array();
        for (int m : sentence.models.members())
            models.push_back(logic.interpretation_name(m));
        entry["models"] = std::move(models);
        sentences.push_back(std::move(entry));
    }
    out["sentences"] = std::move(sentences);

    json family;
    switch (logic.family().kind) {
        case FamilyKind::ArbitrarySets: family["kind"] = "arbitrary_sets"; break;
        case FamilyKind::FiniteSets: family["kind"] = "finite_sets"; break;
        case FamilyKind::BeliefSets: family["kind"] = "belief_sets"; break;
        case FamilyKind::SingleSentences: family["kind"] = "single_sentences"; break;
    }
    family["allow_empty"] = logic.family().allow_empty;
    if (logic.family().kind == FamilyKind::FiniteSets) {
        json bases = json::array();
        for (const auto& b : logic.family().listed_bases)
            bases.push_back(base_value(logic, b));
        family["bases"] = std::move(bases);
    }
    out["family"] = std::move(family);

    if (!logic.conjunction_entries().empty()) {
        json conj = json::array();
        for (const auto& entry : logic.conjunction_entries())
            conj.push_back(json::array({logic.sentence(entry.a).name,
                                        logic.sentence(entry.b).name,
                                        logic.sentence(entry.result).name}));
        out["conjunction"] = std::move(conj);
    }
    return dump(out);
}

BaseLogic logic_from_json(const std::string& text, const std::string& origin) {
    const json root = parse_or_fail(text, origin);
    if (!root.is_object()) fail(origin, "", "expected a logic object");

    const json& interps = as_array(need(root, origin, "", "interpretations"), origin,
                                   "/interpretations");
    if (interps.empty()) fail(origin, "/interpretations", "at least one interpretation");
    std::vector<std::string> names;
    std::map<std::string, int> interp_index;
    for (std::size_t i = 0; i < interps.size(); ++i) {
        std::string name = as_string(interps[i], origin, child("/interpretations", i));
        if (name.empty())
            fail(origin, child("/interpretations", i), "interpretation names are nonempty");
        if (!interp_index.emplace(name, static_cast<int>(i)).second)
            fail(origin, child("/interpretations", i),
                 "duplicate interpretation \"" + name + "\"");
        names.push_back(std::move(name));
    }

    const json& sents = as_array(need(root, origin, "", "sentences"), origin, "/sentences");
    std::vector<Sentence> sentences;
    std::map<std::string, int> sentence_index;
    for (std::size_t s = 0; s < sents.size(); ++s) {
        const std::string p = child("/sentences", s);
        std::string name =
            as_string(need(sents[s], origin, p, "name"), origin, child(p, "name"));
        if (name.empty()) fail(origin, child(p, "name"), "sentence names are nonempty");
        if (!sentence_index.emplace(name, static_cast<int>(s)).second)
            fail(origin, child(p, "name"), "duplicate sentence \"" + name + "\"");
        const json& models =
            as_array(need(sents[s], origin, p, "models"), origin, child(p, "models"));
        std::vector<int> member_ids;
        for (std::size_t m = 0; m < models.size(); ++m) {
            const std::string label =
                as_string(models[m], origin, child(child(p, "models"), m));
            auto it = interp_index.find(label);
            if (it == interp_index.end())
                fail(origin, child(child(p, "models"), m),
                     "unknown interpretation \"" + label + "\"");
            member_ids.push_back(it->second);
        }
        sentences.push_back(
            Sentence{std::move(name),
                     ModelSet::of(static_cast<int>(names.size()), member_ids)});
    }

    auto sentence_list_to_base = [&](const json& v, const std::string& p) {
        as_array(v, origin, p);
        std::vector<int> ids;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const std::string name = as_string(v[i], origin, child(p, i));
            auto it = sentence_index.find(name);
            if (it == sentence_index.end())
                fail(origin, child(p, i), "unknown sentence \"" + name + "\"");
            ids.push_back(it->second);
        }
        return BeliefBase(std::move(ids));
    };

    const json& family = need(root, origin, "", "family");
    const std::string kind_name =
        as_string(need(family, origin, "/family", "kind"), origin, "/family/kind");
    FamilySpec spec;
    if (kind_name == "arbitrary_sets")
        spec.kind = FamilyKind::ArbitrarySets;
    else if (kind_name == "finite_sets")
        spec.kind = FamilyKind::FiniteSets;
    else if (kind_name == "belief_sets")
        spec.kind = FamilyKind::BeliefSets;
    else if (kind_name == "single_sentences")
        spec.kind = FamilyKind::SingleSentences;
    else
        fail(origin, "/family/kind", "unknown family kind \"" + kind_name + "\"");
    spec.allow_empty = as_bool(need(family, origin, "/family", "allow_empty"), origin,
                               "/family/allow_empty");
    if (spec.kind == FamilyKind::FiniteSets) {
        const json& bases = as_array(need(family, origin, "/family", "bases"), origin,
                                     "/family/bases");
        for (std::size_t b = 0; b < bases.size(); ++b)
            spec.listed_bases.push_back(
                sentence_list_to_base(bases[b], child("/family/bases", b)));
    } else if (maybe(family, "bases")) {
        fail(origin, "/family/bases", "only the finite_sets family lists bases");
    }

    std::vector<ConjunctionEntry> conjunction;
    if (const json* conj = maybe(root, "conjunction")) {
        as_array(*conj, origin, "/conjunction");
        for (std::size_t e = 0; e < conj->size(); ++e) {
            const std::string p = child("/conjunction", e);
            const json& triple = (*conj)[e];
            if (!triple.is_array() || triple.size() != 3)
                fail(origin, p, "expected a [left, right, result] sentence triple");
            int ids[3];
            for (std::size_t i = 0; i < 3; ++i) {
                const std::string name = as_string(triple[i], origin, child(p, i));
                auto it = sentence_index.find(name);
                if (it == sentence_index.end())
                    fail(origin, child(p, i), "unknown sentence \"" + name + "\"");
                ids[i] = it->second;
            }
            conjunction.push_back(ConjunctionEntry{ids[0], ids[1], ids[2]});
        }
    }

    // Semantic validation (family closure, enumeration bounds, ...) happens
    // in the constructor; those exceptions carry their own context.
    return BaseLogic(std::move(names), std::move(sentences), std::move(spec),
                     std::move(conjunction));
}

BaseLogic logic_from_file(const std::string& path) {
    return logic_from_json(read_text_file(path), path);
}

// ---------------------------------------------------------------------------
// Relations

std::string relation_to_json(const BaseLogic& logic, const PreferenceRelation& rel,
                             const std::optional<BeliefBase>& for_base) {
    json out = relation_value(rel);
    if (for_base) out["for_base"] = base_value(logic, *for_base);
    return dump(out);
}

PreferenceRelation relation_from_json(const BaseLogic& logic, const std::string& text,
                                      const std::string& origin) {
    return relation_at(logic, parse_or_fail(text, origin), origin, "");
}

PreferenceRelation relation_from_file(const BaseLogic& logic, const std::string& path) {
    return relation_from_json(logic, read_text_file(path), path);
}

// ---------------------------------------------------------------------------
// Assignments

std::string assignment_to_json(const BaseLogic& logic, const Assignment& assignment) {
    return dump(assignment_value(logic, assignment));
}

Assignment assignment_from_json(const BaseLogic& logic, const std::string& text,
                                const std::string& origin) {
    return assignment_at(logic, parse_or_fail(text, origin), origin, "");
}

Assignment assignment_from_file(const BaseLogic& logic, const std::string& path) {
    return assignment_from_json(logic, read_text_file(path), path);
}

// ---------------------------------------------------------------------------
// Loops

std::string loop_to_json(const BaseLogic& logic, const CriticalLoop& loop) {
    return dump(loop_value(logic, loop));
}

CriticalLoop loop_from_json(const BaseLogic& logic, const std::string& text,
                            const std::string& origin) {
    return loop_at(logic, parse_or_fail(text, origin), origin, "");
}

CriticalLoop loop_from_file(const BaseLogic& logic, const std::string& path) {
    return loop_from_json(logic, read_text_file(path), path);
}

// ---------------------------------------------------------------------------
// Operators

std::string operator_to_json(const BaseLogic& logic, const Operator& op) {
    return dump(operator_value(logic, op));
}

Operator operator_from_json(const BaseLogic& logic, const std::string& text,
                            const std::string& origin) {
    return operator_at(logic, parse_or_fail(text, origin), origin, "");
}

Operator operator_from_file(const BaseLogic& logic, const std::string& path) {
    return operator_from_json(logic, read_text_file(path), path);
}

// ---------------------------------------------------------------------------
// Pipeline traces

std::string trace_to_json(const BaseLogic& logic, const PipelineTrace& trace) {
    json out;
    out["k"] = base_value(logic, trace.k);
    out["compatible"] = trace.compatible;
    json detached = json::array();
    for (const auto& [i, j] : trace.detached.pairs)
        detached.push_back(json::array({i, j}));
    out["detached"] = std::move(detached);
    out["step0"] = relation_value(trace.step0);
    out["step1"] = relation_value(trace.step1);
    out["step2"] = relation_value(trace.step2);
    out["step3"] = relation_value(trace.step3);

    json minima = json::array();
    for (int c = 0; c < logic.class_count(); ++c) {
        json entry;
        entry["class_of"] = base_value(logic, logic.class_representative(c));
        json sets = json::array();
        for (const auto& stage : trace.minima) {
            json labels = json::array();
            for (int m : stage[static_cast<std::size_t>(c)].members())
                labels.push_back(logic.interpretation_name(m));
            sets.push_back(std::move(labels));
        }
        entry["sets"] = std::move(sets);
        minima.push_back(std::move(entry));
    }
    out["minima"] = std::move(minima);
    return dump(out);
}

}  // namespace revkit
