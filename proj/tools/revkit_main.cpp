// revkit: batch command-line interface over the core library.
//
// Subcommands:
//   check-postulates  evaluate G1-G6 (plus optional EDF/Acyc) for an operator
//   extract           derive a preference relation for one base
//   check-assignment  faithfulness and min-friendliness report for an assignment
//   detect-loop       search a logic for a critical loop
//   synth-from-loop   build the canonical operator from a loop file
//   tpo               run the detach / close / linearize pipeline for one base
//   verify            check the representation clauses for (logic, operator)
//   sweep             seeded random property sweeps (properties a-f)
//   gallery           list or export the bundled example logics
//
// Exit codes: 0 every requested check passed, 1 a checked property failed
// (a witness is printed), 2 usage or input errors.  With --json each command
// prints exactly one JSON document with alphabetically sorted keys, so
// identical inputs and flags produce byte-identical output.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "revkit/assignment.hpp"
#include "revkit/critical_loop.hpp"
#include "revkit/encoding.hpp"
#include "revkit/errors.hpp"
#include "revkit/gallery.hpp"
#include "revkit/json_io.hpp"
#include "revkit/logic.hpp"
#include "revkit/op.hpp"
#include "revkit/relation.hpp"
#include "revkit/tpo.hpp"
#include "revkit/verify.hpp"

namespace {

using nlohmann::json;
using namespace revkit;

// ---------------------------------------------------------------------------
// Small shared formatting helpers

json parse_doc(const std::string& text) { return json::parse(text); }

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

json base_names(const BaseLogic& logic, const BeliefBase& base) {
    json out = json::array();
    for (int id : base.ids()) out.push_back(logic.sentence(id).name);
    return out;
}

json model_labels(const BaseLogic& logic, const ModelSet& models) {
    json out = json::array();
    for (int m : models.members()) out.push_back(logic.interpretation_name(m));
    return out;
}

void print_relation(const BaseLogic& logic, const PreferenceRelation& rel) {
    for (int i = 0; i < rel.size(); ++i) {
        std::string row;
        for (int j = 0; j < rel.size(); ++j) row += rel.leq(i, j) ? '1' : '0';
        std::printf("  %s: %s\n", logic.interpretation_name(i).c_str(), row.c_str());
    }
}

BeliefBase parse_base_arg(const BaseLogic& logic, const std::string& raw) {
    std::vector<std::string> names;
    std::string current;
    for (char ch : raw) {
        if (ch == ',' || ch == ' ' || ch == '\t') {
            if (!current.empty()) {
                names.push_back(current);
                current.clear();
            }
        } else {
            current += ch;
        }
    }
    if (!current.empty()) names.push_back(current);
    return base_from_names(logic, names);
}

void write_output_file(const std::string& path, const std::string& text) {
    write_text_file(path, text);
}

// ---------------------------------------------------------------------------
// Postulate report rendering

json witness_json(const BaseLogic& logic, const PostulateWitness& witness) {
    json out;
    out["k"] = base_names(logic, witness.k);
    out["k2"] = base_names(logic, witness.k2);
    out["gamma1"] = base_names(logic, witness.gamma1);
    out["gamma2"] = base_names(logic, witness.gamma2);
    out["gamma3"] = base_names(logic, witness.gamma3);
    json sets = json::array();
    for (const auto& m : witness.model_sets) sets.push_back(model_labels(logic, m));
    out["model_sets"] = std::move(sets);
    out["note"] = witness.note;
    return out;
}

std::string witness_text(const BaseLogic& logic, PostulateId id,
                         const PostulateWitness& witness) {
    std::string out = "k=" + logic.base_to_string(witness.k);
    if (id == PostulateId::G4 || id == PostulateId::G4w)
        out += " k2=" + logic.base_to_string(witness.k2);
    out += " gamma1=" + logic.base_to_string(witness.gamma1);
    out += " gamma2=" + logic.base_to_string(witness.gamma2);
    if (id == PostulateId::EDF)
        out += " gamma3=" + logic.base_to_string(witness.gamma3);
    if (!witness.note.empty()) out += "  (" + witness.note + ")";
    return out;
}

bool report_all_pass(const PostulateReport& report) {
    for (const auto& [id, result] : report.results)
        if (result.checked && !result.pass) return false;
    return true;
}

json postulate_report_json(const BaseLogic& logic, const PostulateReport& report) {
    json out;
    out["mode"] = report.mode == CheckMode::Semantic ? "semantic" : "full";
    out["g4_verified"] = report.g4_verified;
    if (!report.note.empty()) out["note"] = report.note;
    json results;
    for (const auto& [id, result] : report.results) {
        json entry;
        entry["checked"] = result.checked;
        entry["pass"] = result.pass;
        if (result.witness) entry["witness"] = witness_json(logic, *result.witness);
        results[postulate_name(id)] = std::move(entry);
    }
    out["results"] = std::move(results);
    out["pass"] = report_all_pass(report);
    return out;
}

void print_postulate_report(const BaseLogic& logic, const PostulateReport& report) {
    std::printf("mode: %s%s\n", report.mode == CheckMode::Semantic ? "semantic" : "full",
                report.g4_verified ? " (syntax-independence verified)" : "");
    if (!report.note.empty()) std::printf("note: %s\n", report.note.c_str());
    for (const auto& [id, result] : report.results) {
        if (!result.checked) continue;
        std::printf("%-4s %s\n", postulate_name(id).c_str(), result.pass ? "pass" : "FAIL");
        if (!result.pass && result.witness)
            std::printf("     witness: %s\n",
                        witness_text(logic, id, *result.witness).c_str());
    }
}

// ---------------------------------------------------------------------------
// check-postulates

struct CheckPostulatesArgs {
    std::string logic_path, op_path, mode = "semantic";
    bool edf = false, acyc = false;
};

int run_check_postulates(const CheckPostulatesArgs& args, bool json_out) {
    BaseLogic logic = logic_from_file(args.logic_path);
    Operator op = operator_from_file(logic, args.op_path);
    PostulateOptions options;
    options.edf = args.edf;
    options.acyc = args.acyc;
    const CheckMode mode = args.mode == "full" ? CheckMode::Full : CheckMode::Semantic;
    const PostulateReport report = postulate_report(logic, op, mode, options);
    if (json_out) {
        json doc = postulate_report_json(logic, report);
        doc["command"] = "check-postulates";
        emit(doc);
    } else {
        print_postulate_report(logic, report);
    }
    return report_all_pass(report) ? 0 : 1;
}

// ---------------------------------------------------------------------------
// extract

struct ExtractArgs {
    std::string logic_path, op_path, base, encoder = "canonical", out_path;
};

int run_extract(const ExtractArgs& args, bool json_out) {
    BaseLogic logic = logic_from_file(args.logic_path);
    Operator op = operator_from_file(logic, args.op_path);
    BeliefBase base = parse_base_arg(logic, args.base);
    if (!logic.in_family(base))
        throw LogicFormatError("--base", "base " + logic.base_to_string(base) +
                                             " is not in the logic's family");

    // Class-level quantification over the inputs is only sound once the
    // operator provably ignores syntax.
    const PostulateReport report = postulate_report(logic, op, CheckMode::Semantic);
    const QuantifierMode qmode =
        report.g4_verified ? QuantifierMode::ByClass : QuantifierMode::ByBase;

    PreferenceRelation rel(logic.interpretation_count());
    std::vector<std::pair<int, int>> omitted;
    std::string note;
    if (args.encoder == "canonical") {
        rel = canonical_rel(logic, op, base, qmode);
    } else if (args.encoder == "sqrel") {
        rel = sqrel(logic, op, base, qmode);
    } else if (args.encoder == "km") {
        KmResult r = km_rel(logic, op, base);
        rel = r.rel;
        omitted = r.inexpressible_pairs;
        if (!omitted.empty()) note = "pairs with no expressible two-world base were skipped";
    } else if (args.encoder == "dpw") {
        TsetResult r = dpw_rel(logic, op, base);
        rel = r.rel;
        omitted = r.skipped_pairs;
        note = r.note;
    } else {
        TsetResult r = aiguier_rel(logic, op, base);
        rel = r.rel;
        omitted = r.skipped_pairs;
        note = r.note;
    }

    const std::string rel_text = relation_to_json(logic, rel, base);
    if (!args.out_path.empty()) write_output_file(args.out_path, rel_text);

    if (json_out) {
        json doc;
        doc["command"] = "extract";
        doc["encoder"] = args.encoder;
        doc["quantification"] = qmode == QuantifierMode::ByClass ? "by_class" : "by_base";
        doc["relation"] = parse_doc(rel_text);
        json skipped = json::array();
        for (const auto& [i, j] : omitted) skipped.push_back(json::array({i, j}));
        doc["skipped_pairs"] = std::move(skipped);
        if (!note.empty()) doc["note"] = note;
        emit(doc);
    } else {
        std::printf("encoder: %s (quantifying %s)\n", args.encoder.c_str(),
                    qmode == QuantifierMode::ByClass ? "by class" : "by base");
        std::printf("base: %s\n", logic.base_to_string(base).c_str());
        print_relation(logic, rel);
        if (!omitted.empty()) {
            std::printf("skipped pairs:");
            for (const auto& [i, j] : omitted)
                std::printf(" (%s,%s)", logic.interpretation_name(i).c_str(),
                            logic.interpretation_name(j).c_str());
            std::printf("\n");
        }
        if (!note.empty()) std::printf("note: %s\n", note.c_str());
        if (!args.out_path.empty()) std::printf("wrote %s\n", args.out_path.c_str());
    }
    return 0;
}

// ---------------------------------------------------------------------------
// check-assignment

struct CheckAssignmentArgs {
    std::string logic_path, assignment_path;
};

json assignment_witness_json(const BaseLogic& logic, const AssignmentWitness& w) {
    json out;
    out["key"] = base_names(logic, w.key);
    out["omega1"] = logic.interpretation_name(w.omega1);
    if (w.omega2 >= 0) out["omega2"] = logic.interpretation_name(w.omega2);
    if (w.class_id >= 0) out["class_of"] = base_names(logic, logic.class_representative(w.class_id));
    return out;
}

std::string assignment_witness_text(const BaseLogic& logic, const AssignmentWitness& w) {
    std::string out = "key=" + logic.base_to_string(w.key) +
                      " omega1=" + logic.interpretation_name(w.omega1);
    if (w.omega2 >= 0) out += " omega2=" + logic.interpretation_name(w.omega2);
    if (w.class_id >= 0)
        out += " class=" + logic.base_to_string(logic.class_representative(w.class_id));
    return out;
}

int run_check_assignment(const CheckAssignmentArgs& args, bool json_out) {
    BaseLogic logic = logic_from_file(args.logic_path);
    Assignment assignment = assignment_from_file(logic, args.assignment_path);
    const FaithfulnessReport report = faithfulness_report(logic, assignment);

    struct Flag {
        const char* name;
        bool value;
    };
    const Flag flags[] = {
        {"f1", report.f1},
        {"f2", report.f2},
        {"f3", report.f3},
        {"faithful", report.faithful},
        {"quasi_faithful", report.quasi_faithful},
        {"total_relations", report.total_relations},
        {"preorder_relations", report.preorder_relations},
        {"min_complete", report.min_complete},
        {"min_retractive", report.min_retractive},
        {"min_friendly", report.min_friendly},
        {"min_expressible", report.min_expressible},
    };

    if (json_out) {
        json doc;
        doc["command"] = "check-assignment";
        doc["keying"] = report.keying == Keying::Semantic ? "semantic" : "syntactic";
        for (const auto& flag : flags) doc[flag.name] = flag.value;
        json witnesses;
        if (report.f1_witness) witnesses["f1"] = assignment_witness_json(logic, *report.f1_witness);
        if (report.f2_witness) witnesses["f2"] = assignment_witness_json(logic, *report.f2_witness);
        if (report.f3_witness) {
            json w;
            w["base1"] = base_names(logic, report.f3_witness->first);
            w["base2"] = base_names(logic, report.f3_witness->second);
            witnesses["f3"] = std::move(w);
        }
        if (report.total_witness)
            witnesses["total"] = assignment_witness_json(logic, *report.total_witness);
        if (report.preorder_witness)
            witnesses["preorder"] = assignment_witness_json(logic, *report.preorder_witness);
        if (report.min_complete_witness)
            witnesses["min_complete"] =
                assignment_witness_json(logic, *report.min_complete_witness);
        if (report.min_retractive_witness)
            witnesses["min_retractive"] =
                assignment_witness_json(logic, *report.min_retractive_witness);
        if (report.min_inexpressible) {
            json w;
            w["key"] = base_names(logic, report.min_inexpressible->first);
            w["models"] = model_labels(logic, report.min_inexpressible->second);
            witnesses["min_inexpressible"] = std::move(w);
        }
        doc["witnesses"] = std::move(witnesses);
        emit(doc);
    } else {
        std::printf("keying: %s\n",
                    report.keying == Keying::Semantic ? "semantic" : "syntactic");
        for (const auto& flag : flags)
            std::printf("%-18s %s\n", flag.name, flag.value ? "pass" : "FAIL");
        if (report.f1_witness)
            std::printf("f1 witness: %s\n",
                        assignment_witness_text(logic, *report.f1_witness).c_str());
        if (report.f2_witness)
            std::printf("f2 witness: %s\n",
                        assignment_witness_text(logic, *report.f2_witness).c_str());
        if (report.f3_witness)
            std::printf("f3 witness: %s vs %s\n",
                        logic.base_to_string(report.f3_witness->first).c_str(),
                        logic.base_to_string(report.f3_witness->second).c_str());
        if (report.min_complete_witness)
            std::printf("min-completeness witness: %s\n",
                        assignment_witness_text(logic, *report.min_complete_witness).c_str());
        if (report.min_retractive_witness)
            std::printf("min-retractivity witness: %s\n",
                        assignment_witness_text(logic, *report.min_retractive_witness).c_str());
        if (report.min_inexpressible)
            std::printf("inexpressible minimum: key=%s models=%s\n",
                        logic.base_to_string(report.min_inexpressible->first).c_str(),
                        logic.models_to_string(report.min_inexpressible->second).c_str());
    }
    return report.faithful ? 0 : 1;
}

// ---------------------------------------------------------------------------
// detect-loop / synth-from-loop

struct DetectLoopArgs {
    std::string logic_path, out_path;
    int max_len = -1;
};

int run_detect_loop(const DetectLoopArgs& args, bool json_out) {
    BaseLogic logic = logic_from_file(args.logic_path);
    const std::optional<CriticalLoop> loop = detect_critical_loop(logic, args.max_len);
    if (!loop) {
        if (json_out) {
            json doc;
            doc["command"] = "detect-loop";
            doc["found"] = false;
            emit(doc);
        } else {
            std::printf("no critical loop\n");
        }
        return 1;
    }
    const std::string loop_text = loop_to_json(logic, *loop);
    if (!args.out_path.empty()) write_output_file(args.out_path, loop_text);
    if (json_out) {
        json doc;
        doc["command"] = "detect-loop";
        doc["found"] = true;
        doc["length"] = loop->length();
        doc["loop"] = parse_doc(loop_text);
        emit(doc);
    } else {
        std::fputs(loop_text.c_str(), stdout);
    }
    return 0;
}

struct SynthArgs {
    std::string logic_path, loop_path, out_path;
};

int run_synth_from_loop(const SynthArgs& args, bool json_out) {
    BaseLogic logic = logic_from_file(args.logic_path);
    CriticalLoop loop = loop_from_file(logic, args.loop_path);
    Operator op = operator_from_loop(logic, loop);
    const std::string op_text = operator_to_json(logic, op);
    if (!args.out_path.empty()) write_output_file(args.out_path, op_text);
    if (json_out) {
        json doc;
        doc["command"] = "synth-from-loop";
        doc["operator"] = parse_doc(op_text);
        emit(doc);
    } else {
        std::fputs(op_text.c_str(), stdout);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// tpo

struct TpoArgs {
    std::string logic_path, op_path, base, trace_path;
};

int run_tpo(const TpoArgs& args, bool json_out) {
    BaseLogic logic = logic_from_file(args.logic_path);
    Operator op = operator_from_file(logic, args.op_path);
    BeliefBase base = parse_base_arg(logic, args.base);
    PipelineTrace trace;
    try {
        trace = to_total_preorder(logic, op, base);
    } catch (const PostulatePrerequisiteFailed& e) {
        if (json_out) {
            json doc;
            doc["command"] = "tpo";
            doc["error"] = e.what();
            emit(doc);
        } else {
            std::printf("property failed: %s\n", e.what());
        }
        return 1;
    } catch (const CriticalLoopPresent& e) {
        if (json_out) {
            json doc;
            doc["command"] = "tpo";
            doc["error"] = e.what();
            emit(doc);
        } else {
            std::printf("property failed: %s\n", e.what());
        }
        return 1;
    }

    const std::string trace_text = trace_to_json(logic, trace);
    if (!args.trace_path.empty()) write_output_file(args.trace_path, trace_text);
    if (json_out) {
        json doc;
        doc["command"] = "tpo";
        doc["trace"] = parse_doc(trace_text);
        emit(doc);
    } else {
        std::printf("k: %s\n", logic.base_to_string(trace.k).c_str());
        std::printf("step0 (operator-derived):\n");
        print_relation(logic, trace.step0);
        std::printf("detached pairs:");
        for (const auto& [i, j] : trace.detached.pairs)
            std::printf(" (%s,%s)", logic.interpretation_name(i).c_str(),
                        logic.interpretation_name(j).c_str());
        std::printf("%s\n", trace.detached.pairs.empty() ? " none" : "");
        std::printf("step1 (detached removed):\n");
        print_relation(logic, trace.step1);
        std::printf("step2 (transitive closure):\n");
        print_relation(logic, trace.step2);
        std::printf("step3 (linearized):\n");
        print_relation(logic, trace.step3);
        std::printf("compatible: %s\n", trace.compatible ? "yes" : "NO");
        if (!args.trace_path.empty()) std::printf("wrote %s\n", args.trace_path.c_str());
    }
    return trace.compatible ? 0 : 1;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
    std::string logic_path, op_path, theorems = "all";
};

json clause_json(const ClauseReport& clause) {
    json out;
    out["applicable"] = clause.applicable;
    out["pass"] = clause.pass;
    if (!clause.detail.empty()) out["detail"] = clause.detail;
    return out;
}

void print_clause(const char* name, const ClauseReport& clause) {
    if (!clause.applicable)
        std::printf("%-22s not applicable%s%s\n", name, clause.detail.empty() ? "" : ": ",
                    clause.detail.c_str());
    else if (clause.pass)
        std::printf("%-22s pass\n", name);
    else
        std::printf("%-22s FAIL%s%s\n", name, clause.detail.empty() ? "" : ": ",
                    clause.detail.c_str());
}

int run_verify(const VerifyArgs& args, bool json_out) {
    if (args.theorems != "all")
        throw LogicFormatError("--theorems", "only \"all\" is supported");
    BaseLogic logic = logic_from_file(args.logic_path);
    Operator op = operator_from_file(logic, args.op_path);
    const RepresentationReport report = check_representation(logic, op);
    const bool pass = (!report.faithful_clause.applicable || report.faithful_clause.pass) &&
                      (!report.quasi_faithful_clause.applicable ||
                       report.quasi_faithful_clause.pass) &&
                      (!report.preorder_clause.applicable || report.preorder_clause.pass);
    if (json_out) {
        json doc;
        doc["command"] = "verify";
        doc["postulates"] = postulate_report_json(logic, report.postulates);
        doc["loop_free"] = report.loop_free;
        doc["faithful_clause"] = clause_json(report.faithful_clause);
        doc["quasi_faithful_clause"] = clause_json(report.quasi_faithful_clause);
        doc["preorder_clause"] = clause_json(report.preorder_clause);
        doc["pass"] = pass;
        emit(doc);
    } else {
        print_postulate_report(logic, report.postulates);
        std::printf("loop-free: %s\n", report.loop_free ? "yes" : "no");
        print_clause("faithful clause:", report.faithful_clause);
        print_clause("quasi-faithful clause:", report.quasi_faithful_clause);
        print_clause("preorder clause:", report.preorder_clause);
    }
    return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepArgs {
    std::string profile = "micro", junit_path, properties = "abcdef";
    int cases = 1000;
    std::uint64_t seed = 7;
};

std::string xml_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char ch : text) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += ch;
        }
    }
    return out;
}

std::string junit_xml(const std::vector<SweepReport>& reports) {
    int failed = 0;
    for (const auto& r : reports)
        if (!r.pass()) ++failed;
    std::ostringstream xml;
    xml << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    xml << "<testsuites tests=\"" << reports.size() << "\" failures=\"" << failed << "\">\n";
    xml << "  <testsuite name=\"revkit-sweep\" tests=\"" << reports.size() << "\" failures=\""
        << failed << "\">\n";
    for (const auto& r : reports) {
        xml << "    <testcase classname=\"sweep\" name=\"property-" << r.property
            << "\" assertions=\"" << r.applicable << "\"";
        if (r.pass()) {
            xml << "/>\n";
            continue;
        }
        xml << ">\n      <failure message=\"" << r.failures.size() << " violations\">";
        std::size_t shown = 0;
        for (const auto& f : r.failures) {
            if (shown++ == 10) {
                xml << "\n...";
                break;
            }
            xml << "\ncase " << f.case_index << " (seed " << f.case_seed
                << "): " << xml_escape(f.detail);
        }
        xml << "\n      </failure>\n    </testcase>\n";
    }
    xml << "  </testsuite>\n</testsuites>\n";
    return xml.str();
}

int run_sweep(const SweepArgs& args, bool json_out, int threads) {
    const GeneratorProfile profile = profile_by_name(args.profile);
    for (char p : args.properties)
        if (p < 'a' || p > 'f')
            throw LogicFormatError("--properties",
                                   std::string("unknown sweep property '") + p + "'");

    std::vector<SweepReport> reports;
    for (char p : args.properties)
        reports.push_back(run_sweep(p, args.cases, args.seed, profile, threads));

    if (!args.junit_path.empty()) write_output_file(args.junit_path, junit_xml(reports));

    bool pass = true;
    for (const auto& r : reports) pass = pass && r.pass();

    if (json_out) {
        json doc;
        doc["command"] = "sweep";
        doc["profile"] = args.profile;
        doc["cases"] = args.cases;
        doc["seed"] = args.seed;
        json properties;
        for (const auto& r : reports) {
            json entry;
            entry["description"] = r.description;
            entry["applicable"] = r.applicable;
            json failures = json::array();
            for (const auto& f : r.failures) {
                json fj;
                fj["case"] = f.case_index;
                fj["seed"] = f.case_seed;
                fj["detail"] = f.detail;
                failures.push_back(std::move(fj));
            }
            entry["failures"] = std::move(failures);
            entry["pass"] = r.pass();
            properties[std::string(1, r.property)] = std::move(entry);
        }
        doc["properties"] = std::move(properties);
        doc["pass"] = pass;
        emit(doc);
    } else {
        for (const auto& r : reports) {
            std::printf("%c: %d cases, %d applicable, %zu failures  [%s]\n", r.property,
                        r.cases, r.applicable, r.failures.size(), r.description.c_str());
            std::size_t shown = 0;
            for (const auto& f : r.failures) {
                if (shown++ == 5) {
                    std::printf("   ...\n");
                    break;
                }
                std::printf("   case %d (seed %llu): %s\n", f.case_index,
                            static_cast<unsigned long long>(f.case_seed), f.detail.c_str());
            }
        }
        if (!args.junit_path.empty()) std::printf("wrote %s\n", args.junit_path.c_str());
    }
    return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// gallery

int run_gallery_list(bool json_out) {
    if (json_out) {
        json doc;
        doc["command"] = "gallery-list";
        json names = json::array();
        for (const auto& name : gallery_names()) names.push_back(name);
        doc["names"] = std::move(names);
        json reserved = json::array();
        for (const auto& name : reserved_gallery_names()) reserved.push_back(name);
        doc["reserved"] = std::move(reserved);
        emit(doc);
        return 0;
    }
    for (const auto& name : gallery_names()) {
        const GalleryEntry entry = load_gallery(name);
        std::printf("%-10s %s\n", name.c_str(), entry.description.c_str());
    }
    for (const auto& name : reserved_gallery_names())
        std::printf("%-10s (reserved: infinite domain, not loadable)\n", name.c_str());
    return 0;
}

struct GalleryExportArgs {
    std::string name, out_dir = ".";
};

int run_gallery_export(const GalleryExportArgs& args, bool json_out) {
    const GalleryEntry entry = load_gallery(args.name);
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(args.out_dir, ec);
    if (ec)
        throw LogicFormatError(args.out_dir, "cannot create directory: " + ec.message());

    std::vector<std::string> written;
    auto emit_file = [&](const std::string& file, const std::string& text) {
        const std::string path = (fs::path(args.out_dir) / file).string();
        write_output_file(path, text);
        written.push_back(path);
    };
    emit_file(args.name + ".json", logic_to_json(entry.logic));
    if (entry.op) emit_file(args.name + ".op.json", operator_to_json(entry.logic, *entry.op));
    if (entry.assignment)
        emit_file(args.name + ".assignment.json",
                  assignment_to_json(entry.logic, *entry.assignment));

    if (json_out) {
        json doc;
        doc["command"] = "gallery-export";
        doc["name"] = args.name;
        json files = json::array();
        for (const auto& f : written) files.push_back(f);
        doc["files"] = std::move(files);
        emit(doc);
    } else {
        for (const auto& f : written) std::printf("wrote %s\n", f.c_str());
    }
    return 0;
}

}  // namespace

// ---------------------------------------------------------------------------

int main(int argc, char** argv) {
    CLI::App app{
        "revkit: postulate checking, preference extraction, critical-loop\n"
        "detection, and total-preorder synthesis for finite base logics"};
    app.require_subcommand(1);

    bool json_out = false;
    int threads = 1;
    app.add_flag("--json", json_out, "emit one machine-readable JSON document on stdout");
    app.add_option("--threads", threads, "worker threads for sweeps")
        ->check(CLI::PositiveNumber);

    CheckPostulatesArgs cp_args;
    auto* cp = app.add_subcommand("check-postulates",
                                  "evaluate G1-G6 (plus optional EDF/Acyc) for an operator");
    cp->fallthrough();
    cp->add_option("--logic", cp_args.logic_path, "logic JSON file")->required();
    cp->add_option("--operator", cp_args.op_path, "operator JSON file")->required();
    cp->add_option("--mode", cp_args.mode, "semantic (class-level) or full (every base)")
        ->check(CLI::IsMember({"semantic", "full"}));
    cp->add_flag("--edf", cp_args.edf, "also check expressible disjunctive factoring");
    cp->add_flag("--acyc", cp_args.acyc, "also check acyclicity of the derived order");

    ExtractArgs ex_args;
    auto* ex = app.add_subcommand("extract", "derive a preference relation for one base");
    ex->fallthrough();
    ex->add_option("--logic", ex_args.logic_path, "logic JSON file")->required();
    ex->add_option("--operator", ex_args.op_path, "operator JSON file")->required();
    ex->add_option("--base", ex_args.base, "belief base (comma separated sentence names)")
        ->required();
    ex->add_option("--encoder", ex_args.encoder, "relation encoder")
        ->check(CLI::IsMember({"canonical", "sqrel", "km", "dpw", "aiguier"}));
    ex->add_option("--out", ex_args.out_path, "write the relation JSON here");

    CheckAssignmentArgs ca_args;
    auto* ca = app.add_subcommand("check-assignment",
                                  "faithfulness and min-friendliness of an assignment");
    ca->fallthrough();
    ca->add_option("--logic", ca_args.logic_path, "logic JSON file")->required();
    ca->add_option("--assignment", ca_args.assignment_path, "assignment JSON file")->required();

    DetectLoopArgs dl_args;
    auto* dl = app.add_subcommand("detect-loop", "search a logic for a critical loop");
    dl->fallthrough();
    dl->add_option("--logic", dl_args.logic_path, "logic JSON file")->required();
    dl->add_option("--max-len", dl_args.max_len, "largest loop length to try");
    dl->add_option("--out", dl_args.out_path, "write the loop JSON here");

    SynthArgs sy_args;
    auto* sy = app.add_subcommand("synth-from-loop",
                                  "build the canonical operator from a loop file");
    sy->fallthrough();
    sy->add_option("--logic", sy_args.logic_path, "logic JSON file")->required();
    sy->add_option("--loop", sy_args.loop_path, "loop JSON file")->required();
    sy->add_option("--out", sy_args.out_path, "write the operator JSON here");

    TpoArgs tp_args;
    auto* tp = app.add_subcommand("tpo", "detach, close, and linearize the derived order");
    tp->fallthrough();
    tp->add_option("--logic", tp_args.logic_path, "logic JSON file")->required();
    tp->add_option("--operator", tp_args.op_path, "operator JSON file")->required();
    tp->add_option("--base", tp_args.base, "belief base (comma separated sentence names)")
        ->required();
    tp->add_option("--trace", tp_args.trace_path, "write the pipeline trace JSON here");

    VerifyArgs vf_args;
    auto* vf = app.add_subcommand("verify", "check the representation clauses");
    vf->fallthrough();
    vf->add_option("--logic", vf_args.logic_path, "logic JSON file")->required();
    vf->add_option("--operator", vf_args.op_path, "operator JSON file")->required();
    vf->add_option("--theorems", vf_args.theorems, "which theorem set (only: all)");

    SweepArgs sw_args;
    auto* sw = app.add_subcommand("sweep", "seeded random property sweeps");
    sw->fallthrough();
    sw->add_option("--profile", sw_args.profile, "generator profile (only: micro)");
    sw->add_option("--n", sw_args.cases, "cases per property")->check(CLI::PositiveNumber);
    sw->add_option("--seed", sw_args.seed, "base seed");
    sw->add_option("--junit", sw_args.junit_path, "write JUnit XML here");
    sw->add_option("--properties", sw_args.properties, "subset of \"abcdef\"");

    auto* ga = app.add_subcommand("gallery", "list or export the bundled example logics");
    ga->fallthrough();
    ga->require_subcommand(1);
    auto* ga_list = ga->add_subcommand("list", "list gallery names");
    ga_list->fallthrough();
    GalleryExportArgs ge_args;
    auto* ga_export = ga->add_subcommand("export", "write a gallery entry's JSON files");
    ga_export->fallthrough();
    ga_export->add_option("name", ge_args.name, "gallery entry name")->required();
    ga_export->add_option("--out", ge_args.out_dir, "output directory (default .)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cp) return run_check_postulates(cp_args, json_out);
        if (*ex) return run_extract(ex_args, json_out);
        if (*ca) return run_check_assignment(ca_args, json_out);
        if (*dl) return run_detect_loop(dl_args, json_out);
        if (*sy) return run_synth_from_loop(sy_args, json_out);
        if (*tp) return run_tpo(tp_args, json_out);
        if (*vf) return run_verify(vf_args, json_out);
        if (*sw) return run_sweep(sw_args, json_out, threads);
        if (*ga) {
            if (*ga_list) return run_gallery_list(json_out);
            if (*ga_export) return run_gallery_export(ge_args, json_out);
        }
    } catch (const RevkitError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
