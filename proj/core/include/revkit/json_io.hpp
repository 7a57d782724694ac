// JSON serialization for every revkit value that crosses a process boundary:
// logics, preference relations, operators, assignments, critical loops, and
// total-preorder pipeline traces.
//
// Design rules:
//   - The API deals in strings and files only; the JSON library stays a
//     private implementation detail of the .cpp.
//   - Interpretations appear in JSON as their names, sentences as their
//     names, and relation pairs as integer interpretation indices [i, j]
//     meaning "i is at least as plausible as j's position allows", i.e.
//     i <= j in the relation.
//   - Writers emit objects with alphabetically sorted keys and two-space
//     indentation, so identical values always produce byte-identical text.
//   - Readers validate before constructing and throw LogicFormatError with
//     the origin (file path or "<string>") and a JSON-pointer-like path to
//     the first offending element.
#pragma once

#include <optional>
#include <string>

#include "revkit/assignment.hpp"
#include "revkit/critical_loop.hpp"
#include "revkit/logic.hpp"
#include "revkit/op.hpp"
#include "revkit/relation.hpp"
#include "revkit/tpo.hpp"

namespace revkit {

// ---------------------------------------------------------------------------
// Plain text files (shared by all loaders; errors become LogicFormatError).

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// ---------------------------------------------------------------------------
// Logic documents:
// {
//   "interpretations": ["w0", ...],
//   "sentences": [{"name": "p", "models": ["w0", ...]}, ...],
//   "family": {"kind": "arbitrary_sets" | "finite_sets" | "belief_sets" |
//              "single_sentences",
//              "allow_empty": bool,
//              "bases": [["p", "q"], ...]   // finite_sets only
//   },
//   "conjunction": [["p", "q", "r"], ...]   // optional lookup table
// }

std::string logic_to_json(const BaseLogic& logic);
BaseLogic logic_from_json(const std::string& text,
                          const std::string& origin = "<string>");
BaseLogic logic_from_file(const std::string& path);

// ---------------------------------------------------------------------------
// Relation documents:
// {
//   "for_base": ["p", ...],          // optional: which base the order ranks
//   "size": 4,
//   "pairs": [[0, 1], ...],          // i <= j entries, row-major order
//   "matrix": ["1100", ...]          // redundant reader-friendly view
// }
// Readers use "pairs" (and "size" when present) and ignore "matrix".

std::string relation_to_json(const BaseLogic& logic,
                             const PreferenceRelation& rel,
                             const std::optional<BeliefBase>& for_base = std::nullopt);
PreferenceRelation relation_from_json(const BaseLogic& logic,
                                      const std::string& text,
                                      const std::string& origin = "<string>");
PreferenceRelation relation_from_file(const BaseLogic& logic,
                                      const std::string& path);

// ---------------------------------------------------------------------------
// Assignment documents:
// {
//   "keying": "semantic" | "syntactic",
//   "entries": [{"class_of": ["p"], "pairs": [[0, 1], ...]}, ...]   // semantic
//   "entries": [{"base": ["p"], "pairs": [[0, 1], ...]}, ...]       // syntactic
// }
// Semantic entries must name every equivalence class of the logic exactly
// once (via any representative base).

std::string assignment_to_json(const BaseLogic& logic,
                               const Assignment& assignment);
Assignment assignment_from_json(const BaseLogic& logic,
                                const std::string& text,
                                const std::string& origin = "<string>");
Assignment assignment_from_file(const BaseLogic& logic,
                                const std::string& path);

// ---------------------------------------------------------------------------
// Critical-loop documents:
// {
//   "k": ["p", ...],
//   "nodes": [["p"], ...],
//   "edges": [["q"], ...],
//   "certificates": [{"covering": ["r"], "certificate": ["s"]}, ...]
// }
// The reader revalidates the loop against the logic (see validate_loop).

std::string loop_to_json(const BaseLogic& logic, const CriticalLoop& loop);
CriticalLoop loop_from_json(const BaseLogic& logic,
                            const std::string& text,
                            const std::string& origin = "<string>");
CriticalLoop loop_from_file(const BaseLogic& logic, const std::string& path);

// ---------------------------------------------------------------------------
// Operator documents:
// {
//   "kind": "trivial" | "plain_union" | "table" | "builtin" |
//           "from_assignment" | "from_loop",
//   "fallback": "trivial" | "error",                    // table only
//   "entries": [{"k": [...], "gamma": [...], "result": [...]}, ...],
//   "name": "op_ex",                                    // builtin only
//   "assignment": { ... },                              // from_assignment
//   "loop": { ... }                                     // from_loop
// }
// Builtin operators are reconstructed by name from the gallery registry.

std::string operator_to_json(const BaseLogic& logic, const Operator& op);
Operator operator_from_json(const BaseLogic& logic,
                            const std::string& text,
                            const std::string& origin = "<string>");
Operator operator_from_file(const BaseLogic& logic, const std::string& path);

// ---------------------------------------------------------------------------
// Pipeline traces (write-only): the base, all four relation stages, the
// detached pairs that were removed, per-class minima after every stage, and
// the final compatibility verdict.

std::string trace_to_json(const BaseLogic& logic, const PipelineTrace& trace);

}  // namespace revkit
