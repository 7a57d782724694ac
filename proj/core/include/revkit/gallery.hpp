// Built-in example instances: small hand-constructed logics, operators and
// assignments with known verdicts, used by the tests, the docs and the CLI.
// Names of infinite-universe instances are reserved but not loadable.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "revkit/assignment.hpp"
#include "revkit/logic.hpp"
#include "revkit/op.hpp"

namespace revkit {

struct GalleryEntry {
    std::string name;
    std::string description;
    BaseLogic logic;
    std::optional<Operator> op;
    std::optional<Assignment> assignment;
};

// Loads one of: L_Ex, ex10_12, pl2, pl3, pl4, B_four, B_mr, B_rps, B_nb.
// Reserved infinite-universe names raise OutOfScopeInfinite; anything else
// raises UnknownGalleryName.
GalleryEntry load_gallery(const std::string& name);

const std::vector<std::string>& gallery_names();
const std::vector<std::string>& reserved_gallery_names();

// The named revision rules used by gallery entries ("op_ex", "op_four");
// also the hook the JSON reader uses to rebuild builtin operators.
Operator gallery_builtin(const std::string& name);

} // namespace revkit
