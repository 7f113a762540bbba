#pragma once

#include "codepth/appendix.hpp"
#include "codepth/field.hpp"
#include "codepth/powser.hpp"

#include <string>
#include <vector>

namespace codepth {

// One closed form evaluated on one fixture and compared with the resolution
// oracle on the window [lo, degree].
struct FormulaCheck {
    Formula formula = Formula::shift;
    std::string fixture;
    bool pass = false;
    SeriesWindow closed_form;
    SeriesWindow oracle;
    std::string error;  // set when either side threw
};

// Runs every built-in fixture of f (at least ten per formula).
std::vector<FormulaCheck> verify_formula(Formula f, const FieldSpec& field, int degree = 8);

std::vector<std::string> fixture_names(Formula f);

} // namespace codepth
