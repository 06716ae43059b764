#pragma once

#include "sej/formula.hpp"

namespace sej {

/// Tautology test on the propositional skeleton: maximal t:A subformulas and
/// atoms are opaque propositional letters, bot is false. Bit-parallel truth
/// table up to 20 letters, branching (DPLL-style) search above that.
bool is_skeleton_tautology(const FormulaPtr& f);

}  // namespace sej
