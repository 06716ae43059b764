#pragma once

#include <optional>
#include <string>

#include "sej/formula.hpp"
#include "sej/term.hpp"

namespace sej {

/// The eleven axiom schemes of the deductive system. CL, J and JPlus are the
/// logical schemes; the rest are the semiring rewrite schemes.
enum class SchemeId { CL, J, JPlus, APlus, CPlus, ZeroPlus, AM, AZero, AOne, DL, DR };

const char* scheme_name(SchemeId s);
std::optional<SchemeId> scheme_from_name(const std::string& name);
bool is_semiring_scheme(SchemeId s);
/// a+ and c+ are stated one-directionally; everything else is a biconditional
/// and licenses both orientations as a step.
bool scheme_bidirectional(SchemeId s);

struct SchemeMatch {
  SchemeId scheme;
  TermPtr x, y, z;   // pattern metavariable bindings (z may be null)
  bool reversed;     // matched against (rhs, lhs) of the printed pattern
  int alt = 0;       // a0/a1 sub-pattern: 0 = x*0 / x*1 form, 1 = 0*x / 1*x form
};

/// Printed-direction rewrite pair (L, R) of the scheme instantiated with the
/// given metavariable bindings (inverse of match_scheme_pair).
std::pair<TermPtr, TermPtr> build_scheme_pair(SchemeId scheme, const TermPtr& x, const TermPtr& y,
                                              const TermPtr& z, int alt);

/// Does (s, t) instantiate the rewrite pattern of `scheme`? With `vars_only`
/// the metavariables must bind to variables (strict axiom instances); without
/// it arbitrary terms are allowed (the axiom+jv derived rule).
std::optional<SchemeMatch> match_scheme_pair(SchemeId scheme, const TermPtr& s, const TermPtr& t,
                                             bool vars_only);

/// Searches all semiring schemes (fixed order, both orientations where
/// licensed) for a pair witnessing lhs -> rhs as one semiring step: the two
/// formulas must agree except at term positions all carrying the same
/// rewrite pair (s, t).
struct SemiringStepMatch {
  SchemeId scheme;
  TermPtr from, to;
};
std::optional<SemiringStepMatch> match_semiring_step(const FormulaPtr& lhs, const FormulaPtr& rhs);

/// True when rhs equals lhs with some occurrences of `from` replaced by `to`
/// and at least the mismatching positions all resolved by that pair.
bool formulas_differ_by_pair(const FormulaPtr& lhs, const FormulaPtr& rhs, const TermPtr& from,
                             const TermPtr& to);

/// Strict axiom-instance tests for the logical schemes (x, y must be
/// variables).  j: x:(A->B) -> (y:A -> x*y:B); j+: x:A & y:A -> (x+y):A.
bool is_axiom_j_instance(const FormulaPtr& f);
bool is_axiom_jplus_instance(const FormulaPtr& f);

/// Strict semiring axiom instance: f = A[w/s] -> A[w/t] with (s, t) a
/// variables-only instance of the scheme (either orientation for
/// biconditional schemes).
bool is_semiring_axiom_instance(SchemeId scheme, const FormulaPtr& f);

}  // namespace sej
