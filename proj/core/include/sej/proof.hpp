#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sej/formula.hpp"
#include "sej/schemes.hpp"
#include "sej/theory.hpp"

namespace sej {

/// One linear proof step. MP and JV reference earlier steps by index; every
/// other step's formula is reconstructible from its own fields, so a proof
/// checks without search.
struct ProofStep {
  enum class Kind { PropTaut, AxiomJ, AxiomJPlus, SemiringStep, TheoryMember, MP, JV };
  Kind kind = Kind::PropTaut;

  FormulaPtr formula;  // PropTaut / TheoryMember: the asserted formula

  // AxiomJ: var_x:(A->B) -> (var_y:A -> var_x*var_y:B)
  // AxiomJPlus: var_x:A & var_y:A -> (var_x+var_y):A   (A stored in `a`)
  std::string var_x, var_y;
  FormulaPtr a, b;

  // SemiringStep: context[hole/lhs_term] -> context[hole/rhs_term]
  FormulaPtr context;
  std::string hole;
  TermPtr lhs_term, rhs_term;
  SchemeId scheme = SchemeId::CL;

  // MP: from `premise` (A) and `implication` (A -> B) conclude B
  std::size_t premise = 0, implication = 0;
  // JV: from `premise` (A) conclude A[jv_var/jv_term]
  std::string jv_var;
  TermPtr jv_term;

  static ProofStep prop_taut(FormulaPtr f);
  static ProofStep axiom_j(std::string x, std::string y, FormulaPtr a, FormulaPtr b);
  static ProofStep axiom_jplus(std::string x, std::string y, FormulaPtr a);
  static ProofStep semiring(FormulaPtr context, std::string hole, TermPtr l, TermPtr r,
                            SchemeId scheme);
  static ProofStep theory_member(FormulaPtr f);
  static ProofStep mp(std::size_t premise, std::size_t implication);
  static ProofStep jv(std::size_t premise, std::string var, TermPtr t);
};

struct SEProof {
  std::vector<ProofStep> steps;
};

struct CheckResult {
  bool ok = false;
  FormulaPtr theorem;               // when ok
  std::size_t error_step = 0;       // when !ok
  std::string reason;               // when !ok
  std::vector<FormulaPtr> derived;  // formula per step, filled as far as checking got
};

/// Validates every step; ok iff all pass, with the last step's formula as the
/// theorem. On failure reports the first offending step and why.
CheckResult check_proof(const TheoryDescriptor& theory, const SEProof& proof);

/// Theory capability groups used by a proof's TheoryMember steps.
struct CapabilityUsage {
  bool scheme_constants = false;
  bool weakening = false;
  bool star = false;
  bool extras = false;
};
CapabilityUsage scan_capabilities(const TheoryDescriptor& theory, const SEProof& proof);

}  // namespace sej
