#include "sej/proof.hpp"

#include "sej/taut.hpp"

namespace sej {

ProofStep ProofStep::prop_taut(FormulaPtr f) {
  ProofStep s;
  s.kind = Kind::PropTaut;
  s.formula = std::move(f);
  return s;
}

ProofStep ProofStep::axiom_j(std::string x, std::string y, FormulaPtr a, FormulaPtr b) {
  ProofStep s;
  s.kind = Kind::AxiomJ;
  s.var_x = std::move(x);
  s.var_y = std::move(y);
  s.a = std::move(a);
  s.b = std::move(b);
  return s;
}

ProofStep ProofStep::axiom_jplus(std::string x, std::string y, FormulaPtr a) {
  ProofStep s;
  s.kind = Kind::AxiomJPlus;
  s.var_x = std::move(x);
  s.var_y = std::move(y);
  s.a = std::move(a);
  return s;
}

ProofStep ProofStep::semiring(FormulaPtr context, std::string hole, TermPtr l, TermPtr r,
                              SchemeId scheme) {
  ProofStep s;
  s.kind = Kind::SemiringStep;
  s.context = std::move(context);
  s.hole = std::move(hole);
  s.lhs_term = std::move(l);
  s.rhs_term = std::move(r);
  s.scheme = scheme;
  return s;
}

ProofStep ProofStep::theory_member(FormulaPtr f) {
  ProofStep s;
  s.kind = Kind::TheoryMember;
  s.formula = std::move(f);
  return s;
}

ProofStep ProofStep::mp(std::size_t premise, std::size_t implication) {
  ProofStep s;
  s.kind = Kind::MP;
  s.premise = premise;
  s.implication = implication;
  return s;
}

ProofStep ProofStep::jv(std::size_t premise, std::string var, TermPtr t) {
  ProofStep s;
  s.kind = Kind::JV;
  s.premise = premise;
  s.jv_var = std::move(var);
  s.jv_term = std::move(t);
  return s;
}

namespace {

FormulaPtr axiom_j_formula(const ProofStep& s) {
  TermPtr x = Term::var(s.var_x);
  TermPtr y = Term::var(s.var_y);
  return Formula::implies(
      Formula::evidence(x, Formula::implies(s.a, s.b)),
      Formula::implies(Formula::evidence(y, s.a),
                       Formula::evidence(Term::prod(x, y), s.b)));
}

FormulaPtr axiom_jplus_formula(const ProofStep& s) {
  TermPtr x = Term::var(s.var_x);
  TermPtr y = Term::var(s.var_y);
  return Formula::implies(
      f_and(Formula::evidence(x, s.a), Formula::evidence(y, s.a)),
      Formula::evidence(Term::sum(x, y), s.a));
}

}  // namespace

CheckResult check_proof(const TheoryDescriptor& theory, const SEProof& proof) {
  CheckResult res;
  auto fail = [&](std::size_t i, std::string why) {
    res.ok = false;
    res.error_step = i;
    res.reason = std::move(why);
    return res;
  };
  if (proof.steps.empty()) return fail(0, "empty proof");

  for (std::size_t i = 0; i < proof.steps.size(); ++i) {
    const ProofStep& s = proof.steps[i];
    switch (s.kind) {
      case ProofStep::Kind::PropTaut: {
        if (!s.formula) return fail(i, "missing formula");
        if (!is_skeleton_tautology(s.formula))
          return fail(i, "not a propositional tautology: " + print_formula(s.formula));
        res.derived.push_back(s.formula);
        break;
      }
      case ProofStep::Kind::AxiomJ: {
        if (!s.a || !s.b) return fail(i, "missing axiom data");
        if (!is_term_variable_name(s.var_x) || !is_term_variable_name(s.var_y))
          return fail(i, "axiom j takes variables, not terms");
        res.derived.push_back(axiom_j_formula(s));
        break;
      }
      case ProofStep::Kind::AxiomJPlus: {
        if (!s.a) return fail(i, "missing axiom data");
        if (!is_term_variable_name(s.var_x) || !is_term_variable_name(s.var_y))
          return fail(i, "axiom j+ takes variables, not terms");
        res.derived.push_back(axiom_jplus_formula(s));
        break;
      }
      case ProofStep::Kind::SemiringStep: {
        if (!s.context || !s.lhs_term || !s.rhs_term) return fail(i, "missing step data");
        if (!is_semiring_scheme(s.scheme))
          return fail(i, std::string("scheme ") + scheme_name(s.scheme) +
                             " is not a semiring scheme");
        if (!is_term_variable_name(s.hole)) return fail(i, "hole must be a variable");
        auto m = match_scheme_pair(s.scheme, s.lhs_term, s.rhs_term, /*vars_only=*/false);
        if (!m)
          return fail(i, std::string("pair is not an instance of scheme ") +
                             scheme_name(s.scheme) + ": " + print_term(s.lhs_term) + " vs " +
                             print_term(s.rhs_term));
        FormulaPtr lhs = substitute(s.context, s.hole, s.lhs_term);
        FormulaPtr rhs = substitute(s.context, s.hole, s.rhs_term);
        res.derived.push_back(Formula::implies(lhs, rhs));
        break;
      }
      case ProofStep::Kind::TheoryMember: {
        if (!s.formula) return fail(i, "missing formula");
        if (!theory.member(s.formula))
          return fail(i, "not a theory member: " + print_formula(s.formula));
        res.derived.push_back(s.formula);
        break;
      }
      case ProofStep::Kind::MP: {
        if (s.premise >= i || s.implication >= i) return fail(i, "MP index out of range");
        const FormulaPtr& a = res.derived[s.premise];
        const FormulaPtr& imp = res.derived[s.implication];
        if (imp->kind != FmlKind::Implies)
          return fail(i, "MP: step " + std::to_string(s.implication) + " is not an implication");
        if (!formula_equal(imp->lhs, a))
          return fail(i, "MP: premise does not match the implication antecedent");
        res.derived.push_back(imp->rhs);
        break;
      }
      case ProofStep::Kind::JV: {
        if (s.premise >= i) return fail(i, "jv index out of range");
        if (!s.jv_term) return fail(i, "missing jv term");
        if (!is_term_variable_name(s.jv_var)) return fail(i, "jv substitutes a variable");
        res.derived.push_back(substitute(res.derived[s.premise], s.jv_var, s.jv_term));
        break;
      }
    }
  }
  res.ok = true;
  res.theorem = res.derived.back();
  return res;
}

CapabilityUsage scan_capabilities(const TheoryDescriptor& theory, const SEProof& proof) {
  CapabilityUsage u;
  for (const auto& s : proof.steps) {
    if (s.kind != ProofStep::Kind::TheoryMember) continue;
    auto w = theory.member(s.formula);
    if (!w) continue;
    switch (w->tag) {
      case TheoryDescriptor::Witness::Tag::Scheme: u.scheme_constants = true; break;
      case TheoryDescriptor::Witness::Tag::Weakening: u.weakening = true; break;
      case TheoryDescriptor::Witness::Tag::Star: u.star = true; break;
      case TheoryDescriptor::Witness::Tag::Extra: u.extras = true; break;
    }
  }
  return u;
}

}  // namespace sej
