#include "sej/builder.hpp"

#include <stdexcept>

namespace sej {

void FreshVars::reserve_from(const FormulaPtr& f) {
  std::set<std::string> vars;
  collect_formula_vars(f, vars);
  used_.insert(vars.begin(), vars.end());
}

void FreshVars::reserve_from(const TermPtr& t) {
  std::set<std::string> vars;
  collect_term_vars(t, vars);
  used_.insert(vars.begin(), vars.end());
}

std::string FreshVars::fresh(const std::string& prefix) {
  for (;;) {
    std::string cand = prefix + std::to_string(++counter_);
    if (used_.insert(cand).second) return cand;
  }
}

FormulaPtr step_formula(const ProofStep& s, const std::vector<FormulaPtr>& earlier) {
  switch (s.kind) {
    case ProofStep::Kind::PropTaut:
    case ProofStep::Kind::TheoryMember:
      if (!s.formula) throw std::logic_error("step without formula");
      return s.formula;
    case ProofStep::Kind::AxiomJ: {
      TermPtr x = Term::var(s.var_x);
      TermPtr y = Term::var(s.var_y);
      return Formula::implies(
          Formula::evidence(x, Formula::implies(s.a, s.b)),
          Formula::implies(Formula::evidence(y, s.a),
                           Formula::evidence(Term::prod(x, y), s.b)));
    }
    case ProofStep::Kind::AxiomJPlus: {
      TermPtr x = Term::var(s.var_x);
      TermPtr y = Term::var(s.var_y);
      return Formula::implies(f_and(Formula::evidence(x, s.a), Formula::evidence(y, s.a)),
                              Formula::evidence(Term::sum(x, y), s.a));
    }
    case ProofStep::Kind::SemiringStep:
      return Formula::implies(substitute(s.context, s.hole, s.lhs_term),
                              substitute(s.context, s.hole, s.rhs_term));
    case ProofStep::Kind::MP: {
      const FormulaPtr& imp = earlier.at(s.implication);
      const FormulaPtr& prem = earlier.at(s.premise);
      if (imp->kind != FmlKind::Implies || !formula_equal(imp->lhs, prem))
        throw std::logic_error("MP step does not fit: " + print_formula(prem) + " vs " +
                               print_formula(imp));
      return imp->rhs;
    }
    case ProofStep::Kind::JV:
      return substitute(earlier.at(s.premise), s.jv_var, s.jv_term);
  }
  throw std::logic_error("bad step kind");
}

std::size_t ProofBuilder::add(ProofStep s) {
  FormulaPtr f = step_formula(s, formulas_);
  fresh.reserve_from(f);
  proof_.steps.push_back(std::move(s));
  formulas_.push_back(std::move(f));
  return proof_.steps.size() - 1;
}

std::size_t ProofBuilder::import(const SEProof& p) {
  if (p.steps.empty()) throw std::logic_error("importing an empty proof");
  std::size_t offset = proof_.steps.size();
  for (const ProofStep& s0 : p.steps) {
    ProofStep s = s0;
    if (s.kind == ProofStep::Kind::MP) {
      s.premise += offset;
      s.implication += offset;
    } else if (s.kind == ProofStep::Kind::JV) {
      s.premise += offset;
    }
    add(std::move(s));
  }
  return proof_.steps.size() - 1;
}

std::size_t ProofBuilder::prop_taut(FormulaPtr f) { return add(ProofStep::prop_taut(std::move(f))); }

std::size_t ProofBuilder::theory_member(FormulaPtr f) {
  if (!theory_->member(f))
    throw std::logic_error("not a theory member: " + print_formula(f));
  return add(ProofStep::theory_member(std::move(f)));
}

std::size_t ProofBuilder::mp(std::size_t premise, std::size_t implication) {
  return add(ProofStep::mp(premise, implication));
}

std::size_t ProofBuilder::jv(std::size_t premise, const std::string& var, TermPtr t) {
  return add(ProofStep::jv(premise, var, std::move(t)));
}

std::size_t ProofBuilder::apply_evidence(std::size_t fun, std::size_t arg) {
  FormulaPtr ff = formula_at(fun);
  FormulaPtr fa = formula_at(arg);
  if (ff->kind != FmlKind::Evidence || ff->rhs->kind != FmlKind::Implies ||
      fa->kind != FmlKind::Evidence)
    throw std::logic_error("apply_evidence wants u:(X->Y) and w:X");
  FormulaPtr X = ff->rhs->lhs;
  FormulaPtr Y = ff->rhs->rhs;
  if (!formula_equal(X, fa->rhs))
    throw std::logic_error("apply_evidence: argument formula mismatch");
  std::string a = fresh.fresh();
  std::string b = fresh.fresh();
  std::size_t ax = add(ProofStep::axiom_j(a, b, X, Y));
  std::size_t s1 = jv(ax, a, ff->term);
  std::size_t s2 = jv(s1, b, fa->term);
  std::size_t s3 = mp(fun, s2);
  return mp(arg, s3);
}

std::size_t ProofBuilder::chain(std::size_t ab, std::size_t bc) {
  FormulaPtr f1 = formula_at(ab);
  FormulaPtr f2 = formula_at(bc);
  if (f1->kind != FmlKind::Implies || f2->kind != FmlKind::Implies ||
      !formula_equal(f1->rhs, f2->lhs))
    throw std::logic_error("chain wants A->B and B->C");
  FormulaPtr goal = Formula::implies(f1->lhs, f2->rhs);
  std::size_t taut = prop_taut(Formula::implies(f1, Formula::implies(f2, goal)));
  std::size_t step = mp(ab, taut);
  return mp(bc, step);
}

std::size_t ProofBuilder::subst_many(std::size_t premise,
                                     const std::vector<std::pair<std::string, TermPtr>>& subs) {
  std::size_t cur = premise;
  std::vector<std::string> temps;
  for (const auto& [var, _] : subs) {
    std::string tmp = fresh.fresh();
    temps.push_back(tmp);
    if (formula_contains_var(formula_at(cur), var)) cur = jv(cur, var, Term::var(tmp));
  }
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (formula_contains_var(formula_at(cur), temps[i])) cur = jv(cur, temps[i], subs[i].second);
  }
  return cur;
}

}  // namespace sej
