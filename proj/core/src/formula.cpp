#include "sej/formula.hpp"

#include <stdexcept>

namespace sej {

FormulaPtr Formula::bottom() {
  static const FormulaPtr b =
      std::make_shared<Formula>(FmlKind::Bottom, "", nullptr, nullptr, nullptr);
  return b;
}

FormulaPtr Formula::atom_f(const std::string& name) {
  if (!is_atom_name(name))
    throw std::invalid_argument("atom names start with an uppercase letter: " + name);
  return std::make_shared<Formula>(FmlKind::Atom, name, nullptr, nullptr, nullptr);
}

FormulaPtr Formula::implies(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<Formula>(FmlKind::Implies, "", nullptr, std::move(a), std::move(b));
}

FormulaPtr Formula::evidence(TermPtr t, FormulaPtr body) {
  return std::make_shared<Formula>(FmlKind::Evidence, "", std::move(t), nullptr, std::move(body));
}

FormulaPtr f_not(FormulaPtr a) { return Formula::implies(std::move(a), Formula::bottom()); }

FormulaPtr f_and(FormulaPtr a, FormulaPtr b) {
  return f_not(Formula::implies(std::move(a), f_not(std::move(b))));
}

FormulaPtr f_or(FormulaPtr a, FormulaPtr b) {
  return Formula::implies(f_not(std::move(a)), std::move(b));
}

FormulaPtr f_iff(FormulaPtr a, FormulaPtr b) {
  return f_and(Formula::implies(a, b), Formula::implies(b, a));
}

FormulaPtr f_top() { return Formula::implies(Formula::bottom(), Formula::bottom()); }

FormulaPtr conj_list(const std::vector<FormulaPtr>& fs) {
  if (fs.empty()) return f_top();
  FormulaPtr acc = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) acc = f_and(fs[i], acc);
  return acc;
}

FormulaPtr disj_list(const std::vector<FormulaPtr>& fs) {
  if (fs.empty()) return Formula::bottom();
  FormulaPtr acc = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) acc = f_or(fs[i], acc);
  return acc;
}

FormulaPtr balanced_disj(const std::vector<FormulaPtr>& fs) {
  if (fs.empty()) throw std::invalid_argument("balanced_disj of nothing");
  if ((fs.size() & (fs.size() - 1)) != 0)
    throw std::invalid_argument("balanced_disj needs a power-of-two width");
  std::vector<FormulaPtr> layer = fs;
  while (layer.size() > 1) {
    std::vector<FormulaPtr> next;
    for (std::size_t i = 0; i < layer.size(); i += 2) next.push_back(f_or(layer[i], layer[i + 1]));
    layer = std::move(next);
  }
  return layer[0];
}

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case FmlKind::Bottom:
      return true;
    case FmlKind::Atom:
      return a->atom == b->atom;
    case FmlKind::Implies:
      return formula_equal(a->lhs, b->lhs) && formula_equal(a->rhs, b->rhs);
    case FmlKind::Evidence:
      return term_equal(a->term, b->term) && formula_equal(a->rhs, b->rhs);
  }
  return false;
}

std::size_t formula_size(const FormulaPtr& f) {
  switch (f->kind) {
    case FmlKind::Bottom:
    case FmlKind::Atom:
      return 1;
    case FmlKind::Implies:
      return 1 + formula_size(f->lhs) + formula_size(f->rhs);
    case FmlKind::Evidence:
      return 1 + term_size(f->term) + formula_size(f->rhs);
  }
  return 1;
}

void collect_formula_vars(const FormulaPtr& f, std::set<std::string>& out) {
  switch (f->kind) {
    case FmlKind::Implies:
      collect_formula_vars(f->lhs, out);
      collect_formula_vars(f->rhs, out);
      break;
    case FmlKind::Evidence:
      collect_term_vars(f->term, out);
      collect_formula_vars(f->rhs, out);
      break;
    default:
      break;
  }
}

void collect_formula_constants(const FormulaPtr& f, std::set<std::string>& out) {
  switch (f->kind) {
    case FmlKind::Implies:
      collect_formula_constants(f->lhs, out);
      collect_formula_constants(f->rhs, out);
      break;
    case FmlKind::Evidence:
      collect_term_constants(f->term, out);
      collect_formula_constants(f->rhs, out);
      break;
    default:
      break;
  }
}

void collect_formula_atoms(const FormulaPtr& f, std::set<std::string>& out) {
  switch (f->kind) {
    case FmlKind::Atom:
      out.insert(f->atom);
      break;
    case FmlKind::Implies:
      collect_formula_atoms(f->lhs, out);
      collect_formula_atoms(f->rhs, out);
      break;
    case FmlKind::Evidence:
      collect_formula_atoms(f->rhs, out);
      break;
    default:
      break;
  }
}

bool formula_contains_var(const FormulaPtr& f, const std::string& var) {
  switch (f->kind) {
    case FmlKind::Implies:
      return formula_contains_var(f->lhs, var) || formula_contains_var(f->rhs, var);
    case FmlKind::Evidence:
      return term_contains_var(f->term, var) || formula_contains_var(f->rhs, var);
    default:
      return false;
  }
}

bool formula_is_propositional(const FormulaPtr& f) {
  switch (f->kind) {
    case FmlKind::Implies:
      return formula_is_propositional(f->lhs) && formula_is_propositional(f->rhs);
    case FmlKind::Evidence:
      return false;
    default:
      return true;
  }
}

FormulaPtr substitute(const FormulaPtr& f, const std::string& var, const TermPtr& t) {
  switch (f->kind) {
    case FmlKind::Implies: {
      FormulaPtr l = substitute(f->lhs, var, t);
      FormulaPtr r = substitute(f->rhs, var, t);
      if (l.get() == f->lhs.get() && r.get() == f->rhs.get()) return f;
      return Formula::implies(l, r);
    }
    case FmlKind::Evidence: {
      TermPtr tt = substitute_term(f->term, var, t);
      FormulaPtr r = substitute(f->rhs, var, t);
      if (tt.get() == f->term.get() && r.get() == f->rhs.get()) return f;
      return Formula::evidence(tt, r);
    }
    default:
      return f;
  }
}

namespace {

TermPtr apply_sigma_term(const TermPtr& t, const Substitution& sigma) {
  switch (t->kind) {
    case TermKind::Var: {
      auto it = sigma.find(t->name);
      return it == sigma.end() ? t : it->second;
    }
    case TermKind::Sum:
      return Term::sum(apply_sigma_term(t->left, sigma), apply_sigma_term(t->right, sigma));
    case TermKind::Prod:
      return Term::prod(apply_sigma_term(t->left, sigma), apply_sigma_term(t->right, sigma));
    default:
      return t;
  }
}

}  // namespace

FormulaPtr apply_substitution(const FormulaPtr& f, const Substitution& sigma) {
  switch (f->kind) {
    case FmlKind::Implies:
      return Formula::implies(apply_substitution(f->lhs, sigma),
                              apply_substitution(f->rhs, sigma));
    case FmlKind::Evidence:
      return Formula::evidence(apply_sigma_term(f->term, sigma),
                               apply_substitution(f->rhs, sigma));
    default:
      return f;
  }
}

FormulaPtr project_propositional(const FormulaPtr& f) {
  switch (f->kind) {
    case FmlKind::Implies:
      return Formula::implies(project_propositional(f->lhs), project_propositional(f->rhs));
    case FmlKind::Evidence:
      return project_propositional(f->rhs);
    default:
      return f;
  }
}

namespace {

// precedence: implies = 1 (right-assoc), evidence = 2, leaf = 3
void print_fml(const FormulaPtr& f, int min_prec, bool full, std::string& out) {
  switch (f->kind) {
    case FmlKind::Bottom:
      out += "bot";
      return;
    case FmlKind::Atom:
      out += f->atom;
      return;
    case FmlKind::Implies: {
      bool parens = full || min_prec > 1;
      if (parens) out += '(';
      print_fml(f->lhs, 2, full, out);
      out += " -> ";
      print_fml(f->rhs, 1, full, out);
      if (parens) out += ')';
      return;
    }
    case FmlKind::Evidence: {
      bool parens = full;
      if (parens) out += '(';
      out += print_term(f->term, full);
      out += ':';
      print_fml(f->rhs, 2, full, out);
      if (parens) out += ')';
      return;
    }
  }
}

}  // namespace

std::string print_formula(const FormulaPtr& f, bool full_parens) {
  std::string out;
  print_fml(f, 1, full_parens, out);
  return out;
}

}  // namespace sej
