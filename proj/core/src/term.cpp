#include "sej/term.hpp"

#include <stdexcept>

namespace sej {

bool is_term_variable_name(const std::string& name) {
  return !name.empty() && name[0] >= 'u' && name[0] <= 'z';
}

bool is_term_constant_name(const std::string& name) {
  return !name.empty() && name[0] >= 'a' && name[0] <= 't';
}

bool is_atom_name(const std::string& name) {
  return !name.empty() && name[0] >= 'A' && name[0] <= 'Z';
}

TermPtr Term::constant(const std::string& name) {
  if (!is_term_constant_name(name))
    throw std::invalid_argument("constant names start with a..t: " + name);
  return std::make_shared<Term>(TermKind::Constant, name, nullptr, nullptr);
}

TermPtr Term::var(const std::string& name) {
  if (!is_term_variable_name(name))
    throw std::invalid_argument("variable names start with u..z: " + name);
  return std::make_shared<Term>(TermKind::Var, name, nullptr, nullptr);
}

TermPtr Term::zero() {
  static const TermPtr z = std::make_shared<Term>(TermKind::Zero, "", nullptr, nullptr);
  return z;
}

TermPtr Term::one() {
  static const TermPtr o = std::make_shared<Term>(TermKind::One, "", nullptr, nullptr);
  return o;
}

TermPtr Term::sum(TermPtr a, TermPtr b) {
  return std::make_shared<Term>(TermKind::Sum, "", std::move(a), std::move(b));
}

TermPtr Term::prod(TermPtr a, TermPtr b) {
  return std::make_shared<Term>(TermKind::Prod, "", std::move(a), std::move(b));
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TermKind::Zero:
    case TermKind::One:
      return true;
    case TermKind::Constant:
    case TermKind::Var:
      return a->name == b->name;
    case TermKind::Sum:
    case TermKind::Prod:
      return term_equal(a->left, b->left) && term_equal(a->right, b->right);
  }
  return false;
}

bool term_is_ground(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Var:
      return false;
    case TermKind::Sum:
    case TermKind::Prod:
      return term_is_ground(t->left) && term_is_ground(t->right);
    default:
      return true;
  }
}

std::size_t term_size(const TermPtr& t) {
  if (t->kind == TermKind::Sum || t->kind == TermKind::Prod)
    return 1 + term_size(t->left) + term_size(t->right);
  return 1;
}

bool term_contains_var(const TermPtr& t, const std::string& var) {
  switch (t->kind) {
    case TermKind::Var:
      return t->name == var;
    case TermKind::Sum:
    case TermKind::Prod:
      return term_contains_var(t->left, var) || term_contains_var(t->right, var);
    default:
      return false;
  }
}

void collect_term_vars(const TermPtr& t, std::set<std::string>& out) {
  switch (t->kind) {
    case TermKind::Var:
      out.insert(t->name);
      break;
    case TermKind::Sum:
    case TermKind::Prod:
      collect_term_vars(t->left, out);
      collect_term_vars(t->right, out);
      break;
    default:
      break;
  }
}

void collect_term_constants(const TermPtr& t, std::set<std::string>& out) {
  switch (t->kind) {
    case TermKind::Constant:
      out.insert(t->name);
      break;
    case TermKind::Sum:
    case TermKind::Prod:
      collect_term_constants(t->left, out);
      collect_term_constants(t->right, out);
      break;
    default:
      break;
  }
}

TermPtr substitute_term(const TermPtr& t, const std::string& var, const TermPtr& repl) {
  switch (t->kind) {
    case TermKind::Var:
      return t->name == var ? repl : t;
    case TermKind::Sum: {
      TermPtr l = substitute_term(t->left, var, repl);
      TermPtr r = substitute_term(t->right, var, repl);
      if (l.get() == t->left.get() && r.get() == t->right.get()) return t;
      return Term::sum(l, r);
    }
    case TermKind::Prod: {
      TermPtr l = substitute_term(t->left, var, repl);
      TermPtr r = substitute_term(t->right, var, repl);
      if (l.get() == t->left.get() && r.get() == t->right.get()) return t;
      return Term::prod(l, r);
    }
    default:
      return t;
  }
}

namespace {

// precedence: sum = 1, prod = 2, leaf = 3; both operators left-associative
void print_rec(const TermPtr& t, int min_prec, bool full, std::string& out) {
  switch (t->kind) {
    case TermKind::Zero:
      out += '0';
      return;
    case TermKind::One:
      out += '1';
      return;
    case TermKind::Constant:
    case TermKind::Var:
      out += t->name;
      return;
    case TermKind::Sum: {
      bool parens = full || min_prec > 1;
      if (parens) out += '(';
      print_rec(t->left, 1, full, out);
      out += " + ";
      print_rec(t->right, 2, full, out);
      if (parens) out += ')';
      return;
    }
    case TermKind::Prod: {
      bool parens = full || min_prec > 2;
      if (parens) out += '(';
      print_rec(t->left, 2, full, out);
      out += '*';
      print_rec(t->right, 3, full, out);
      if (parens) out += ')';
      return;
    }
  }
}

}  // namespace

std::string print_term(const TermPtr& t, bool full_parens) {
  std::string out;
  print_rec(t, 1, full_parens, out);
  return out;
}

TermPtr term_power(const TermPtr& x, unsigned k) {
  TermPtr acc = Term::one();
  for (unsigned i = 0; i < k; ++i) acc = Term::prod(acc, x);
  return acc;
}

}  // namespace sej
