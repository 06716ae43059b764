#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "sej/term.hpp"

namespace sej {

enum class FmlKind { Bottom, Atom, Implies, Evidence };

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Justification formula over bottom, atoms, implication and t:A.
/// The derived connectives ~, &, |, <-> exist only in the parser; internally
/// everything is bottom and ->.
class Formula {
public:
  FmlKind kind;
  std::string atom;        // Atom
  TermPtr term;            // Evidence
  FormulaPtr lhs, rhs;     // Implies: lhs -> rhs; Evidence: rhs = body

  static FormulaPtr bottom();
  static FormulaPtr atom_f(const std::string& name);
  static FormulaPtr implies(FormulaPtr a, FormulaPtr b);
  static FormulaPtr evidence(TermPtr t, FormulaPtr body);

  Formula(FmlKind k, std::string a, TermPtr t, FormulaPtr l, FormulaPtr r)
      : kind(k), atom(std::move(a)), term(std::move(t)), lhs(std::move(l)), rhs(std::move(r)) {}
};

// Derived connectives (strictly sugar).
FormulaPtr f_not(FormulaPtr a);                       // a -> bot
FormulaPtr f_and(FormulaPtr a, FormulaPtr b);         // (a -> (b -> bot)) -> bot
FormulaPtr f_or(FormulaPtr a, FormulaPtr b);          // (a -> bot) -> b
FormulaPtr f_iff(FormulaPtr a, FormulaPtr b);
FormulaPtr f_top();                                   // bot -> bot

/// Right fold: [A,B,C] => A & (B & C). Empty list => top.
FormulaPtr conj_list(const std::vector<FormulaPtr>& fs);
/// Right fold: [A,B,C] => A | (B | C). Empty list => bot.
FormulaPtr disj_list(const std::vector<FormulaPtr>& fs);
/// Full binary tree of | over 2^depth formulas.
FormulaPtr balanced_disj(const std::vector<FormulaPtr>& fs);

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b);
std::size_t formula_size(const FormulaPtr& f);
void collect_formula_vars(const FormulaPtr& f, std::set<std::string>& out);
void collect_formula_constants(const FormulaPtr& f, std::set<std::string>& out);
void collect_formula_atoms(const FormulaPtr& f, std::set<std::string>& out);
bool formula_contains_var(const FormulaPtr& f, const std::string& var);
bool formula_is_propositional(const FormulaPtr& f);

/// A[x/t]: every occurrence of the variable x inside every term replaced by t.
FormulaPtr substitute(const FormulaPtr& f, const std::string& var, const TermPtr& t);

/// Finite variable -> term map applied simultaneously (sigma-substitution):
/// the replacing terms are not themselves rewritten.
using Substitution = std::map<std::string, TermPtr>;
FormulaPtr apply_substitution(const FormulaPtr& f, const Substitution& sigma);

/// Drops every t: prefix (the propositional projection; identity on CL formulas).
FormulaPtr project_propositional(const FormulaPtr& f);

std::string print_formula(const FormulaPtr& f, bool full_parens = false);

}  // namespace sej
