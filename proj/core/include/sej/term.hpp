#pragma once

#include <memory>
#include <set>
#include <string>

namespace sej {

enum class TermKind { Constant, Zero, One, Var, Sum, Prod };

class Term;
using TermPtr = std::shared_ptr<const Term>;

/// Justification term: constants (with distinguished 0 and 1), variables,
/// sums and products. Immutable; share freely.
///
/// Identifier convention (also enforced by the parser): variable names start
/// with u..z, constant names with a..t. Uppercase identifiers are
/// propositional atoms and never name terms.
class Term {
public:
  TermKind kind;
  std::string name;      // Constant / Var
  TermPtr left, right;   // Sum / Prod

  static TermPtr constant(const std::string& name);
  static TermPtr var(const std::string& name);
  static TermPtr zero();
  static TermPtr one();
  static TermPtr sum(TermPtr a, TermPtr b);
  static TermPtr prod(TermPtr a, TermPtr b);

  Term(TermKind k, std::string n, TermPtr l, TermPtr r)
      : kind(k), name(std::move(n)), left(std::move(l)), right(std::move(r)) {}
};

bool is_term_variable_name(const std::string& name);
bool is_term_constant_name(const std::string& name);
bool is_atom_name(const std::string& name);

bool term_equal(const TermPtr& a, const TermPtr& b);
bool term_is_ground(const TermPtr& t);
std::size_t term_size(const TermPtr& t);
bool term_contains_var(const TermPtr& t, const std::string& var);
void collect_term_vars(const TermPtr& t, std::set<std::string>& out);
void collect_term_constants(const TermPtr& t, std::set<std::string>& out);

/// Replaces every occurrence of the variable `var` by `repl`.
TermPtr substitute_term(const TermPtr& t, const std::string& var, const TermPtr& repl);

std::string print_term(const TermPtr& t, bool full_parens = false);

/// x^0 = 1, x^{k+1} = x^k * x.
TermPtr term_power(const TermPtr& x, unsigned k);

}  // namespace sej
