#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sej/term.hpp"

namespace sej {

/// Word over user constants and variables; the empty word is 1. Zero and One
/// never appear as atoms (the unit laws eliminate them in canonical form).
struct Monomial {
  std::vector<std::string> atoms;

  bool operator==(const Monomial& o) const { return atoms == o.atoms; }
};

/// length-lexicographic: shorter words first, then atomwise
int monomial_compare(const Monomial& a, const Monomial& b);

/// Canonical element of the free semiring over JConst + JVar: a finite
/// multiset of monomials, kept sorted with run-length multiplicities.
/// The multiset is NOT collapsed to a set; + is not idempotent in a general
/// semiring, so x*(y+y) and x*y stay apart.
struct Polynomial {
  std::vector<std::pair<Monomial, std::uint64_t>> terms;

  bool operator==(const Polynomial& o) const { return terms == o.terms; }
  bool is_zero() const { return terms.empty(); }
};

Polynomial poly_zero();
Polynomial poly_one();
Polynomial poly_atom(const std::string& name);
Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);

/// Rewrites t into its free-semiring canonical form; normalize(s) ==
/// normalize(t) exactly when [s] = [t].
Polynomial normalize(const TermPtr& t);

bool eq_terms(const TermPtr& s, const TermPtr& t);

/// Canonical term rendering: right-associated sum of right-associated
/// products, monomials in stored order, 0/1 for the empty cases.
TermPtr canonical_term(const Polynomial& p);

/// `m1 + m2 + ...` with monomials as `a*b*c`; repeated monomials printed
/// per multiplicity; `0` and `1` for the empty polynomial / empty word.
std::string print_polynomial(const Polynomial& p);

}  // namespace sej
