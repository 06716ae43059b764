#pragma once

#include <vector>

#include "sej/builder.hpp"
#include "sej/polynomial.hpp"

namespace sej {

/// One semiring rewrite applied at a position inside a term: the subterm at
/// `path` (0 = left, 1 = right at each Sum/Prod) is `from` and becomes `to`,
/// where (from, to) instantiates `scheme` as printed, or reversed for the
/// biconditional schemes.
struct ElemRewrite {
  std::vector<int> path;
  SchemeId scheme;
  TermPtr from, to;
};

TermPtr term_subterm(const TermPtr& t, const std::vector<int>& path);
TermPtr term_replace(const TermPtr& t, const std::vector<int>& path, const TermPtr& repl);
TermPtr apply_elem(const TermPtr& t, const ElemRewrite& e);

/// Elementary path t ->* canonical_term(normalize(t)); pure semiring steps.
std::vector<ElemRewrite> normalization_steps(const TermPtr& t);

/// Reverses a path s ->* u into u ->* s. c+ reverses to itself, the
/// biconditional schemes swap orientation, and the reverse of a+ expands to
/// the five-step c+/a+/c+/a+/c+ derivation behind Lemma-style converses.
std::vector<ElemRewrite> invert_steps(const std::vector<ElemRewrite>& steps);

/// Path to a formula node: 0/1 = Implies lhs/rhs, 1 = Evidence body.
FormulaPtr formula_node_at(const FormulaPtr& f, const std::vector<int>& path);
FormulaPtr formula_replace_evidence_term(const FormulaPtr& f, const std::vector<int>& path,
                                         const TermPtr& t);

/// Emits a proof of F -> F' where F' rewrites the evidence term of the node
/// at `evidence_path` along `steps`; returns the concluding step index and
/// stores F' in `result`. An empty path yields F -> F.
std::size_t prove_term_path(ProofBuilder& b, const FormulaPtr& f,
                            const std::vector<int>& evidence_path,
                            const std::vector<ElemRewrite>& steps, FormulaPtr* result);

/// Proof of F -> F[term at evidence_path := target]; requires the current
/// term and target to be equal in the free semiring.
std::size_t prove_term_equal(ProofBuilder& b, const FormulaPtr& f,
                             const std::vector<int>& evidence_path, const TermPtr& target,
                             FormulaPtr* result);

}  // namespace sej
