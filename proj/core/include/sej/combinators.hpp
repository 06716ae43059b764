#pragma once

#include <vector>

#include "sej/builder.hpp"
#include "sej/rewrite.hpp"

namespace sej {

struct CombinatorResult {
  TermPtr term;
  FormulaPtr statement;
  SEProof proof;
};

/// Lifts a checked proof of A into a proof of t:A with t ground. Axiom and
/// theory steps map to their justifying constants, MP to the product of the
/// two terms, jv keeps the term. Requires an axiomatically appropriate
/// schematic theory and a proof that checks.
CombinatorResult internalize(const TheoryDescriptor& T, const SEProof& p);

/// From s:(A->B) and t:(B->C) proves ((d*(c*t))*s):(A->C) with c, d the
/// CL-scheme constant.
CombinatorResult syl(const TheoryDescriptor& T, const SEProof& s_proof, const SEProof& t_proof);

/// t1:A1 & ... & tn:An -> (c_n*t1*...*tn):(A1 & ... & An)
CombinatorResult make_c_n(const TheoryDescriptor& T, const std::vector<TermPtr>& terms,
                          const std::vector<FormulaPtr>& formulas);

/// d_{2^l}:(A_i -> balanced disjunction of the 2^l formulas); the term does
/// not depend on i or the formulas (d_1 by internalization, d_2 = t_w,
/// d_{2l} = syl(d_l, d_2)).
CombinatorResult make_d_pow2(const TheoryDescriptor& T, unsigned l,
                             const std::vector<FormulaPtr>& formulas, std::size_t i);

/// e_n:((A1->B) -> (... -> ((An->B) -> (A1|...|An -> B))...)), by
/// internalizing the case-analysis tautology (right-folded disjunction).
CombinatorResult make_e_n(const TheoryDescriptor& T, const std::vector<FormulaPtr>& formulas,
                          const FormulaPtr& b);

/// s:A | t:A -> (s*t):A with s*t = ((u*c)*s)*t, u = c_cl, c the star
/// constant. Requires the star hypothesis.
CombinatorResult star_sum(const TheoryDescriptor& T, const TermPtr& s, const TermPtr& t,
                          const FormulaPtr& a);

// ---- builder-level versions used by the realizer ----

/// Internalizes the last `p.steps.size()` steps; emits into b; returns the
/// index proving t:A and stores t.
std::size_t emit_internalize(ProofBuilder& b, const SEProof& p, TermPtr* term_out);

std::size_t emit_syl(ProofBuilder& b, std::size_t s_idx, std::size_t t_idx);

/// Curried and-introduction: proves (t1:A1 & ... & tn:An) -> T:(A1&...&An)
/// with T = ((c_cl*t1)*...)*tn; stores T.
std::size_t emit_and_intro(ProofBuilder& b, const std::vector<TermPtr>& terms,
                           const std::vector<FormulaPtr>& formulas, TermPtr* term_out);

/// d_{2^l} against a specific balanced disjunction, proving
/// d:(formulas[i] -> balanced_disj(formulas)).
std::size_t emit_d_pow2(ProofBuilder& b, unsigned l, const std::vector<FormulaPtr>& formulas,
                        std::size_t i, TermPtr* term_out);

/// s:A -> (s*t):A (second = false) or t:A -> (s*t):A (second = true).
std::size_t emit_star_intro(ProofBuilder& b, const TermPtr& s, const TermPtr& t,
                            const FormulaPtr& a, bool second, TermPtr* term_out);

}  // namespace sej
