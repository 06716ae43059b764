#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sej/proof.hpp"

namespace sej {

/// Deterministic fresh-variable source; names v1, v2, ... skipping taken ones.
class FreshVars {
public:
  void reserve(const std::string& name) { used_.insert(name); }
  void reserve_from(const FormulaPtr& f);
  void reserve_from(const TermPtr& t);
  std::string fresh(const std::string& prefix = "v");

private:
  std::set<std::string> used_;
  unsigned counter_ = 0;
};

/// Grows one linear proof; every helper returns the index of its concluding
/// step. Misuse (an MP whose formulas do not fit, say) throws immediately,
/// which keeps construction bugs close to their cause; final artifacts are
/// still re-checked with check_proof.
class ProofBuilder {
public:
  explicit ProofBuilder(const TheoryDescriptor& theory) : theory_(&theory) {}

  std::size_t add(ProofStep s);
  /// Appends all steps of p with indices shifted; returns the last step's index.
  std::size_t import(const SEProof& p);

  const FormulaPtr& formula_at(std::size_t i) const { return formulas_.at(i); }
  std::size_t size() const { return proof_.steps.size(); }
  const SEProof& proof() const { return proof_; }
  SEProof take() { return std::move(proof_); }
  const TheoryDescriptor& theory() const { return *theory_; }

  std::size_t prop_taut(FormulaPtr f);
  std::size_t theory_member(FormulaPtr f);
  std::size_t mp(std::size_t premise, std::size_t implication);
  std::size_t jv(std::size_t premise, const std::string& var, TermPtr t);

  /// fun: u:(X->Y), arg: w:X  =>  (u*w):Y       (axiom j, 2 jv, 2 MP)
  std::size_t apply_evidence(std::size_t fun, std::size_t arg);
  /// ab: A->B, bc: B->C  =>  A->C
  std::size_t chain(std::size_t ab, std::size_t bc);
  /// Simultaneous substitution via fresh intermediates (jv is one-at-a-time).
  std::size_t subst_many(std::size_t premise,
                         const std::vector<std::pair<std::string, TermPtr>>& subs);

  FreshVars fresh;

private:
  const TheoryDescriptor* theory_;
  SEProof proof_;
  std::vector<FormulaPtr> formulas_;
};

/// The step's formula given the formulas of earlier steps; throws on
/// ill-formed steps (shared by the checker and the builder).
FormulaPtr step_formula(const ProofStep& s, const std::vector<FormulaPtr>& earlier);

}  // namespace sej
