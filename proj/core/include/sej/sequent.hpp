#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sej/modal.hpp"

namespace sej {

/// Multiset sequent, kept as ordered vectors for determinism and printing;
/// all rules are validated up to position bookkeeping, never up to reordering.
struct Sequent {
  std::vector<ModalPtr> ant, suc;
};

std::string print_sequent(const Sequent& s);

enum class GKRule { AxP, AxBot, ImpL, ImpR, BoxRule, WeakL, WeakR, ContrL, ContrR };

const char* gk_rule_name(GKRule r);
std::optional<GKRule> gk_rule_from_name(const std::string& name);

/// Node of an explicit GK derivation; children are the premises. Occurrence
/// identity: box occurrences that persist across rules share their OccId
/// (formula subtrees are shared), so "related" needs no extra bookkeeping in
/// generated derivations; compute_families still unions positionally to
/// support hand-built trees with cloned formulas.
///
/// Position conventions (principal indexes into this node's sequent):
///   AxP      P => P, leaf
///   AxBot    bot => , leaf
///   ImpL     principal k in ant: premises  ant\k => suc,A   and   B,ant\k => suc
///   ImpR     principal k in suc: premise   A,ant => suc\k,B
///   BoxRule  []G => []A: premise G => A (positionwise unboxing)
///   WeakL/R  principal k = inserted position; premise drops it
///   ContrL/R principal k = kept position; premise has the duplicate at k,k+1
struct GKNode {
  Sequent seq;
  GKRule rule = GKRule::AxP;
  std::size_t principal = 0;
  std::vector<std::unique_ptr<GKNode>> children;
};

struct GKDerivation {
  std::unique_ptr<GKNode> root;
};

/// Checks every node against its rule schema; nullopt when the derivation is
/// well-formed, otherwise a diagnostic.
std::optional<std::string> validate_derivation(const GKDerivation& d);

/// Indented text rendering (root first, premises indented).
std::string print_derivation(const GKDerivation& d);

/// Post-order node listing (premises before conclusions), deterministic.
std::vector<GKNode*> postorder(const GKDerivation& d);

}  // namespace sej
