#pragma once

#include <optional>

#include "sej/sequent.hpp"

namespace sej {

/// Terminating backward proof search for modal K. Internally a
/// context-sharing calculus (invertible implication rules saturate first; at
/// a stuck sequent branch over each boxed succedent formula and each
/// sub-multiset of boxed antecedent formulas, largest first, memoizing failed
/// sequents), then elaborated into an explicit GK derivation with weakenings
/// where the box rule discards context. Returns nullopt when the goal is not
/// K-valid. Deterministic: same goal, same derivation.
std::optional<GKDerivation> prove(const ModalPtr& goal);

/// Provability without the derivation (same search).
bool provable(const ModalPtr& goal);

}  // namespace sej
