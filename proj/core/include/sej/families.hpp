#pragma once

#include <map>
#include <vector>

#include "sej/sequent.hpp"

namespace sej {

/// Equivalence class of related box occurrences across a derivation.
/// Generated derivations share formula subtrees between premise and
/// conclusion, so most relatedness is literal id equality; the computation
/// still unions positionally per rule instance to cover cloned formulas and
/// contraction (where both premise copies relate to the conclusion).
struct Family {
  int id = 0;
  Polarity polarity = Polarity::Positive;
  bool essential = false;
  std::vector<OccId> members;           // distinct ids, sorted
  std::vector<GKNode*> box_nodes;       // box rules introducing into this family, post-order
  OccId root_occ = 0;                   // the family's unique occurrence in the root sequent
};

struct FamilyPartition {
  std::vector<Family> families;         // ordered by root-sequent preorder position
  std::map<OccId, int> family_of;

  const Family& of(OccId occ) const { return families.at(family_of.at(occ)); }
};

/// Throws std::invalid_argument on malformed derivations (mixed polarity in a
/// family, no unique root occurrence).
FamilyPartition compute_families(GKDerivation& d);

/// Realization step 1: pads the box-rule premises of one essential family so
/// all have the same antecedent cardinality — weakenings duplicating the
/// first premise formula above each box rule, contractions below restoring
/// the conclusion. The derivation is rewired in place; recompute families
/// afterwards. Throws if any premise is empty (that family belongs to the
/// internalization path).
void equalize_box_premises(GKDerivation& d, const std::vector<GKNode*>& family_box_nodes);

}  // namespace sej
