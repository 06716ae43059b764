#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "sej/formula.hpp"

namespace sej {

enum class ModalKind { Bottom, Atom, Implies, Box };

using OccId = std::uint64_t;

class ModalFormula;
using ModalPtr = std::shared_ptr<const ModalFormula>;

/// Modal-K formula. Every Box node carries an occurrence id so that box
/// occurrences keep their identity through proof transformations (relatedness,
/// families). Ids within one formula are pairwise distinct.
class ModalFormula {
public:
  ModalKind kind;
  std::string atom;
  ModalPtr lhs, rhs;   // Implies
  ModalPtr body;       // Box
  OccId occ = 0;       // Box only

  ModalFormula(ModalKind k, std::string a, ModalPtr l, ModalPtr r, ModalPtr b, OccId id)
      : kind(k), atom(std::move(a)), lhs(std::move(l)), rhs(std::move(r)), body(std::move(b)),
        occ(id) {}
};

/// Hands out derivation-unique box occurrence ids.
class OccAllocator {
public:
  OccId fresh() { return next_++; }

private:
  OccId next_ = 1;
};

ModalPtr m_bottom();
ModalPtr m_atom(const std::string& name);
ModalPtr m_implies(ModalPtr a, ModalPtr b);
ModalPtr m_box(ModalPtr body, OccId id);
ModalPtr m_box(ModalPtr body, OccAllocator& alloc);

/// Structural equality; occurrence ids are ignored.
bool modal_equal(const ModalPtr& a, const ModalPtr& b);
std::size_t modal_size(const ModalPtr& f);
std::size_t modal_depth(const ModalPtr& f);
void collect_modal_atoms(const ModalPtr& f, std::set<std::string>& out);
void collect_box_occs(const ModalPtr& f, std::vector<OccId>& out);

/// Same tree, all box ids replaced by fresh ones; `related` receives
/// (old id, new id) pairs.
ModalPtr clone_with_fresh_ids(const ModalPtr& f, OccAllocator& alloc,
                              std::vector<std::pair<OccId, OccId>>* related);

std::string print_modal(const ModalPtr& f, bool full_parens = false);

enum class Polarity { Positive, Negative };
using PolarityTable = std::map<OccId, Polarity>;

/// Polarity of every box occurrence in f, with the whole formula positive.
PolarityTable annotate_polarity(const ModalPtr& f);
/// Same, but starting from the given polarity (antecedent members start negative).
void annotate_polarity_into(const ModalPtr& f, Polarity start, PolarityTable& table);

/// Forgetful projection in reverse lives in the realizer; this direction
/// replaces every t: with a box.
ModalPtr project_modal(const FormulaPtr& f, OccAllocator& alloc);

}  // namespace sej
