#include "sej/modal.hpp"

#include <stdexcept>

namespace sej {

ModalPtr m_bottom() {
  static const ModalPtr b =
      std::make_shared<ModalFormula>(ModalKind::Bottom, "", nullptr, nullptr, nullptr, 0);
  return b;
}

ModalPtr m_atom(const std::string& name) {
  if (!is_atom_name(name))
    throw std::invalid_argument("atom names start with an uppercase letter: " + name);
  return std::make_shared<ModalFormula>(ModalKind::Atom, name, nullptr, nullptr, nullptr, 0);
}

ModalPtr m_implies(ModalPtr a, ModalPtr b) {
  return std::make_shared<ModalFormula>(ModalKind::Implies, "", std::move(a), std::move(b),
                                        nullptr, 0);
}

ModalPtr m_box(ModalPtr body, OccId id) {
  return std::make_shared<ModalFormula>(ModalKind::Box, "", nullptr, nullptr, std::move(body), id);
}

ModalPtr m_box(ModalPtr body, OccAllocator& alloc) { return m_box(std::move(body), alloc.fresh()); }

bool modal_equal(const ModalPtr& a, const ModalPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case ModalKind::Bottom:
      return true;
    case ModalKind::Atom:
      return a->atom == b->atom;
    case ModalKind::Implies:
      return modal_equal(a->lhs, b->lhs) && modal_equal(a->rhs, b->rhs);
    case ModalKind::Box:
      return modal_equal(a->body, b->body);
  }
  return false;
}

std::size_t modal_size(const ModalPtr& f) {
  switch (f->kind) {
    case ModalKind::Bottom:
    case ModalKind::Atom:
      return 1;
    case ModalKind::Implies:
      return 1 + modal_size(f->lhs) + modal_size(f->rhs);
    case ModalKind::Box:
      return 1 + modal_size(f->body);
  }
  return 1;
}

std::size_t modal_depth(const ModalPtr& f) {
  switch (f->kind) {
    case ModalKind::Implies:
      return std::max(modal_depth(f->lhs), modal_depth(f->rhs));
    case ModalKind::Box:
      return 1 + modal_depth(f->body);
    default:
      return 0;
  }
}

void collect_modal_atoms(const ModalPtr& f, std::set<std::string>& out) {
  switch (f->kind) {
    case ModalKind::Atom:
      out.insert(f->atom);
      break;
    case ModalKind::Implies:
      collect_modal_atoms(f->lhs, out);
      collect_modal_atoms(f->rhs, out);
      break;
    case ModalKind::Box:
      collect_modal_atoms(f->body, out);
      break;
    default:
      break;
  }
}

void collect_box_occs(const ModalPtr& f, std::vector<OccId>& out) {
  switch (f->kind) {
    case ModalKind::Implies:
      collect_box_occs(f->lhs, out);
      collect_box_occs(f->rhs, out);
      break;
    case ModalKind::Box:
      out.push_back(f->occ);
      collect_box_occs(f->body, out);
      break;
    default:
      break;
  }
}

ModalPtr clone_with_fresh_ids(const ModalPtr& f, OccAllocator& alloc,
                              std::vector<std::pair<OccId, OccId>>* related) {
  switch (f->kind) {
    case ModalKind::Bottom:
    case ModalKind::Atom:
      return f;
    case ModalKind::Implies:
      return m_implies(clone_with_fresh_ids(f->lhs, alloc, related),
                       clone_with_fresh_ids(f->rhs, alloc, related));
    case ModalKind::Box: {
      OccId id = alloc.fresh();
      if (related) related->push_back({f->occ, id});
      return m_box(clone_with_fresh_ids(f->body, alloc, related), id);
    }
  }
  return f;
}

namespace {

void print_m(const ModalPtr& f, int min_prec, bool full, std::string& out) {
  switch (f->kind) {
    case ModalKind::Bottom:
      out += "bot";
      return;
    case ModalKind::Atom:
      out += f->atom;
      return;
    case ModalKind::Implies: {
      bool parens = full || min_prec > 1;
      if (parens) out += '(';
      print_m(f->lhs, 2, full, out);
      out += " -> ";
      print_m(f->rhs, 1, full, out);
      if (parens) out += ')';
      return;
    }
    case ModalKind::Box: {
      bool parens = full;
      if (parens) out += '(';
      out += "[]";
      print_m(f->body, 2, full, out);
      if (parens) out += ')';
      return;
    }
  }
}

}  // namespace

std::string print_modal(const ModalPtr& f, bool full_parens) {
  std::string out;
  print_m(f, 1, full_parens, out);
  return out;
}

void annotate_polarity_into(const ModalPtr& f, Polarity start, PolarityTable& table) {
  switch (f->kind) {
    case ModalKind::Implies:
      annotate_polarity_into(f->lhs,
                             start == Polarity::Positive ? Polarity::Negative : Polarity::Positive,
                             table);
      annotate_polarity_into(f->rhs, start, table);
      break;
    case ModalKind::Box:
      // the leading box has the polarity of the []B occurrence itself
      table[f->occ] = start;
      annotate_polarity_into(f->body, start, table);
      break;
    default:
      break;
  }
}

PolarityTable annotate_polarity(const ModalPtr& f) {
  PolarityTable t;
  annotate_polarity_into(f, Polarity::Positive, t);
  return t;
}

ModalPtr project_modal(const FormulaPtr& f, OccAllocator& alloc) {
  switch (f->kind) {
    case FmlKind::Bottom:
      return m_bottom();
    case FmlKind::Atom:
      return m_atom(f->atom);
    case FmlKind::Implies:
      return m_implies(project_modal(f->lhs, alloc), project_modal(f->rhs, alloc));
    case FmlKind::Evidence:
      return m_box(project_modal(f->rhs, alloc), alloc);
  }
  return m_bottom();
}

}  // namespace sej
