#include "sej/schemes.hpp"

#include <stdexcept>
#include <vector>

namespace sej {

const char* scheme_name(SchemeId s) {
  switch (s) {
    case SchemeId::CL: return "cl";
    case SchemeId::J: return "j";
    case SchemeId::JPlus: return "j+";
    case SchemeId::APlus: return "a+";
    case SchemeId::CPlus: return "c+";
    case SchemeId::ZeroPlus: return "0+";
    case SchemeId::AM: return "am";
    case SchemeId::AZero: return "a0";
    case SchemeId::AOne: return "a1";
    case SchemeId::DL: return "dl";
    case SchemeId::DR: return "dr";
  }
  return "?";
}

std::optional<SchemeId> scheme_from_name(const std::string& name) {
  static const std::vector<SchemeId> all = {
      SchemeId::CL, SchemeId::J,  SchemeId::JPlus, SchemeId::APlus, SchemeId::CPlus,
      SchemeId::ZeroPlus, SchemeId::AM, SchemeId::AZero, SchemeId::AOne, SchemeId::DL,
      SchemeId::DR};
  for (SchemeId s : all)
    if (name == scheme_name(s)) return s;
  return std::nullopt;
}

bool is_semiring_scheme(SchemeId s) {
  switch (s) {
    case SchemeId::CL:
    case SchemeId::J:
    case SchemeId::JPlus:
      return false;
    default:
      return true;
  }
}

bool scheme_bidirectional(SchemeId s) {
  return is_semiring_scheme(s) && s != SchemeId::APlus && s != SchemeId::CPlus;
}

namespace {

bool bindable(const TermPtr& t, bool vars_only) {
  return !vars_only || t->kind == TermKind::Var;
}

// One direction of a scheme's rewrite pattern, tried structurally.
std::optional<SchemeMatch> match_forward(SchemeId scheme, const TermPtr& s, const TermPtr& t,
                                         bool vars_only) {
  auto is = [](const TermPtr& u, TermKind k) { return u->kind == k; };
  SchemeMatch m{scheme, nullptr, nullptr, nullptr, false, 0};
  switch (scheme) {
    case SchemeId::APlus:
      // (x+y)+z -> x+(y+z)
      if (is(s, TermKind::Sum) && is(s->left, TermKind::Sum) && is(t, TermKind::Sum) &&
          is(t->right, TermKind::Sum) && term_equal(s->left->left, t->left) &&
          term_equal(s->left->right, t->right->left) && term_equal(s->right, t->right->right) &&
          bindable(t->left, vars_only) && bindable(t->right->left, vars_only) &&
          bindable(t->right->right, vars_only)) {
        m.x = t->left;
        m.y = t->right->left;
        m.z = t->right->right;
        return m;
      }
      return std::nullopt;
    case SchemeId::CPlus:
      // x+y -> y+x
      if (is(s, TermKind::Sum) && is(t, TermKind::Sum) && term_equal(s->left, t->right) &&
          term_equal(s->right, t->left) && bindable(s->left, vars_only) &&
          bindable(s->right, vars_only)) {
        m.x = s->left;
        m.y = s->right;
        return m;
      }
      return std::nullopt;
    case SchemeId::ZeroPlus:
      // x+0 -> x
      if (is(s, TermKind::Sum) && is(s->right, TermKind::Zero) && term_equal(s->left, t) &&
          bindable(t, vars_only)) {
        m.x = t;
        return m;
      }
      return std::nullopt;
    case SchemeId::AM:
      // (x*y)*z -> x*(y*z)
      if (is(s, TermKind::Prod) && is(s->left, TermKind::Prod) && is(t, TermKind::Prod) &&
          is(t->right, TermKind::Prod) && term_equal(s->left->left, t->left) &&
          term_equal(s->left->right, t->right->left) && term_equal(s->right, t->right->right) &&
          bindable(t->left, vars_only) && bindable(t->right->left, vars_only) &&
          bindable(t->right->right, vars_only)) {
        m.x = t->left;
        m.y = t->right->left;
        m.z = t->right->right;
        return m;
      }
      return std::nullopt;
    case SchemeId::AZero:
      // x*0 -> 0  and  0*x -> 0
      if (is(t, TermKind::Zero) && is(s, TermKind::Prod)) {
        if (is(s->right, TermKind::Zero) && bindable(s->left, vars_only)) {
          m.x = s->left;
          return m;
        }
        if (is(s->left, TermKind::Zero) && bindable(s->right, vars_only)) {
          m.x = s->right;
          m.alt = 1;
          return m;
        }
      }
      return std::nullopt;
    case SchemeId::AOne:
      // x*1 -> x  and  1*x -> x
      if (is(s, TermKind::Prod) && bindable(t, vars_only)) {
        if (is(s->right, TermKind::One) && term_equal(s->left, t)) {
          m.x = t;
          return m;
        }
        if (is(s->left, TermKind::One) && term_equal(s->right, t)) {
          m.x = t;
          m.alt = 1;
          return m;
        }
      }
      return std::nullopt;
    case SchemeId::DL:
      // x*(y+z) -> x*y + x*z
      if (is(s, TermKind::Prod) && is(s->right, TermKind::Sum) && is(t, TermKind::Sum) &&
          is(t->left, TermKind::Prod) && is(t->right, TermKind::Prod) &&
          term_equal(s->left, t->left->left) && term_equal(s->left, t->right->left) &&
          term_equal(s->right->left, t->left->right) &&
          term_equal(s->right->right, t->right->right) && bindable(s->left, vars_only) &&
          bindable(s->right->left, vars_only) && bindable(s->right->right, vars_only)) {
        m.x = s->left;
        m.y = s->right->left;
        m.z = s->right->right;
        return m;
      }
      return std::nullopt;
    case SchemeId::DR:
      // (y+z)*x -> y*x + z*x
      if (is(s, TermKind::Prod) && is(s->left, TermKind::Sum) && is(t, TermKind::Sum) &&
          is(t->left, TermKind::Prod) && is(t->right, TermKind::Prod) &&
          term_equal(s->right, t->left->right) && term_equal(s->right, t->right->right) &&
          term_equal(s->left->left, t->left->left) &&
          term_equal(s->left->right, t->right->left) && bindable(s->right, vars_only) &&
          bindable(s->left->left, vars_only) && bindable(s->left->right, vars_only)) {
        m.x = s->right;
        m.y = s->left->left;
        m.z = s->left->right;
        return m;
      }
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

}  // namespace

std::pair<TermPtr, TermPtr> build_scheme_pair(SchemeId scheme, const TermPtr& x, const TermPtr& y,
                                              const TermPtr& z, int alt) {
  switch (scheme) {
    case SchemeId::APlus:
      return {Term::sum(Term::sum(x, y), z), Term::sum(x, Term::sum(y, z))};
    case SchemeId::CPlus:
      return {Term::sum(x, y), Term::sum(y, x)};
    case SchemeId::ZeroPlus:
      return {Term::sum(x, Term::zero()), x};
    case SchemeId::AM:
      return {Term::prod(Term::prod(x, y), z), Term::prod(x, Term::prod(y, z))};
    case SchemeId::AZero:
      return {alt ? Term::prod(Term::zero(), x) : Term::prod(x, Term::zero()), Term::zero()};
    case SchemeId::AOne:
      return {alt ? Term::prod(Term::one(), x) : Term::prod(x, Term::one()), x};
    case SchemeId::DL:
      return {Term::prod(x, Term::sum(y, z)),
              Term::sum(Term::prod(x, y), Term::prod(x, z))};
    case SchemeId::DR:
      return {Term::prod(Term::sum(y, z), x),
              Term::sum(Term::prod(y, x), Term::prod(z, x))};
    default:
      throw std::logic_error("not a semiring scheme");
  }
}

std::optional<SchemeMatch> match_scheme_pair(SchemeId scheme, const TermPtr& s, const TermPtr& t,
                                             bool vars_only) {
  if (!is_semiring_scheme(scheme)) return std::nullopt;
  if (auto m = match_forward(scheme, s, t, vars_only)) return m;
  if (scheme_bidirectional(scheme)) {
    if (auto m = match_forward(scheme, t, s, vars_only)) {
      m->reversed = true;
      return m;
    }
  }
  return std::nullopt;
}

bool formulas_differ_by_pair(const FormulaPtr& lhs, const FormulaPtr& rhs, const TermPtr& from,
                             const TermPtr& to) {
  // terms first: equal, or exactly the pair, or same node with matching kids
  struct TermWalk {
    const TermPtr& from;
    const TermPtr& to;
    bool ok(const TermPtr& a, const TermPtr& b) const {
      if (term_equal(a, b)) return true;
      if (term_equal(a, from) && term_equal(b, to)) return true;
      if (a->kind != b->kind) return false;
      switch (a->kind) {
        case TermKind::Sum:
        case TermKind::Prod:
          return ok(a->left, b->left) && ok(a->right, b->right);
        default:
          return false;
      }
    }
  } tw{from, to};
  if (lhs->kind != rhs->kind) return false;
  switch (lhs->kind) {
    case FmlKind::Bottom:
      return true;
    case FmlKind::Atom:
      return lhs->atom == rhs->atom;
    case FmlKind::Implies:
      return formulas_differ_by_pair(lhs->lhs, rhs->lhs, from, to) &&
             formulas_differ_by_pair(lhs->rhs, rhs->rhs, from, to);
    case FmlKind::Evidence:
      return tw.ok(lhs->term, rhs->term) && formulas_differ_by_pair(lhs->rhs, rhs->rhs, from, to);
  }
  return false;
}

namespace {

// first position where the two term trees differ, following first-differing
// children; the chain of enclosing pairs are the rewrite-pair candidates
void candidate_pairs(const TermPtr& a, const TermPtr& b,
                     std::vector<std::pair<TermPtr, TermPtr>>& out) {
  if (term_equal(a, b)) return;
  out.push_back({a, b});
  if (a->kind != b->kind) return;
  if (a->kind == TermKind::Sum || a->kind == TermKind::Prod) {
    if (!term_equal(a->left, b->left))
      candidate_pairs(a->left, b->left, out);
    else
      candidate_pairs(a->right, b->right, out);
  }
}

// locates the first evidence position whose terms differ
bool first_diff_terms(const FormulaPtr& lhs, const FormulaPtr& rhs, TermPtr& s, TermPtr& t) {
  if (lhs->kind != rhs->kind) return false;
  switch (lhs->kind) {
    case FmlKind::Implies:
      return first_diff_terms(lhs->lhs, rhs->lhs, s, t) ||
             first_diff_terms(lhs->rhs, rhs->rhs, s, t);
    case FmlKind::Evidence:
      if (!term_equal(lhs->term, rhs->term)) {
        s = lhs->term;
        t = rhs->term;
        return true;
      }
      return first_diff_terms(lhs->rhs, rhs->rhs, s, t);
    default:
      return false;
  }
}

}  // namespace

std::optional<SemiringStepMatch> match_semiring_step(const FormulaPtr& lhs, const FormulaPtr& rhs) {
  TermPtr s, t;
  if (!first_diff_terms(lhs, rhs, s, t)) return std::nullopt;  // identical or bad skeleton
  std::vector<std::pair<TermPtr, TermPtr>> cands;
  candidate_pairs(s, t, cands);
  static const SchemeId order[] = {SchemeId::APlus, SchemeId::CPlus, SchemeId::ZeroPlus,
                                   SchemeId::AM, SchemeId::AZero, SchemeId::AOne, SchemeId::DL,
                                   SchemeId::DR};
  // deepest candidates first
  for (auto it = cands.rbegin(); it != cands.rend(); ++it) {
    for (SchemeId sc : order) {
      if (match_scheme_pair(sc, it->first, it->second, /*vars_only=*/false) &&
          formulas_differ_by_pair(lhs, rhs, it->first, it->second))
        return SemiringStepMatch{sc, it->first, it->second};
    }
  }
  return std::nullopt;
}

bool is_axiom_j_instance(const FormulaPtr& f) {
  // x:(A->B) -> (y:A -> x*y:B)
  if (f->kind != FmlKind::Implies) return false;
  const FormulaPtr& l = f->lhs;
  const FormulaPtr& r = f->rhs;
  if (l->kind != FmlKind::Evidence || l->term->kind != TermKind::Var) return false;
  if (l->rhs->kind != FmlKind::Implies) return false;
  if (r->kind != FmlKind::Implies) return false;
  const FormulaPtr& yA = r->lhs;
  const FormulaPtr& xyB = r->rhs;
  if (yA->kind != FmlKind::Evidence || yA->term->kind != TermKind::Var) return false;
  if (xyB->kind != FmlKind::Evidence || xyB->term->kind != TermKind::Prod) return false;
  return term_equal(xyB->term->left, l->term) && term_equal(xyB->term->right, yA->term) &&
         formula_equal(l->rhs->lhs, yA->rhs) && formula_equal(l->rhs->rhs, xyB->rhs);
}

bool is_axiom_jplus_instance(const FormulaPtr& f) {
  // x:A & y:A -> (x+y):A, with & desugared
  if (f->kind != FmlKind::Implies) return false;
  const FormulaPtr& conj = f->lhs;
  const FormulaPtr& r = f->rhs;
  if (r->kind != FmlKind::Evidence || r->term->kind != TermKind::Sum) return false;
  // conj = (x:A -> (y:A -> bot)) -> bot
  if (conj->kind != FmlKind::Implies || conj->rhs->kind != FmlKind::Bottom) return false;
  const FormulaPtr& inner = conj->lhs;
  if (inner->kind != FmlKind::Implies) return false;
  const FormulaPtr& xA = inner->lhs;
  if (inner->rhs->kind != FmlKind::Implies || inner->rhs->rhs->kind != FmlKind::Bottom)
    return false;
  const FormulaPtr& yA = inner->rhs->lhs;
  if (xA->kind != FmlKind::Evidence || xA->term->kind != TermKind::Var) return false;
  if (yA->kind != FmlKind::Evidence || yA->term->kind != TermKind::Var) return false;
  return term_equal(r->term->left, xA->term) && term_equal(r->term->right, yA->term) &&
         formula_equal(xA->rhs, yA->rhs) && formula_equal(xA->rhs, r->rhs);
}

bool is_semiring_axiom_instance(SchemeId scheme, const FormulaPtr& f) {
  if (!is_semiring_scheme(scheme) || f->kind != FmlKind::Implies) return false;
  TermPtr s, t;
  if (!first_diff_terms(f->lhs, f->rhs, s, t)) {
    // lhs == rhs is the degenerate instance where w does not occur in A
    return formula_equal(f->lhs, f->rhs);
  }
  std::vector<std::pair<TermPtr, TermPtr>> cands;
  candidate_pairs(s, t, cands);
  for (auto it = cands.rbegin(); it != cands.rend(); ++it)
    if (match_scheme_pair(scheme, it->first, it->second, /*vars_only=*/true) &&
        formulas_differ_by_pair(f->lhs, f->rhs, it->first, it->second))
      return true;
  return false;
}

}  // namespace sej
