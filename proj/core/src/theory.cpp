#include "sej/theory.hpp"

#include <stdexcept>

#include "sej/taut.hpp"

namespace sej {

TheoryDescriptor TheoryDescriptor::standard() { return TheoryDescriptor{}; }

TheoryDescriptor TheoryDescriptor::with_star() {
  TheoryDescriptor t;
  t.star_constant = true;
  return t;
}

TheoryDescriptor TheoryDescriptor::plain(std::vector<FormulaPtr> members) {
  TheoryDescriptor t;
  t.axiomatically_appropriate = false;
  t.schematic = false;
  t.supports_weakening = false;
  t.star_constant = false;
  t.extras = std::move(members);
  return t;
}

std::string TheoryDescriptor::scheme_constant(SchemeId s) const {
  switch (s) {
    case SchemeId::CL: return "c_cl";
    case SchemeId::J: return "c_j";
    case SchemeId::JPlus: return "c_jp";
    case SchemeId::APlus: return "c_ap";
    case SchemeId::CPlus: return "c_cp";
    case SchemeId::ZeroPlus: return "c_zp";
    case SchemeId::AM: return "c_am";
    case SchemeId::AZero: return "c_a0";
    case SchemeId::AOne: return "c_a1";
    case SchemeId::DL: return "c_dl";
    case SchemeId::DR: return "c_dr";
  }
  throw std::logic_error("bad scheme");
}

TermPtr TheoryDescriptor::scheme_constant_term(SchemeId s) const {
  return Term::constant(scheme_constant(s));
}

std::string TheoryDescriptor::level_name(const Witness& w, unsigned level) const {
  std::string base;
  switch (w.tag) {
    case Witness::Tag::Scheme:
      base = scheme_constant(w.scheme);
      break;
    case Witness::Tag::Weakening:
      base = weakening_name;
      break;
    case Witness::Tag::Star:
      base = star_name;
      break;
    case Witness::Tag::Extra:
      base = extra_prefix + std::to_string(w.extra + 1);
      break;
  }
  // level-1 members of star/extra groups are bare formulas; their towers (and
  // all scheme/weakening names above level 1) carry the level suffix
  bool bare_base = (w.tag == Witness::Tag::Scheme || w.tag == Witness::Tag::Weakening);
  if (level == 1 && bare_base) return base;
  return base + "_" + std::to_string(level);
}

namespace {

// A -> A|B (second = false) or B -> A|B (second = true), desugared view
bool match_weakening_shape(const FormulaPtr& f) {
  if (f->kind != FmlKind::Implies) return false;
  const FormulaPtr& r = f->rhs;
  // A|B == (A -> bot) -> B
  if (r->kind != FmlKind::Implies || r->lhs->kind != FmlKind::Implies ||
      r->lhs->rhs->kind != FmlKind::Bottom)
    return false;
  const FormulaPtr& a = r->lhs->lhs;
  const FormulaPtr& b = r->rhs;
  return formula_equal(f->lhs, a) || formula_equal(f->lhs, b);
}

}  // namespace

FormulaPtr TheoryDescriptor::weakening_member(const FormulaPtr& a, const FormulaPtr& b,
                                              bool second) const {
  return Formula::evidence(Term::constant(weakening_name),
                           Formula::implies(second ? b : a, f_or(a, b)));
}

FormulaPtr TheoryDescriptor::star_member(const FormulaPtr& a, const FormulaPtr& b,
                                         bool second) const {
  TermPtr x = Term::var(star_var_x);
  TermPtr y = Term::var(star_var_y);
  TermPtr cxy = Term::prod(Term::prod(Term::constant(star_name), x), y);
  FormulaPtr hyp = second ? Formula::evidence(y, b) : Formula::evidence(x, a);
  return Formula::implies(hyp, Formula::evidence(cxy, f_or(a, b)));
}

TermPtr TheoryDescriptor::star_term(const TermPtr& s, const TermPtr& t) const {
  TermPtr u = scheme_constant_term(SchemeId::CL);
  return Term::prod(Term::prod(Term::prod(u, Term::constant(star_name)), s), t);
}

bool TheoryDescriptor::payload_ok(const Witness& w, const FormulaPtr& payload) const {
  switch (w.tag) {
    case Witness::Tag::Scheme:
      switch (w.scheme) {
        case SchemeId::CL:
          return is_skeleton_tautology(payload);
        case SchemeId::J:
          return is_axiom_j_instance(payload);
        case SchemeId::JPlus:
          return is_axiom_jplus_instance(payload);
        default:
          return is_semiring_axiom_instance(w.scheme, payload);
      }
    case Witness::Tag::Weakening:
      return match_weakening_shape(payload);
    case Witness::Tag::Star: {
      if (payload->kind != FmlKind::Implies) return false;
      const FormulaPtr& hyp = payload->lhs;
      const FormulaPtr& cc = payload->rhs;
      if (hyp->kind != FmlKind::Evidence || cc->kind != FmlKind::Evidence) return false;
      // conclusion term (c_star * x) * y
      const TermPtr& t = cc->term;
      if (t->kind != TermKind::Prod || t->left->kind != TermKind::Prod) return false;
      if (t->left->left->kind != TermKind::Constant || t->left->left->name != star_name)
        return false;
      if (t->left->right->kind != TermKind::Var || t->left->right->name != star_var_x)
        return false;
      if (t->right->kind != TermKind::Var || t->right->name != star_var_y) return false;
      // conclusion body A|B
      const FormulaPtr& body = cc->rhs;
      if (body->kind != FmlKind::Implies || body->lhs->kind != FmlKind::Implies ||
          body->lhs->rhs->kind != FmlKind::Bottom)
        return false;
      const FormulaPtr& a = body->lhs->lhs;
      const FormulaPtr& b = body->rhs;
      if (hyp->term->kind == TermKind::Var && hyp->term->name == star_var_x)
        return formula_equal(hyp->rhs, a);
      if (hyp->term->kind == TermKind::Var && hyp->term->name == star_var_y)
        return formula_equal(hyp->rhs, b);
      return false;
    }
    case Witness::Tag::Extra:
      return w.extra < extras.size() && formula_equal(extras[w.extra], payload);
  }
  return false;
}

std::optional<TheoryDescriptor::Witness> TheoryDescriptor::member(const FormulaPtr& f) const {
  Witness w;

  // bare level-1 members: star hypotheses and extras
  if (star_constant) {
    w.tag = Witness::Tag::Star;
    w.level = 1;
    if (payload_ok(w, f)) return w;
  }
  for (std::size_t i = 0; i < extras.size(); ++i) {
    if (formula_equal(extras[i], f)) {
      w.tag = Witness::Tag::Extra;
      w.extra = i;
      w.level = 1;
      return w;
    }
  }

  // everything else is name : member
  if (f->kind != FmlKind::Evidence || f->term->kind != TermKind::Constant) return std::nullopt;
  const std::string& name = f->term->name;

  // split trailing _<digits> as the level
  auto parse_as = [&](const std::string& base, unsigned& level) {
    if (name == base) {
      level = 1;
      return true;
    }
    if (name.size() > base.size() + 1 && name.compare(0, base.size(), base) == 0 &&
        name[base.size()] == '_') {
      std::string suffix = name.substr(base.size() + 1);
      if (suffix.empty() || suffix.find_first_not_of("0123456789") != std::string::npos)
        return false;
      unsigned long lv = std::stoul(suffix);
      if (lv < 2) return false;
      level = static_cast<unsigned>(lv);
      return true;
    }
    return false;
  };

  auto classify = [&](Witness& out) {
    static const SchemeId schemes[] = {SchemeId::CL, SchemeId::J, SchemeId::JPlus,
                                       SchemeId::APlus, SchemeId::CPlus, SchemeId::ZeroPlus,
                                       SchemeId::AM, SchemeId::AZero, SchemeId::AOne,
                                       SchemeId::DL, SchemeId::DR};
    unsigned level;
    for (SchemeId s : schemes) {
      if (parse_as(scheme_constant(s), level)) {
        out.tag = Witness::Tag::Scheme;
        out.scheme = s;
        out.level = level;
        return true;
      }
    }
    if (parse_as(weakening_name, level)) {
      out.tag = Witness::Tag::Weakening;
      out.level = level;
      return true;
    }
    if (parse_as(star_name, level) && level >= 2) {
      out.tag = Witness::Tag::Star;
      out.level = level;
      return true;
    }
    for (std::size_t i = 0; i < extras.size(); ++i) {
      if (parse_as(extra_prefix + std::to_string(i + 1), level) && level >= 2) {
        out.tag = Witness::Tag::Extra;
        out.extra = i;
        out.level = level;
        return true;
      }
    }
    return false;
  };

  if (!classify(w)) return std::nullopt;

  // capability gates
  switch (w.tag) {
    case Witness::Tag::Scheme:
      if (!schematic) return std::nullopt;
      break;
    case Witness::Tag::Weakening:
      if (!supports_weakening) return std::nullopt;
      break;
    case Witness::Tag::Star:
      if (!star_constant) return std::nullopt;
      break;
    case Witness::Tag::Extra:
      break;
  }
  if (w.level > 1 && !axiomatically_appropriate) return std::nullopt;

  // peel the tower down to the payload
  FormulaPtr g = f->rhs;
  for (unsigned lvl = w.level - 1; lvl >= 1; --lvl) {
    bool bare = (w.tag == Witness::Tag::Star || w.tag == Witness::Tag::Extra) && lvl == 1;
    if (bare) break;
    if (g->kind != FmlKind::Evidence || g->term->kind != TermKind::Constant ||
        g->term->name != level_name(w, lvl))
      return std::nullopt;
    g = g->rhs;
  }
  if (!payload_ok(w, g)) return std::nullopt;
  return w;
}

std::optional<std::string> TheoryDescriptor::justifying_constant(const Witness& w) const {
  if (!axiomatically_appropriate) return std::nullopt;
  return level_name(w, w.level + 1);
}

bool TheoryDescriptor::is_pure() const {
  for (const auto& e : extras)
    if (!is_skeleton_tautology(project_propositional(e))) return false;
  return true;
}

}  // namespace sej
