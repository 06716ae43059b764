#include "sej/combinators.hpp"

#include <stdexcept>

namespace sej {

namespace {

CombinatorResult finish(ProofBuilder&& b, std::size_t idx, TermPtr term) {
  CombinatorResult r;
  r.statement = b.formula_at(idx);
  r.term = std::move(term);
  r.proof = b.take();
  return r;
}

void require_schematic_appropriate(const TheoryDescriptor& T, const char* who) {
  if (!T.axiomatically_appropriate || !T.schematic)
    throw std::invalid_argument(std::string(who) +
                                " needs an axiomatically appropriate schematic theory");
}

}  // namespace

std::size_t emit_internalize(ProofBuilder& b, const SEProof& p, TermPtr* term_out) {
  const TheoryDescriptor& T = b.theory();
  require_schematic_appropriate(T, "internalize");
  CheckResult chk = check_proof(T, p);
  if (!chk.ok)
    throw std::invalid_argument("internalize: input proof fails at step " +
                                std::to_string(chk.error_step) + ": " + chk.reason);

  std::vector<std::size_t> idx(p.steps.size());
  std::vector<TermPtr> term(p.steps.size());
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    const ProofStep& s = p.steps[i];
    const FormulaPtr& f = chk.derived[i];
    switch (s.kind) {
      case ProofStep::Kind::PropTaut: {
        TermPtr c = T.scheme_constant_term(SchemeId::CL);
        idx[i] = b.theory_member(Formula::evidence(c, f));
        term[i] = c;
        break;
      }
      case ProofStep::Kind::AxiomJ: {
        TermPtr c = T.scheme_constant_term(SchemeId::J);
        idx[i] = b.theory_member(Formula::evidence(c, f));
        term[i] = c;
        break;
      }
      case ProofStep::Kind::AxiomJPlus: {
        TermPtr c = T.scheme_constant_term(SchemeId::JPlus);
        idx[i] = b.theory_member(Formula::evidence(c, f));
        term[i] = c;
        break;
      }
      case ProofStep::Kind::SemiringStep: {
        // rebuild the strict axiom instance with fresh variables, then jv
        // the matched terms back in
        auto m = match_scheme_pair(s.scheme, s.lhs_term, s.rhs_term, /*vars_only=*/false);
        if (!m) throw std::logic_error("checked semiring step fails to rematch");
        b.fresh.reserve_from(f);
        std::vector<std::pair<std::string, TermPtr>> subs;
        auto bind = [&](const TermPtr& t) -> TermPtr {
          if (!t) return nullptr;
          std::string v = b.fresh.fresh();
          subs.push_back({v, t});
          return Term::var(v);
        };
        TermPtr vx = bind(m->x), vy = bind(m->y), vz = bind(m->z);
        auto [pl, pr] = build_scheme_pair(s.scheme, vx, vy, vz, m->alt);
        TermPtr from_v = m->reversed ? pr : pl;
        TermPtr to_v = m->reversed ? pl : pr;
        FormulaPtr axiom = Formula::implies(substitute(s.context, s.hole, from_v),
                                            substitute(s.context, s.hole, to_v));
        TermPtr c = T.scheme_constant_term(s.scheme);
        std::size_t cur = b.theory_member(Formula::evidence(c, axiom));
        for (const auto& [v, t] : subs) cur = b.jv(cur, v, t);
        idx[i] = cur;
        term[i] = c;
        break;
      }
      case ProofStep::Kind::TheoryMember: {
        auto w = T.member(f);
        if (!w) throw std::logic_error("checked member no longer in theory");
        auto c = T.justifying_constant(*w);
        if (!c) throw std::invalid_argument("theory is not axiomatically appropriate");
        TermPtr ct = Term::constant(*c);
        idx[i] = b.theory_member(Formula::evidence(ct, f));
        term[i] = ct;
        break;
      }
      case ProofStep::Kind::MP: {
        idx[i] = b.apply_evidence(idx[s.implication], idx[s.premise]);
        term[i] = Term::prod(term[s.implication], term[s.premise]);
        break;
      }
      case ProofStep::Kind::JV: {
        idx[i] = b.jv(idx[s.premise], s.jv_var, s.jv_term);
        term[i] = term[s.premise];
        break;
      }
    }
    if (!term_is_ground(term[i])) throw std::logic_error("internalization produced a non-ground term");
  }
  if (term_out) *term_out = term.back();
  return idx.back();
}

CombinatorResult internalize(const TheoryDescriptor& T, const SEProof& p) {
  ProofBuilder b(T);
  TermPtr t;
  std::size_t idx = emit_internalize(b, p, &t);
  return finish(std::move(b), idx, std::move(t));
}

std::size_t emit_syl(ProofBuilder& b, std::size_t s_idx, std::size_t t_idx) {
  FormulaPtr fs = b.formula_at(s_idx);
  FormulaPtr ft = b.formula_at(t_idx);
  if (fs->kind != FmlKind::Evidence || fs->rhs->kind != FmlKind::Implies ||
      ft->kind != FmlKind::Evidence || ft->rhs->kind != FmlKind::Implies ||
      !formula_equal(fs->rhs->rhs, ft->rhs->lhs))
    throw std::invalid_argument("syl wants s:(A->B) and t:(B->C)");
  FormulaPtr A = fs->rhs->lhs;
  FormulaPtr B = fs->rhs->rhs;
  FormulaPtr C = ft->rhs->rhs;
  TermPtr c = b.theory().scheme_constant_term(SchemeId::CL);
  FormulaPtr bc = Formula::implies(B, C);
  FormulaPtr abc = Formula::implies(A, bc);
  std::size_t cm = b.theory_member(Formula::evidence(c, Formula::implies(bc, abc)));
  std::size_t ct = b.apply_evidence(cm, t_idx);
  std::size_t dm = b.theory_member(Formula::evidence(
      c, Formula::implies(abc, Formula::implies(Formula::implies(A, B), Formula::implies(A, C)))));
  std::size_t dct = b.apply_evidence(dm, ct);
  return b.apply_evidence(dct, s_idx);
}

CombinatorResult syl(const TheoryDescriptor& T, const SEProof& s_proof, const SEProof& t_proof) {
  require_schematic_appropriate(T, "syl");
  ProofBuilder b(T);
  std::size_t si = b.import(s_proof);
  std::size_t ti = b.import(t_proof);
  std::size_t idx = emit_syl(b, si, ti);
  TermPtr term = b.formula_at(idx)->term;
  return finish(std::move(b), idx, term);
}

std::size_t emit_and_intro(ProofBuilder& b, const std::vector<TermPtr>& terms,
                           const std::vector<FormulaPtr>& formulas, TermPtr* term_out) {
  if (terms.empty() || terms.size() != formulas.size())
    throw std::invalid_argument("and-intro wants matching nonempty term/formula lists");
  const std::size_t n = terms.size();
  TermPtr c = b.theory().scheme_constant_term(SchemeId::CL);
  FormulaPtr conj = conj_list(formulas);

  // c_cl : A1 -> (A2 -> ... -> (An -> A1 & ... & An))
  FormulaPtr curried = conj;
  for (std::size_t i = n; i-- > 0;) curried = Formula::implies(formulas[i], curried);
  std::size_t member = b.theory_member(Formula::evidence(c, curried));

  // peel layer by layer: G_k : t1:A1 -> (... -> (tk:Ak -> T_k:R_k))
  TermPtr T_k = c;
  FormulaPtr R_k = curried;  // what T_k justifies
  std::size_t g = member;    // proof of G_k (for k = 0 the member itself)
  std::vector<FormulaPtr> hyp;
  for (std::size_t k = 0; k < n; ++k) {
    const FormulaPtr& Ak = R_k->lhs;
    const FormulaPtr& Rn = R_k->rhs;
    // K: T_k:(Ak -> Rn) -> (tk:Ak -> (T_k*tk):Rn)
    b.fresh.reserve_from(R_k);
    b.fresh.reserve_from(terms[k]);
    b.fresh.reserve_from(T_k);
    std::string u = b.fresh.fresh();
    std::string v = b.fresh.fresh();
    std::size_t ax = b.add(ProofStep::axiom_j(u, v, Ak, Rn));
    std::size_t k1 = b.jv(ax, u, T_k);
    std::size_t kimp = b.jv(k1, v, terms[k]);
    TermPtr T_next = Term::prod(T_k, terms[k]);
    hyp.push_back(Formula::evidence(terms[k], Ak));
    if (k == 0) {
      // member + kimp give t1:A1 -> T1:R1 directly
      g = b.mp(member, kimp);
    } else {
      // G_{k-1} and K give G_k propositionally
      FormulaPtr G_next = Formula::evidence(T_next, Rn);
      for (std::size_t j = hyp.size(); j-- > 0;) G_next = Formula::implies(hyp[j], G_next);
      std::size_t taut = b.prop_taut(Formula::implies(
          b.formula_at(g), Formula::implies(b.formula_at(kimp), G_next)));
      std::size_t s1 = b.mp(g, taut);
      g = b.mp(kimp, s1);
    }
    T_k = T_next;
    R_k = Rn;
  }
  if (n > 1) {
    FormulaPtr folded = Formula::implies(conj_list(hyp), Formula::evidence(T_k, conj));
    std::size_t taut = b.prop_taut(Formula::implies(b.formula_at(g), folded));
    g = b.mp(g, taut);
  }
  if (term_out) *term_out = T_k;
  return g;
}

CombinatorResult make_c_n(const TheoryDescriptor& T, const std::vector<TermPtr>& terms,
                          const std::vector<FormulaPtr>& formulas) {
  require_schematic_appropriate(T, "c_n");
  ProofBuilder b(T);
  TermPtr t;
  std::size_t idx = emit_and_intro(b, terms, formulas, &t);
  return finish(std::move(b), idx, std::move(t));
}

std::size_t emit_d_pow2(ProofBuilder& b, unsigned l, const std::vector<FormulaPtr>& formulas,
                        std::size_t i, TermPtr* term_out) {
  if (formulas.size() != (std::size_t{1} << l) || i >= formulas.size())
    throw std::invalid_argument("d_2^l wants 2^l formulas and a valid index");
  if (l == 0) {
    SEProof p;
    p.steps.push_back(ProofStep::prop_taut(Formula::implies(formulas[0], formulas[0])));
    return emit_internalize(b, p, term_out);
  }
  if (!b.theory().supports_weakening)
    throw std::invalid_argument("d_2^l for l >= 1 needs a weakening-supporting theory");
  std::size_t half = formulas.size() / 2;
  std::vector<FormulaPtr> lo(formulas.begin(), formulas.begin() + half);
  std::vector<FormulaPtr> hi(formulas.begin() + half, formulas.end());
  FormulaPtr dl = balanced_disj(lo);
  FormulaPtr dh = balanced_disj(hi);
  bool second = i >= half;
  TermPtr d_half;
  std::size_t rec = emit_d_pow2(b, l - 1, second ? hi : lo, second ? i - half : i, &d_half);
  std::size_t w = b.theory_member(b.theory().weakening_member(dl, dh, second));
  std::size_t out = emit_syl(b, rec, w);
  if (term_out) *term_out = b.formula_at(out)->term;
  return out;
}

CombinatorResult make_d_pow2(const TheoryDescriptor& T, unsigned l,
                             const std::vector<FormulaPtr>& formulas, std::size_t i) {
  require_schematic_appropriate(T, "d_2^l");
  ProofBuilder b(T);
  TermPtr t;
  std::size_t idx = emit_d_pow2(b, l, formulas, i, &t);
  return finish(std::move(b), idx, std::move(t));
}

CombinatorResult make_e_n(const TheoryDescriptor& T, const std::vector<FormulaPtr>& formulas,
                          const FormulaPtr& target) {
  require_schematic_appropriate(T, "e_n");
  if (formulas.empty()) throw std::invalid_argument("e_n wants at least one disjunct");
  FormulaPtr disj = disj_list(formulas);
  FormulaPtr body = Formula::implies(disj, target);
  for (std::size_t i = formulas.size(); i-- > 0;)
    body = Formula::implies(Formula::implies(formulas[i], target), body);
  SEProof p;
  p.steps.push_back(ProofStep::prop_taut(body));
  return internalize(T, p);
}

std::size_t emit_star_intro(ProofBuilder& b, const TermPtr& s, const TermPtr& t,
                            const FormulaPtr& a, bool second, TermPtr* term_out) {
  const TheoryDescriptor& T = b.theory();
  if (!T.star_constant) throw std::invalid_argument("star needs the star-constant hypothesis");
  std::size_t m = b.theory_member(T.star_member(a, a, second));
  std::size_t inst = b.subst_many(m, {{T.star_var_x, s}, {T.star_var_y, t}});
  // inst: s:A -> cst:(A|A)   (or t:A -> ...), cst = (c_star*s)*t
  FormulaPtr aa = f_or(a, a);
  TermPtr cst = b.formula_at(inst)->rhs->term;
  TermPtr u = T.scheme_constant_term(SchemeId::CL);
  std::size_t um = b.theory_member(Formula::evidence(u, Formula::implies(aa, a)));
  b.fresh.reserve_from(b.formula_at(inst));
  std::string p = b.fresh.fresh();
  std::string q = b.fresh.fresh();
  std::size_t ax = b.add(ProofStep::axiom_j(p, q, aa, a));
  std::size_t j1 = b.jv(ax, p, u);
  std::size_t j2 = b.jv(j1, q, cst);
  std::size_t k = b.mp(um, j2);  // cst:(A|A) -> (u*cst):A
  std::size_t natural = b.chain(inst, k);
  // rewrite u*((c*s)*t) into the flat ((u*c)*s)*t
  FormulaPtr nat_f = b.formula_at(natural);
  FormulaPtr out_f;
  std::size_t rw = prove_term_equal(b, nat_f, {1}, T.star_term(s, t), &out_f);
  std::size_t got = b.mp(natural, rw);
  if (term_out) *term_out = T.star_term(s, t);
  return got;
}

CombinatorResult star_sum(const TheoryDescriptor& T, const TermPtr& s, const TermPtr& t,
                          const FormulaPtr& a) {
  require_schematic_appropriate(T, "star");
  ProofBuilder b(T);
  TermPtr st;
  std::size_t left = emit_star_intro(b, s, t, a, false, &st);
  std::size_t right = emit_star_intro(b, s, t, a, true, nullptr);
  FormulaPtr goal = Formula::implies(f_or(Formula::evidence(s, a), Formula::evidence(t, a)),
                                     Formula::evidence(st, a));
  std::size_t taut = b.prop_taut(Formula::implies(
      b.formula_at(left), Formula::implies(b.formula_at(right), goal)));
  std::size_t s1 = b.mp(left, taut);
  std::size_t idx = b.mp(right, s1);
  return finish(std::move(b), idx, st);
}

}  // namespace sej
