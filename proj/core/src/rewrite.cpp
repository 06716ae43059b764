#include "sej/rewrite.hpp"

#include <stdexcept>

namespace sej {

TermPtr term_subterm(const TermPtr& t, const std::vector<int>& path) {
  TermPtr cur = t;
  for (int step : path) {
    if (cur->kind != TermKind::Sum && cur->kind != TermKind::Prod)
      throw std::logic_error("term path into a leaf");
    cur = step == 0 ? cur->left : cur->right;
  }
  return cur;
}

TermPtr term_replace(const TermPtr& t, const std::vector<int>& path, const TermPtr& repl) {
  if (path.empty()) return repl;
  std::vector<int> rest(path.begin() + 1, path.end());
  if (t->kind != TermKind::Sum && t->kind != TermKind::Prod)
    throw std::logic_error("term path into a leaf");
  TermPtr l = t->left, r = t->right;
  if (path[0] == 0)
    l = term_replace(l, rest, repl);
  else
    r = term_replace(r, rest, repl);
  return t->kind == TermKind::Sum ? Term::sum(l, r) : Term::prod(l, r);
}

TermPtr apply_elem(const TermPtr& t, const ElemRewrite& e) {
  if (!term_equal(term_subterm(t, e.path), e.from))
    throw std::logic_error("elementary rewrite does not match the redex");
  return term_replace(t, e.path, e.to);
}

namespace {

Monomial term_monomial_key(const TermPtr& t) {
  // t is a canonical monomial: One | atom | atom*(mono)
  Monomial m;
  TermPtr cur = t;
  for (;;) {
    switch (cur->kind) {
      case TermKind::One:
        return m;
      case TermKind::Constant:
      case TermKind::Var:
        m.atoms.push_back(cur->name);
        return m;
      case TermKind::Prod:
        m.atoms.push_back(cur->left->name);
        cur = cur->right;
        break;
      default:
        throw std::logic_error("not a canonical monomial");
    }
  }
}

class Normalizer {
public:
  std::vector<ElemRewrite> steps;

  TermPtr run(const TermPtr& t, std::vector<int> path) {
    switch (t->kind) {
      case TermKind::Zero:
      case TermKind::One:
      case TermKind::Constant:
      case TermKind::Var:
        return t;
      case TermKind::Sum: {
        std::vector<int> lp = path, rp = path;
        lp.push_back(0);
        rp.push_back(1);
        TermPtr ca = run(t->left, lp);
        TermPtr cb = run(t->right, rp);
        return merge(ca, cb, path);
      }
      case TermKind::Prod: {
        std::vector<int> lp = path, rp = path;
        lp.push_back(0);
        rp.push_back(1);
        TermPtr ca = run(t->left, lp);
        TermPtr cb = run(t->right, rp);
        return multiply(ca, cb, path);
      }
    }
    return t;
  }

private:
  void emit(std::vector<int> path, SchemeId sc, TermPtr from, TermPtr to) {
    steps.push_back({std::move(path), sc, std::move(from), std::move(to)});
  }

  std::vector<int> sub(const std::vector<int>& path, int branch) {
    std::vector<int> p = path;
    p.push_back(branch);
    return p;
  }

  // both canonical (Zero, monomial, or right-assoc sorted sum); the ambient
  // subterm at `path` is currently Sum(a, b)
  TermPtr merge(const TermPtr& a, const TermPtr& b, const std::vector<int>& path) {
    if (a->kind == TermKind::Zero) {
      // 0 + b -> b + 0 -> b
      emit(path, SchemeId::CPlus, Term::sum(a, b), Term::sum(b, a));
      emit(path, SchemeId::ZeroPlus, Term::sum(b, Term::zero()), b);
      return b;
    }
    if (b->kind == TermKind::Zero) {
      emit(path, SchemeId::ZeroPlus, Term::sum(a, b), a);
      return a;
    }
    if (a->kind == TermKind::Sum) {
      // (m + rest) + b -> m + (rest + b)
      emit(path, SchemeId::APlus, Term::sum(a, b), Term::sum(a->left, Term::sum(a->right, b)));
      TermPtr merged = merge(a->right, b, sub(path, 1));
      return insert_mono(a->left, merged, path);
    }
    return insert_mono(a, b, path);
  }

  // a is a canonical monomial, sorted a canonical monomial or sum; ambient
  // subterm is Sum(a, sorted)
  TermPtr insert_mono(const TermPtr& a, const TermPtr& sorted, const std::vector<int>& path) {
    Monomial ka = term_monomial_key(a);
    if (sorted->kind != TermKind::Sum) {
      if (monomial_compare(ka, term_monomial_key(sorted)) <= 0) return Term::sum(a, sorted);
      emit(path, SchemeId::CPlus, Term::sum(a, sorted), Term::sum(sorted, a));
      return Term::sum(sorted, a);
    }
    const TermPtr& head = sorted->left;
    const TermPtr& rest = sorted->right;
    if (monomial_compare(ka, term_monomial_key(head)) <= 0) return Term::sum(a, sorted);
    // a + (head + rest) -> (head + rest) + a -> head + (rest + a) -> head + (a + rest)
    emit(path, SchemeId::CPlus, Term::sum(a, sorted), Term::sum(sorted, a));
    emit(path, SchemeId::APlus, Term::sum(sorted, a),
         Term::sum(head, Term::sum(rest, a)));
    emit(sub(path, 1), SchemeId::CPlus, Term::sum(rest, a), Term::sum(a, rest));
    TermPtr tail = insert_mono(a, rest, sub(path, 1));
    return Term::sum(head, tail);
  }

  TermPtr multiply(const TermPtr& a, const TermPtr& b, const std::vector<int>& path) {
    if (a->kind == TermKind::Zero) {
      emit(path, SchemeId::AZero, Term::prod(a, b), Term::zero());
      return Term::zero();
    }
    if (b->kind == TermKind::Zero) {
      emit(path, SchemeId::AZero, Term::prod(a, b), Term::zero());
      return Term::zero();
    }
    if (a->kind == TermKind::One) {
      emit(path, SchemeId::AOne, Term::prod(a, b), b);
      return b;
    }
    if (b->kind == TermKind::One) {
      emit(path, SchemeId::AOne, Term::prod(a, b), a);
      return a;
    }
    if (a->kind == TermKind::Sum) {
      // (m + rest) * b -> m*b + rest*b
      emit(path, SchemeId::DR, Term::prod(a, b),
           Term::sum(Term::prod(a->left, b), Term::prod(a->right, b)));
      TermPtr l = multiply(a->left, b, sub(path, 0));
      TermPtr r = multiply(a->right, b, sub(path, 1));
      return merge(l, r, path);
    }
    if (b->kind == TermKind::Sum) {
      // a * (n + rest) -> a*n + a*rest
      emit(path, SchemeId::DL, Term::prod(a, b),
           Term::sum(Term::prod(a, b->left), Term::prod(a, b->right)));
      TermPtr l = multiply(a, b->left, sub(path, 0));
      TermPtr r = multiply(a, b->right, sub(path, 1));
      return merge(l, r, path);
    }
    return mono_concat(a, b, path);
  }

  // both canonical monomials; ambient subterm is Prod(a, b)
  TermPtr mono_concat(const TermPtr& a, const TermPtr& b, const std::vector<int>& path) {
    if (a->kind == TermKind::One) {
      emit(path, SchemeId::AOne, Term::prod(a, b), b);
      return b;
    }
    if (b->kind == TermKind::One) {
      emit(path, SchemeId::AOne, Term::prod(a, b), a);
      return a;
    }
    if (a->kind != TermKind::Prod) return Term::prod(a, b);
    // (atom * m') * b -> atom * (m' * b)
    emit(path, SchemeId::AM, Term::prod(a, b),
         Term::prod(a->left, Term::prod(a->right, b)));
    TermPtr tail = mono_concat(a->right, b, sub(path, 1));
    return Term::prod(a->left, tail);
  }
};

}  // namespace

std::vector<ElemRewrite> normalization_steps(const TermPtr& t) {
  Normalizer n;
  TermPtr canon = n.run(t, {});
  TermPtr expect = canonical_term(normalize(t));
  if (!term_equal(canon, expect))
    throw std::logic_error("normalization path disagrees with the polynomial: " +
                           print_term(canon) + " vs " + print_term(expect));
  return std::move(n.steps);
}

std::vector<ElemRewrite> invert_steps(const std::vector<ElemRewrite>& steps) {
  std::vector<ElemRewrite> out;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    const ElemRewrite& e = *it;
    if (e.scheme == SchemeId::APlus) {
      // x+(y+z) ->c+ (y+z)+x ->a+ y+(z+x) ->c+ (z+x)+y ->a+ z+(x+y) ->c+ (x+y)+z
      const TermPtr& x = e.from->left->left;
      const TermPtr& y = e.from->left->right;
      const TermPtr& z = e.from->right;
      TermPtr t0 = e.to;  // x+(y+z)
      TermPtr t1 = Term::sum(Term::sum(y, z), x);
      TermPtr t2 = Term::sum(y, Term::sum(z, x));
      TermPtr t3 = Term::sum(Term::sum(z, x), y);
      TermPtr t4 = Term::sum(z, Term::sum(x, y));
      TermPtr t5 = e.from;  // (x+y)+z
      out.push_back({e.path, SchemeId::CPlus, t0, t1});
      out.push_back({e.path, SchemeId::APlus, t1, t2});
      out.push_back({e.path, SchemeId::CPlus, t2, t3});
      out.push_back({e.path, SchemeId::APlus, t3, t4});
      out.push_back({e.path, SchemeId::CPlus, t4, t5});
      continue;
    }
    if (e.scheme == SchemeId::CPlus) {
      out.push_back({e.path, SchemeId::CPlus, e.to, e.from});
      continue;
    }
    // biconditional schemes reverse directly
    out.push_back({e.path, e.scheme, e.to, e.from});
  }
  return out;
}

FormulaPtr formula_node_at(const FormulaPtr& f, const std::vector<int>& path) {
  FormulaPtr cur = f;
  for (int step : path) {
    switch (cur->kind) {
      case FmlKind::Implies:
        cur = step == 0 ? cur->lhs : cur->rhs;
        break;
      case FmlKind::Evidence:
        if (step != 1) throw std::logic_error("formula path expects 1 for evidence body");
        cur = cur->rhs;
        break;
      default:
        throw std::logic_error("formula path into a leaf");
    }
  }
  return cur;
}

FormulaPtr formula_replace_evidence_term(const FormulaPtr& f, const std::vector<int>& path,
                                         const TermPtr& t) {
  if (path.empty()) {
    if (f->kind != FmlKind::Evidence) throw std::logic_error("path does not end at evidence");
    return Formula::evidence(t, f->rhs);
  }
  std::vector<int> rest(path.begin() + 1, path.end());
  switch (f->kind) {
    case FmlKind::Implies:
      if (path[0] == 0)
        return Formula::implies(formula_replace_evidence_term(f->lhs, rest, t), f->rhs);
      return Formula::implies(f->lhs, formula_replace_evidence_term(f->rhs, rest, t));
    case FmlKind::Evidence:
      if (path[0] != 1) throw std::logic_error("formula path expects 1 for evidence body");
      return Formula::evidence(f->term, formula_replace_evidence_term(f->rhs, rest, t));
    default:
      throw std::logic_error("formula path into a leaf");
  }
}

std::size_t prove_term_path(ProofBuilder& b, const FormulaPtr& f,
                            const std::vector<int>& evidence_path,
                            const std::vector<ElemRewrite>& steps, FormulaPtr* result) {
  FormulaPtr evnode = formula_node_at(f, evidence_path);
  if (evnode->kind != FmlKind::Evidence)
    throw std::logic_error("prove_term_path: path does not reach an evidence node");
  if (steps.empty()) {
    if (result) *result = f;
    return b.prop_taut(Formula::implies(f, f));
  }
  b.fresh.reserve_from(f);
  TermPtr cur_term = evnode->term;
  FormulaPtr cur_f = f;
  std::size_t acc = 0;
  bool have_acc = false;
  for (const ElemRewrite& e : steps) {
    TermPtr next_term = apply_elem(cur_term, e);
    std::string hole = b.fresh.fresh("w");
    TermPtr ctx_term = term_replace(cur_term, e.path, Term::var(hole));
    FormulaPtr ctx = formula_replace_evidence_term(cur_f, evidence_path, ctx_term);
    std::size_t imp = b.add(ProofStep::semiring(ctx, hole, e.from, e.to, e.scheme));
    FormulaPtr next_f = formula_replace_evidence_term(cur_f, evidence_path, next_term);
    acc = have_acc ? b.chain(acc, imp) : imp;
    have_acc = true;
    cur_term = next_term;
    cur_f = next_f;
  }
  if (result) *result = cur_f;
  return acc;
}

std::size_t prove_term_equal(ProofBuilder& b, const FormulaPtr& f,
                             const std::vector<int>& evidence_path, const TermPtr& target,
                             FormulaPtr* result) {
  FormulaPtr evnode = formula_node_at(f, evidence_path);
  if (evnode->kind != FmlKind::Evidence)
    throw std::logic_error("prove_term_equal: path does not reach an evidence node");
  const TermPtr& cur = evnode->term;
  if (!eq_terms(cur, target))
    throw std::logic_error("prove_term_equal: terms differ in the free semiring: " +
                           print_term(cur) + " vs " + print_term(target));
  std::vector<ElemRewrite> down = normalization_steps(cur);
  std::vector<ElemRewrite> up = invert_steps(normalization_steps(target));
  down.insert(down.end(), up.begin(), up.end());
  return prove_term_path(b, f, evidence_path, down, result);
}

}  // namespace sej
