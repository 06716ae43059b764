#include "sej/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace sej {

namespace {

std::uint64_t checked_add_u64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("monomial multiplicity overflow");
  return r;
}

std::uint64_t checked_mul_u64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("monomial multiplicity overflow");
  return r;
}

}  // namespace

int monomial_compare(const Monomial& a, const Monomial& b) {
  if (a.atoms.size() != b.atoms.size()) return a.atoms.size() < b.atoms.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.atoms.size(); ++i) {
    int c = a.atoms[i].compare(b.atoms[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

Polynomial poly_zero() { return {}; }

Polynomial poly_one() {
  Polynomial p;
  p.terms.push_back({Monomial{}, 1});
  return p;
}

Polynomial poly_atom(const std::string& name) {
  Polynomial p;
  p.terms.push_back({Monomial{{name}}, 1});
  return p;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    int c;
    if (i == a.terms.size())
      c = 1;
    else if (j == b.terms.size())
      c = -1;
    else
      c = monomial_compare(a.terms[i].first, b.terms[j].first);
    if (c < 0)
      out.terms.push_back(a.terms[i++]);
    else if (c > 0)
      out.terms.push_back(b.terms[j++]);
    else {
      out.terms.push_back({a.terms[i].first,
                           checked_add_u64(a.terms[i].second, b.terms[j].second)});
      ++i;
      ++j;
    }
  }
  return out;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ka] : a.terms) {
    Polynomial row;
    for (const auto& [mb, kb] : b.terms) {
      Monomial m = ma;
      m.atoms.insert(m.atoms.end(), mb.atoms.begin(), mb.atoms.end());
      row.terms.push_back({std::move(m), checked_mul_u64(ka, kb)});
    }
    // row is produced in b's order; concatenating with a fixed ma keeps
    // length-lex order only per row, so merge rows pairwise
    std::sort(row.terms.begin(), row.terms.end(), [](const auto& x, const auto& y) {
      return monomial_compare(x.first, y.first) < 0;
    });
    Polynomial merged;
    for (auto& t : row.terms) {
      if (!merged.terms.empty() && merged.terms.back().first == t.first)
        merged.terms.back().second = checked_add_u64(merged.terms.back().second, t.second);
      else
        merged.terms.push_back(std::move(t));
    }
    out = poly_add(out, merged);
  }
  return out;
}

Polynomial normalize(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Zero:
      return poly_zero();
    case TermKind::One:
      return poly_one();
    case TermKind::Constant:
    case TermKind::Var:
      return poly_atom(t->name);
    case TermKind::Sum:
      return poly_add(normalize(t->left), normalize(t->right));
    case TermKind::Prod:
      return poly_mul(normalize(t->left), normalize(t->right));
  }
  return poly_zero();
}

bool eq_terms(const TermPtr& s, const TermPtr& t) { return normalize(s) == normalize(t); }

namespace {

TermPtr atom_term(const std::string& name) {
  return is_term_variable_name(name) ? Term::var(name) : Term::constant(name);
}

TermPtr monomial_term(const Monomial& m) {
  if (m.atoms.empty()) return Term::one();
  TermPtr acc = atom_term(m.atoms.back());
  for (std::size_t i = m.atoms.size() - 1; i-- > 0;) acc = Term::prod(atom_term(m.atoms[i]), acc);
  return acc;
}

}  // namespace

TermPtr canonical_term(const Polynomial& p) {
  if (p.is_zero()) return Term::zero();
  std::vector<TermPtr> parts;
  for (const auto& [m, k] : p.terms)
    for (std::uint64_t i = 0; i < k; ++i) parts.push_back(monomial_term(m));
  TermPtr acc = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;) acc = Term::sum(parts[i], acc);
  return acc;
}

std::string print_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, k] : p.terms) {
    for (std::uint64_t i = 0; i < k; ++i) {
      if (!first) out += " + ";
      first = false;
      if (m.atoms.empty()) {
        out += "1";
        continue;
      }
      for (std::size_t a = 0; a < m.atoms.size(); ++a) {
        if (a) out += "*";
        out += m.atoms[a];
      }
    }
  }
  return out;
}

}  // namespace sej
