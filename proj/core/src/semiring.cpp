#include "sej/semiring.hpp"

#include <algorithm>
#include <stdexcept>

namespace sej {

namespace {

const Rational kZero(0);
const Rational kOne(1);

void require_unit_range(const Rational& v, const char* who) {
  if (v < kZero || v > kOne)
    throw std::domain_error(std::string(who) + " values live in [0,1], got " + v.str());
}

void require_tag(const SemiringInstance& k, const SemiringValue& v) {
  if (v.tag != k.tag)
    throw std::invalid_argument("value belongs to a different semiring instance");
}

}  // namespace

SemiringInstance SemiringInstance::boolean() { return {SrTag::Boolean, {}}; }
SemiringInstance SemiringInstance::viterbi() { return {SrTag::Viterbi, {}}; }
SemiringInstance SemiringInstance::tropical() { return {SrTag::Tropical, {}}; }
SemiringInstance SemiringInstance::lukasiewicz() { return {SrTag::Lukasiewicz, {}}; }
SemiringInstance SemiringInstance::free_poly() { return {SrTag::FreePoly, {}}; }

SemiringInstance SemiringInstance::powerset(std::vector<std::string> labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.size() > 64) throw std::invalid_argument("powerset universe larger than 64 labels");
  return {SrTag::Powerset, std::move(labels)};
}

SemiringInstance SemiringInstance::parse(const std::string& d) {
  if (d == "bool") return boolean();
  if (d == "viterbi") return viterbi();
  if (d == "tropical") return tropical();
  if (d == "lukasiewicz") return lukasiewicz();
  if (d == "free") return free_poly();
  if (d.rfind("powerset{", 0) == 0 && d.back() == '}') {
    std::vector<std::string> labels;
    std::string body = d.substr(9, d.size() - 10);
    std::size_t start = 0;
    while (start <= body.size() && !body.empty()) {
      std::size_t comma = body.find(',', start);
      std::string label = body.substr(start, comma == std::string::npos ? comma : comma - start);
      if (!label.empty()) labels.push_back(label);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return powerset(std::move(labels));
  }
  throw std::invalid_argument("unknown semiring descriptor: " + d);
}

std::string SemiringInstance::str() const {
  switch (tag) {
    case SrTag::Boolean: return "bool";
    case SrTag::Viterbi: return "viterbi";
    case SrTag::Tropical: return "tropical";
    case SrTag::Lukasiewicz: return "lukasiewicz";
    case SrTag::FreePoly: return "free";
    case SrTag::Powerset: {
      std::string out = "powerset{";
      for (std::size_t i = 0; i < universe.size(); ++i) {
        if (i) out += ',';
        out += universe[i];
      }
      return out + "}";
    }
  }
  return "?";
}

SemiringValue SemiringValue::boolean(bool v) {
  SemiringValue x;
  x.tag = SrTag::Boolean;
  x.b = v;
  return x;
}

SemiringValue SemiringValue::viterbi(const Rational& v) {
  require_unit_range(v, "viterbi");
  SemiringValue x;
  x.tag = SrTag::Viterbi;
  x.q = v;
  return x;
}

SemiringValue SemiringValue::tropical(const Rational& v) {
  if (v < kZero) throw std::domain_error("tropical values are nonnegative, got " + v.str());
  SemiringValue x;
  x.tag = SrTag::Tropical;
  x.q = v;
  return x;
}

SemiringValue SemiringValue::tropical_inf() {
  SemiringValue x;
  x.tag = SrTag::Tropical;
  x.inf = true;
  return x;
}

SemiringValue SemiringValue::lukasiewicz(const Rational& v) {
  require_unit_range(v, "lukasiewicz");
  SemiringValue x;
  x.tag = SrTag::Lukasiewicz;
  x.q = v;
  return x;
}

SemiringValue SemiringValue::powerset(std::uint64_t mask) {
  SemiringValue x;
  x.tag = SrTag::Powerset;
  x.bits = mask;
  return x;
}

SemiringValue SemiringValue::free_poly(Polynomial p) {
  SemiringValue x;
  x.tag = SrTag::FreePoly;
  x.poly = std::move(p);
  return x;
}

bool SemiringValue::operator==(const SemiringValue& o) const {
  if (tag != o.tag) return false;
  switch (tag) {
    case SrTag::Boolean: return b == o.b;
    case SrTag::Viterbi:
    case SrTag::Lukasiewicz: return q == o.q;
    case SrTag::Tropical: return inf == o.inf && (inf || q == o.q);
    case SrTag::Powerset: return bits == o.bits;
    case SrTag::FreePoly: return poly == o.poly;
  }
  return false;
}

SemiringValue sr_zero(const SemiringInstance& k) {
  switch (k.tag) {
    case SrTag::Boolean: return SemiringValue::boolean(false);
    case SrTag::Viterbi: return SemiringValue::viterbi(kZero);
    case SrTag::Tropical: return SemiringValue::tropical_inf();
    case SrTag::Lukasiewicz: return SemiringValue::lukasiewicz(kZero);
    case SrTag::Powerset: return SemiringValue::powerset(0);
    case SrTag::FreePoly: return SemiringValue::free_poly(poly_zero());
  }
  throw std::logic_error("bad tag");
}

SemiringValue sr_one(const SemiringInstance& k) {
  switch (k.tag) {
    case SrTag::Boolean: return SemiringValue::boolean(true);
    case SrTag::Viterbi: return SemiringValue::viterbi(kOne);
    case SrTag::Tropical: return SemiringValue::tropical(kZero);
    case SrTag::Lukasiewicz: return SemiringValue::lukasiewicz(kOne);
    case SrTag::Powerset:
      return SemiringValue::powerset(
          k.universe.size() == 64 ? ~0ull : (1ull << k.universe.size()) - 1);
    case SrTag::FreePoly: return SemiringValue::free_poly(poly_one());
  }
  throw std::logic_error("bad tag");
}

SemiringValue sr_add(const SemiringInstance& k, const SemiringValue& a, const SemiringValue& b) {
  require_tag(k, a);
  require_tag(k, b);
  switch (k.tag) {
    case SrTag::Boolean: return SemiringValue::boolean(a.b || b.b);
    case SrTag::Viterbi: return SemiringValue::viterbi(a.q < b.q ? b.q : a.q);
    case SrTag::Tropical:
      if (a.inf) return b;
      if (b.inf) return a;
      return SemiringValue::tropical(a.q < b.q ? a.q : b.q);
    case SrTag::Lukasiewicz: return SemiringValue::lukasiewicz(a.q < b.q ? b.q : a.q);
    case SrTag::Powerset: return SemiringValue::powerset(a.bits | b.bits);
    case SrTag::FreePoly: return SemiringValue::free_poly(poly_add(a.poly, b.poly));
  }
  throw std::logic_error("bad tag");
}

SemiringValue sr_mul(const SemiringInstance& k, const SemiringValue& a, const SemiringValue& b) {
  require_tag(k, a);
  require_tag(k, b);
  switch (k.tag) {
    case SrTag::Boolean: return SemiringValue::boolean(a.b && b.b);
    case SrTag::Viterbi: return SemiringValue::viterbi(a.q * b.q);
    case SrTag::Tropical:
      if (a.inf || b.inf) return SemiringValue::tropical_inf();
      return SemiringValue::tropical(a.q + b.q);
    case SrTag::Lukasiewicz: {
      Rational s = a.q + b.q - kOne;
      return SemiringValue::lukasiewicz(s < kZero ? kZero : s);
    }
    case SrTag::Powerset: return SemiringValue::powerset(a.bits & b.bits);
    case SrTag::FreePoly: return SemiringValue::free_poly(poly_mul(a.poly, b.poly));
  }
  throw std::logic_error("bad tag");
}

std::string print_value(const SemiringInstance& k, const SemiringValue& v) {
  switch (k.tag) {
    case SrTag::Boolean: return v.b ? "1" : "0";
    case SrTag::Viterbi:
    case SrTag::Lukasiewicz: return v.q.str();
    case SrTag::Tropical: return v.inf ? "inf" : v.q.str();
    case SrTag::FreePoly: return print_polynomial(v.poly);
    case SrTag::Powerset: {
      std::string out = "{";
      bool first = true;
      for (std::size_t i = 0; i < k.universe.size(); ++i) {
        if (v.bits & (1ull << i)) {
          if (!first) out += ',';
          first = false;
          out += k.universe[i];
        }
      }
      return out + "}";
    }
  }
  return "?";
}

SemiringValue parse_value(const SemiringInstance& k, const std::string& text) {
  switch (k.tag) {
    case SrTag::Boolean:
      if (text == "1" || text == "true") return SemiringValue::boolean(true);
      if (text == "0" || text == "false") return SemiringValue::boolean(false);
      throw std::invalid_argument("bad boolean value: " + text);
    case SrTag::Viterbi: return SemiringValue::viterbi(Rational::parse(text));
    case SrTag::Lukasiewicz: return SemiringValue::lukasiewicz(Rational::parse(text));
    case SrTag::Tropical:
      if (text == "inf") return SemiringValue::tropical_inf();
      return SemiringValue::tropical(Rational::parse(text));
    case SrTag::FreePoly:
      throw std::invalid_argument("free-polynomial values are built from terms, not literals");
    case SrTag::Powerset: {
      if (text.size() < 2 || text.front() != '{' || text.back() != '}')
        throw std::invalid_argument("powerset values look like {a,b}: " + text);
      std::uint64_t mask = 0;
      std::string body = text.substr(1, text.size() - 2);
      std::size_t start = 0;
      while (start < body.size()) {
        std::size_t comma = body.find(',', start);
        std::string label = body.substr(start, comma == std::string::npos ? comma : comma - start);
        auto it = std::find(k.universe.begin(), k.universe.end(), label);
        if (it == k.universe.end())
          throw std::invalid_argument("label not in powerset universe: " + label);
        mask |= 1ull << (it - k.universe.begin());
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      return SemiringValue::powerset(mask);
    }
  }
  throw std::logic_error("bad tag");
}

std::vector<SemiringValue> enumerate_values(const SemiringInstance& k) {
  switch (k.tag) {
    case SrTag::Boolean:
      return {SemiringValue::boolean(false), SemiringValue::boolean(true)};
    case SrTag::Powerset: {
      if (k.universe.size() > 16)
        throw std::invalid_argument("powerset universe too large to enumerate");
      std::vector<SemiringValue> out;
      for (std::uint64_t m = 0; m < (1ull << k.universe.size()); ++m)
        out.push_back(SemiringValue::powerset(m));
      return out;
    }
    default:
      throw std::invalid_argument("instance " + k.str() + " has no finite enumeration");
  }
}

SemiringValue eval_term(const TermPtr& t, const Interpretation& I, const Valuation& v,
                        const SemiringInstance& k) {
  switch (t->kind) {
    case TermKind::Zero:
      return sr_zero(k);
    case TermKind::One:
      return sr_one(k);
    case TermKind::Constant: {
      auto it = I.find(t->name);
      if (it == I.end()) throw std::out_of_range("no interpretation for constant " + t->name);
      return it->second;
    }
    case TermKind::Var: {
      auto it = v.find(t->name);
      if (it == v.end()) throw std::out_of_range("no valuation for variable " + t->name);
      return it->second;
    }
    case TermKind::Sum:
      return sr_add(k, eval_term(t->left, I, v, k), eval_term(t->right, I, v, k));
    case TermKind::Prod:
      return sr_mul(k, eval_term(t->left, I, v, k), eval_term(t->right, I, v, k));
  }
  throw std::logic_error("bad term kind");
}

SemiringValue eval_polynomial(const Polynomial& p, const Interpretation& I, const Valuation& v,
                              const SemiringInstance& k) {
  SemiringValue acc = sr_zero(k);
  for (const auto& [m, mult] : p.terms) {
    SemiringValue prod = sr_one(k);
    for (const auto& atom : m.atoms) {
      SemiringValue val;
      if (is_term_variable_name(atom)) {
        auto it = v.find(atom);
        if (it == v.end()) throw std::out_of_range("no valuation for variable " + atom);
        val = it->second;
      } else {
        auto it = I.find(atom);
        if (it == I.end()) throw std::out_of_range("no interpretation for constant " + atom);
        val = it->second;
      }
      prod = sr_mul(k, prod, val);
    }
    for (std::uint64_t i = 0; i < mult; ++i) acc = sr_add(k, acc, prod);
  }
  return acc;
}

void free_standard_env(const TermPtr& t, Interpretation& I, Valuation& v) {
  std::set<std::string> vars, consts;
  collect_term_vars(t, vars);
  collect_term_constants(t, consts);
  for (const auto& x : vars) v[x] = SemiringValue::free_poly(poly_atom(x));
  for (const auto& c : consts) I[c] = SemiringValue::free_poly(poly_atom(c));
}

}  // namespace sej
