#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sej/polynomial.hpp"
#include "sej/rational.hpp"
#include "sej/term.hpp"

namespace sej {

enum class SrTag { Boolean, Viterbi, Tropical, Lukasiewicz, Powerset, FreePoly };

/// Instance descriptor. Text forms: `bool`, `viterbi`, `tropical`,
/// `lukasiewicz`, `powerset{p,q,r}`, `free`.
struct SemiringInstance {
  SrTag tag = SrTag::Boolean;
  std::vector<std::string> universe;  // Powerset labels, sorted unique, <= 64

  static SemiringInstance boolean();
  static SemiringInstance viterbi();
  static SemiringInstance tropical();
  static SemiringInstance lukasiewicz();
  static SemiringInstance powerset(std::vector<std::string> labels);
  static SemiringInstance free_poly();
  static SemiringInstance parse(const std::string& descriptor);

  std::string str() const;
  bool finite_domain() const { return tag == SrTag::Boolean || tag == SrTag::Powerset; }
  bool operator==(const SemiringInstance& o) const {
    return tag == o.tag && universe == o.universe;
  }
};

/// One element of a semiring; the tag says which instance it belongs to.
/// Viterbi and Lukasiewicz values are exact rationals in [0,1], tropical
/// values exact nonnegative rationals or infinity, powerset values bitsets
/// over the instance universe, free values canonical polynomials.
struct SemiringValue {
  SrTag tag = SrTag::Boolean;
  bool b = false;
  Rational q;
  bool inf = false;
  std::uint64_t bits = 0;
  Polynomial poly;

  static SemiringValue boolean(bool v);
  static SemiringValue viterbi(const Rational& v);
  static SemiringValue tropical(const Rational& v);
  static SemiringValue tropical_inf();
  static SemiringValue lukasiewicz(const Rational& v);
  static SemiringValue powerset(std::uint64_t mask);
  static SemiringValue free_poly(Polynomial p);

  bool operator==(const SemiringValue& o) const;
  bool operator!=(const SemiringValue& o) const { return !(*this == o); }
};

SemiringValue sr_zero(const SemiringInstance& k);
SemiringValue sr_one(const SemiringInstance& k);
SemiringValue sr_add(const SemiringInstance& k, const SemiringValue& a, const SemiringValue& b);
SemiringValue sr_mul(const SemiringInstance& k, const SemiringValue& a, const SemiringValue& b);

std::string print_value(const SemiringInstance& k, const SemiringValue& v);
SemiringValue parse_value(const SemiringInstance& k, const std::string& text);

/// All elements of a finite-domain instance (throws otherwise).
std::vector<SemiringValue> enumerate_values(const SemiringInstance& k);

// ---- evaluation of justification terms as polynomial functions ----

using Interpretation = std::map<std::string, SemiringValue>;  // user constants
using Valuation = std::map<std::string, SemiringValue>;       // variables

/// Homomorphic evaluation t_I^v; 0 and 1 go to the instance units (the
/// interpretation condition), missing bindings throw std::out_of_range.
SemiringValue eval_term(const TermPtr& t, const Interpretation& I, const Valuation& v,
                        const SemiringInstance& k);

/// Expands the polynomial with sr_add / sr_mul: empty sum = 0, empty word = 1.
SemiringValue eval_polynomial(const Polynomial& p, const Interpretation& I, const Valuation& v,
                              const SemiringInstance& k);

/// Interpretation/valuation for the free instance mapping every atom of t to
/// itself, under which evaluation is normalization.
void free_standard_env(const TermPtr& t, Interpretation& I, Valuation& v);

}  // namespace sej
