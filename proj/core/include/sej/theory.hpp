#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sej/formula.hpp"
#include "sej/schemes.hpp"

namespace sej {

/// Concrete decidable theory. Members come in four groups:
///   (a) scheme constants: c_s : A for every instance A of scheme s
///       (c_cl, c_j, c_jp, c_ap, c_cp, c_zp, c_am, c_a0, c_a1, c_dl, c_dr)
///   (b) towers c_s_2 : (c_s : A), c_s_3 : (c_s_2 : ...) making the theory
///       axiomatically appropriate
///   (c) weakening: t_w : (A -> A|B) and t_w : (B -> A|B) for all A, B,
///       one shared ground constant
///   (d) star hypothesis: x:A -> c_star*x*y:(A|B) and
///       y:B -> c_star*x*y:(A|B) for all A, B
/// plus arbitrary extra member formulas (with justifier chains m1_2, ...).
/// The mode flags gate the groups; membership is decided by parsing the
/// leading constant name and checking the payload.
struct TheoryDescriptor {
  bool axiomatically_appropriate = true;
  bool schematic = true;
  bool supports_weakening = true;
  bool star_constant = false;

  std::string weakening_name = "t_w";
  std::string star_name = "c_star";
  std::string star_var_x = "x";
  std::string star_var_y = "y";
  std::string extra_prefix = "m";
  std::vector<FormulaPtr> extras;

  static TheoryDescriptor standard();
  static TheoryDescriptor with_star();
  /// All capability flags off; membership is just the given formulas.
  static TheoryDescriptor plain(std::vector<FormulaPtr> members);

  std::string scheme_constant(SchemeId s) const;
  TermPtr scheme_constant_term(SchemeId s) const;

  struct Witness {
    enum class Tag { Scheme, Weakening, Star, Extra };
    Tag tag = Tag::Scheme;
    SchemeId scheme = SchemeId::CL;
    std::size_t extra = 0;
    unsigned level = 1;
  };

  std::optional<Witness> member(const FormulaPtr& f) const;
  /// Constant justifying a member with witness w (its level+1 tower name);
  /// nullopt when the theory is not axiomatically appropriate.
  std::optional<std::string> justifying_constant(const Witness& w) const;

  /// t_w : (A -> A|B) or t_w : (B -> A|B)
  FormulaPtr weakening_member(const FormulaPtr& a, const FormulaPtr& b, bool second) const;
  /// x:A -> c_star*x*y:(A|B) or y:B -> c_star*x*y:(A|B)
  FormulaPtr star_member(const FormulaPtr& a, const FormulaPtr& b, bool second) const;
  /// ((c_star * s) * t) applied under u = c_cl: the star merge u*c*s*t
  TermPtr star_term(const TermPtr& s, const TermPtr& t) const;

  /// Every member's propositional projection is a tautology (conservativity
  /// applies). Only extras can break this.
  bool is_pure() const;

private:
  std::string level_name(const Witness& w, unsigned level) const;
  bool payload_ok(const Witness& w, const FormulaPtr& payload) const;
};

}  // namespace sej
