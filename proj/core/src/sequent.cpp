#include "sej/sequent.hpp"

#include <sstream>

namespace sej {

std::string print_sequent(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.ant.size(); ++i) {
    if (i) out += ", ";
    out += print_modal(s.ant[i]);
  }
  out += s.ant.empty() ? "=>" : " =>";
  for (std::size_t i = 0; i < s.suc.size(); ++i) {
    out += i ? ", " : " ";
    out += print_modal(s.suc[i]);
  }
  return out;
}

const char* gk_rule_name(GKRule r) {
  switch (r) {
    case GKRule::AxP: return "ax-p";
    case GKRule::AxBot: return "ax-bot";
    case GKRule::ImpL: return "imp-l";
    case GKRule::ImpR: return "imp-r";
    case GKRule::BoxRule: return "box";
    case GKRule::WeakL: return "weak-l";
    case GKRule::WeakR: return "weak-r";
    case GKRule::ContrL: return "contr-l";
    case GKRule::ContrR: return "contr-r";
  }
  return "?";
}

std::optional<GKRule> gk_rule_from_name(const std::string& name) {
  for (GKRule r : {GKRule::AxP, GKRule::AxBot, GKRule::ImpL, GKRule::ImpR, GKRule::BoxRule,
                   GKRule::WeakL, GKRule::WeakR, GKRule::ContrL, GKRule::ContrR})
    if (name == gk_rule_name(r)) return r;
  return std::nullopt;
}

namespace {

bool seq_equal(const Sequent& a, const Sequent& b) {
  if (a.ant.size() != b.ant.size() || a.suc.size() != b.suc.size()) return false;
  for (std::size_t i = 0; i < a.ant.size(); ++i)
    if (!modal_equal(a.ant[i], b.ant[i])) return false;
  for (std::size_t i = 0; i < a.suc.size(); ++i)
    if (!modal_equal(a.suc[i], b.suc[i])) return false;
  return true;
}

std::vector<ModalPtr> without(const std::vector<ModalPtr>& v, std::size_t k) {
  std::vector<ModalPtr> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (i != k) out.push_back(v[i]);
  return out;
}

std::optional<std::string> validate_node(const GKNode& n) {
  auto bad = [&](const std::string& why) {
    return std::optional<std::string>(std::string(gk_rule_name(n.rule)) + " at '" +
                                      print_sequent(n.seq) + "': " + why);
  };
  switch (n.rule) {
    case GKRule::AxP:
      if (!n.children.empty()) return bad("axioms are leaves");
      if (n.seq.ant.size() != 1 || n.seq.suc.size() != 1 ||
          n.seq.ant[0]->kind != ModalKind::Atom || n.seq.suc[0]->kind != ModalKind::Atom ||
          n.seq.ant[0]->atom != n.seq.suc[0]->atom)
        return bad("expected P => P");
      return std::nullopt;
    case GKRule::AxBot:
      if (!n.children.empty()) return bad("axioms are leaves");
      if (n.seq.ant.size() != 1 || !n.seq.suc.empty() || n.seq.ant[0]->kind != ModalKind::Bottom)
        return bad("expected bot =>");
      return std::nullopt;
    case GKRule::ImpL: {
      if (n.children.size() != 2) return bad("two premises expected");
      if (n.principal >= n.seq.ant.size()) return bad("principal out of range");
      const ModalPtr& p = n.seq.ant[n.principal];
      if (p->kind != ModalKind::Implies) return bad("principal is not an implication");
      Sequent p1{without(n.seq.ant, n.principal), n.seq.suc};
      p1.suc.push_back(p->lhs);
      Sequent p2{without(n.seq.ant, n.principal), n.seq.suc};
      p2.ant.insert(p2.ant.begin(), p->rhs);
      if (!seq_equal(n.children[0]->seq, p1)) return bad("first premise mismatch");
      if (!seq_equal(n.children[1]->seq, p2)) return bad("second premise mismatch");
      return std::nullopt;
    }
    case GKRule::ImpR: {
      if (n.children.size() != 1) return bad("one premise expected");
      if (n.principal >= n.seq.suc.size()) return bad("principal out of range");
      const ModalPtr& p = n.seq.suc[n.principal];
      if (p->kind != ModalKind::Implies) return bad("principal is not an implication");
      Sequent p1{n.seq.ant, without(n.seq.suc, n.principal)};
      p1.ant.insert(p1.ant.begin(), p->lhs);
      p1.suc.push_back(p->rhs);
      if (!seq_equal(n.children[0]->seq, p1)) return bad("premise mismatch");
      return std::nullopt;
    }
    case GKRule::BoxRule: {
      if (n.children.size() != 1) return bad("one premise expected");
      if (n.seq.suc.size() != 1 || n.seq.suc[0]->kind != ModalKind::Box)
        return bad("succedent must be a single box");
      const Sequent& p = n.children[0]->seq;
      if (p.suc.size() != 1 || !modal_equal(p.suc[0], n.seq.suc[0]->body))
        return bad("premise succedent must unbox the conclusion");
      if (p.ant.size() != n.seq.ant.size()) return bad("antecedent size mismatch");
      for (std::size_t i = 0; i < p.ant.size(); ++i) {
        if (n.seq.ant[i]->kind != ModalKind::Box || !modal_equal(n.seq.ant[i]->body, p.ant[i]))
          return bad("antecedent must be the boxed premise antecedent");
      }
      return std::nullopt;
    }
    case GKRule::WeakL: {
      if (n.children.size() != 1) return bad("one premise expected");
      if (n.principal >= n.seq.ant.size()) return bad("principal out of range");
      Sequent p{without(n.seq.ant, n.principal), n.seq.suc};
      if (!seq_equal(n.children[0]->seq, p)) return bad("premise mismatch");
      return std::nullopt;
    }
    case GKRule::WeakR: {
      if (n.children.size() != 1) return bad("one premise expected");
      if (n.principal >= n.seq.suc.size()) return bad("principal out of range");
      Sequent p{n.seq.ant, without(n.seq.suc, n.principal)};
      if (!seq_equal(n.children[0]->seq, p)) return bad("premise mismatch");
      return std::nullopt;
    }
    case GKRule::ContrL: {
      if (n.children.size() != 1) return bad("one premise expected");
      if (n.principal >= n.seq.ant.size()) return bad("principal out of range");
      Sequent p{n.seq.ant, n.seq.suc};
      p.ant.insert(p.ant.begin() + n.principal, n.seq.ant[n.principal]);
      if (!seq_equal(n.children[0]->seq, p)) return bad("premise must duplicate the principal");
      return std::nullopt;
    }
    case GKRule::ContrR: {
      if (n.children.size() != 1) return bad("one premise expected");
      if (n.principal >= n.seq.suc.size()) return bad("principal out of range");
      Sequent p{n.seq.ant, n.seq.suc};
      p.suc.insert(p.suc.begin() + n.principal, n.seq.suc[n.principal]);
      if (!seq_equal(n.children[0]->seq, p)) return bad("premise must duplicate the principal");
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::optional<std::string> validate_rec(const GKNode& n) {
  if (auto err = validate_node(n)) return err;
  for (const auto& c : n.children)
    if (auto err = validate_rec(*c)) return err;
  return std::nullopt;
}

void print_rec(const GKNode& n, int depth, std::ostringstream& out) {
  for (int i = 0; i < depth; ++i) out << "  ";
  out << print_sequent(n.seq) << "   [" << gk_rule_name(n.rule) << "]\n";
  for (const auto& c : n.children) print_rec(*c, depth + 1, out);
}

void postorder_rec(GKNode* n, std::vector<GKNode*>& out) {
  for (auto& c : n->children) postorder_rec(c.get(), out);
  out.push_back(n);
}

}  // namespace

std::optional<std::string> validate_derivation(const GKDerivation& d) {
  if (!d.root) return "empty derivation";
  return validate_rec(*d.root);
}

std::string print_derivation(const GKDerivation& d) {
  std::ostringstream out;
  if (d.root) print_rec(*d.root, 0, out);
  return out.str();
}

std::vector<GKNode*> postorder(const GKDerivation& d) {
  std::vector<GKNode*> out;
  if (d.root) postorder_rec(d.root.get(), out);
  return out;
}

}  // namespace sej
