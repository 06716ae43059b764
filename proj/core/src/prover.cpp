#include "sej/prover.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sej {

namespace {

// context-sharing search node; elaboration expands axioms and box steps
struct INode {
  Sequent seq;
  enum class R { AxP, AxBot, ImpL, ImpR, Box } rule = R::AxP;
  std::size_t principal = 0;  // ImpL/ImpR position; AxP antecedent position
  std::size_t aux = 0;        // AxP succedent position; Box succedent position
  std::vector<std::size_t> gamma;  // Box: chosen antecedent positions
  std::vector<std::unique_ptr<INode>> children;
};

std::string memo_key(const Sequent& s) {
  std::vector<std::string> a, b;
  for (const auto& f : s.ant) a.push_back(print_modal(f));
  for (const auto& f : s.suc) b.push_back(print_modal(f));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::string key;
  for (const auto& x : a) key += x + "|";
  key += "=>";
  for (const auto& x : b) key += "|" + x;
  return key;
}

struct Search {
  std::set<std::string> failed;

  std::unique_ptr<INode> run(Sequent seq) {
    // axioms
    for (std::size_t i = 0; i < seq.ant.size(); ++i) {
      if (seq.ant[i]->kind == ModalKind::Bottom) {
        auto n = std::make_unique<INode>();
        n->seq = seq;
        n->rule = INode::R::AxBot;
        n->principal = i;
        return n;
      }
      if (seq.ant[i]->kind == ModalKind::Atom) {
        for (std::size_t j = 0; j < seq.suc.size(); ++j) {
          if (seq.suc[j]->kind == ModalKind::Atom && seq.suc[j]->atom == seq.ant[i]->atom) {
            auto n = std::make_unique<INode>();
            n->seq = seq;
            n->rule = INode::R::AxP;
            n->principal = i;
            n->aux = j;
            return n;
          }
        }
      }
    }

    std::string key = memo_key(seq);
    if (failed.count(key)) return nullptr;

    // invertible implication rules, leftmost first
    for (std::size_t i = 0; i < seq.ant.size(); ++i) {
      if (seq.ant[i]->kind != ModalKind::Implies) continue;
      const ModalPtr& p = seq.ant[i];
      Sequent p1, p2;
      for (std::size_t k = 0; k < seq.ant.size(); ++k)
        if (k != i) p1.ant.push_back(seq.ant[k]);
      p1.suc = seq.suc;
      p1.suc.push_back(p->lhs);
      p2.ant = p1.ant;
      p2.ant.insert(p2.ant.begin(), p->rhs);
      p2.suc = seq.suc;
      auto c1 = run(std::move(p1));
      if (!c1) {
        failed.insert(key);
        return nullptr;
      }
      auto c2 = run(std::move(p2));
      if (!c2) {
        failed.insert(key);
        return nullptr;
      }
      auto n = std::make_unique<INode>();
      n->seq = seq;
      n->rule = INode::R::ImpL;
      n->principal = i;
      n->children.push_back(std::move(c1));
      n->children.push_back(std::move(c2));
      return n;
    }
    for (std::size_t j = 0; j < seq.suc.size(); ++j) {
      if (seq.suc[j]->kind != ModalKind::Implies) continue;
      const ModalPtr& p = seq.suc[j];
      Sequent p1;
      p1.ant = seq.ant;
      p1.ant.insert(p1.ant.begin(), p->lhs);
      for (std::size_t k = 0; k < seq.suc.size(); ++k)
        if (k != j) p1.suc.push_back(seq.suc[k]);
      p1.suc.push_back(p->rhs);
      auto c1 = run(std::move(p1));
      if (!c1) {
        failed.insert(key);
        return nullptr;
      }
      auto n = std::make_unique<INode>();
      n->seq = seq;
      n->rule = INode::R::ImpR;
      n->principal = j;
      n->children.push_back(std::move(c1));
      return n;
    }

    // stuck: only atoms and boxes left; branch over box choices
    std::vector<std::size_t> boxes;
    for (std::size_t i = 0; i < seq.ant.size(); ++i)
      if (seq.ant[i]->kind == ModalKind::Box) boxes.push_back(i);

    // sub-multisets largest first, then by mask for determinism
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 0; m < (1u << boxes.size()); ++m) masks.push_back(m);
    std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
      int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
      if (pa != pb) return pa > pb;
      return a < b;
    });

    for (std::size_t j = 0; j < seq.suc.size(); ++j) {
      if (seq.suc[j]->kind != ModalKind::Box) continue;
      for (std::uint32_t mask : masks) {
        Sequent prem;
        std::vector<std::size_t> gamma;
        for (std::size_t bi = 0; bi < boxes.size(); ++bi) {
          if (mask & (1u << bi)) {
            gamma.push_back(boxes[bi]);
            prem.ant.push_back(seq.ant[boxes[bi]]->body);
          }
        }
        prem.suc.push_back(seq.suc[j]->body);
        auto c = run(std::move(prem));
        if (!c) continue;
        auto n = std::make_unique<INode>();
        n->seq = seq;
        n->rule = INode::R::Box;
        n->aux = j;
        n->gamma = std::move(gamma);
        n->children.push_back(std::move(c));
        return n;
      }
    }

    failed.insert(key);
    return nullptr;
  }
};

// wraps `base` (whose root sequent misses some formulas of `target`) in
// weakening nodes until the sequent equals target; keep[] lists positions of
// target already present in base's root, in increasing order
std::unique_ptr<GKNode> weaken_to(std::unique_ptr<GKNode> base, const Sequent& target,
                                  std::vector<std::size_t> ant_keep,
                                  std::vector<std::size_t> suc_keep) {
  for (std::size_t k = 0; k < target.ant.size(); ++k) {
    if (std::find(ant_keep.begin(), ant_keep.end(), k) != ant_keep.end()) continue;
    std::size_t pos = 0;
    while (pos < ant_keep.size() && ant_keep[pos] < k) ++pos;
    auto n = std::make_unique<GKNode>();
    n->rule = GKRule::WeakL;
    n->principal = pos;
    n->seq = base->seq;
    n->seq.ant.insert(n->seq.ant.begin() + pos, target.ant[k]);
    n->children.push_back(std::move(base));
    base = std::move(n);
    ant_keep.insert(ant_keep.begin() + pos, k);
  }
  for (std::size_t k = 0; k < target.suc.size(); ++k) {
    if (std::find(suc_keep.begin(), suc_keep.end(), k) != suc_keep.end()) continue;
    std::size_t pos = 0;
    while (pos < suc_keep.size() && suc_keep[pos] < k) ++pos;
    auto n = std::make_unique<GKNode>();
    n->rule = GKRule::WeakR;
    n->principal = pos;
    n->seq = base->seq;
    n->seq.suc.insert(n->seq.suc.begin() + pos, target.suc[k]);
    n->children.push_back(std::move(base));
    base = std::move(n);
    suc_keep.insert(suc_keep.begin() + pos, k);
  }
  return base;
}

std::unique_ptr<GKNode> elaborate(const INode& n) {
  switch (n.rule) {
    case INode::R::AxP: {
      auto leaf = std::make_unique<GKNode>();
      leaf->rule = GKRule::AxP;
      leaf->seq.ant.push_back(n.seq.ant[n.principal]);
      leaf->seq.suc.push_back(n.seq.suc[n.aux]);
      return weaken_to(std::move(leaf), n.seq, {n.principal}, {n.aux});
    }
    case INode::R::AxBot: {
      auto leaf = std::make_unique<GKNode>();
      leaf->rule = GKRule::AxBot;
      leaf->seq.ant.push_back(n.seq.ant[n.principal]);
      return weaken_to(std::move(leaf), n.seq, {n.principal}, {});
    }
    case INode::R::ImpL: {
      auto g = std::make_unique<GKNode>();
      g->rule = GKRule::ImpL;
      g->principal = n.principal;
      g->seq = n.seq;
      g->children.push_back(elaborate(*n.children[0]));
      g->children.push_back(elaborate(*n.children[1]));
      return g;
    }
    case INode::R::ImpR: {
      auto g = std::make_unique<GKNode>();
      g->rule = GKRule::ImpR;
      g->principal = n.principal;
      g->seq = n.seq;
      g->children.push_back(elaborate(*n.children[0]));
      return g;
    }
    case INode::R::Box: {
      auto box = std::make_unique<GKNode>();
      box->rule = GKRule::BoxRule;
      for (std::size_t pos : n.gamma) box->seq.ant.push_back(n.seq.ant[pos]);
      box->seq.suc.push_back(n.seq.suc[n.aux]);
      box->children.push_back(elaborate(*n.children[0]));
      return weaken_to(std::move(box), n.seq, n.gamma, {n.aux});
    }
  }
  return nullptr;
}

}  // namespace

std::optional<GKDerivation> prove(const ModalPtr& goal) {
  Search s;
  Sequent root;
  root.suc.push_back(goal);
  auto internal = s.run(root);
  if (!internal) return std::nullopt;
  GKDerivation d;
  d.root = elaborate(*internal);
  return d;
}

bool provable(const ModalPtr& goal) { return prove(goal).has_value(); }

}  // namespace sej
