#include "sej/taut.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace sej {

namespace {

struct Node {
  enum Kind { False, Letter, Imp } kind;
  int a = -1;      // Letter index
  int l = -1, r = -1;
};

struct Compiled {
  std::vector<Node> nodes;
  int root = -1;
  int letters = 0;
};

int compile(const FormulaPtr& f, Compiled& c, std::map<std::string, int>& letter_ids) {
  switch (f->kind) {
    case FmlKind::Bottom:
      c.nodes.push_back({Node::False, -1, -1, -1});
      return static_cast<int>(c.nodes.size() - 1);
    case FmlKind::Atom:
    case FmlKind::Evidence: {
      std::string key = f->kind == FmlKind::Atom ? "@" + f->atom : print_formula(f);
      auto [it, inserted] = letter_ids.try_emplace(key, c.letters);
      if (inserted) ++c.letters;
      c.nodes.push_back({Node::Letter, it->second, -1, -1});
      return static_cast<int>(c.nodes.size() - 1);
    }
    case FmlKind::Implies: {
      int l = compile(f->lhs, c, letter_ids);
      int r = compile(f->rhs, c, letter_ids);
      c.nodes.push_back({Node::Imp, -1, l, r});
      return static_cast<int>(c.nodes.size() - 1);
    }
  }
  return -1;
}

std::uint64_t eval_block(const Compiled& c, std::uint64_t block, std::vector<std::uint64_t>& buf) {
  static const std::uint64_t lane_patterns[6] = {
      0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
      0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
  for (std::size_t i = 0; i < c.nodes.size(); ++i) {
    const Node& n = c.nodes[i];
    switch (n.kind) {
      case Node::False:
        buf[i] = 0;
        break;
      case Node::Letter:
        if (n.a < 6)
          buf[i] = lane_patterns[n.a];
        else
          buf[i] = (block >> (n.a - 6)) & 1 ? ~0ull : 0ull;
        break;
      case Node::Imp:
        buf[i] = ~buf[n.l] | buf[n.r];
        break;
    }
  }
  return buf[c.root];
}

enum class TV { F, T, U };

TV eval3(const Compiled& c, int node, const std::vector<TV>& assign) {
  const Node& n = c.nodes[node];
  switch (n.kind) {
    case Node::False:
      return TV::F;
    case Node::Letter:
      return assign[n.a];
    case Node::Imp: {
      TV l = eval3(c, n.l, assign);
      if (l == TV::F) return TV::T;
      TV r = eval3(c, n.r, assign);
      if (r == TV::T) return TV::T;
      if (l == TV::T && r == TV::F) return TV::F;
      return TV::U;
    }
  }
  return TV::U;
}

bool falsifiable(const Compiled& c, std::vector<TV>& assign, int from) {
  TV v = eval3(c, c.root, assign);
  if (v == TV::F) return true;
  if (v == TV::T) return false;
  int pick = -1;
  for (int i = from; i < c.letters; ++i)
    if (assign[i] == TV::U) {
      pick = i;
      break;
    }
  if (pick < 0) return false;
  for (TV branch : {TV::F, TV::T}) {
    assign[pick] = branch;
    if (falsifiable(c, assign, pick + 1)) return true;
  }
  assign[pick] = TV::U;
  return false;
}

}  // namespace

bool is_skeleton_tautology(const FormulaPtr& f) {
  Compiled c;
  std::map<std::string, int> ids;
  c.root = compile(f, c, ids);
  if (c.letters <= 20) {
    std::vector<std::uint64_t> buf(c.nodes.size());
    int table_bits = c.letters;
    if (table_bits <= 6) {
      std::uint64_t rows = 1ull << table_bits;
      std::uint64_t mask = rows == 64 ? ~0ull : (1ull << rows) - 1;
      return (eval_block(c, 0, buf) & mask) == mask;
    }
    std::uint64_t blocks = 1ull << (table_bits - 6);
    for (std::uint64_t b = 0; b < blocks; ++b)
      if (eval_block(c, b, buf) != ~0ull) return false;
    return true;
  }
  std::vector<TV> assign(c.letters, TV::U);
  return !falsifiable(c, assign, 0);
}

}  // namespace sej
