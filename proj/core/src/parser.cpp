#include "sej/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace sej {

namespace {

enum class Tok { Ident, Zero, One, Bot, Arrow, Iff, Colon, Plus, Star, Amp, Pipe, Tilde,
                 LParen, RParen, Box, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, col;
};

struct Lexer {
  std::vector<Token> toks;

  explicit Lexer(const std::string& s) {
    std::size_t line = 1, col = 1;
    std::size_t i = 0;
    while (i < s.size()) {
      char c = s[i];
      if (c == '\n') {
        ++line;
        col = 1;
        ++i;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++col;
        ++i;
        continue;
      }
      std::size_t start_col = col;
      auto push_at = [&](Tok k, std::string t, std::size_t len) {
        toks.push_back({k, std::move(t), line, start_col});
        i += len;
        col += len;
      };
      if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
          ++j;
        std::string word = s.substr(i, j - i);
        if (word == "bot")
          push_at(Tok::Bot, word, word.size());
        else
          push_at(Tok::Ident, word, word.size());
        continue;
      }
      switch (c) {
        case '0': push_at(Tok::Zero, "0", 1); continue;
        case '1': push_at(Tok::One, "1", 1); continue;
        case ':': push_at(Tok::Colon, ":", 1); continue;
        case '+': push_at(Tok::Plus, "+", 1); continue;
        case '*': push_at(Tok::Star, "*", 1); continue;
        case '&': push_at(Tok::Amp, "&", 1); continue;
        case '|': push_at(Tok::Pipe, "|", 1); continue;
        case '~': push_at(Tok::Tilde, "~", 1); continue;
        case '(': push_at(Tok::LParen, "(", 1); continue;
        case ')': push_at(Tok::RParen, ")", 1); continue;
        case '-':
          if (i + 1 < s.size() && s[i + 1] == '>') {
            push_at(Tok::Arrow, "->", 2);
            continue;
          }
          throw ParseError(line, col, "stray '-'", "'->'");
        case '<':
          if (i + 2 < s.size() && s[i + 1] == '-' && s[i + 2] == '>') {
            push_at(Tok::Iff, "<->", 3);
            continue;
          }
          throw ParseError(line, col, "stray '<'", "'<->'");
        case '[':
          if (i + 1 < s.size() && s[i + 1] == ']') {
            push_at(Tok::Box, "[]", 2);
            continue;
          }
          throw ParseError(line, col, "stray '['", "'[]'");
        default:
          throw ParseError(line, col, std::string("unexpected character '") + c + "'", "");
      }
    }
    toks.push_back({Tok::End, "", line, col});
  }
};

enum class Lang { Justification, Modal, Propositional };

struct Parser {
  std::vector<Token> toks;
  std::size_t pos = 0;
  Lang lang;
  OccAllocator* alloc = nullptr;

  const Token& peek() const { return toks[pos]; }
  Token next() { return toks[pos++]; }
  bool at(Tok k) const { return toks[pos].kind == k; }

  [[noreturn]] void fail(const std::string& what, const std::string& expected) const {
    throw ParseError(peek().line, peek().col, what, expected);
  }

  void expect(Tok k, const std::string& name) {
    if (!at(k)) fail("found '" + (peek().kind == Tok::End ? "<end>" : peek().text) + "'", name);
    ++pos;
  }

  // ---- terms ----

  TermPtr term_atom() {
    switch (peek().kind) {
      case Tok::Zero:
        next();
        return Term::zero();
      case Tok::One:
        next();
        return Term::one();
      case Tok::Ident: {
        const std::string& n = peek().text;
        if (is_term_variable_name(n)) {
          next();
          return Term::var(n);
        }
        if (is_term_constant_name(n)) {
          next();
          return Term::constant(n);
        }
        fail("'" + n + "' is not a term identifier", "a lowercase identifier, '0' or '1'");
      }
      case Tok::LParen: {
        next();
        TermPtr t = term();
        expect(Tok::RParen, "')'");
        return t;
      }
      default:
        fail("found '" + (peek().kind == Tok::End ? "<end>" : peek().text) + "'", "a term");
    }
  }

  TermPtr term_prod() {
    TermPtr t = term_atom();
    while (at(Tok::Star)) {
      next();
      t = Term::prod(t, term_atom());
    }
    return t;
  }

  TermPtr term() {
    TermPtr t = term_prod();
    while (at(Tok::Plus)) {
      next();
      t = Term::sum(t, term_prod());
    }
    return t;
  }

  // ---- formulas (generic over justification / modal / propositional) ----
  // Internally everything is parsed as a Formula; modal boxes are recorded as
  // Evidence with a null-term marker and converted afterwards.

  FormulaPtr box_marker(FormulaPtr body) {
    return std::make_shared<Formula>(FmlKind::Evidence, "", nullptr, nullptr, std::move(body));
  }

  FormulaPtr unary() {
    switch (peek().kind) {
      case Tok::Tilde:
        next();
        return f_not(unary());
      case Tok::Box: {
        if (lang != Lang::Modal) fail("'[]' only occurs in modal formulas", "");
        next();
        return box_marker(unary());
      }
      case Tok::Bot:
        next();
        return Formula::bottom();
      case Tok::Ident: {
        const std::string& n = peek().text;
        if (is_atom_name(n)) {
          next();
          return Formula::atom_f(n);
        }
        break;  // lowercase: must be an evidence prefix
      }
      default:
        break;
    }
    // evidence prefix `term ':'`, or a parenthesized formula
    if (lang == Lang::Justification &&
        (at(Tok::Ident) || at(Tok::Zero) || at(Tok::One) || at(Tok::LParen))) {
      std::size_t mark = pos;
      try {
        TermPtr t = term();
        expect(Tok::Colon, "':'");
        return Formula::evidence(t, unary());
      } catch (const ParseError&) {
        pos = mark;
        if (!at(Tok::LParen)) throw;
      }
    }
    if (at(Tok::LParen)) {
      next();
      FormulaPtr f = formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    fail("found '" + (peek().kind == Tok::End ? "<end>" : peek().text) + "'", "a formula");
  }

  FormulaPtr conj() {
    FormulaPtr f = unary();
    if (at(Tok::Amp)) {
      next();
      return f_and(f, conj());
    }
    return f;
  }

  FormulaPtr disj() {
    FormulaPtr f = conj();
    if (at(Tok::Pipe)) {
      next();
      return f_or(f, disj());
    }
    return f;
  }

  FormulaPtr imp() {
    FormulaPtr f = disj();
    if (at(Tok::Arrow)) {
      next();
      return Formula::implies(f, imp());
    }
    return f;
  }

  FormulaPtr formula() {
    FormulaPtr f = imp();
    if (at(Tok::Iff)) {
      next();
      return f_iff(f, formula());
    }
    return f;
  }

  ModalPtr to_modal(const FormulaPtr& f) {
    switch (f->kind) {
      case FmlKind::Bottom:
        return m_bottom();
      case FmlKind::Atom:
        return m_atom(f->atom);
      case FmlKind::Implies:
        return m_implies(to_modal(f->lhs), to_modal(f->rhs));
      case FmlKind::Evidence:
        return m_box(to_modal(f->rhs), *alloc);
    }
    return m_bottom();
  }
};

Parser make_parser(const std::string& text, Lang lang) {
  Parser p{Lexer(text).toks, 0, lang, nullptr};
  return p;
}

}  // namespace

TermPtr parse_term_text(const std::string& text) {
  Parser p = make_parser(text, Lang::Justification);
  TermPtr t = p.term();
  p.expect(Tok::End, "end of input");
  return t;
}

FormulaPtr parse_formula_text(const std::string& text) {
  Parser p = make_parser(text, Lang::Justification);
  FormulaPtr f = p.formula();
  p.expect(Tok::End, "end of input");
  return f;
}

FormulaPtr parse_propositional_text(const std::string& text) {
  Parser p = make_parser(text, Lang::Propositional);
  FormulaPtr f = p.formula();
  p.expect(Tok::End, "end of input");
  return f;
}

ModalPtr parse_modal_text(const std::string& text, OccAllocator& alloc) {
  Parser p = make_parser(text, Lang::Modal);
  p.alloc = &alloc;
  FormulaPtr f = p.formula();
  p.expect(Tok::End, "end of input");
  return p.to_modal(f);
}

}  // namespace sej
