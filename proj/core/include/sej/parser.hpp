#pragma once

#include <stdexcept>
#include <string>

#include "sej/formula.hpp"
#include "sej/modal.hpp"

namespace sej {

struct ParseError : std::runtime_error {
  std::size_t line, col;
  std::string expected;
  ParseError(std::size_t ln, std::size_t c, const std::string& what, std::string exp)
      : std::runtime_error("parse error at " + std::to_string(ln) + ":" + std::to_string(c) +
                           ": " + what + (exp.empty() ? "" : " (expected " + exp + ")")),
        line(ln), col(c), expected(std::move(exp)) {}
};

/// Grammar (ASCII):
///   formula  := imp | imp '<->' formula
///   imp      := or ('->' imp)?                      right-associative
///   or       := and ('|' or)?                       sugar, right fold
///   and      := unary ('&' and)?                    sugar, right fold
///   unary    := '~' unary | '[]' unary | term ':' unary | 'bot' | ATOM | '(' formula ')'
///   term     := tprod ('+' tprod)*                  left-associative
///   tprod    := tatom ('*' tatom)*                  left-associative
///   tatom    := '0' | '1' | IDENT | '(' term ')'
/// ATOM identifiers start with A..Z; term identifiers with a..z (u..z are
/// variables, a..t constants). ':' binds tighter than '->'; '[]' and '~'
/// prefix the tightest formula. '~', '&', '|', '<->' are parser sugar over
/// 'bot' and '->'.
TermPtr parse_term_text(const std::string& text);
FormulaPtr parse_formula_text(const std::string& text);
FormulaPtr parse_propositional_text(const std::string& text);
ModalPtr parse_modal_text(const std::string& text, OccAllocator& alloc);

}  // namespace sej
