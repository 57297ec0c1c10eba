// Surface syntax: tokenizer, recursive-descent parser, and pretty-printer.
//
// Grammar (whitespace-insensitive, `--` starts a line comment):
//
//   program     := { "let" REF "=" expr ";" } [ expr ]
//   expr        := LAMBDA VAR+ "." expr | application
//   application := atom atom*                      (associates left)
//   atom        := VAR | REF | "(" expr ")"
//
// LAMBDA is `λ`, `\`, or the word `lambda`. VAR is a single lowercase letter
// followed by digits or primes (x, y1, t'). REF is an uppercase run
// (S, NOT, GEQ) or a digit string; digit strings elaborate to Church numerals,
// other refs are replaced by their environment term at parse time. The
// aliases ∧, ∨, ¬, Φ stand for the refs AND, OR, NOT, PHI.
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lam/env.hpp"
#include "lam/term.hpp"

namespace lam {

enum class TokenKind { Lambda, Dot, LParen, RParen, Var, Ref, Let, Equals, Semicolon };

const char* token_kind_name(TokenKind kind);

// Byte offsets into the source text; end is exclusive.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct Token {
  TokenKind kind;
  std::string text;
  SourceSpan span;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, SourceSpan span, std::vector<TokenKind> expected = {});

  SourceSpan span;
  std::vector<TokenKind> expected;
};

// Throws ParseError on characters outside the lexeme classes.
std::vector<Token> tokenize(std::string_view text);

// Parses one expression; every REF must resolve in `env` or be a digit
// string. Throws ParseError on malformed input or unbound references.
TermPtr parse_term(std::string_view text, const Environment& env = {});

struct Program {
  std::vector<std::pair<Name, TermPtr>> bindings;  // elaborated in order
  TermPtr last;                                    // null when absent
};

// Splits `let NAME = expr;` definitions (each may reference earlier ones and
// `base`) from an optional trailing expression. Throws ParseError on
// duplicates, forward references, and definitions with free variables.
Program parse_program(std::string_view text, const Environment& base = {});

// Minimal-parenthesis rendering; parses back to a structurally equal term.
// With sugar, nested abstractions fuse to multi-binder form (λsz.z).
std::string pretty_print(const TermPtr& t, bool sugar = true);

}  // namespace lam
