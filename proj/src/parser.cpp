#include "lam/parser.hpp"

#include <cctype>

#include "lam/church.hpp"

namespace lam {

const char* token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::Lambda: return "'λ'";
    case TokenKind::Dot: return "'.'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Var: return "variable";
    case TokenKind::Ref: return "reference";
    case TokenKind::Let: return "'let'";
    case TokenKind::Equals: return "'='";
    case TokenKind::Semicolon: return "';'";
  }
  return "token";
}

namespace {

std::string format_message(const std::string& message, SourceSpan span,
                           const std::vector<TokenKind>& expected) {
  std::string out = message;
  if (!expected.empty()) {
    out += " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) out += expected.size() == 2 && i == 1 ? " or " : ", ";
      out += token_kind_name(expected[i]);
    }
    out += ")";
  }
  out += " at " + std::to_string(span.begin) + ".." + std::to_string(span.end);
  return out;
}

}  // namespace

ParseError::ParseError(const std::string& message, SourceSpan s, std::vector<TokenKind> exp)
    : std::runtime_error(format_message(message, s, exp)), span(s), expected(std::move(exp)) {}

namespace {

bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_word_char(char c) {
  return is_lower(c) || is_upper(c) || is_digit(c) || c == '\'' || c == '_';
}

std::size_t utf8_len(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead & 0xE0) == 0xC0) return 2;
  if ((lead & 0xF0) == 0xE0) return 3;
  if ((lead & 0xF8) == 0xF0) return 4;
  return 1;
}

struct Lexer {
  std::string_view text;
  std::size_t pos = 0;

  bool starts_with(std::string_view prefix) const {
    return text.substr(pos, prefix.size()) == prefix;
  }

  void push(std::vector<Token>& out, TokenKind kind, std::size_t begin, std::size_t end) {
    out.push_back(Token{kind, std::string(text.substr(begin, end - begin)), {begin, end}});
  }

  std::vector<Token> run() {
    std::vector<Token> out;
    while (pos < text.size()) {
      char c = text[pos];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        ++pos;
        continue;
      }
      if (c == '-' && starts_with("--")) {
        while (pos < text.size() && text[pos] != '\n') ++pos;
        continue;
      }
      std::size_t begin = pos;
      if (c == '\\') {
        push(out, TokenKind::Lambda, begin, ++pos);
        continue;
      }
      if (c == '.') {
        push(out, TokenKind::Dot, begin, ++pos);
        continue;
      }
      if (c == '(') {
        push(out, TokenKind::LParen, begin, ++pos);
        continue;
      }
      if (c == ')') {
        push(out, TokenKind::RParen, begin, ++pos);
        continue;
      }
      if (c == '=') {
        push(out, TokenKind::Equals, begin, ++pos);
        continue;
      }
      if (c == ';') {
        push(out, TokenKind::Semicolon, begin, ++pos);
        continue;
      }
      if (starts_with("λ")) {
        pos += 2;
        push(out, TokenKind::Lambda, begin, pos);
        continue;
      }
      // Symbolic aliases for prelude names.
      if (starts_with("¬")) {
        pos += 2;
        out.push_back(Token{TokenKind::Ref, "NOT", {begin, pos}});
        continue;
      }
      if (starts_with("∧")) {
        pos += 3;
        out.push_back(Token{TokenKind::Ref, "AND", {begin, pos}});
        continue;
      }
      if (starts_with("∨")) {
        pos += 3;
        out.push_back(Token{TokenKind::Ref, "OR", {begin, pos}});
        continue;
      }
      if (starts_with("Φ")) {
        pos += 2;
        out.push_back(Token{TokenKind::Ref, "PHI", {begin, pos}});
        continue;
      }
      if (is_lower(c)) {
        // Keywords are whole words; otherwise a variable is one lowercase
        // letter plus digits/primes, so `ab` is the application of a to b.
        std::size_t word_end = pos;
        while (word_end < text.size() && is_word_char(text[word_end])) ++word_end;
        std::string_view word = text.substr(pos, word_end - pos);
        if (word == "let") {
          pos = word_end;
          push(out, TokenKind::Let, begin, pos);
          continue;
        }
        if (word == "lambda") {
          pos = word_end;
          push(out, TokenKind::Lambda, begin, pos);
          continue;
        }
        ++pos;
        while (pos < text.size() && (is_digit(text[pos]) || text[pos] == '\'')) ++pos;
        push(out, TokenKind::Var, begin, pos);
        continue;
      }
      if (is_upper(c)) {
        ++pos;
        while (pos < text.size() && (is_upper(text[pos]) || text[pos] == '_')) ++pos;
        push(out, TokenKind::Ref, begin, pos);
        continue;
      }
      if (is_digit(c)) {
        ++pos;
        while (pos < text.size() && is_digit(text[pos])) ++pos;
        push(out, TokenKind::Ref, begin, pos);
        continue;
      }
      std::size_t len = utf8_len(static_cast<unsigned char>(c));
      std::string shown(text.substr(pos, std::min(len, text.size() - pos)));
      throw ParseError("unexpected character '" + shown + "'", {begin, begin + shown.size()});
    }
    return out;
  }
};

constexpr unsigned long kMaxNumeralLiteral = 1'000'000;

struct Parser {
  const std::vector<Token>& tokens;
  const Environment& env;
  std::size_t pos = 0;
  std::size_t input_size;

  const Token* peek() const { return pos < tokens.size() ? &tokens[pos] : nullptr; }

  SourceSpan here() const {
    if (const Token* t = peek()) return t->span;
    return {input_size, input_size};
  }

  Token expect(TokenKind kind) {
    const Token* t = peek();
    if (!t || t->kind != kind) {
      throw ParseError(t ? "unexpected " + describe(*t) : "unexpected end of input", here(),
                       {kind});
    }
    ++pos;
    return *t;
  }

  static std::string describe(const Token& t) {
    if (t.kind == TokenKind::Var || t.kind == TokenKind::Ref) return "'" + t.text + "'";
    return token_kind_name(t.kind);
  }

  static bool starts_atom(TokenKind kind) {
    return kind == TokenKind::Var || kind == TokenKind::Ref || kind == TokenKind::LParen;
  }

  TermPtr resolve_ref(const Token& t) {
    if (const TermPtr* bound = env.find(t.text)) return *bound;
    if (is_digit(t.text[0])) {
      unsigned long n = 0;
      for (char c : t.text) {
        n = n * 10 + static_cast<unsigned long>(c - '0');
        if (n > kMaxNumeralLiteral) {
          throw ParseError("numeral literal '" + t.text + "' is too large", t.span);
        }
      }
      return church_nat(n);
    }
    throw ParseError("unbound reference '" + t.text + "'", t.span);
  }

  TermPtr parse_atom() {
    const Token* t = peek();
    if (!t) {
      throw ParseError("unexpected end of input", here(),
                       {TokenKind::Var, TokenKind::Ref, TokenKind::LParen});
    }
    switch (t->kind) {
      case TokenKind::Var:
        ++pos;
        return var(t->text);
      case TokenKind::Ref:
        ++pos;
        return resolve_ref(*t);
      case TokenKind::LParen: {
        ++pos;
        TermPtr inner = parse_expr();
        expect(TokenKind::RParen);
        return inner;
      }
      default:
        throw ParseError("unexpected " + describe(*t), t->span,
                         {TokenKind::Var, TokenKind::Ref, TokenKind::LParen});
    }
  }

  TermPtr parse_expr() {
    const Token* t = peek();
    if (t && t->kind == TokenKind::Lambda) {
      ++pos;
      std::vector<Name> binders;
      while (peek() && peek()->kind == TokenKind::Var) {
        binders.push_back(peek()->text);
        ++pos;
      }
      if (binders.empty()) {
        throw ParseError("abstraction needs at least one variable binder", here(),
                         {TokenKind::Var});
      }
      expect(TokenKind::Dot);
      TermPtr body = parse_expr();
      for (std::size_t i = binders.size(); i-- > 0;) body = abs(binders[i], std::move(body));
      return body;
    }
    if (!t || !starts_atom(t->kind)) {
      throw ParseError(t ? "unexpected " + describe(*t) : "expected an expression", here(),
                       {TokenKind::Lambda, TokenKind::Var, TokenKind::Ref, TokenKind::LParen});
    }
    TermPtr out = parse_atom();
    while (peek() && starts_atom(peek()->kind)) out = app(std::move(out), parse_atom());
    return out;
  }

  void expect_end(const char* context) {
    if (const Token* t = peek()) {
      if (t->kind == TokenKind::Lambda) {
        throw ParseError("unexpected 'λ'; parenthesize an abstraction used as an argument",
                         t->span);
      }
      throw ParseError(std::string("unexpected ") + describe(*t) + " after " + context, t->span);
    }
  }
};

}  // namespace

std::vector<Token> tokenize(std::string_view text) { return Lexer{text}.run(); }

TermPtr parse_term(std::string_view text, const Environment& env) {
  std::vector<Token> tokens = tokenize(text);
  Parser parser{tokens, env, 0, text.size()};
  TermPtr out = parser.parse_expr();
  parser.expect_end("the expression");
  return out;
}

Program parse_program(std::string_view text, const Environment& base) {
  std::vector<Token> tokens = tokenize(text);
  Environment scope = base;
  Parser parser{tokens, scope, 0, text.size()};
  Program program;
  while (parser.peek() && parser.peek()->kind == TokenKind::Let) {
    ++parser.pos;
    Token name = parser.expect(TokenKind::Ref);
    if (scope.contains(name.text)) {
      throw ParseError("duplicate definition of '" + name.text + "'", name.span);
    }
    parser.expect(TokenKind::Equals);
    std::size_t expr_begin = parser.here().begin;
    TermPtr value = parser.parse_expr();
    std::size_t expr_end = parser.pos > 0 ? tokens[parser.pos - 1].span.end : expr_begin;
    parser.expect(TokenKind::Semicolon);
    auto free = free_vars(value);
    if (!free.empty()) {
      std::string names;
      for (const Name& n : free) names += (names.empty() ? "" : ", ") + n;
      throw ParseError("definition of '" + name.text + "' has free variables: " + names,
                       {expr_begin, expr_end});
    }
    scope.bind(name.text, value);
    program.bindings.emplace_back(name.text, value);
  }
  if (parser.peek()) {
    program.last = parser.parse_expr();
    parser.expect_end("the expression");
  }
  return program;
}

namespace {

enum class Pos { Top, Func, Arg };

void render(const TermPtr& t, Pos pos, bool sugar, std::string& out) {
  switch (t->kind) {
    case Term::Kind::Var:
      out += t->name;
      return;
    case Term::Kind::Abs: {
      // An abstraction anywhere inside an application must be parenthesized:
      // in function position its body would swallow the argument, and the
      // grammar only admits it as a parenthesized atom in argument position.
      bool parens = pos != Pos::Top;
      if (parens) out += '(';
      out += "λ";
      const Term* cur = t.get();
      out += cur->name;
      while (sugar && cur->body()->kind == Term::Kind::Abs) {
        cur = cur->body().get();
        out += cur->name;
      }
      out += '.';
      render(cur->body(), Pos::Top, sugar, out);
      if (parens) out += ')';
      return;
    }
    case Term::Kind::App: {
      // Application associates left, so only an argument that is itself an
      // application needs parentheses.
      bool parens = pos == Pos::Arg;
      if (parens) out += '(';
      render(t->func(), Pos::Func, sugar, out);
      render(t->arg(), Pos::Arg, sugar, out);
      if (parens) out += ')';
      return;
    }
  }
}

}  // namespace

std::string pretty_print(const TermPtr& t, bool sugar) {
  std::string out;
  render(t, Pos::Top, sugar, out);
  return out;
}

}  // namespace lam
