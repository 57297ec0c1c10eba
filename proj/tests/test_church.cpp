#include <doctest.h>

#include "lam/church.hpp"
#include "lam/parser.hpp"

using namespace lam;

namespace {

const Environment& env() { return builtin_env(); }

TermPtr named(const char* name) {
  const TermPtr* t = env().find(name);
  REQUIRE(t != nullptr);
  return *t;
}

TermPtr apply1(const char* f, std::size_t n) { return app(named(f), church_nat(n)); }

TermPtr apply2(const char* f, std::size_t a, std::size_t b) {
  return app(app(named(f), church_nat(a)), church_nat(b));
}

std::size_t nat_of(const TermPtr& t) {
  auto decoded = decode_nat(t);
  REQUIRE(decoded.ok());
  return *decoded;
}

bool bool_of(const TermPtr& t) {
  auto decoded = decode_bool(t);
  REQUIRE(decoded.ok());
  return *decoded;
}

}  // namespace

TEST_CASE("numeral constructor and decoder invert each other") {
  CHECK(pretty_print(church_nat(0)) == "λsz.z");
  CHECK(pretty_print(church_nat(1)) == "λsz.sz");
  CHECK(pretty_print(church_nat(3)) == "λsz.s(s(sz))");
  for (std::size_t n = 0; n <= 64; ++n) {
    auto decoded = decode_nat(church_nat(n));
    REQUIRE(decoded.ok());
    CHECK(*decoded == n);
  }
}

TEST_CASE("decoders reject terms of the wrong shape") {
  // The identity happens to behave as one: I s z reduces to s z.
  auto id = decode_nat(parse_term("λx.x"));
  REQUIRE(id.ok());
  CHECK(*id == 1);

  auto not_nat = decode_nat(named("T"));
  CHECK_FALSE(not_nat.ok());
  CHECK(*not_nat.error == DecodeError::NotNumeralShape);

  auto not_bool = decode_bool(church_nat(2));
  CHECK_FALSE(not_bool.ok());
  CHECK(*not_bool.error == DecodeError::NotBoolShape);

  auto diverges = decode_nat(app(named("Y"), named("I")), 100);
  CHECK_FALSE(diverges.ok());
  CHECK(*diverges.error == DecodeError::StepLimit);
}

TEST_CASE("booleans decode to their native values") {
  CHECK(bool_of(named("T")));
  CHECK_FALSE(bool_of(named("F")));
  CHECK(bool_of(church_bool(true)));
  CHECK_FALSE(bool_of(church_bool(false)));
}

TEST_CASE("pairs project componentwise") {
  TermPtr p = church_pair(church_nat(2), church_nat(3));
  auto decoded = decode_pair(p);
  REQUIRE(decoded.ok());
  CHECK(alpha_eq(decoded->first, church_nat(2)));
  CHECK(alpha_eq(decoded->second, church_nat(3)));

  // FST and SND agree with the decoder.
  CHECK(nat_of(app(named("FST"), p)) == 2);
  CHECK(nat_of(app(named("SND"), p)) == 3);

  // The pair binder dodges free variables of the components.
  TermPtr shady = church_pair(var("z"), var("z1"));
  auto projected = decode_pair(shady);
  REQUIRE(projected.ok());
  CHECK(term_eq(projected->first, var("z")));
  CHECK(term_eq(projected->second, var("z1")));
}

TEST_CASE("arithmetic matches native arithmetic") {
  for (std::size_t a = 0; a <= 6; ++a) {
    for (std::size_t b = 0; b <= 6; ++b) {
      std::size_t expected = a + b;
      CHECK(nat_of(apply2("ADD", a, b)) == expected);
    }
  }
  for (std::size_t a = 0; a <= 5; ++a) {
    for (std::size_t b = 0; b <= 5; ++b) {
      std::size_t expected = a * b;
      CHECK(nat_of(apply2("MUL", a, b)) == expected);
    }
  }
  for (std::size_t n = 0; n <= 6; ++n) {
    std::size_t expected = n == 0 ? 0 : n - 1;  // predecessor truncates at zero
    CHECK(nat_of(apply1("P", n)) == expected);
  }
}

TEST_CASE("comparisons match native comparisons") {
  for (std::size_t a = 0; a <= 4; ++a) {
    for (std::size_t b = 0; b <= 4; ++b) {
      CHECK(bool_of(apply2("GEQ", a, b)) == (a >= b));
      CHECK(bool_of(apply2("E", a, b)) == (a == b));
      CHECK(bool_of(apply2("GT", a, b)) == (a > b));
      CHECK(bool_of(apply2("LT", a, b)) == (a < b));
    }
  }
  CHECK(bool_of(apply1("Z", 0)));
  for (std::size_t n = 1; n <= 5; ++n) CHECK_FALSE(bool_of(apply1("Z", n)));
}

TEST_CASE("recursive functions built on Y") {
  for (std::size_t n = 0; n <= 4; ++n) {
    std::size_t expected = n * (n + 1) / 2;
    CHECK(nat_of(apply1("SUM", n)) == expected);
  }
  for (std::size_t n = 0; n <= 4; ++n) {
    std::size_t expected = 1;
    for (std::size_t k = 2; k <= n; ++k) expected *= k;
    CHECK(nat_of(apply1("FACT", n)) == expected);
  }
}

TEST_CASE("boolean gates match their truth tables") {
  for (bool a : {false, true}) {
    for (bool b : {false, true}) {
      TermPtr ta = church_bool(a);
      TermPtr tb = church_bool(b);
      CHECK(bool_of(app(app(named("AND"), ta), tb)) == (a && b));
      CHECK(bool_of(app(app(named("OR"), ta), tb)) == (a || b));
    }
    CHECK(bool_of(app(named("NOT"), church_bool(a))) == !a);
  }

  // XOR composed from the primitive gates.
  TermPtr xor_term = parse_term("λab.OR(AND a(NOT b))(AND(NOT a)b)", env());
  for (bool a : {false, true}) {
    for (bool b : {false, true}) {
      CHECK(bool_of(app(app(xor_term, church_bool(a)), church_bool(b))) == (a != b));
    }
  }
}

TEST_CASE("lists are flag-tagged pairs") {
  TermPtr nil = church_list({});
  CHECK(bool_of(app(named("ISNIL"), nil)));
  CHECK(alpha_eq(outcome_term(normalize(named("NIL"))), outcome_term(normalize(nil))));

  std::vector<TermPtr> items = {church_nat(1), church_nat(2), church_nat(3)};
  TermPtr list = church_list(items);
  CHECK_FALSE(bool_of(app(named("ISNIL"), list)));
  CHECK(nat_of(app(named("HEAD"), list)) == 1);

  // CONS builds the same spine church_list does.
  TermPtr consed = app(app(named("CONS"), church_nat(1)),
                       app(app(named("CONS"), church_nat(2)),
                           app(app(named("CONS"), church_nat(3)), *env().find("NIL"))));
  CHECK(alpha_eq(outcome_term(normalize(consed)), outcome_term(normalize(list))));

  for (std::size_t n = 0; n <= 3; ++n) {
    std::vector<TermPtr> prefix(items.begin(), items.begin() + n);
    CHECK(nat_of(app(named("LEN"), church_list(prefix))) == n);
  }
}

TEST_CASE("the builtin environment is closed and complete") {
  const char* expected[] = {"I",   "0",  "1",    "2",   "3",    "S",    "ADD", "MUL",
                            "T",   "F",  "AND",  "OR",  "NOT",  "Z",    "PAIR", "FST",
                            "SND", "PHI", "P",   "GEQ", "E",    "GT",   "LT",  "Y",
                            "SUM", "FACT", "NIL", "CONS", "ISNIL", "HEAD", "LEN"};
  CHECK(env().size() == std::size(expected));
  for (const char* name : expected) {
    CAPTURE(name);
    const TermPtr* t = env().find(name);
    REQUIRE(t != nullptr);
    CHECK(free_vars(*t).empty());
  }
}

TEST_CASE("the prelude dump rebuilds the builtin environment") {
  std::string text = prelude_text();
  Program program = parse_program(text);
  REQUIRE(program.bindings.size() == env().size());
  CHECK_FALSE(program.last);
  for (std::size_t i = 0; i < program.bindings.size(); ++i) {
    CAPTURE(program.bindings[i].first);
    CHECK(program.bindings[i].first == env().entries[i].first);
    CHECK(alpha_eq(program.bindings[i].second, env().entries[i].second));
  }
}
