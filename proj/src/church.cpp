#include "lam/church.hpp"

#include "lam/parser.hpp"

namespace lam {

TermPtr church_nat(std::size_t n) {
  TermPtr body = var("z");
  for (std::size_t i = 0; i < n; ++i) body = app(var("s"), body);
  return abs("s", abs("z", body));
}

TermPtr church_bool(bool value) {
  return abs("x", abs("y", var(value ? "x" : "y")));
}

TermPtr church_pair(const TermPtr& first, const TermPtr& second) {
  auto avoid = free_vars(first);
  avoid.merge(free_vars(second));
  Name z = fresh_name("z", avoid);
  return abs(z, app(app(var(z), first), second));
}

TermPtr church_list(const std::vector<TermPtr>& items) {
  TermPtr out = church_pair(church_bool(true), church_bool(true));
  for (std::size_t i = items.size(); i-- > 0;) {
    out = church_pair(church_bool(false), church_pair(items[i], out));
  }
  return out;
}

const char* decode_error_name(DecodeError error) {
  switch (error) {
    case DecodeError::NotNumeralShape: return "not a numeral";
    case DecodeError::NotBoolShape: return "not a boolean";
    case DecodeError::StepLimit: return "step limit reached";
  }
  return "decode error";
}

DecodeResult<std::size_t> decode_nat(const TermPtr& t, std::size_t max_steps) {
  auto avoid = free_vars(t);
  Name s = fresh_name("s", avoid);
  avoid.insert(s);
  Name z = fresh_name("z", avoid);
  ReduceOutcome out = normalize(app(app(t, var(s)), var(z)), max_steps);
  if (!reached_normal_form(out)) {
    return DecodeResult<std::size_t>::failure(DecodeError::StepLimit);
  }
  TermPtr cur = outcome_term(out);
  std::size_t n = 0;
  while (cur->kind == Term::Kind::App && cur->func()->kind == Term::Kind::Var &&
         cur->func()->name == s) {
    ++n;
    cur = cur->arg();
  }
  if (cur->kind == Term::Kind::Var && cur->name == z) {
    return DecodeResult<std::size_t>::success(n);
  }
  return DecodeResult<std::size_t>::failure(DecodeError::NotNumeralShape);
}

DecodeResult<bool> decode_bool(const TermPtr& t, std::size_t max_steps) {
  auto avoid = free_vars(t);
  Name p = fresh_name("p", avoid);
  avoid.insert(p);
  Name q = fresh_name("q", avoid);
  ReduceOutcome out = normalize(app(app(t, var(p)), var(q)), max_steps);
  if (!reached_normal_form(out)) {
    return DecodeResult<bool>::failure(DecodeError::StepLimit);
  }
  const TermPtr& result = outcome_term(out);
  if (result->kind == Term::Kind::Var) {
    if (result->name == p) return DecodeResult<bool>::success(true);
    if (result->name == q) return DecodeResult<bool>::success(false);
  }
  return DecodeResult<bool>::failure(DecodeError::NotBoolShape);
}

DecodeResult<std::pair<TermPtr, TermPtr>> decode_pair(const TermPtr& t, std::size_t max_steps) {
  using Result = DecodeResult<std::pair<TermPtr, TermPtr>>;
  ReduceOutcome first = normalize(app(t, church_bool(true)), max_steps);
  if (!reached_normal_form(first)) return Result::failure(DecodeError::StepLimit);
  ReduceOutcome second = normalize(app(t, church_bool(false)), max_steps);
  if (!reached_normal_form(second)) return Result::failure(DecodeError::StepLimit);
  return Result::success({outcome_term(first), outcome_term(second)});
}

namespace {

struct BuiltinSource {
  const char* name;
  const char* source;
};

// Dependency order: every reference resolves to an earlier entry. E precedes
// GT because GT is defined through equality.
constexpr BuiltinSource kBuiltins[] = {
    {"I", "λx.x"},
    {"0", "λsz.z"},
    {"1", "λsz.sz"},
    {"2", "λsz.s(sz)"},
    {"3", "λsz.s(s(sz))"},
    {"S", "λnab.a(nab)"},
    {"ADD", "λmn.mSn"},
    {"MUL", "λxya.x(ya)"},
    {"T", "λxy.x"},
    {"F", "λxy.y"},
    {"AND", "λxy.xyF"},
    {"OR", "λxy.xTy"},
    {"NOT", "λx.x F T"},
    {"Z", "λx.xF¬F"},
    {"PAIR", "λabz.zab"},
    {"FST", "λp.pT"},
    {"SND", "λp.pF"},
    {"PHI", "λpz.z(S(pT))(pT)"},
    {"P", "λn.(nΦ(λz.z 0 0))F"},
    {"GEQ", "λxy.Z(xPy)"},
    {"E", "λxy.AND(Z(xPy))(Z(yPx))"},
    {"GT", "λxy.AND(GEQ x y)(NOT(E x y))"},
    {"LT", "λxy.NOT(GEQ x y)"},
    {"Y", "λy.(λx.y(xx))(λx.y(xx))"},
    {"SUM", "Y(λrn.Z n 0 (nS(r(Pn))))"},
    {"FACT", "Y(λrn.Z n 1 (MUL n (r(Pn))))"},
    {"NIL", "PAIR T T"},
    {"CONS", "λht.PAIR F(PAIR h t)"},
    {"ISNIL", "λl.lT"},
    {"HEAD", "λl.FST(SND l)"},
    {"LEN", "Y(λrl.ISNIL l 0(S(r(SND(SND l)))))"},
};

}  // namespace

const Environment& builtin_env() {
  static const Environment env = [] {
    Environment out;
    for (const BuiltinSource& entry : kBuiltins) {
      out.bind(entry.name, parse_term(entry.source, out));
    }
    return out;
  }();
  return env;
}

std::string prelude_text() {
  std::string out =
      "-- Combinators preloaded by the interpreter, one definition per line.\n"
      "-- Each body is written out in full, so this file parses in any order\n"
      "-- against an empty environment. Regenerate with: lam --dump-prelude\n";
  for (const auto& [name, term] : builtin_env().entries) {
    out += "let " + name + " = " + pretty_print(term) + ";\n";
  }
  return out;
}

}  // namespace lam
