#include "support/support.hpp"

#include <iostream>
#include <optional>
#include <vector>

#include "lam/parser.hpp"

namespace support {

using namespace lam;

namespace {

const Name kPool[] = {"x", "y", "z", "u", "v", "w"};

Name pool_name(Gen& g) { return kPool[g.pick(std::size(kPool))]; }

TermPtr gen_rec(Gen& g, std::size_t budget, std::vector<Name>& scope) {
  auto leaf = [&] {
    if (!scope.empty() && g.pick(2) == 0) return var(scope[g.pick(scope.size())]);
    return var(pool_name(g));
  };
  if (budget <= 1) return leaf();
  // Bias toward abstractions and applications so terms have depth.
  std::size_t choice = budget == 2 ? g.pick(2) : g.pick(6);
  if (choice == 0) return leaf();
  if (budget == 2 || choice <= 2) {
    Name binder = pool_name(g);
    scope.push_back(binder);
    TermPtr body = gen_rec(g, budget - 1, scope);
    scope.pop_back();
    return abs(binder, body);
  }
  std::size_t left = 1 + g.pick(budget - 2);
  TermPtr fn = gen_rec(g, left, scope);
  TermPtr argument = gen_rec(g, budget - 1 - left, scope);
  return app(std::move(fn), std::move(argument));
}

}  // namespace

TermPtr random_term(Gen& g, std::size_t max_size) {
  std::vector<Name> scope;
  return gen_rec(g, max_size, scope);
}

TermPtr alpha_variant(Gen& g, const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Var:
      return t;
    case Term::Kind::App:
      return app(alpha_variant(g, t->func()), alpha_variant(g, t->arg()));
    case Term::Kind::Abs: {
      Name binder = t->name;
      TermPtr body = t->body();
      if (g.pick(2) == 0) {
        // Rename to anything not free in the body; substitution keeps the
        // occurrences pointed at this binder.
        auto avoid = free_vars(body);
        avoid.insert(binder);
        Name renamed = fresh_name(binder, avoid);
        body = substitute(body, binder, var(renamed));
        binder = renamed;
      }
      return abs(binder, alpha_variant(g, body));
    }
  }
  return t;
}

namespace {

bool find_innermost(const TermPtr& t, RedexPath& path) {
  switch (t->kind) {
    case Term::Kind::Var:
      return false;
    case Term::Kind::Abs:
      path.push_back(Dir::Body);
      if (find_innermost(t->body(), path)) return true;
      path.pop_back();
      return false;
    case Term::Kind::App:
      path.push_back(Dir::Func);
      if (find_innermost(t->func(), path)) return true;
      path.back() = Dir::Arg;
      if (find_innermost(t->arg(), path)) return true;
      path.pop_back();
      return t->func()->kind == Term::Kind::Abs;
  }
  return false;
}

}  // namespace

ReduceOutcome applicative_normalize(const TermPtr& t, std::size_t max_steps) {
  TermPtr cur = t;
  std::size_t used = 0;
  for (;;) {
    RedexPath path;
    if (!find_innermost(cur, path)) return NormalForm{cur, used};
    if (used == max_steps) return StepLimit{cur, max_steps};
    cur = contract(cur, path).after;
    ++used;
  }
}

namespace {

// Budget for property checks; random terms this small normalize far below it
// or not at all.
constexpr std::size_t kPropertySteps = 2'000;

struct Failures {
  const char* suite;
  std::size_t count = 0;

  void fail(std::size_t case_index, const TermPtr& t, const std::string& why) {
    ++count;
    if (count <= 5) {
      std::cerr << suite << " case " << case_index << " failed on " << pretty_print(t) << ": "
                << why << "\n";
    }
  }
};

}  // namespace

std::size_t check_print_parse_roundtrip(std::size_t cases) {
  Gen g(kSeed ^ 0x1u);
  Failures failures{"print/parse roundtrip"};
  for (std::size_t i = 0; i < cases; ++i) {
    TermPtr t = random_term(g);
    for (bool sugar : {true, false}) {
      std::string text = pretty_print(t, sugar);
      TermPtr back;
      try {
        back = parse_term(text);
      } catch (const ParseError& e) {
        failures.fail(i, t, std::string("re-parse threw: ") + e.what());
        continue;
      }
      if (!term_eq(back, t)) failures.fail(i, t, "re-parse of '" + text + "' differs");
    }
  }
  return failures.count;
}

std::size_t check_alpha_equivalence_laws(std::size_t cases) {
  Gen g(kSeed ^ 0x2u);
  Failures failures{"alpha equivalence laws"};
  for (std::size_t i = 0; i < cases; ++i) {
    TermPtr t = random_term(g);
    TermPtr u = alpha_variant(g, t);
    TermPtr v = alpha_variant(g, u);
    if (!alpha_eq(t, t)) failures.fail(i, t, "not reflexive");
    if (!alpha_eq(t, u) || !alpha_eq(u, t)) failures.fail(i, t, "variant not symmetric");
    if (!alpha_eq(t, v)) failures.fail(i, t, "variant of variant not equivalent");
    if (!term_eq(canonicalize(t), canonicalize(u))) {
      failures.fail(i, t, "canonical forms of variants differ");
    }
    if (!alpha_eq(t, canonicalize(t))) failures.fail(i, t, "canonical form not equivalent");
    if (alpha_eq(t, app(t, t))) failures.fail(i, t, "equivalent to a larger term");
  }
  return failures.count;
}

std::size_t check_substitution_free_vars(std::size_t cases) {
  Gen g(kSeed ^ 0x3u);
  Failures failures{"substitution free variables"};
  for (std::size_t i = 0; i < cases; ++i) {
    TermPtr t = random_term(g);
    TermPtr r = random_term(g, 6);
    Name x = pool_name(g);
    auto before = free_vars(t);
    TermPtr substituted = substitute(t, x, r);
    auto expected = before;
    if (before.count(x)) {
      expected.erase(x);
      auto extra = free_vars(r);
      expected.insert(extra.begin(), extra.end());
    } else if (!term_eq(substituted, t)) {
      failures.fail(i, t, "substituting for a non-free variable changed the term");
    }
    if (free_vars(substituted) != expected) {
      failures.fail(i, t, "free variables after [" + pretty_print(r) + "/" + x + "] are wrong");
    }
  }
  return failures.count;
}

std::size_t check_normalize_idempotent(std::size_t cases) {
  Gen g(kSeed ^ 0x4u);
  Failures failures{"normalize idempotence"};
  for (std::size_t i = 0; i < cases; ++i) {
    TermPtr t = random_term(g);
    ReduceOutcome first = normalize(t, kPropertySteps);
    const auto* nf = std::get_if<NormalForm>(&first);
    if (!nf) continue;  // divergent sample: nothing to re-normalize
    if (find_redex(nf->result)) {
      failures.fail(i, t, "normal form still has a redex");
      continue;
    }
    ReduceOutcome second = normalize(nf->result, kPropertySteps);
    const auto* again = std::get_if<NormalForm>(&second);
    if (!again || again->steps_used != 0 || !term_eq(again->result, nf->result)) {
      failures.fail(i, t, "re-normalizing the normal form changed it");
    }
  }
  return failures.count;
}

std::size_t check_order_agreement(std::size_t cases) {
  Gen g(kSeed ^ 0x5u);
  Failures failures{"reduction order agreement"};
  for (std::size_t i = 0; i < cases; ++i) {
    TermPtr t = random_term(g);
    ReduceOutcome normal = normalize(t, kPropertySteps);
    ReduceOutcome applicative = applicative_normalize(t, kPropertySteps);
    const auto* n = std::get_if<NormalForm>(&normal);
    const auto* a = std::get_if<NormalForm>(&applicative);
    if (!n || !a) continue;  // compare only when both strategies finish
    if (!alpha_eq(n->result, a->result)) {
      failures.fail(i, t, "strategies reached different normal forms");
    }
  }
  return failures.count;
}

}  // namespace support
