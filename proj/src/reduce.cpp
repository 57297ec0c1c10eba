#include "lam/reduce.hpp"

#include <stdexcept>

namespace lam {

namespace {

bool find(const TermPtr& t, RedexPath& path) {
  switch (t->kind) {
    case Term::Kind::Var:
      return false;
    case Term::Kind::Abs:
      path.push_back(Dir::Body);
      if (find(t->body(), path)) return true;
      path.pop_back();
      return false;
    case Term::Kind::App:
      if (t->func()->kind == Term::Kind::Abs) return true;
      path.push_back(Dir::Func);
      if (find(t->func(), path)) return true;
      path.back() = Dir::Arg;
      if (find(t->arg(), path)) return true;
      path.pop_back();
      return false;
  }
  return false;
}

TermPtr rebuild(const TermPtr& t, const RedexPath& path, std::size_t depth, ReductionStep& out) {
  if (depth == path.size()) {
    if (t->kind != Term::Kind::App || t->func()->kind != Term::Kind::Abs) {
      throw std::invalid_argument("redex path does not point at an applied abstraction");
    }
    const TermPtr& fn = t->func();
    out.target = fn->name;
    out.replacement = t->arg();
    return substitute(fn->body(), fn->name, t->arg(), out.renames);
  }
  switch (path[depth]) {
    case Dir::Func:
      if (t->kind != Term::Kind::App) break;
      return app(rebuild(t->func(), path, depth + 1, out), t->arg());
    case Dir::Arg:
      if (t->kind != Term::Kind::App) break;
      return app(t->func(), rebuild(t->arg(), path, depth + 1, out));
    case Dir::Body:
      if (t->kind != Term::Kind::Abs) break;
      return abs(t->name, rebuild(t->body(), path, depth + 1, out));
  }
  throw std::invalid_argument("redex path does not match the term's shape");
}

}  // namespace

std::optional<RedexPath> find_redex(const TermPtr& t) {
  RedexPath path;
  if (find(t, path)) return path;
  return std::nullopt;
}

ReductionStep contract(const TermPtr& t, const RedexPath& path) {
  ReductionStep out;
  out.before = t;
  out.path = path;
  out.after = rebuild(t, path, 0, out);
  return out;
}

std::optional<ReductionStep> step(const TermPtr& t) {
  if (auto path = find_redex(t)) return contract(t, *path);
  return std::nullopt;
}

ReduceOutcome normalize(const TermPtr& t, std::size_t max_steps) {
  TermPtr cur = t;
  std::size_t used = 0;
  for (;;) {
    auto path = find_redex(cur);
    if (!path) return NormalForm{cur, used};
    if (used == max_steps) return StepLimit{cur, max_steps};
    cur = contract(cur, *path).after;
    ++used;
  }
}

Trace trace(const TermPtr& t, std::size_t max_steps) {
  Trace out;
  out.initial = t;
  TermPtr cur = t;
  for (;;) {
    auto path = find_redex(cur);
    if (!path) {
      out.outcome = NormalForm{cur, out.steps.size()};
      return out;
    }
    if (out.steps.size() == max_steps) {
      out.outcome = StepLimit{cur, max_steps};
      return out;
    }
    out.steps.push_back(contract(cur, *path));
    cur = out.steps.back().after;
  }
}

}  // namespace lam
