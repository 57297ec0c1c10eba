#include "lam/term.hpp"

#include <algorithm>
#include <cctype>

namespace lam {

TermPtr var(Name name) {
  return std::make_shared<const Term>(Term{Term::Kind::Var, std::move(name), nullptr, nullptr});
}

TermPtr abs(Name binder, TermPtr body) {
  return std::make_shared<const Term>(
      Term{Term::Kind::Abs, std::move(binder), std::move(body), nullptr});
}

TermPtr app(TermPtr func, TermPtr arg) {
  return std::make_shared<const Term>(
      Term{Term::Kind::App, Name{}, std::move(func), std::move(arg)});
}

bool term_eq(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Kind::Var:
      return a->name == b->name;
    case Term::Kind::Abs:
      return a->name == b->name && term_eq(a->body(), b->body());
    case Term::Kind::App:
      return term_eq(a->func(), b->func()) && term_eq(a->arg(), b->arg());
  }
  return false;
}

namespace {

void collect_free(const TermPtr& t, std::vector<Name>& bound, std::set<Name>& out) {
  switch (t->kind) {
    case Term::Kind::Var:
      if (std::find(bound.begin(), bound.end(), t->name) == bound.end()) out.insert(t->name);
      break;
    case Term::Kind::Abs:
      bound.push_back(t->name);
      collect_free(t->body(), bound, out);
      bound.pop_back();
      break;
    case Term::Kind::App:
      collect_free(t->func(), bound, out);
      collect_free(t->arg(), bound, out);
      break;
  }
}

}  // namespace

std::set<Name> free_vars(const TermPtr& t) {
  std::set<Name> out;
  std::vector<Name> bound;
  collect_free(t, bound, out);
  return out;
}

bool is_free(const Name& n, const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Var:
      return t->name == n;
    case Term::Kind::Abs:
      return t->name != n && is_free(n, t->body());
    case Term::Kind::App:
      return is_free(n, t->func()) || is_free(n, t->arg());
  }
  return false;
}

bool is_bound(const Name& n, const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Var:
      return false;
    case Term::Kind::Abs:
      return t->name == n || is_bound(n, t->body());
    case Term::Kind::App:
      return is_bound(n, t->func()) || is_bound(n, t->arg());
  }
  return false;
}

Name fresh_name(const Name& base, const std::set<Name>& avoid) {
  Name stem = base;
  while (stem.size() > 1 && std::isdigit(static_cast<unsigned char>(stem.back()))) {
    stem.pop_back();
  }
  if (!avoid.count(stem)) return stem;
  for (unsigned long i = 1;; ++i) {
    Name candidate = stem + std::to_string(i);
    if (!avoid.count(candidate)) return candidate;
  }
}

Name NameSupply::next() {
  Name n = fresh_name(base, avoid);
  avoid.insert(n);
  return n;
}

namespace {

// Precondition: target occurs free in t (callers check and return t otherwise,
// which both preserves sharing and keeps traces free of pointless renames).
TermPtr subst_rec(const TermPtr& t, const Name& target, const TermPtr& repl,
                  const std::set<Name>& repl_free, std::vector<Rename>& renames) {
  if (!is_free(target, t)) return t;
  switch (t->kind) {
    case Term::Kind::Var:
      return repl;  // is_free guarantees t->name == target
    case Term::Kind::App:
      return app(subst_rec(t->func(), target, repl, repl_free, renames),
                 subst_rec(t->arg(), target, repl, repl_free, renames));
    case Term::Kind::Abs: {
      // target is free below, so t->name != target.
      if (repl_free.count(t->name)) {
        // The binder would capture a free variable of the replacement:
        // rename it before substituting.
        std::set<Name> avoid = repl_free;
        auto body_free = free_vars(t->body());
        avoid.insert(body_free.begin(), body_free.end());
        avoid.insert(target);
        Name renamed = fresh_name(t->name, avoid);
        renames.push_back({t->name, renamed});
        TermPtr new_var = var(renamed);
        TermPtr body = subst_rec(t->body(), t->name, new_var, {renamed}, renames);
        return abs(renamed, subst_rec(body, target, repl, repl_free, renames));
      }
      return abs(t->name, subst_rec(t->body(), target, repl, repl_free, renames));
    }
  }
  return t;
}

}  // namespace

TermPtr substitute(const TermPtr& body, const Name& target, const TermPtr& replacement,
                   std::vector<Rename>& renames) {
  // [x/x]t is a structural no-op.
  if (replacement->kind == Term::Kind::Var && replacement->name == target) return body;
  if (!is_free(target, body)) return body;
  return subst_rec(body, target, replacement, free_vars(replacement), renames);
}

TermPtr substitute(const TermPtr& body, const Name& target, const TermPtr& replacement) {
  std::vector<Rename> renames;
  return substitute(body, target, replacement, renames);
}

namespace {

DbPtr db_bound(std::size_t index) {
  return std::make_shared<const DbTerm>(
      DbTerm{DbTerm::Kind::Bound, index, Name{}, nullptr, nullptr});
}

DbPtr db_free(Name name) {
  return std::make_shared<const DbTerm>(
      DbTerm{DbTerm::Kind::Free, 0, std::move(name), nullptr, nullptr});
}

DbPtr db_abs(DbPtr body) {
  return std::make_shared<const DbTerm>(
      DbTerm{DbTerm::Kind::Abs, 0, Name{}, std::move(body), nullptr});
}

DbPtr db_app(DbPtr func, DbPtr arg) {
  return std::make_shared<const DbTerm>(
      DbTerm{DbTerm::Kind::App, 0, Name{}, std::move(func), std::move(arg)});
}

DbPtr to_db_rec(const TermPtr& t, std::vector<Name>& binders) {
  switch (t->kind) {
    case Term::Kind::Var: {
      // Innermost binder wins; index is the distance to it.
      for (std::size_t i = binders.size(); i-- > 0;) {
        if (binders[i] == t->name) return db_bound(binders.size() - 1 - i);
      }
      return db_free(t->name);
    }
    case Term::Kind::Abs: {
      binders.push_back(t->name);
      DbPtr body = to_db_rec(t->body(), binders);
      binders.pop_back();
      return db_abs(std::move(body));
    }
    case Term::Kind::App:
      return db_app(to_db_rec(t->func(), binders), to_db_rec(t->arg(), binders));
  }
  return nullptr;
}

}  // namespace

DbPtr to_debruijn(const TermPtr& t) {
  std::vector<Name> binders;
  return to_db_rec(t, binders);
}

bool db_eq(const DbPtr& a, const DbPtr& b) {
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case DbTerm::Kind::Bound:
      return a->index == b->index;
    case DbTerm::Kind::Free:
      return a->name == b->name;
    case DbTerm::Kind::Abs:
      return db_eq(a->left, b->left);
    case DbTerm::Kind::App:
      return db_eq(a->left, b->left) && db_eq(a->right, b->right);
  }
  return false;
}

bool alpha_eq(const TermPtr& a, const TermPtr& b) {
  return db_eq(to_debruijn(a), to_debruijn(b));
}

namespace {

Name canon_name(std::size_t index) {
  Name n(1, static_cast<char>('a' + index % 26));
  if (index >= 26) n += std::to_string(index / 26);
  return n;
}

TermPtr from_db(const DbPtr& t, std::vector<Name>& binders, std::size_t& counter,
                const std::set<Name>& taken) {
  switch (t->kind) {
    case DbTerm::Kind::Bound:
      return var(binders[binders.size() - 1 - t->index]);
    case DbTerm::Kind::Free:
      return var(t->name);
    case DbTerm::Kind::Abs: {
      Name binder;
      do {
        binder = canon_name(counter++);
      } while (taken.count(binder));
      binders.push_back(binder);
      TermPtr body = from_db(t->left, binders, counter, taken);
      binders.pop_back();
      return abs(std::move(binder), std::move(body));
    }
    case DbTerm::Kind::App:
      return app(from_db(t->left, binders, counter, taken),
                 from_db(t->right, binders, counter, taken));
  }
  return nullptr;
}

}  // namespace

TermPtr canonicalize(const TermPtr& t) {
  DbPtr db = to_debruijn(t);
  std::set<Name> taken = free_vars(t);
  std::vector<Name> binders;
  std::size_t counter = 0;
  return from_db(db, binders, counter, taken);
}

}  // namespace lam
