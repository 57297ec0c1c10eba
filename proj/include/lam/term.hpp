// Core term representation and name hygiene: free/bound variable analysis,
// fresh names, capture-avoiding substitution, and alpha-equivalence.
#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace lam {

using Name = std::string;

struct Term;
using TermPtr = std::shared_ptr<const Term>;

// Immutable syntax tree. Var uses `name`; Abs uses `name` (the binder) and
// `left` (the body); App uses `left` (function) and `right` (argument).
// Sharing subtrees is safe: terms are never mutated after construction.
struct Term {
  enum class Kind { Var, Abs, App };

  Kind kind;
  Name name;
  TermPtr left;
  TermPtr right;

  const TermPtr& body() const { return left; }
  const TermPtr& func() const { return left; }
  const TermPtr& arg() const { return right; }
};

TermPtr var(Name name);
TermPtr abs(Name binder, TermPtr body);
TermPtr app(TermPtr func, TermPtr arg);

// Structural equality (binder names matter; see alpha_eq for the quotient).
bool term_eq(const TermPtr& a, const TermPtr& b);

std::set<Name> free_vars(const TermPtr& t);
bool is_free(const Name& n, const TermPtr& t);
bool is_bound(const Name& n, const TermPtr& t);

// Deterministic fresh-name choice: strip trailing digits from `base` to get a
// stem, then try stem, stem1, stem2, ... until the candidate is not in
// `avoid`.
Name fresh_name(const Name& base, const std::set<Name>& avoid);

// Stateful fresh-name source: every emitted name avoids `avoid` and every
// previously emitted name.
struct NameSupply {
  Name base;
  std::set<Name> avoid;

  Name next();
};

struct Rename {
  Name from;
  Name to;
};

// Capture-avoiding substitution [replacement/target]body. Only free
// occurrences of `target` are replaced. A binder is renamed exactly when it
// would capture a free variable of `replacement` and the substitution reaches
// under it; the logging overload records those renames in order.
// substitute(t, x, var(x)) returns t unchanged.
TermPtr substitute(const TermPtr& body, const Name& target, const TermPtr& replacement);
TermPtr substitute(const TermPtr& body, const Name& target, const TermPtr& replacement,
                   std::vector<Rename>& renames);

// Nameless form: the canonical representative of an alpha-class. Bound
// variables become indices (distance to their binder), free variables keep
// their names.
struct DbTerm;
using DbPtr = std::shared_ptr<const DbTerm>;

struct DbTerm {
  enum class Kind { Bound, Free, Abs, App };

  Kind kind;
  std::size_t index = 0;  // Bound only
  Name name;              // Free only
  DbPtr left;
  DbPtr right;
};

DbPtr to_debruijn(const TermPtr& t);
bool db_eq(const DbPtr& a, const DbPtr& b);

// Two terms are alpha-equivalent iff their nameless images are identical.
bool alpha_eq(const TermPtr& a, const TermPtr& b);

// Renames binders to a, b, c, ... (then a1, b1, ...) in binding order,
// skipping names that occur free anywhere in the term. The result is
// alpha-equivalent to the input and identical across the alpha-class.
TermPtr canonicalize(const TermPtr& t);

}  // namespace lam
