#pragma once

// Normal-order reduction: the leftmost-outermost redex is contracted first,
// including under binders, so every normalizing term reaches its normal form.
// Each contraction is recorded so a full trace can be replayed or rendered.

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "lam/term.hpp"

namespace lam {

// Path from the root to a redex: which child to descend into at each node.
enum class Dir { Func, Arg, Body };

using RedexPath = std::vector<Dir>;

// Locate the leftmost-outermost redex, or nullopt if `t` is in normal form.
std::optional<RedexPath> find_redex(const TermPtr& t);

// One β-contraction: `before` rewrites to `after` by substituting
// `replacement` for `target` at `path`. Any binders renamed to avoid capture
// during the substitution are listed in `renames`.
struct ReductionStep {
  TermPtr before;
  TermPtr after;
  RedexPath path;
  Name target;
  TermPtr replacement;
  std::vector<Rename> renames;
};

// Contract the redex at `path`, which must point at an application of an
// abstraction. Throws std::invalid_argument otherwise.
ReductionStep contract(const TermPtr& t, const RedexPath& path);

// Perform a single normal-order step, or return nullopt on a normal form.
std::optional<ReductionStep> step(const TermPtr& t);

struct NormalForm {
  TermPtr result;
  std::size_t steps_used;
};

struct StepLimit {
  TermPtr last;  // where reduction stopped, after `limit` contractions
  std::size_t limit;
};

using ReduceOutcome = std::variant<NormalForm, StepLimit>;

inline constexpr std::size_t kDefaultMaxSteps = 10'000;

// Reduce to normal form, giving up after `max_steps` β-contractions.
ReduceOutcome normalize(const TermPtr& t, std::size_t max_steps = kDefaultMaxSteps);

// Reduce while recording every intermediate step.
struct Trace {
  TermPtr initial;
  std::vector<ReductionStep> steps;
  ReduceOutcome outcome;
};

Trace trace(const TermPtr& t, std::size_t max_steps = kDefaultMaxSteps);

// Convenience accessors over the outcome variant.
inline bool reached_normal_form(const ReduceOutcome& o) {
  return std::holds_alternative<NormalForm>(o);
}

inline const TermPtr& outcome_term(const ReduceOutcome& o) {
  if (const auto* nf = std::get_if<NormalForm>(&o)) return nf->result;
  return std::get<StepLimit>(o).last;
}

}  // namespace lam
