#pragma once

// Church encodings: constructors for numerals, booleans, pairs and lists,
// decoders back to native values, and the environment of named combinators
// the interpreter preloads.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lam/env.hpp"
#include "lam/reduce.hpp"
#include "lam/term.hpp"

namespace lam {

// λsz.s(s(...(s z))) with n applications of s.
TermPtr church_nat(std::size_t n);

// λxy.x for true, λxy.y for false.
TermPtr church_bool(bool value);

// λz.z a b, with the binder chosen fresh for the components.
TermPtr church_pair(const TermPtr& first, const TermPtr& second);

// Flag-tagged pairs: nil is (pair true true), cons h t is (pair false (pair h t)).
TermPtr church_list(const std::vector<TermPtr>& items);

enum class DecodeError {
  NotNumeralShape,  // normal form is not s applied n times to z
  NotBoolShape,     // normal form is neither projection
  StepLimit,        // the probe application failed to normalize in budget
};

const char* decode_error_name(DecodeError error);

template <typename T>
struct DecodeResult {
  std::optional<T> value;
  std::optional<DecodeError> error;

  static DecodeResult success(T v) { return {std::move(v), std::nullopt}; }
  static DecodeResult failure(DecodeError e) { return {std::nullopt, e}; }

  bool ok() const { return value.has_value(); }
  const T& operator*() const { return *value; }
  const T* operator->() const { return &*value; }
};

// Apply the term to fresh probe variables, normalize, and read the result
// back. Shape errors are reported rather than guessed around.
DecodeResult<std::size_t> decode_nat(const TermPtr& t,
                                     std::size_t max_steps = kDefaultMaxSteps);
DecodeResult<bool> decode_bool(const TermPtr& t, std::size_t max_steps = kDefaultMaxSteps);

// Project both components of an encoded pair; only the step budget can fail.
DecodeResult<std::pair<TermPtr, TermPtr>> decode_pair(
    const TermPtr& t, std::size_t max_steps = kDefaultMaxSteps);

// The preloaded combinators (I, numerals, S, ADD, MUL, booleans, predicates,
// pairs, P, comparisons, Y, SUM, FACT, lists), each stored fully expanded.
const Environment& builtin_env();

// The same table as parseable source: one `let` per combinator, in dependency
// order. `parse_program(prelude_text())` rebuilds builtin_env().
std::string prelude_text();

}  // namespace lam
