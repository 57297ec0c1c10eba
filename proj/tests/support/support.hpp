#pragma once

// Shared helpers for the test binaries: a seeded random term generator, an
// α-renaming shuffler, a reference applicative-order reducer, and the
// randomized property suites run by both the unit and acceptance runners.

#include <cstddef>
#include <cstdint>
#include <random>

#include "lam/reduce.hpp"
#include "lam/term.hpp"

namespace support {

inline constexpr std::uint32_t kSeed = 0xC0FFEE;
inline constexpr std::size_t kCases = 500;
inline constexpr std::size_t kMaxTermSize = 12;

struct Gen {
  std::mt19937 rng;
  explicit Gen(std::uint32_t seed) : rng(seed) {}
  std::size_t pick(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  }
};

// A random term with at most `max_size` nodes. Variables are drawn from a
// small pool plus whatever binders are in scope, so terms mix bound and free
// occurrences.
lam::TermPtr random_term(Gen& g, std::size_t max_size = kMaxTermSize);

// Rename a random subset of binders to fresh names; the result is always
// α-equivalent to the input.
lam::TermPtr alpha_variant(Gen& g, const lam::TermPtr& t);

// Leftmost-innermost reduction (arguments first), used to cross-check that
// evaluation order does not change the normal forms that both strategies
// reach.
lam::ReduceOutcome applicative_normalize(const lam::TermPtr& t, std::size_t max_steps);

// Each suite runs `cases` seeded random checks and returns the number of
// failures, describing each failure on stderr.
std::size_t check_print_parse_roundtrip(std::size_t cases = kCases);
std::size_t check_alpha_equivalence_laws(std::size_t cases = kCases);
std::size_t check_substitution_free_vars(std::size_t cases = kCases);
std::size_t check_normalize_idempotent(std::size_t cases = kCases);
std::size_t check_order_agreement(std::size_t cases = kCases);

}  // namespace support
