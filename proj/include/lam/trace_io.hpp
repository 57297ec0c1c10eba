#pragma once

// Renderers for reduction traces: plain text for terminals, a versioned JSON
// document for tooling, and DOT for visualizing the reduction graph.

#include <string>

#include "lam/reduce.hpp"

namespace lam {

struct RenderOptions {
  bool sugar = true;  // fuse nested binders when printing (λsz.sz)
  bool canon = false; // canonicalize binder names before printing
};

// One line per term, each step prefixed with "→ "; a final note if the step
// limit was reached.
std::string render_text(const Trace& trace, const RenderOptions& options = {});

// Versioned document; every term is printed so it re-parses to an
// α-equivalent term, which makes traces replayable.
std::string render_json(const Trace& trace, const RenderOptions& options = {});

// Reduction graph: terms are nodes (duplicates merged, so loops in a
// divergent reduction show up as cycles), steps are edges labelled with the
// substitution they performed.
std::string render_dot(const Trace& trace, const RenderOptions& options = {});

}  // namespace lam
