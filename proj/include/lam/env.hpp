// Named synonyms for closed terms: the prelude and user definitions.
#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "lam/term.hpp"

namespace lam {

// Ordered name -> closed-term map. Definition order is preserved so dumps are
// reproducible; lookups are linear (the table stays small).
struct Environment {
  std::vector<std::pair<Name, TermPtr>> entries;

  const TermPtr* find(const Name& name) const {
    for (const auto& [n, t] : entries) {
      if (n == name) return &t;
    }
    return nullptr;
  }

  bool contains(const Name& name) const { return find(name) != nullptr; }

  // Throws std::invalid_argument if the term has free variables or the name
  // is already bound.
  void bind(const Name& name, const TermPtr& term) {
    if (contains(name)) throw std::invalid_argument("duplicate definition of '" + name + "'");
    if (!free_vars(term).empty()) {
      throw std::invalid_argument("definition of '" + name + "' is not closed");
    }
    entries.emplace_back(name, term);
  }

  void unbind(const Name& name) {
    for (auto it = entries.begin(); it != entries.end(); ++it) {
      if (it->first == name) {
        entries.erase(it);
        return;
      }
    }
  }

  std::size_t size() const { return entries.size(); }
  bool empty() const { return entries.empty(); }
};

}  // namespace lam
