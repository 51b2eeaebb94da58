#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "pairrank/errors.hpp"

namespace pairrank {

// A polynomial ring is identified by its ordered list of variable names.
// Variable order is the canonical term-order seed.
class Ring {
 public:
  explicit Ring(std::vector<std::string> names) : names_(std::move(names)) {}

  int nvars() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[static_cast<size_t>(i)]; }
  const std::vector<std::string>& names() const { return names_; }

  int index_of(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
      if (names_[static_cast<size_t>(i)] == name) return i;
    return -1;
  }

  bool same(const Ring& other) const {
    return this == &other || names_ == other.names_;
  }

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<Ring>(std::move(names));
}

// Maps variable indices of `from` into `to` by name; every variable of
// `from` must exist in `to`.
inline std::vector<int> ring_embedding(const Ring& from, const Ring& to) {
  std::vector<int> map(static_cast<size_t>(from.nvars()));
  for (int i = 0; i < from.nvars(); ++i) {
    int j = to.index_of(from.name(i));
    if (j < 0)
      fail(ErrorCode::UnknownVariable,
           "variable '" + from.name(i) + "' missing in target ring");
    map[static_cast<size_t>(i)] = j;
  }
  return map;
}

}  // namespace pairrank
