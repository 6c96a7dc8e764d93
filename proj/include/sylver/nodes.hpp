#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sylver/field.hpp"

namespace sylver {

/// Ordered list of n >= 2 pairwise-distinct field elements x_1..x_n.
template <FieldElement K>
class NodeSet {
 public:
  explicit NodeSet(std::vector<K> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.size() < 2)
      throw std::invalid_argument("NodeSet: at least two nodes required");
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      for (std::size_t j = i + 1; j < nodes_.size(); ++j)
        if (nodes_[i] == nodes_[j])
          throw std::domain_error("NodeSet: nodes must be pairwise distinct");
  }

  std::size_t size() const { return nodes_.size(); }
  const K& operator[](std::size_t i) const { return nodes_[i]; }
  std::span<const K> nodes() const { return nodes_; }
  const std::vector<K>& as_vector() const { return nodes_; }

  auto begin() const { return nodes_.begin(); }
  auto end() const { return nodes_.end(); }

 private:
  std::vector<K> nodes_;
};

}  // namespace sylver
