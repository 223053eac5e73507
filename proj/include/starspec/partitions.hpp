#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "starspec/bigint.hpp"

namespace starspec {

// Largest n accepted by enumerate_partitions (p(50) = 204226).
inline constexpr int kMaxPartitionSize = 50;

// A cell of a Ferrers diagram, 1-based, English convention (row 1 on top).
struct Box {
  int row = 1;
  int col = 1;

  int content() const { return col - row; }

  friend bool operator==(const Box&, const Box&) = default;
};

// Integer partition: weakly decreasing positive parts. The constructor
// rejects anything else with std::invalid_argument.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  // Length of row `row` (1-based); 0 past the last row.
  int row_length(int row) const;
  // Height of column `col` (1-based); 0 past the first row.
  int column_height(int col) const;
  bool contains(const Box& b) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// All partitions of n in reverse-lexicographic order, e.g. for n = 4:
// (4), (3,1), (2,2), (2,1,1), (1,1,1,1). Throws SizeLimitError above
// kMaxPartitionSize and std::invalid_argument for negative n.
std::vector<Partition> enumerate_partitions(int n);

Partition conjugate(const Partition& lambda);

// Removable corners ordered by increasing row. Contents are strictly
// decreasing along this order.
std::vector<Box> corners(const Partition& lambda);

bool is_corner(const Partition& lambda, const Box& b);

Partition remove_corner(const Partition& lambda, const Box& b);

int hook_length(const Partition& lambda, const Box& b);

// Number of standard Young tableaux of shape lambda, n! / prod(hooks).
BigInt dimension(const Partition& lambda);

}  // namespace starspec
