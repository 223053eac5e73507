#pragma once

#include <vector>

#include "starspec/bigint.hpp"
#include "starspec/partitions.hpp"

namespace starspec {

// Default cap on |lambda| for the enumerating (brute-force) routines.
inline constexpr int kDefaultBruteForceLimit = 10;

// A standard Young tableau. Stored as the box of each label 1..n.
class StandardTableau {
 public:
  // rows[r][c] is the label in row r+1, column c+1. Validates shape,
  // bijectivity and strict increase along rows and down columns.
  explicit StandardTableau(const std::vector<std::vector<int>>& rows);

  const Partition& shape() const { return shape_; }
  int size() const { return shape_.size(); }
  const Box& box_of(int label) const;
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const StandardTableau&,
                         const StandardTableau&) = default;

 private:
  StandardTableau(Partition shape, std::vector<Box> boxes)
      : shape_(std::move(shape)), boxes_(std::move(boxes)) {}

  Partition shape_;
  std::vector<Box> boxes_;  // boxes_[i] holds label i+1

  friend std::vector<StandardTableau> enumerate_syt(const Partition&, int);
};

// Every SYT of shape lambda, built by placing 1..n in turn into an addable
// cell (candidates scanned by increasing row). Throws SizeLimitError when
// |lambda| > limit.
std::vector<StandardTableau> enumerate_syt(
    const Partition& lambda, int limit = kDefaultBruteForceLimit);

// c_T(i): content of the box holding label i.
int content_of_label(const StandardTableau& t, int label);

// Number of SYT of shape lambda with n in a box of content k, by enumeration.
BigInt count_n_at_content_brute(const Partition& lambda, int k,
                                int limit = kDefaultBruteForceLimit);

// Same count via the corner identity: sum over corners b with content k of
// dimension(lambda minus b).
BigInt count_n_at_content_fast(const Partition& lambda, int k);

}  // namespace starspec
