#include "starspec/tableaux.hpp"

#include <stdexcept>
#include <string>

namespace starspec {

namespace {

void check_limit(const Partition& lambda, int limit) {
  if (lambda.size() > limit) {
    throw SizeLimitError("tableau enumeration limited to n <= " +
                         std::to_string(limit) + ", got " +
                         std::to_string(lambda.size()));
  }
}

}  // namespace

StandardTableau::StandardTableau(const std::vector<std::vector<int>>& rows) {
  std::vector<int> parts;
  for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
  shape_ = Partition(parts);
  const int n = shape_.size();
  boxes_.assign(n, Box{0, 0});
  for (int r = 0; r < shape_.length(); ++r) {
    for (int c = 0; c < parts[r]; ++c) {
      int label = rows[r][c];
      if (label < 1 || label > n) {
        throw std::invalid_argument("tableau label out of range");
      }
      if (boxes_[label - 1].row != 0) {
        throw std::invalid_argument("tableau label repeated");
      }
      if (c > 0 && rows[r][c - 1] >= label) {
        throw std::invalid_argument("tableau rows must increase");
      }
      if (r > 0 && rows[r - 1][c] >= label) {
        throw std::invalid_argument("tableau columns must increase");
      }
      boxes_[label - 1] = Box{r + 1, c + 1};
    }
  }
}

const Box& StandardTableau::box_of(int label) const {
  if (label < 1 || label > size()) {
    throw std::invalid_argument("label " + std::to_string(label) +
                                " outside 1.." + std::to_string(size()));
  }
  return boxes_[label - 1];
}

std::vector<std::vector<int>> StandardTableau::rows() const {
  std::vector<std::vector<int>> out;
  for (int p : shape_.parts()) out.emplace_back(p, 0);
  for (int i = 0; i < size(); ++i) {
    out[boxes_[i].row - 1][boxes_[i].col - 1] = i + 1;
  }
  return out;
}

std::vector<StandardTableau> enumerate_syt(const Partition& lambda,
                                           int limit) {
  check_limit(lambda, limit);
  const int n = lambda.size();
  const int rows = lambda.length();
  std::vector<StandardTableau> out;
  std::vector<int> filled(rows + 1, 0);  // filled[r] for r in 1..rows
  std::vector<Box> boxes;
  boxes.reserve(n);

  auto grow = [&](auto&& self) -> void {
    if (static_cast<int>(boxes.size()) == n) {
      out.push_back(StandardTableau(lambda, boxes));
      return;
    }
    for (int r = 1; r <= rows; ++r) {
      int c = filled[r] + 1;
      if (c > lambda.row_length(r)) continue;
      if (r > 1 && filled[r - 1] < c) continue;
      ++filled[r];
      boxes.push_back({r, c});
      self(self);
      boxes.pop_back();
      --filled[r];
    }
  };
  grow(grow);
  return out;
}

int content_of_label(const StandardTableau& t, int label) {
  return t.box_of(label).content();
}

BigInt count_n_at_content_brute(const Partition& lambda, int k, int limit) {
  check_limit(lambda, limit);
  BigInt count = 0;
  if (lambda.empty()) return count;
  for (const auto& t : enumerate_syt(lambda, limit)) {
    if (content_of_label(t, lambda.size()) == k) ++count;
  }
  return count;
}

BigInt count_n_at_content_fast(const Partition& lambda, int k) {
  BigInt count = 0;
  for (const Box& b : corners(lambda)) {
    if (b.content() == k) count += dimension(remove_corner(lambda, b));
  }
  return count;
}

}  // namespace starspec
