#include "starspec/partitions.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace starspec {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) {
      throw std::invalid_argument("partition parts must be positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::row_length(int row) const {
  if (row < 1 || row > length()) return 0;
  return parts_[row - 1];
}

int Partition::column_height(int col) const {
  if (col < 1) return 0;
  // parts are sorted descending, so the rows reaching `col` form a prefix
  auto it = std::partition_point(parts_.begin(), parts_.end(),
                                 [col](int p) { return p >= col; });
  return static_cast<int>(it - parts_.begin());
}

bool Partition::contains(const Box& b) const {
  return b.row >= 1 && b.col >= 1 && b.col <= row_length(b.row);
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("partition size must be non-negative");
  if (n > kMaxPartitionSize) {
    throw SizeLimitError("partition size " + std::to_string(n) +
                         " exceeds limit " + std::to_string(kMaxPartitionSize));
  }
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> a{n};
  for (;;) {
    out.emplace_back(a);
    // trailing ones are absorbed into the remainder
    int remainder = 0;
    while (!a.empty() && a.back() == 1) {
      a.pop_back();
      ++remainder;
    }
    if (a.empty()) break;
    int v = --a.back();
    ++remainder;
    while (remainder > 0) {
      int part = std::min(v, remainder);
      a.push_back(part);
      remainder -= part;
    }
  }
  return out;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> cols;
  int width = lambda.row_length(1);
  cols.reserve(width);
  for (int c = 1; c <= width; ++c) cols.push_back(lambda.column_height(c));
  return Partition(std::move(cols));
}

std::vector<Box> corners(const Partition& lambda) {
  std::vector<Box> out;
  for (int r = 1; r <= lambda.length(); ++r) {
    if (lambda.row_length(r) > lambda.row_length(r + 1)) {
      out.push_back({r, lambda.row_length(r)});
    }
  }
  return out;
}

bool is_corner(const Partition& lambda, const Box& b) {
  return lambda.contains(b) && b.col == lambda.row_length(b.row) &&
         lambda.row_length(b.row + 1) < b.col;
}

Partition remove_corner(const Partition& lambda, const Box& b) {
  if (!is_corner(lambda, b)) {
    throw std::invalid_argument("box (" + std::to_string(b.row) + "," +
                                std::to_string(b.col) +
                                ") is not a removable corner of " +
                                lambda.to_string());
  }
  std::vector<int> parts = lambda.parts();
  if (--parts[b.row - 1] == 0) parts.pop_back();
  return Partition(std::move(parts));
}

int hook_length(const Partition& lambda, const Box& b) {
  if (!lambda.contains(b)) {
    throw std::invalid_argument("box outside diagram of " + lambda.to_string());
  }
  int arm = lambda.row_length(b.row) - b.col;
  int leg = lambda.column_height(b.col) - b.row;
  return arm + leg + 1;
}

BigInt dimension(const Partition& lambda) {
  BigInt hooks = 1;
  for (int r = 1; r <= lambda.length(); ++r) {
    for (int c = 1; c <= lambda.row_length(r); ++c) {
      hooks *= hook_length(lambda, {r, c});
    }
  }
  BigInt total = factorial(static_cast<unsigned long>(lambda.size()));
  assert(mpz_divisible_p(total.get_mpz_t(), hooks.get_mpz_t()));
  BigInt f;
  mpz_divexact(f.get_mpz_t(), total.get_mpz_t(), hooks.get_mpz_t());
  return f;
}

}  // namespace starspec
