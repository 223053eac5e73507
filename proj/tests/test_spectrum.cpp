#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "starspec/cayley_oracle.hpp"
#include "starspec/partitions.hpp"
#include "starspec/spectrum.hpp"

using namespace starspec;

namespace {

std::map<int, BigInt> as_map(std::initializer_list<std::pair<const int, int>> kv) {
  std::map<int, BigInt> m;
  for (const auto& [k, v] : kv) m[k] = v;
  return m;
}

std::set<int> interval(int lo, int hi) {
  std::set<int> s;
  for (int k = lo; k <= hi; ++k) s.insert(k);
  return s;
}

}  // namespace

TEST_CASE("SpectrumTable validation") {
  CHECK_THROWS_AS(SpectrumTable(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(SpectrumTable(3, as_map({{3, 1}})), std::invalid_argument);
  CHECK_THROWS_AS(SpectrumTable(3, as_map({{1, -1}})), std::invalid_argument);
  SpectrumTable t(3, as_map({{0, 0}, {1, 2}}));
  CHECK(t.nonzero().size() == 1);
  CHECK(t.at(0) == 0);
  CHECK(t.at(1) == 2);
  CHECK(t == SpectrumTable(3, as_map({{1, 2}})));
}

TEST_CASE("multiplicity_table examples") {
  CHECK(multiplicity_table(1) == SpectrumTable(1, as_map({{0, 1}})));
  CHECK(multiplicity_table(2) == SpectrumTable(2, as_map({{-1, 1}, {1, 1}})));
  auto t3 = multiplicity_table(3);
  CHECK(t3 == SpectrumTable(3, as_map({{-2, 1}, {-1, 2}, {1, 2}, {2, 1}})));
  CHECK(t3.at(0) == 0);
  CHECK(multiplicity_table(4) ==
        SpectrumTable(4, as_map({{-3, 1}, {-2, 6}, {-1, 3}, {0, 4}, {1, 3}, {2, 6}, {3, 1}})));
  CHECK(multiplicity_table(5) ==
        SpectrumTable(5, as_map({{-4, 1}, {-3, 12}, {-2, 28}, {-1, 4}, {0, 30},
                                 {1, 4}, {2, 28}, {3, 12}, {4, 1}})));
  CHECK_THROWS_AS(multiplicity_table(0), std::invalid_argument);
  CHECK_THROWS_AS(multiplicity_table(kMaxPartitionSize + 1), SizeLimitError);
}

TEST_CASE("parallel table is identical to the serial reference") {
  for (int n : {1, 2, 7, 13, 24}) {
    CHECK(multiplicity_table(n) == multiplicity_table_serial(n));
  }
}

TEST_CASE("support") {
  CHECK(support(1) == std::set<int>{0});
  CHECK(support(2) == std::set<int>{-1, 1});
  CHECK(support(3) == std::set<int>{-2, -1, 1, 2});
  CHECK(support(4) == interval(-3, 3));
  for (int n = 4; n <= 12; ++n) CHECK(support(n) == interval(-(n - 1), n - 1));
}

TEST_CASE("hook_bound") {
  CHECK(hook_bound(4, 2) == 6);
  CHECK(hook_bound(10, 3) == 2352);
  for (int n = 2; n <= 30; ++n) CHECK(hook_bound(n, n - 1) == 1);
  CHECK_THROWS_AS(hook_bound(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(hook_bound(4, 4), std::invalid_argument);
  CHECK_THROWS_AS(hook_bound(1, 1), std::invalid_argument);
}

TEST_CASE("power_sum identities") {
  for (int n = 1; n <= 12; ++n) {
    CAPTURE(n);
    auto t = multiplicity_table(n);
    BigInt nf = factorial(n);
    CHECK(power_sum(t, 0) == nf);
    CHECK(power_sum(t, 1) == 0);
    CHECK(power_sum(t, 2) == nf * (n - 1));
    CHECK(power_sum(t, 3) == 0);
    CHECK(power_sum(t, 4) == nf * (n - 1) * (2 * n - 3));
  }
}

TEST_CASE("table invariants up to n = 20") {
  for (int n = 1; n <= 20; ++n) {
    CAPTURE(n);
    auto t = multiplicity_table(n);
    CHECK(t.total() == factorial(n));
    CHECK(t.at(n - 1) == 1);
    CHECK(t.at(-(n - 1)) == 1);
    for (int k = 0; k < n; ++k) CHECK(t.at(k) == t.at(-k));
    if (n > 3) CHECK(t.at(0) != 0);
    for (int l = 1; l <= n - 1; ++l) {
      CHECK(t.at(l) >= hook_bound(n, l));
      CHECK(t.at(-l) >= hook_bound(n, l));
    }
  }
}

TEST_CASE("multiplicities exceed 64 bits at n = 24") {
  auto t = multiplicity_table(24);
  CHECK(t.total() == factorial(24));
  CHECK(t.at(0) > BigInt("18446744073709551615"));
}
