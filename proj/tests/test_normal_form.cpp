#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "burnside/normal_form.hpp"

using namespace burnside;

namespace {

IntMat from_rows(const std::vector<std::vector<long long>>& rows) {
  IntMat m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return m;
}

std::vector<std::vector<long long>> to_rows(const IntMat& m) {
  std::vector<std::vector<long long>> rows(static_cast<size_t>(m.rows),
                                           std::vector<long long>(static_cast<size_t>(m.cols)));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = m.at(i, j).convert_to<long long>();
  return rows;
}

}  // namespace

TEST_CASE("hermite basis of simple spans") {
  IntMat h = hermite_row_basis(from_rows({{2, 0}, {0, 2}, {1, 1}}));
  CHECK(to_rows(h) == std::vector<std::vector<long long>>{{1, 1}, {0, 2}});

  IntMat single = hermite_row_basis(from_rows({{0, 0}, {3, -6}}));
  CHECK(to_rows(single) == std::vector<std::vector<long long>>{{3, -6}});

  IntMat empty = hermite_row_basis(from_rows({{0, 0, 0}}));
  CHECK(empty.rows == 0);
  CHECK(empty.cols == 3);
}

TEST_CASE("hermite basis spans the original rows") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dist(-6, 6);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 5), cols = 1 + static_cast<int>(rng() % 4);
    IntMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
    IntMat h = hermite_row_basis(m);
    CHECK(lattice_contains_rows(h, m));
    // pivots strictly to the right as rows descend, entries above reduced
    int last_col = -1;
    for (int i = 0; i < h.rows; ++i) {
      int p = 0;
      while (p < h.cols && h.at(i, p) == 0) ++p;
      CHECK(p < h.cols);
      CHECK(p > last_col);
      CHECK(h.at(i, p) > 0);
      for (int r = 0; r < i; ++r) {
        CHECK(h.at(r, p) >= 0);
        CHECK(h.at(r, p) < h.at(i, p));
      }
      last_col = p;
    }
  }
}

TEST_CASE("lattice membership") {
  IntMat h = hermite_row_basis(from_rows({{1, -2}}));
  CHECK(lattice_contains(h, {BigInt(3), BigInt(-6)}));
  CHECK(!lattice_contains(h, {BigInt(1), BigInt(-1)}));
  CHECK(!lattice_contains(h, {BigInt(0), BigInt(1)}));
  CHECK(lattice_contains(h, {BigInt(0), BigInt(0)}));
}

TEST_CASE("smith invariants") {
  CHECK(smith_invariants(from_rows({{2, 0}, {0, 3}})) == std::vector<BigInt>{1, 6});
  CHECK(smith_invariants(from_rows({{2, 4}, {4, 8}})) == std::vector<BigInt>{2});
  CHECK(smith_invariants(from_rows({{1, 0}, {0, 1}})) == std::vector<BigInt>{1, 1});
  CHECK(smith_invariants(from_rows({{0, 0}})).empty());
  // divisibility chain on random matrices
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 4), cols = 1 + static_cast<int>(rng() % 4);
    IntMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
    std::vector<BigInt> inv = smith_invariants(m);
    for (size_t i = 1; i < inv.size(); ++i) CHECK(inv[i] % inv[i - 1] == 0);
    for (const BigInt& d : inv) CHECK(d > 0);
  }
}

TEST_CASE("quotient shapes") {
  QuotientShape s1 = quotient_shape(from_rows({{1, -2}}), 2);
  CHECK(s1.free_rank == 1);
  CHECK(s1.torsion.empty());

  QuotientShape s2 = quotient_shape(from_rows({{2, 0}, {0, 3}}), 2);
  CHECK(s2.free_rank == 0);
  CHECK(s2.torsion == std::vector<BigInt>{6});

  QuotientShape s3 = quotient_shape(from_rows({{2, -4, 0}, {2, 0, -4}}), 3);
  CHECK(s3.free_rank == 1);
  CHECK(s3.torsion == std::vector<BigInt>{2, 4});

  QuotientShape s4 = quotient_shape(IntMat(0, 3), 3);
  CHECK(s4.free_rank == 3);
  CHECK(s4.torsion.empty());
}
