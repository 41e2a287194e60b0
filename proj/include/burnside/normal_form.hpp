#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace burnside {

// The completion tower is only meaningful with exact arithmetic; intermediate
// entries in the elimination can exceed any fixed-width type, so everything
// in this header works over arbitrary-precision integers.
using BigInt = boost::multiprecision::cpp_int;

struct IntMat {
  int rows = 0;
  int cols = 0;
  std::vector<BigInt> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  BigInt& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const BigInt& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

// Canonical basis of the lattice spanned by the rows: row-style Hermite
// normal form. Pivot columns strictly increase, pivots are positive, entries
// below a pivot are zero and entries above it are reduced into [0, pivot).
// Two row sets span the same lattice iff their normal forms are identical.
IntMat hermite_row_basis(IntMat m);

// Membership of v in the row span of a Hermite basis.
bool lattice_contains(const IntMat& hermite, const std::vector<BigInt>& v);

// All rows of sub lie in the row span of a Hermite basis.
bool lattice_contains_rows(const IntMat& hermite, const IntMat& sub);

// Invariant factors d1 | d2 | ... | dr (r = rank, all positive) of the
// matrix, so Z^cols / rowspan = Z^(cols - r) + sum_i Z/di.
std::vector<BigInt> smith_invariants(IntMat m);

struct QuotientShape {
  long long free_rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1, ascending divisibility
};

// Shape of Z^ambient modulo the row span of the generators.
QuotientShape quotient_shape(const IntMat& generators, int ambient);

}  // namespace burnside
