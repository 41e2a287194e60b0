#include "burnside/normal_form.hpp"

#include <algorithm>
#include <stdexcept>

namespace burnside {

namespace {

// Quotient of floor division (truncated division adjusted for sign).
BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

void swap_rows(IntMat& m, int i, int j) {
  if (i == j) return;
  for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

// row_i -= q * row_j
void submul_row(IntMat& m, int i, int j, const BigInt& q) {
  if (q == 0) return;
  for (int c = 0; c < m.cols; ++c) m.at(i, c) -= q * m.at(j, c);
}

}  // namespace

IntMat hermite_row_basis(IntMat m) {
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    // Reduce column c below row r to a single nonzero entry by gcd steps.
    for (;;) {
      int pivot = -1;
      for (int i = r; i < m.rows; ++i) {
        if (m.at(i, c) == 0) continue;
        if (pivot < 0 || abs(m.at(i, c)) < abs(m.at(pivot, c))) pivot = i;
      }
      if (pivot < 0) break;
      swap_rows(m, r, pivot);
      bool clean = true;
      for (int i = r + 1; i < m.rows; ++i) {
        if (m.at(i, c) == 0) continue;
        BigInt q = m.at(i, c) / m.at(r, c);
        submul_row(m, i, r, q);
        if (m.at(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (m.at(r, c) == 0) continue;
    if (m.at(r, c) < 0)
      for (int j = 0; j < m.cols; ++j) m.at(r, j) = -m.at(r, j);
    for (int i = 0; i < r; ++i) {
      BigInt q = floor_div(m.at(i, c), m.at(r, c));
      submul_row(m, i, r, q);
    }
    ++r;
  }
  IntMat out(r, m.cols);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < m.cols; ++j) out.at(i, j) = m.at(i, j);
  return out;
}

bool lattice_contains(const IntMat& hermite, const std::vector<BigInt>& v) {
  if (static_cast<int>(v.size()) != hermite.cols)
    throw std::invalid_argument("lattice_contains: dimension mismatch");
  std::vector<BigInt> w = v;
  for (int i = 0; i < hermite.rows; ++i) {
    int c = 0;
    while (c < hermite.cols && hermite.at(i, c) == 0) ++c;
    if (c == hermite.cols) continue;
    if (w[c] % hermite.at(i, c) != 0) return false;
    BigInt q = w[c] / hermite.at(i, c);
    if (q != 0)
      for (int j = c; j < hermite.cols; ++j) w[j] -= q * hermite.at(i, j);
  }
  for (const BigInt& x : w)
    if (x != 0) return false;
  return true;
}

bool lattice_contains_rows(const IntMat& hermite, const IntMat& sub) {
  std::vector<BigInt> v(hermite.cols);
  for (int i = 0; i < sub.rows; ++i) {
    for (int j = 0; j < sub.cols; ++j) v[j] = sub.at(i, j);
    if (!lattice_contains(hermite, v)) return false;
  }
  return true;
}

std::vector<BigInt> smith_invariants(IntMat m) {
  const int n = std::min(m.rows, m.cols);
  std::vector<BigInt> diag;
  int t = 0;
  while (t < n) {
    int pi = -1, pj = -1;
    for (int i = t; i < m.rows; ++i)
      for (int j = t; j < m.cols; ++j) {
        if (m.at(i, j) == 0) continue;
        if (pi < 0 || abs(m.at(i, j)) < abs(m.at(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    for (;;) {
      // Move the current smallest entry of the working block to (t, t).
      swap_rows(m, t, pi);
      for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, t), m.at(i, pj));
      bool dirty = false;
      for (int i = t + 1; i < m.rows; ++i) {
        if (m.at(i, t) == 0) continue;
        submul_row(m, i, t, m.at(i, t) / m.at(t, t));
        if (m.at(i, t) != 0) dirty = true;
      }
      for (int j = t + 1; j < m.cols; ++j) {
        if (m.at(t, j) == 0) continue;
        BigInt q = m.at(t, j) / m.at(t, t);
        if (q != 0)
          for (int i = 0; i < m.rows; ++i) m.at(i, j) -= q * m.at(i, t);
        if (m.at(t, j) != 0) dirty = true;
      }
      if (!dirty) {
        // Pull any entry not divisible by the pivot into the pivot row so the
        // divisibility chain d1 | d2 | ... holds.
        bool divisible = true;
        for (int i = t + 1; i < m.rows && divisible; ++i)
          for (int j = t + 1; j < m.cols && divisible; ++j)
            if (m.at(i, j) % m.at(t, t) != 0) {
              for (int c = 0; c < m.cols; ++c) m.at(t, c) += m.at(i, c);
              divisible = false;
            }
        if (divisible) break;
      }
      pi = pj = t;
      for (int i = t; i < m.rows; ++i)
        for (int j = t; j < m.cols; ++j) {
          if (m.at(i, j) == 0) continue;
          if (m.at(pi, pj) == 0 || abs(m.at(i, j)) < abs(m.at(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
    }
    if (m.at(t, t) < 0) m.at(t, t) = -m.at(t, t);
    diag.push_back(m.at(t, t));
    ++t;
  }
  return diag;
}

QuotientShape quotient_shape(const IntMat& generators, int ambient) {
  if (generators.rows > 0 && generators.cols != ambient)
    throw std::invalid_argument("quotient_shape: dimension mismatch");
  QuotientShape out;
  IntMat g = generators;
  g.cols = ambient;
  if (g.rows == 0) g.a.assign(0, BigInt(0));
  std::vector<BigInt> d = smith_invariants(g);
  out.free_rank = ambient - static_cast<long long>(d.size());
  for (const BigInt& x : d)
    if (x > 1) out.torsion.push_back(x);
  return out;
}

}  // namespace burnside
