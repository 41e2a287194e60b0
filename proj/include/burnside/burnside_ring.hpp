#pragma once

#include <memory>
#include <string>
#include <vector>

#include "burnside/lattice.hpp"

namespace burnside {

// marks[K][H] = number of H-fixed points of the coset space G/K, rows and
// columns indexed by subgroup classes in classification order. Lower
// triangular in that order.
struct TableOfMarks {
  ClassificationPtr classification;
  std::vector<std::vector<long long>> m;
};

TableOfMarks table_of_marks(const ClassificationPtr& cls);

// Element of the Burnside ring, written in the basis of transitive G-sets
// [G/H] over subgroup classes H.
struct BurnsideElement {
  ClassificationPtr classification;
  std::vector<long long> coeff;

  BurnsideElement(ClassificationPtr cls, std::vector<long long> c);

  BurnsideElement& operator+=(const BurnsideElement& o);
  BurnsideElement& operator-=(const BurnsideElement& o);
  BurnsideElement& operator*=(long long s);
  friend BurnsideElement operator+(BurnsideElement a, const BurnsideElement& b) { return a += b; }
  friend BurnsideElement operator-(BurnsideElement a, const BurnsideElement& b) { return a -= b; }
  friend BurnsideElement operator*(BurnsideElement a, long long s) { return a *= s; }
  bool operator==(const BurnsideElement& o) const { return coeff == o.coeff; }
};

struct BurnsideIdeal {
  std::vector<BurnsideElement> generators;
};

// Ideal of Z, stored by its non-negative generator (0 = zero ideal, 1 = Z).
struct IntegerIdeal {
  long long generator = 0;
};

enum class IdealForm { zero, prime_power, unit };

struct TrichotomyRow {
  int class_index;
  std::string label;
  long long subgroup_order;
  long long ideal;
  IdealForm expected;
  long long prime;     // prime of the expected p-power form, 0 otherwise
  long long exponent;  // exponent when the ideal is a prime power
  bool ok;
};

struct TrichotomyReport {
  std::vector<TrichotomyRow> rows;
  bool pass = true;
};

// The Burnside ring of a fixed group: marks, products of basis elements via
// double cosets, the augmentation ideal and its fixed-point images.
// Immutable after construction.
class BurnsideRing {
 public:
  static std::shared_ptr<const BurnsideRing> create(GroupPtr g);
  static std::shared_ptr<const BurnsideRing> create(ClassificationPtr cls);

  const ClassificationPtr& classification() const { return cls_; }
  const GroupPtr& group() const { return cls_->group(); }
  int class_count() const { return cls_->count(); }
  const TableOfMarks& marks_table() const { return marks_; }

  BurnsideElement zero() const;
  BurnsideElement basis(int cls_index) const;
  BurnsideElement unit() const;  // [G/G]

  const std::vector<long long>& basis_product(int i, int j) const;
  BurnsideElement multiply(const BurnsideElement& a, const BurnsideElement& b) const;

  long long mark(int h_class, const BurnsideElement& x) const;
  std::vector<long long> marks_vector(const BurnsideElement& x) const;
  long long augmentation(const BurnsideElement& x) const { return mark(0, x); }

  BurnsideIdeal augmentation_ideal() const;
  IntegerIdeal phi_ideal(int h_class, const BurnsideIdeal& ideal) const;
  TrichotomyReport verify_trichotomy() const;

 private:
  explicit BurnsideRing(ClassificationPtr cls);

  ClassificationPtr cls_;
  TableOfMarks marks_;
  std::vector<std::vector<long long>> products_;  // [i * count + j] = coeffs of [G/i][G/j]
};

using RingPtr = std::shared_ptr<const BurnsideRing>;

}  // namespace burnside
