#pragma once

#include <map>
#include <string>
#include <vector>

#include "burnside/burnside_ring.hpp"
#include "burnside/normal_form.hpp"

namespace burnside {

struct BasisLabel {
  int isotropy_class = -1;  // subgroup class index in the ring's classification
  std::string name;
};

using ActionMatrix = std::vector<std::vector<long long>>;  // [row][col]

// Finitely generated module over a Burnside ring, free as an abelian group
// on an isotropy-labeled basis, with one integer action matrix per basis
// element [G/K] of the ring (columns are images of the basis). The
// constructor checks that [G/G] acts as the identity and that the matrices
// represent the ring multiplication on all pairs of ring basis elements.
class GModule {
 public:
  GModule(RingPtr ring, std::vector<BasisLabel> labels, std::vector<ActionMatrix> action);

  const RingPtr& ring() const { return ring_; }
  int rank() const { return static_cast<int>(labels_.size()); }
  const BasisLabel& label(int i) const { return labels_[static_cast<size_t>(i)]; }
  const std::vector<BasisLabel>& labels() const { return labels_; }
  const ActionMatrix& action(int cls_index) const { return action_[static_cast<size_t>(cls_index)]; }

  // Matrix of the action of an arbitrary ring element.
  ActionMatrix act(const BurnsideElement& x) const;

 private:
  RingPtr ring_;
  std::vector<BasisLabel> labels_;
  std::vector<ActionMatrix> action_;
};

// The ring as a module over itself; basis element i is [G/H_i] with isotropy
// label H_i.
GModule regular_module(const RingPtr& ring);

// Free abelian group on the conjugacy classes of pairs (H, phi: H -> K) with
// H <= G, with [G/K'] acting through double cosets; see the stable-maps
// header for the pair enumeration. For trivial K this is the regular module.
GModule bundle_module(const RingPtr& ring, GroupPtr target, int order_bound = kDefaultOrderBound);

struct RestrictedModule {
  GModule module;
  std::vector<int> basis_map;  // submodule basis index -> parent basis index
};

// Sub-span of the basis elements whose isotropy lies in the family. The
// family must be downward closed, which makes the span action-stable; a
// violation in the matrices signals an implementation bug and raises.
RestrictedModule restrict_to_family(const GModule& m, const Family& f);

// Quotient of the outer-family restriction by the inner-family restriction;
// basis = labels in outer minus inner.
GModule family_quotient(const GModule& m, const Family& outer, const Family& inner);

struct TowerLevel {
  long long free_rank = 0;
  std::vector<BigInt> factors;  // invariant factors > 1, ascending divisibility
};

// Levels M/J^n M for n = 1..depth, computed by exact integer normal forms;
// construction verifies J^(n+1) M <= J^n M so the quotients form a tower.
struct QuotientTower {
  int depth = 0;
  std::vector<TowerLevel> levels;
};

QuotientTower quotient_tower(const GModule& m, const BurnsideIdeal& ideal, int depth);

enum class Confidence { proved_stable, heuristic, unresolved };

// a                    -> "free"
// b_p per prime        -> "padic"
// finite cyclic parts  -> "torsion"
struct ProfiniteAbelianDescriptor {
  long long free = 0;
  std::map<long long, long long> padic;
  std::vector<long long> torsion;
  Confidence confidence = Confidence::heuristic;
  int unresolved_depth = -1;

  bool same_shape(const ProfiniteAbelianDescriptor& o) const {
    return free == o.free && padic == o.padic && torsion == o.torsion;
  }
};

// Reads the limit off the tail of the tower: over the last three levels a
// per-prime elementary divisor whose exponent grows by the same positive
// step is a p-adic summand, a constant one is finite torsion, and anything
// else leaves the descriptor unresolved. Requires depth >= 5.
ProfiniteAbelianDescriptor classify_completion(const QuotientTower& tower);

// Completion read directly off the basis labels: trivial isotropy
// contributes a free summand, nontrivial prime-power isotropy a p-adic
// summand, everything else dies.
ProfiniteAbelianDescriptor closed_form_completion(const GModule& m);

std::string descriptor_to_string(const ProfiniteAbelianDescriptor& d);
std::string confidence_name(Confidence c);

}  // namespace burnside
