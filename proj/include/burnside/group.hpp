#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace burnside {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline constexpr int kDefaultOrderBound = 512;

struct PermGenerators {
  int degree = 0;
  std::vector<std::vector<int>> images;  // 0-based image vectors
};

// A finite group given by its full multiplication table. Immutable after
// construction; the constructor validates the Latin square property,
// identity, inverses and associativity (exhaustive up to order 64, seeded
// random triples above that).
class FiniteGroup {
 public:
  FiniteGroup(std::string name, int order, std::vector<int> table,
              std::optional<PermGenerators> perm = std::nullopt);

  int order() const { return order_; }
  int mul(int a, int b) const { return table_[static_cast<size_t>(a) * order_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  int identity() const { return identity_; }
  // g h g^-1
  int conj(int g, int h) const { return mul(mul(g, h), inv(g)); }
  int power(int g, long long e) const;
  int element_order(int g) const;
  bool is_abelian() const;
  const std::string& name() const { return name_; }
  const std::optional<PermGenerators>& perm_generators() const { return perm_; }

 private:
  void validate() const;

  std::string name_;
  int order_;
  std::vector<int> table_;
  int identity_ = -1;
  std::vector<int> inverse_;
  std::optional<PermGenerators> perm_;
};

// Grammar:
//   NAME    := "C"int | "D"int | "S"int | "A"int | "Q8" | "V4"
//   PRODUCT := NAME ("x" NAME)*
//   PERM    := "perm(" degree "):" generators, e.g. "perm(4): (1 2), (1 2 3 4)"
// D<n> is the dihedral group of order 2n. Cycles are 1-based; commas separate
// generators and one generator may juxtapose several disjoint cycles.
// Element ordering: C<n> residues 0..n-1; D<n> rotations r^i then reflections
// r^i s; S<n>/A<n> permutations in lexicographic image order; Q8 in the order
// 1,-1,i,-i,j,-j,k,-k; V4 = C2 x C2; products in lexicographic pair order;
// perm groups in breadth-first closure order from the generators as given.
GroupPtr parse_group(const std::string& spec, int order_bound = kDefaultOrderBound);

// Subgroup of a fixed parent group, stored as the sorted list of member
// element indices. Validated on construction.
struct Subgroup {
  GroupPtr parent;
  std::vector<int> members;

  Subgroup(GroupPtr parent, std::vector<int> members);
  int order() const { return static_cast<int>(members.size()); }
  bool contains(int g) const;
};

// Group homomorphism given elementwise; multiplicativity validated on
// construction (exhaustive for source order <= 64, seeded samples above).
struct GroupHom {
  GroupPtr source;
  GroupPtr target;
  std::vector<int> images;

  GroupHom(GroupPtr source, GroupPtr target, std::vector<int> images);
  int apply(int g) const { return images[g]; }
};

struct DirectProduct {
  GroupPtr group;
  GroupPtr left;
  GroupPtr right;
  GroupHom embed_left;
  GroupHom embed_right;
  GroupHom project_left;
  GroupHom project_right;

  int encode(int g, int k) const { return g * right->order() + k; }
  std::pair<int, int> decode(int x) const {
    return {x / right->order(), x % right->order()};
  }
};

DirectProduct direct_product(GroupPtr left, GroupPtr right,
                             int order_bound = kDefaultOrderBound);

// Sorted member list of the subgroup generated by the seeds.
std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& seeds);

// Sorted member list of x H x^-1.
std::vector<int> conjugate_members(const FiniteGroup& g, const std::vector<int>& members, int x);

Subgroup normalizer(GroupPtr g, const Subgroup& h);

struct QuotientGroup {
  GroupPtr group;
  GroupHom projection;
  std::vector<std::vector<int>> cosets;  // coset i = sorted members, cosets sorted by minimum
};

// Quotient by a normal subgroup; a non-normal argument raises an error that
// names a conjugator moving the subgroup off itself.
QuotientGroup quotient_group(GroupPtr g, const Subgroup& n);

Subgroup commutator_subgroup(GroupPtr g);

// Invariant factors d1 | d2 | ... (each > 1, ascending) of G / [G, G].
std::vector<long long> abelianization(const FiniteGroup& g);

struct SubgroupGroup {
  GroupPtr group;
  std::vector<int> to_parent;  // element i of group = to_parent[i] in the parent
  GroupHom inclusion;
};

SubgroupGroup subgroup_as_group(const Subgroup& h);

// Human-readable structure descriptor ("C6", "C2xC2", "S3", "D4", "Q8",
// "A4", "S4", ...), falling back to "G<order>". Display only; nonabelian
// names are heuristic recognitions, not certified isomorphism types.
std::string structure_name(const FiniteGroup& g);

}  // namespace burnside
