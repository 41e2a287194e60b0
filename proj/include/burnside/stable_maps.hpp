#pragma once

#include <map>
#include <string>
#include <vector>

#include "burnside/gmodule.hpp"
#include "burnside/lattice.hpp"

namespace burnside {

// Conjugacy class of a pair (H, phi: H -> K) with H <= G, represented by its
// graph subgroup {(h, phi(h))} <= G x K; two pairs are identified exactly
// when their graphs are conjugate in the product. The stored representative
// is read off the lexicographically minimal graph in the orbit.
struct BundlePairClass {
  Subgroup subgroup;            // H as a subgroup of G
  SubgroupGroup h_group;        // H as a group of its own
  GroupHom phi;                 // h_group.group -> K
  Subgroup graph;               // graph subgroup of G x K
  int h_class;                  // class of H in the source classification
  long long h_order;
  long long prime;              // 0 for trivial H, p for p-power order, -1 otherwise
  bool prime_power;             // |H| = p^v with v >= 1
  std::string h_label;          // label of the H class
  std::string display_name;

  // phi evaluated on a parent-group element of H.
  int phi_of(int parent_element) const;
  bool in_prime_power_family() const { return h_order == 1 || prime_power; }
};

struct PairEnumeration {
  ClassificationPtr source_classification;
  GroupPtr target;
  DirectProduct product;
  std::vector<BundlePairClass> classes;         // ordered by (|H|, graph members)
  std::map<std::vector<int>, int> class_of_graph;  // every conjugate graph -> index
};

// All classes of pairs (H, phi) up to product conjugacy, enumerated from
// subgroup class representatives and exhaustive homomorphism search.
PairEnumeration pair_classes(ClassificationPtr source, GroupPtr target,
                             int order_bound = kDefaultOrderBound);

// Every homomorphism h -> k as an image vector, in lexicographic order of
// the images of a fixed generating sequence of h.
std::vector<std::vector<int>> hom_images(const FiniteGroup& h, const FiniteGroup& k);

struct WeylInfo {
  GroupPtr group;  // N_{GxK}(graph) / graph
  long long order;
  std::vector<long long> abelian_invariants;
  std::string name;
};

WeylInfo weyl_group(const BundlePairClass& pair);

enum class DecompositionKind { full, p_local, dual, fixed_point_splitting };

struct WedgeSummand {
  BundlePairClass pair;
  WeylInfo weyl;
  long long completion_prime;  // 0 = uncompleted, p > 0, -1 = not applicable
};

struct WedgeDecomposition {
  DecompositionKind kind;
  std::string source_name;
  std::string target_name;
  bool has_prime = false;
  long long prime = 0;
  std::string leading;  // symbolic leading term, p_local only
  std::vector<WedgeSummand> summands;
};

inline constexpr const char* kCompletionConvention =
    "p-completion is taken at the spectrum level; each p-completed summand "
    "contributes Z_p to pi0 and each uncompleted summand contributes Z";

// Summands indexed by the pair classes whose H lies in the family; no
// completion primes.
WedgeDecomposition fixed_point_splitting(ClassificationPtr source, GroupPtr target,
                                         const Family& family,
                                         int order_bound = kDefaultOrderBound);

// The function-spectrum decomposition: pair classes with prime-power H
// (including the trivial one), each completed at its own prime.
WedgeDecomposition function_decomposition(ClassificationPtr source, GroupPtr target,
                                          int order_bound = kDefaultOrderBound);

// Decomposition after p-completing the source: a symbolic leading term plus
// the pair classes with nontrivial p-group H.
WedgeDecomposition p_local_decomposition(ClassificationPtr source, GroupPtr target, long long p,
                                         int order_bound = kDefaultOrderBound);

// Dual of the classifying spectrum (target = trivial group): summands
// indexed by prime-power subgroup classes with W = N_G(H)/H.
WedgeDecomposition dual_decomposition(ClassificationPtr source,
                                      int order_bound = kDefaultOrderBound);

// p-complete variant: indexed by p-subgroup classes, all p-completed.
WedgeDecomposition dual_decomposition_at(ClassificationPtr source, long long p,
                                         int order_bound = kDefaultOrderBound);

// pi0 of the wedge: Z per uncompleted summand, Z_p per p-completed one.
// Defined for the full and dual kinds.
ProfiniteAbelianDescriptor pi0_descriptor(const WedgeDecomposition& d);

struct CrosscheckReport {
  std::string source_name;
  std::string target_name;
  ProfiniteAbelianDescriptor pi0;          // from the wedge decomposition
  ProfiniteAbelianDescriptor closed_form;  // from the pair-class labels
  ProfiniteAbelianDescriptor tower;        // from the completion tower oracle
  int depth_used = 0;
  bool pass = false;
};

// Capstone consistency check: the wedge pi0, the closed-form completion of
// the pair-class module and the tower classification must agree. Escalates
// the tower depth once if the first classification is unresolved.
CrosscheckReport crosscheck(ClassificationPtr source, GroupPtr target, int depth = 12,
                            int escalated_depth = 18, int order_bound = kDefaultOrderBound);

}  // namespace burnside
