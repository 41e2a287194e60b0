#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "burnside/group.hpp"

namespace burnside {

struct SubgroupClass {
  Subgroup representative;               // lexicographically minimal member set in the orbit
  std::vector<std::vector<int>> orbit;   // all conjugate member sets, sorted
  std::string label;
};

// Conjugacy classes of subgroups, ordered by non-decreasing subgroup order
// with ties broken by the lexicographically minimal member set of the class.
// The trivial class is first and the whole group last. Immutable.
class SubgroupClassification {
 public:
  static std::shared_ptr<const SubgroupClassification> compute(GroupPtr g);

  // Reassembles a classification from cached parts, re-validating subgroup
  // structure, class ordering and the subconjugacy relation shape.
  static std::shared_ptr<const SubgroupClassification> from_parts(
      GroupPtr g, std::vector<SubgroupClass> classes,
      std::vector<std::vector<char>> subconjugate);

  const GroupPtr& group() const { return group_; }
  int count() const { return static_cast<int>(classes_.size()); }
  const SubgroupClass& cls(int i) const { return classes_[static_cast<size_t>(i)]; }
  int order_of(int i) const { return classes_[static_cast<size_t>(i)].representative.order(); }

  // Class index of an arbitrary subgroup given by its sorted member set.
  int class_of(const std::vector<int>& members) const;

  // Some conjugate of class h's representative lies inside class k's.
  bool is_subconjugate(int h, int k) const {
    return subconjugate_[static_cast<size_t>(h)][static_cast<size_t>(k)] != 0;
  }

  long long total_subgroups() const;

 private:
  SubgroupClassification(GroupPtr g, std::vector<SubgroupClass> classes,
                         std::vector<std::vector<char>> subconjugate);

  GroupPtr group_;
  std::vector<SubgroupClass> classes_;
  std::vector<std::vector<char>> subconjugate_;
  std::map<std::vector<int>, int> class_of_;
};

using ClassificationPtr = std::shared_ptr<const SubgroupClassification>;

ClassificationPtr subgroup_classes(GroupPtr g);

enum class FamilyKind { trivial_only, p_subgroups, prime_power, all, custom };

// A conjugation-stable, downward-closed collection of subgroup classes.
struct Family {
  ClassificationPtr classification;
  FamilyKind kind;
  long long prime = 0;                // set for p_subgroups
  std::vector<int> member_classes;    // ascending class indices
  std::vector<char> contains;

  bool contains_class(int i) const { return contains[static_cast<size_t>(i)] != 0; }
  std::string name() const;
};

Family family_classes(ClassificationPtr cls, FamilyKind kind, long long prime = 0);
Family custom_family(ClassificationPtr cls, std::vector<int> member_classes);

}  // namespace burnside
