#include "burnside/lattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "burnside/arith.hpp"

namespace burnside {

namespace {

// Every subgroup arises from a chain of one-generator extensions starting at
// a cyclic subgroup, so growing the closure set until it stabilizes
// enumerates the full lattice.
std::set<std::vector<int>> all_subgroups(const FiniteGroup& g) {
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> work;
  auto add = [&](std::vector<int> members) {
    if (known.insert(members).second) work.push_back(std::move(members));
  };
  add(generated_subgroup(g, {}));
  for (int x = 0; x < g.order(); ++x) add(generated_subgroup(g, {x}));
  while (!work.empty()) {
    std::vector<int> base = std::move(work.back());
    work.pop_back();
    if (static_cast<int>(base.size()) == g.order()) continue;
    for (int x = 0; x < g.order(); ++x) {
      if (std::binary_search(base.begin(), base.end(), x)) continue;
      std::vector<int> seeds = base;
      seeds.push_back(x);
      add(generated_subgroup(g, seeds));
    }
  }
  return known;
}

std::string label_for(const Subgroup& rep) {
  return structure_name(*subgroup_as_group(rep).group);
}

}  // namespace

SubgroupClassification::SubgroupClassification(GroupPtr g, std::vector<SubgroupClass> classes,
                                               std::vector<std::vector<char>> subconjugate)
    : group_(std::move(g)), classes_(std::move(classes)), subconjugate_(std::move(subconjugate)) {
  if (classes_.empty()) throw std::invalid_argument("classification without classes");
  if (subconjugate_.size() != classes_.size())
    throw std::invalid_argument("subconjugacy matrix size mismatch");
  for (const auto& row : subconjugate_)
    if (row.size() != classes_.size())
      throw std::invalid_argument("subconjugacy matrix size mismatch");

  for (size_t i = 0; i < classes_.size(); ++i) {
    const SubgroupClass& c = classes_[i];
    if (c.representative.parent.get() != group_.get())
      throw std::invalid_argument("class representative belongs to a different group");
    if (c.orbit.empty() || c.orbit.front() != c.representative.members)
      throw std::invalid_argument("class orbit must start with the representative");
    if (!std::is_sorted(c.orbit.begin(), c.orbit.end()))
      throw std::invalid_argument("class orbit must be sorted");
    if (i + 1 < classes_.size()) {
      const SubgroupClass& d = classes_[i + 1];
      if (std::make_pair(c.representative.order(), c.representative.members) >=
          std::make_pair(d.representative.order(), d.representative.members))
        throw std::invalid_argument("classes are not in canonical order");
    }
    for (const auto& members : c.orbit) {
      Subgroup check(group_, members);  // validates subgroup structure
      if (!class_of_.emplace(members, static_cast<int>(i)).second)
        throw std::invalid_argument("subgroup appears in two classes");
    }
    if (!subconjugate_[i][i]) throw std::invalid_argument("subconjugacy must be reflexive");
  }
  if (classes_.front().representative.order() != 1)
    throw std::invalid_argument("first class must be the trivial subgroup");
  if (classes_.back().representative.order() != group_->order())
    throw std::invalid_argument("last class must be the whole group");
}

std::shared_ptr<const SubgroupClassification> SubgroupClassification::compute(GroupPtr g) {
  std::set<std::vector<int>> subgroups = all_subgroups(*g);

  std::set<std::vector<int>> unassigned = subgroups;
  std::vector<SubgroupClass> classes;
  while (!unassigned.empty()) {
    std::vector<int> seed = *unassigned.begin();
    std::set<std::vector<int>> orbit_set;
    for (int x = 0; x < g->order(); ++x) orbit_set.insert(conjugate_members(*g, seed, x));
    std::vector<std::vector<int>> orbit(orbit_set.begin(), orbit_set.end());
    for (const auto& members : orbit) unassigned.erase(members);
    Subgroup rep(g, orbit.front());
    classes.push_back(SubgroupClass{std::move(rep), std::move(orbit), ""});
  }

  std::sort(classes.begin(), classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    return std::make_pair(a.representative.order(), a.representative.members) <
           std::make_pair(b.representative.order(), b.representative.members);
  });

  int m = static_cast<int>(classes.size());
  std::vector<std::vector<char>> sub(static_cast<size_t>(m), std::vector<char>(static_cast<size_t>(m), 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (classes[static_cast<size_t>(i)].representative.order() >
          classes[static_cast<size_t>(j)].representative.order())
        continue;
      const auto& hj = classes[static_cast<size_t>(j)].representative.members;
      for (const auto& conj : classes[static_cast<size_t>(i)].orbit) {
        if (std::includes(hj.begin(), hj.end(), conj.begin(), conj.end())) {
          sub[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
          break;
        }
      }
    }

  // Structure labels, with letter suffixes when several classes share one.
  std::vector<std::string> raw;
  raw.reserve(classes.size());
  for (const auto& c : classes) raw.push_back(label_for(c.representative));
  for (size_t i = 0; i < classes.size(); ++i) {
    int total = 0;
    for (const auto& r : raw)
      if (r == raw[i]) ++total;
    if (total == 1) {
      classes[i].label = raw[i];
    } else {
      int before = 0;
      for (size_t j = 0; j < i; ++j)
        if (raw[j] == raw[i]) ++before;
      classes[i].label = raw[i] + static_cast<char>('a' + before);
    }
  }

  return std::shared_ptr<const SubgroupClassification>(
      new SubgroupClassification(std::move(g), std::move(classes), std::move(sub)));
}

std::shared_ptr<const SubgroupClassification> SubgroupClassification::from_parts(
    GroupPtr g, std::vector<SubgroupClass> classes, std::vector<std::vector<char>> subconjugate) {
  return std::shared_ptr<const SubgroupClassification>(
      new SubgroupClassification(std::move(g), std::move(classes), std::move(subconjugate)));
}

int SubgroupClassification::class_of(const std::vector<int>& members) const {
  auto it = class_of_.find(members);
  if (it == class_of_.end())
    throw std::invalid_argument("member set is not a subgroup of the classified group");
  return it->second;
}

long long SubgroupClassification::total_subgroups() const {
  long long total = 0;
  for (const auto& c : classes_) total += static_cast<long long>(c.orbit.size());
  return total;
}

ClassificationPtr subgroup_classes(GroupPtr g) { return SubgroupClassification::compute(std::move(g)); }

namespace {

Family make_family(ClassificationPtr cls, FamilyKind kind, long long prime,
                   std::vector<int> member_classes) {
  std::sort(member_classes.begin(), member_classes.end());
  member_classes.erase(std::unique(member_classes.begin(), member_classes.end()),
                       member_classes.end());
  std::vector<char> contains(static_cast<size_t>(cls->count()), 0);
  for (int i : member_classes) {
    if (i < 0 || i >= cls->count()) throw std::invalid_argument("family class index out of range");
    contains[static_cast<size_t>(i)] = 1;
  }
  // Downward closure under subconjugacy.
  for (int i : member_classes)
    for (int j = 0; j < cls->count(); ++j)
      if (cls->is_subconjugate(j, i) && !contains[static_cast<size_t>(j)])
        throw std::invalid_argument("family is not closed under passing to subgroups");
  return Family{std::move(cls), kind, prime, std::move(member_classes), std::move(contains)};
}

}  // namespace

Family family_classes(ClassificationPtr cls, FamilyKind kind, long long prime) {
  std::vector<int> members;
  switch (kind) {
    case FamilyKind::trivial_only:
      members.push_back(0);
      break;
    case FamilyKind::p_subgroups: {
      if (!is_prime(prime)) throw std::invalid_argument("family prime must be a prime number");
      for (int i = 0; i < cls->count(); ++i) {
        long long base = prime_power_base(cls->order_of(i));
        if (base == 0 || base == prime) members.push_back(i);
      }
      break;
    }
    case FamilyKind::prime_power: {
      for (int i = 0; i < cls->count(); ++i)
        if (prime_power_base(cls->order_of(i)) >= 0) members.push_back(i);
      break;
    }
    case FamilyKind::all: {
      for (int i = 0; i < cls->count(); ++i) members.push_back(i);
      break;
    }
    case FamilyKind::custom:
      throw std::invalid_argument("custom families take an explicit class list");
  }
  return make_family(std::move(cls), kind, kind == FamilyKind::p_subgroups ? prime : 0,
                     std::move(members));
}

Family custom_family(ClassificationPtr cls, std::vector<int> member_classes) {
  return make_family(std::move(cls), FamilyKind::custom, 0, std::move(member_classes));
}

std::string Family::name() const {
  switch (kind) {
    case FamilyKind::trivial_only: return "F1";
    case FamilyKind::p_subgroups: return "Fp(" + std::to_string(prime) + ")";
    case FamilyKind::prime_power: return "FP";
    case FamilyKind::all: return "Fall";
    case FamilyKind::custom: return "custom";
  }
  return "?";
}

}  // namespace burnside
