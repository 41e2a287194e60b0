#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>

#include "burnside/lattice.hpp"

namespace burnside::testing {

std::vector<std::vector<int>> brute_force_subgroups(const FiniteGroup& g) {
  int n = g.order();
  if (n > 24) throw std::invalid_argument("brute force subgroup search bounded at order 24");
  std::vector<char> size_ok(static_cast<size_t>(n) + 1, 0);
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) size_ok[static_cast<size_t>(d)] = 1;

  std::vector<std::vector<int>> out;
  uint64_t idbit = 1ull << g.identity();
  for (uint64_t mask = 1; mask < (1ull << n); ++mask) {
    if (!(mask & idbit)) continue;
    if (!size_ok[static_cast<size_t>(__builtin_popcountll(mask))]) continue;
    int mem[24];
    int cnt = 0;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) mem[cnt++] = i;
    bool closed = true;
    for (int a = 0; a < cnt && closed; ++a)
      for (int b = 0; b < cnt; ++b)
        if (!(mask >> g.mul(mem[a], mem[b]) & 1)) {
          closed = false;
          break;
        }
    if (closed) out.emplace_back(mem, mem + cnt);
  }
  return out;
}

long long fixed_points_on_cosets(const FiniteGroup& g, const std::vector<int>& k_members,
                                 const std::vector<int>& h_members) {
  // left cosets of K
  std::vector<int> coset_of(static_cast<size_t>(g.order()), -1);
  std::vector<int> reps;
  for (int x = 0; x < g.order(); ++x) {
    if (coset_of[static_cast<size_t>(x)] != -1) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int k : k_members) coset_of[static_cast<size_t>(g.mul(x, k))] = id;
  }
  long long fixed = 0;
  for (int rep : reps) {
    bool all = true;
    for (int h : h_members)
      if (coset_of[static_cast<size_t>(g.mul(h, rep))] != coset_of[static_cast<size_t>(rep)]) {
        all = false;
        break;
      }
    if (all) ++fixed;
  }
  return fixed;
}

std::vector<std::vector<int>> graph_subgroup_class_reps(const DirectProduct& prod) {
  ClassificationPtr cls = subgroup_classes(prod.group);
  int left_id = prod.left->identity();
  int prod_id = prod.group->identity();
  std::vector<std::vector<int>> out;
  for (int i = 0; i < cls->count(); ++i) {
    const std::vector<int>& members = cls->cls(i).representative.members;
    bool graph = true;
    for (int m : members)
      if (prod.decode(m).first == left_id && m != prod_id) {
        graph = false;
        break;
      }
    if (graph) out.push_back(members);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace burnside::testing
