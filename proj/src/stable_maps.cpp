#include "burnside/stable_maps.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "burnside/arith.hpp"

namespace burnside {

namespace {

// Greedy generating sequence: repeatedly adjoin the smallest element outside
// the closure so far. Deterministic, and short for the groups at hand.
std::vector<int> generating_sequence(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<int> closure = generated_subgroup(g, {});
  while (static_cast<int>(closure.size()) < g.order()) {
    int pick = -1;
    for (int x = 0; x < g.order(); ++x)
      if (!std::binary_search(closure.begin(), closure.end(), x)) {
        pick = x;
        break;
      }
    gens.push_back(pick);
    closure = generated_subgroup(g, gens);
  }
  return gens;
}

// Extends generator images to a full image vector by closing under right
// multiplication, then validates multiplicativity on all pairs. Returns an
// empty vector when no homomorphism has these generator images.
std::vector<int> extend_hom(const FiniteGroup& h, const FiniteGroup& k,
                            const std::vector<int>& gens, const std::vector<int>& gen_images) {
  std::vector<int> img(static_cast<size_t>(h.order()), -1);
  img[static_cast<size_t>(h.identity())] = k.identity();
  std::vector<int> work{h.identity()};
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    for (size_t i = 0; i < gens.size(); ++i) {
      int y = h.mul(x, gens[i]);
      int cand = k.mul(img[static_cast<size_t>(x)], gen_images[i]);
      if (img[static_cast<size_t>(y)] == -1) {
        img[static_cast<size_t>(y)] = cand;
        work.push_back(y);
      } else if (img[static_cast<size_t>(y)] != cand) {
        return {};
      }
    }
  }
  for (int v : img)
    if (v == -1) return {};
  for (int a = 0; a < h.order(); ++a)
    for (int b = 0; b < h.order(); ++b)
      if (img[static_cast<size_t>(h.mul(a, b))] !=
          k.mul(img[static_cast<size_t>(a)], img[static_cast<size_t>(b)]))
        return {};
  return img;
}

}  // namespace

std::vector<std::vector<int>> hom_images(const FiniteGroup& h, const FiniteGroup& k) {
  std::vector<int> gens = generating_sequence(h);

  // Candidate images per generator: image order must divide generator order.
  std::vector<std::vector<int>> cands;
  for (int g : gens) {
    long long og = h.element_order(g);
    std::vector<int> c;
    for (int x = 0; x < k.order(); ++x)
      if (og % k.element_order(x) == 0) c.push_back(x);
    cands.push_back(std::move(c));
  }

  std::vector<std::vector<int>> out;
  std::vector<int> picked;
  auto rec = [&](auto&& self, size_t pos) -> void {
    if (pos == gens.size()) {
      std::vector<int> img = extend_hom(h, k, gens, picked);
      if (!img.empty()) out.push_back(std::move(img));
      return;
    }
    for (int c : cands[pos]) {
      picked.push_back(c);
      self(self, pos + 1);
      picked.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

int BundlePairClass::phi_of(int parent_element) const {
  auto it = std::lower_bound(subgroup.members.begin(), subgroup.members.end(), parent_element);
  if (it == subgroup.members.end() || *it != parent_element)
    throw std::invalid_argument("element outside the pair subgroup");
  return phi.images[static_cast<size_t>(it - subgroup.members.begin())];
}

PairEnumeration pair_classes(ClassificationPtr source, GroupPtr target, int order_bound) {
  if (!source || !target) throw std::invalid_argument("pair enumeration needs both groups");
  GroupPtr g = source->group();
  DirectProduct prod = direct_product(g, target, order_bound);
  const FiniteGroup& p = *prod.group;

  // Graphs of (class representative, homomorphism), grouped into conjugacy
  // orbits inside the product. Every pair class is hit because conjugating a
  // pair conjugates its H onto some class representative.
  std::map<std::vector<int>, std::vector<std::vector<int>>> orbits;  // canonical -> members
  std::set<std::vector<int>> seen;
  for (int ci = 0; ci < source->count(); ++ci) {
    const Subgroup& rep = source->cls(ci).representative;
    SubgroupGroup hg = subgroup_as_group(rep);
    for (const auto& img : hom_images(*hg.group, *target)) {
      std::vector<int> graph;
      for (int l = 0; l < hg.group->order(); ++l)
        graph.push_back(prod.encode(hg.to_parent[static_cast<size_t>(l)],
                                    img[static_cast<size_t>(l)]));
      std::sort(graph.begin(), graph.end());
      if (seen.count(graph)) continue;
      std::set<std::vector<int>> orbit;
      for (int x = 0; x < p.order(); ++x) orbit.insert(conjugate_members(p, graph, x));
      for (const auto& mem : orbit) seen.insert(mem);
      orbits.emplace(*orbit.begin(), std::vector<std::vector<int>>(orbit.begin(), orbit.end()));
    }
  }

  std::vector<std::pair<std::vector<int>, std::vector<std::vector<int>>>> items(
      std::make_move_iterator(orbits.begin()), std::make_move_iterator(orbits.end()));
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });

  PairEnumeration out{std::move(source), target, std::move(prod), {}, {}};
  for (auto& [canonical, orbit] : items) {
    std::vector<int> h_members, phi_images;
    for (int m : canonical) {
      auto [a, b] = out.product.decode(m);
      h_members.push_back(a);
      phi_images.push_back(b);
    }
    Subgroup h(g, h_members);
    SubgroupGroup hg = subgroup_as_group(h);
    GroupHom phi(hg.group, target, phi_images);
    Subgroup graph(out.product.group, canonical);
    int h_class = out.source_classification->class_of(h_members);
    long long ho = h.order();
    long long base = prime_power_base(ho);
    bool pp = base > 0;
    long long prime = ho == 1 ? 0 : (pp ? base : -1);

    std::string label = out.source_classification->cls(h_class).label;
    std::string name = "(" + label + ", phi=[";
    for (size_t i = 0; i < phi_images.size(); ++i) {
      if (i) name += " ";
      name += std::to_string(phi_images[i]);
    }
    name += "])";

    int index = static_cast<int>(out.classes.size());
    for (const auto& mem : orbit) out.class_of_graph.emplace(mem, index);
    out.classes.push_back(BundlePairClass{std::move(h), std::move(hg), std::move(phi),
                                          std::move(graph), h_class, ho, prime, pp,
                                          std::move(label), std::move(name)});
  }
  return out;
}

WeylInfo weyl_group(const BundlePairClass& pair) {
  GroupPtr prod = pair.graph.parent;
  Subgroup n = normalizer(prod, pair.graph);
  SubgroupGroup ng = subgroup_as_group(n);
  std::vector<int> local;
  for (int m : pair.graph.members) {
    auto it = std::lower_bound(n.members.begin(), n.members.end(), m);
    local.push_back(static_cast<int>(it - n.members.begin()));
  }
  QuotientGroup q = quotient_group(ng.group, Subgroup(ng.group, std::move(local)));
  return WeylInfo{q.group, q.group->order(), abelianization(*q.group), structure_name(*q.group)};
}

namespace {

GroupPtr trivial_group() { return parse_group("C1"); }

}  // namespace

WedgeDecomposition fixed_point_splitting(ClassificationPtr source, GroupPtr target,
                                         const Family& family, int order_bound) {
  if (family.classification.get() != source.get())
    throw std::invalid_argument("family of a different classification");
  PairEnumeration pairs = pair_classes(std::move(source), std::move(target), order_bound);
  WedgeDecomposition d;
  d.kind = DecompositionKind::fixed_point_splitting;
  d.source_name = pairs.source_classification->group()->name();
  d.target_name = pairs.target->name();
  for (const auto& pc : pairs.classes)
    if (family.contains_class(pc.h_class))
      d.summands.push_back(WedgeSummand{pc, weyl_group(pc), -1});
  return d;
}

WedgeDecomposition function_decomposition(ClassificationPtr source, GroupPtr target,
                                          int order_bound) {
  PairEnumeration pairs = pair_classes(std::move(source), std::move(target), order_bound);
  WedgeDecomposition d;
  d.kind = DecompositionKind::full;
  d.source_name = pairs.source_classification->group()->name();
  d.target_name = pairs.target->name();
  for (const auto& pc : pairs.classes)
    if (pc.in_prime_power_family())
      d.summands.push_back(WedgeSummand{pc, weyl_group(pc), pc.prime});
  return d;
}

WedgeDecomposition p_local_decomposition(ClassificationPtr source, GroupPtr target, long long p,
                                         int order_bound) {
  if (!is_prime(p)) throw std::invalid_argument("completion prime must be prime");
  PairEnumeration pairs = pair_classes(std::move(source), std::move(target), order_bound);
  WedgeDecomposition d;
  d.kind = DecompositionKind::p_local;
  d.source_name = pairs.source_classification->group()->name();
  d.target_name = pairs.target->name();
  d.has_prime = true;
  d.prime = p;
  d.leading = "Sigma^inf (B" + d.source_name + "_+)^_" + std::to_string(p) +
              " smash Sigma^inf (B" + d.target_name + "_+)";
  for (const auto& pc : pairs.classes)
    if (pc.prime_power && pc.prime == p)
      d.summands.push_back(WedgeSummand{pc, weyl_group(pc), p});
  return d;
}

WedgeDecomposition dual_decomposition(ClassificationPtr source, int order_bound) {
  PairEnumeration pairs = pair_classes(std::move(source), trivial_group(), order_bound);
  WedgeDecomposition d;
  d.kind = DecompositionKind::dual;
  d.source_name = pairs.source_classification->group()->name();
  d.target_name = pairs.target->name();
  for (const auto& pc : pairs.classes)
    if (pc.in_prime_power_family())
      d.summands.push_back(WedgeSummand{pc, weyl_group(pc), pc.prime});
  return d;
}

WedgeDecomposition dual_decomposition_at(ClassificationPtr source, long long p, int order_bound) {
  if (!is_prime(p)) throw std::invalid_argument("completion prime must be prime");
  PairEnumeration pairs = pair_classes(std::move(source), trivial_group(), order_bound);
  WedgeDecomposition d;
  d.kind = DecompositionKind::dual;
  d.source_name = pairs.source_classification->group()->name();
  d.target_name = pairs.target->name();
  d.has_prime = true;
  d.prime = p;
  for (const auto& pc : pairs.classes)
    if (pc.h_order == 1 || (pc.prime_power && pc.prime == p))
      d.summands.push_back(WedgeSummand{pc, weyl_group(pc), p});
  return d;
}

ProfiniteAbelianDescriptor pi0_descriptor(const WedgeDecomposition& d) {
  if (d.kind != DecompositionKind::full && d.kind != DecompositionKind::dual)
    throw std::invalid_argument("pi0 is computed for the full and dual decompositions only");
  ProfiniteAbelianDescriptor out;
  out.confidence = Confidence::proved_stable;
  for (const auto& s : d.summands) {
    if (s.completion_prime == 0)
      ++out.free;
    else if (s.completion_prime > 0)
      ++out.padic[s.completion_prime];
    else
      throw std::logic_error("summand without a completion convention");
  }
  return out;
}

CrosscheckReport crosscheck(ClassificationPtr source, GroupPtr target, int depth,
                            int escalated_depth, int order_bound) {
  RingPtr ring = BurnsideRing::create(source);
  GModule m = bundle_module(ring, target, order_bound);
  WedgeDecomposition dec = function_decomposition(source, target, order_bound);

  CrosscheckReport rep;
  rep.source_name = source->group()->name();
  rep.target_name = target->name();
  rep.pi0 = pi0_descriptor(dec);
  rep.closed_form = closed_form_completion(m);

  BurnsideIdeal ideal = ring->augmentation_ideal();
  rep.tower = classify_completion(quotient_tower(m, ideal, depth));
  rep.depth_used = depth;
  if (rep.tower.confidence == Confidence::unresolved && escalated_depth > depth) {
    rep.tower = classify_completion(quotient_tower(m, ideal, escalated_depth));
    rep.depth_used = escalated_depth;
  }
  rep.pass = rep.tower.confidence != Confidence::unresolved &&
             rep.pi0.same_shape(rep.closed_form) && rep.pi0.same_shape(rep.tower);
  return rep;
}

}  // namespace burnside
