#include "burnside/gmodule.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>

#include "burnside/arith.hpp"
#include "burnside/stable_maps.hpp"

namespace burnside {

namespace {

ActionMatrix zero_matrix(int n) {
  return ActionMatrix(static_cast<size_t>(n), std::vector<long long>(static_cast<size_t>(n), 0));
}

ActionMatrix mat_mul(const ActionMatrix& a, const ActionMatrix& b) {
  size_t n = a.size();
  ActionMatrix out(n, std::vector<long long>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      long long v = a[i][k];
      if (v == 0) continue;
      for (size_t j = 0; j < n; ++j) out[i][j] += v * b[k][j];
    }
  return out;
}

}  // namespace

GModule::GModule(RingPtr ring, std::vector<BasisLabel> labels, std::vector<ActionMatrix> action)
    : ring_(std::move(ring)), labels_(std::move(labels)), action_(std::move(action)) {
  if (!ring_) throw std::invalid_argument("module without ring");
  int m = ring_->class_count();
  int r = rank();
  if (action_.size() != static_cast<size_t>(m))
    throw std::invalid_argument("one action matrix per subgroup class required");
  for (const auto& mat : action_) {
    if (mat.size() != static_cast<size_t>(r))
      throw std::invalid_argument("action matrix row count mismatch");
    for (const auto& row : mat)
      if (row.size() != static_cast<size_t>(r))
        throw std::invalid_argument("action matrix column count mismatch");
  }
  for (const auto& l : labels_)
    if (l.isotropy_class < -1 || l.isotropy_class >= m)
      throw std::invalid_argument("basis isotropy label out of range");

  const ActionMatrix& unit = action_[static_cast<size_t>(m - 1)];
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (unit[static_cast<size_t>(i)][static_cast<size_t>(j)] != (i == j ? 1 : 0))
        throw std::invalid_argument("[G/G] must act as the identity");

  // Ring-module compatibility on all pairs of ring basis elements; this
  // also forces the matrices to commute.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const auto& prod = ring_->basis_product(i, j);
      ActionMatrix expect = zero_matrix(r);
      for (int k = 0; k < m; ++k) {
        long long c = prod[static_cast<size_t>(k)];
        if (c == 0) continue;
        const auto& mk = action_[static_cast<size_t>(k)];
        for (int a = 0; a < r; ++a)
          for (int b = 0; b < r; ++b)
            expect[static_cast<size_t>(a)][static_cast<size_t>(b)] +=
                c * mk[static_cast<size_t>(a)][static_cast<size_t>(b)];
      }
      if (mat_mul(action_[static_cast<size_t>(i)], action_[static_cast<size_t>(j)]) != expect)
        throw std::invalid_argument("action matrices do not represent the ring multiplication");
    }
}

ActionMatrix GModule::act(const BurnsideElement& x) const {
  if (x.classification.get() != ring_->classification().get())
    throw std::invalid_argument("element of a different Burnside ring");
  ActionMatrix out = zero_matrix(rank());
  for (int k = 0; k < ring_->class_count(); ++k) {
    long long c = x.coeff[static_cast<size_t>(k)];
    if (c == 0) continue;
    const auto& mk = action_[static_cast<size_t>(k)];
    for (int a = 0; a < rank(); ++a)
      for (int b = 0; b < rank(); ++b)
        out[static_cast<size_t>(a)][static_cast<size_t>(b)] +=
            c * mk[static_cast<size_t>(a)][static_cast<size_t>(b)];
  }
  return out;
}

GModule regular_module(const RingPtr& ring) {
  int m = ring->class_count();
  std::vector<BasisLabel> labels;
  for (int i = 0; i < m; ++i)
    labels.push_back(BasisLabel{i, "[G/" + ring->classification()->cls(i).label + "]"});
  std::vector<ActionMatrix> action(static_cast<size_t>(m), zero_matrix(m));
  for (int k = 0; k < m; ++k)
    for (int j = 0; j < m; ++j) {
      const auto& prod = ring->basis_product(k, j);
      for (int i = 0; i < m; ++i)
        action[static_cast<size_t>(k)][static_cast<size_t>(i)][static_cast<size_t>(j)] =
            prod[static_cast<size_t>(i)];
    }
  return GModule(ring, std::move(labels), std::move(action));
}

GModule bundle_module(const RingPtr& ring, GroupPtr target, int order_bound) {
  PairEnumeration pairs = pair_classes(ring->classification(), std::move(target), order_bound);
  const FiniteGroup& g = *ring->group();
  const DirectProduct& prod = pairs.product;
  int r = static_cast<int>(pairs.classes.size());
  int m = ring->class_count();

  std::vector<BasisLabel> labels;
  for (const auto& pc : pairs.classes) labels.push_back(BasisLabel{pc.h_class, pc.display_name});

  std::vector<ActionMatrix> action(static_cast<size_t>(m), zero_matrix(r));
  for (int k = 0; k < m; ++k) {
    const auto& kk = ring->classification()->cls(k).representative.members;
    for (int j = 0; j < r; ++j) {
      const BundlePairClass& pc = pairs.classes[static_cast<size_t>(j)];
      const auto& hh = pc.subgroup.members;
      // [G/K'] . (H, phi) = sum over double cosets K' g H of the canonical
      // class of (K' cap gHg^-1, phi conj(g^-1)).
      std::vector<char> covered(static_cast<size_t>(g.order()), 0);
      for (int x = 0; x < g.order(); ++x) {
        if (covered[static_cast<size_t>(x)]) continue;
        for (int a : kk)
          for (int b : hh) covered[static_cast<size_t>(g.mul(g.mul(a, x), b))] = 1;
        std::vector<int> graph;
        int xi = g.inv(x);
        for (int s : kk) {
          int hs = g.conj(xi, s);  // x^-1 s x
          if (!std::binary_search(hh.begin(), hh.end(), hs)) continue;
          graph.push_back(prod.encode(s, pc.phi_of(hs)));
        }
        std::sort(graph.begin(), graph.end());
        auto it = pairs.class_of_graph.find(graph);
        if (it == pairs.class_of_graph.end())
          throw std::logic_error("restricted pair does not land in an enumerated class");
        ++action[static_cast<size_t>(k)][static_cast<size_t>(it->second)][static_cast<size_t>(j)];
      }
    }
  }
  return GModule(ring, std::move(labels), std::move(action));
}

RestrictedModule restrict_to_family(const GModule& m, const Family& f) {
  if (f.classification.get() != m.ring()->classification().get())
    throw std::invalid_argument("family of a different classification");
  std::vector<int> keep;
  for (int i = 0; i < m.rank(); ++i) {
    if (m.label(i).isotropy_class < 0)
      throw std::invalid_argument("module basis carries no isotropy labels");
    if (f.contains_class(m.label(i).isotropy_class)) keep.push_back(i);
  }
  int r = static_cast<int>(keep.size());
  std::vector<BasisLabel> labels;
  for (int i : keep) labels.push_back(m.label(i));

  int classes = m.ring()->class_count();
  std::vector<ActionMatrix> action(static_cast<size_t>(classes), ActionMatrix());
  for (int k = 0; k < classes; ++k) {
    const ActionMatrix& full = m.action(k);
    // Downward closure of the family makes the kept span invariant; entries
    // leaking outside it would be a bug in the action construction.
    std::vector<char> kept(static_cast<size_t>(m.rank()), 0);
    for (int i : keep) kept[static_cast<size_t>(i)] = 1;
    for (int j : keep)
      for (int i = 0; i < m.rank(); ++i)
        if (!kept[static_cast<size_t>(i)] &&
            full[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0)
          throw std::logic_error("family restriction is not action-stable");
    ActionMatrix sub(static_cast<size_t>(r), std::vector<long long>(static_cast<size_t>(r), 0));
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b)
        sub[static_cast<size_t>(a)][static_cast<size_t>(b)] =
            full[static_cast<size_t>(keep[static_cast<size_t>(a)])]
                [static_cast<size_t>(keep[static_cast<size_t>(b)])];
    action[static_cast<size_t>(k)] = std::move(sub);
  }
  return RestrictedModule{GModule(m.ring(), std::move(labels), std::move(action)), std::move(keep)};
}

GModule family_quotient(const GModule& m, const Family& outer, const Family& inner) {
  if (outer.classification.get() != m.ring()->classification().get() ||
      inner.classification.get() != m.ring()->classification().get())
    throw std::invalid_argument("family of a different classification");
  for (int i : inner.member_classes)
    if (!outer.contains_class(i))
      throw std::invalid_argument("inner family must be contained in the outer family");

  RestrictedModule outer_mod = restrict_to_family(m, outer);
  std::vector<int> keep;  // indices into outer_mod basis
  for (int i = 0; i < outer_mod.module.rank(); ++i)
    if (!inner.contains_class(outer_mod.module.label(i).isotropy_class)) keep.push_back(i);

  int r = static_cast<int>(keep.size());
  std::vector<BasisLabel> labels;
  for (int i : keep) labels.push_back(outer_mod.module.label(i));
  int classes = m.ring()->class_count();
  std::vector<ActionMatrix> action(static_cast<size_t>(classes));
  for (int k = 0; k < classes; ++k) {
    const ActionMatrix& full = outer_mod.module.action(k);
    ActionMatrix sub(static_cast<size_t>(r), std::vector<long long>(static_cast<size_t>(r), 0));
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b)
        sub[static_cast<size_t>(a)][static_cast<size_t>(b)] =
            full[static_cast<size_t>(keep[static_cast<size_t>(a)])]
                [static_cast<size_t>(keep[static_cast<size_t>(b)])];
    action[static_cast<size_t>(k)] = std::move(sub);
  }
  return GModule(m.ring(), std::move(labels), std::move(action));
}

QuotientTower quotient_tower(const GModule& m, const BurnsideIdeal& ideal, int depth) {
  if (depth < 1) throw std::invalid_argument("tower depth must be positive");
  int r = m.rank();
  QuotientTower tower;
  tower.depth = depth;

  std::vector<IntMat> gens;
  for (const auto& gen : ideal.generators) {
    ActionMatrix a = m.act(gen);
    IntMat big(r, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) big.at(i, j) = a[static_cast<size_t>(i)][static_cast<size_t>(j)];
    gens.push_back(std::move(big));
  }

  // current = Hermite basis of J^n M; level n+1 applies every ideal
  // generator to every basis row.
  IntMat current(r, r);
  for (int i = 0; i < r; ++i) current.at(i, i) = 1;
  for (int n = 1; n <= depth; ++n) {
    IntMat next(static_cast<int>(gens.size()) * current.rows, r);
    int row = 0;
    for (const IntMat& a : gens)
      for (int v = 0; v < current.rows; ++v) {
        for (int i = 0; i < r; ++i) {
          BigInt acc = 0;
          for (int j = 0; j < r; ++j) acc += a.at(i, j) * current.at(v, j);
          next.at(row, i) = acc;
        }
        ++row;
      }
    IntMat reduced = hermite_row_basis(std::move(next));
    if (n > 1 && !lattice_contains_rows(current, reduced))
      throw std::logic_error("ideal power spans do not form a descending tower");
    QuotientShape shape = quotient_shape(reduced, r);
    TowerLevel level;
    level.free_rank = shape.free_rank;
    level.factors = std::move(shape.torsion);
    tower.levels.push_back(std::move(level));
    current = std::move(reduced);
  }
  return tower;
}

namespace {

std::vector<std::pair<long long, long long>> factor_big(const BigInt& value) {
  std::vector<std::pair<long long, long long>> out;
  BigInt v = value;
  for (long long d = 2; BigInt(d) * d <= v; ++d) {
    if (v % d == 0) {
      long long e = 0;
      while (v % d == 0) {
        v /= d;
        ++e;
      }
      out.emplace_back(d, e);
    }
  }
  if (v > 1) {
    if (v > BigInt(std::numeric_limits<long long>::max()))
      throw std::logic_error("invariant factor prime exceeds 64 bits");
    out.emplace_back(v.convert_to<long long>(), 1);
  }
  return out;
}

}  // namespace

ProfiniteAbelianDescriptor classify_completion(const QuotientTower& tower) {
  if (tower.depth < 5) throw std::invalid_argument("tower classification needs depth >= 5");
  const int window = 3;
  ProfiniteAbelianDescriptor out;
  auto unresolved = [&] {
    ProfiniteAbelianDescriptor u;
    u.confidence = Confidence::unresolved;
    u.unresolved_depth = tower.depth;
    return u;
  };

  const TowerLevel* last3[window];
  for (int i = 0; i < window; ++i)
    last3[i] = &tower.levels[static_cast<size_t>(tower.depth - window + i)];

  if (last3[0]->free_rank != last3[1]->free_rank || last3[1]->free_rank != last3[2]->free_rank)
    return unresolved();
  out.free = last3[2]->free_rank;

  // Per-prime descending exponent lists of the elementary divisors.
  std::map<long long, std::vector<long long>> exps[window];
  for (int i = 0; i < window; ++i)
    for (const BigInt& f : last3[i]->factors)
      for (auto [p, e] : factor_big(f)) exps[i][p].push_back(e);
  for (int i = 0; i < window; ++i)
    for (auto& [p, list] : exps[i]) std::sort(list.begin(), list.end(), std::greater<>());

  std::set<long long> primes;
  for (int i = 0; i < window; ++i)
    for (const auto& [p, list] : exps[i]) primes.insert(p);

  for (long long p : primes) {
    std::vector<long long> e0 = exps[0][p], e1 = exps[1][p], e2 = exps[2][p];
    if (e0.size() != e1.size() || e1.size() != e2.size()) return unresolved();
    for (size_t i = 0; i < e0.size(); ++i) {
      // A steady multiplier p^d (d >= 1) per step marks a p-adic summand.
      // The exponent step is not always 1: for C4 the ideal element
      // [C4/1] - 4 squares to -4 times itself, so one direction of the
      // filtration scales by 4 each level, and lim Z/4^n is still Z_2.
      long long d1 = e1[i] - e0[i], d2 = e2[i] - e1[i];
      if (d1 == d2 && d1 >= 1) {
        ++out.padic[p];
      } else if (d1 == 0 && d2 == 0) {
        long long v = 1;
        for (long long k = 0; k < e2[i]; ++k) v *= p;
        out.torsion.push_back(v);
      } else {
        return unresolved();
      }
    }
  }
  std::sort(out.torsion.begin(), out.torsion.end());
  out.confidence = Confidence::heuristic;
  return out;
}

ProfiniteAbelianDescriptor closed_form_completion(const GModule& m) {
  ProfiniteAbelianDescriptor out;
  out.confidence = Confidence::proved_stable;
  for (int i = 0; i < m.rank(); ++i) {
    int iso = m.label(i).isotropy_class;
    if (iso < 0) throw std::invalid_argument("module basis carries no isotropy labels");
    long long order = m.ring()->classification()->order_of(iso);
    long long base = prime_power_base(order);
    if (order == 1)
      ++out.free;
    else if (base > 0)
      ++out.padic[base];
  }
  return out;
}

std::string descriptor_to_string(const ProfiniteAbelianDescriptor& d) {
  std::string out;
  auto append = [&](const std::string& term) {
    if (!out.empty()) out += " + ";
    out += term;
  };
  if (d.free == 1)
    append("Z");
  else if (d.free > 1)
    append("Z^" + std::to_string(d.free));
  for (const auto& [p, b] : d.padic) {
    std::string term = "Z_" + std::to_string(p);
    if (b > 1) term += "^" + std::to_string(b);
    append(term);
  }
  for (long long t : d.torsion) append("Z/" + std::to_string(t));
  if (out.empty()) out = "0";
  return out;
}

std::string confidence_name(Confidence c) {
  switch (c) {
    case Confidence::proved_stable: return "proved-stable";
    case Confidence::heuristic: return "heuristic";
    case Confidence::unresolved: return "unresolved";
  }
  return "?";
}

}  // namespace burnside
