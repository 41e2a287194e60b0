#include "burnside/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "burnside/arith.hpp"

namespace burnside {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

FiniteGroup::FiniteGroup(std::string name, int order, std::vector<int> table,
                         std::optional<PermGenerators> perm)
    : name_(std::move(name)), order_(order), table_(std::move(table)), perm_(std::move(perm)) {
  if (order_ <= 0) throw std::invalid_argument("group order must be positive");
  if (table_.size() != static_cast<size_t>(order_) * order_)
    throw std::invalid_argument("multiplication table size mismatch");
  for (int x : table_)
    if (x < 0 || x >= order_) throw std::invalid_argument("multiplication table entry out of range");

  for (int e = 0; e < order_; ++e) {
    bool ok = true;
    for (int g = 0; g < order_ && ok; ++g)
      ok = mul(e, g) == g && mul(g, e) == g;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) throw std::invalid_argument("multiplication table has no identity");

  inverse_.assign(order_, -1);
  for (int g = 0; g < order_; ++g) {
    for (int h = 0; h < order_; ++h)
      if (mul(g, h) == identity_ && mul(h, g) == identity_) {
        inverse_[g] = h;
        break;
      }
    if (inverse_[g] < 0) throw std::invalid_argument("element without two-sided inverse");
  }
  validate();
}

void FiniteGroup::validate() const {
  // Latin square: every row and column is a permutation.
  std::vector<char> seen(order_);
  for (int g = 0; g < order_; ++g) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int h = 0; h < order_; ++h) seen[mul(g, h)] = 1;
    for (char c : seen)
      if (!c) throw std::invalid_argument("multiplication table row is not a permutation");
    std::fill(seen.begin(), seen.end(), 0);
    for (int h = 0; h < order_; ++h) seen[mul(h, g)] = 1;
    for (char c : seen)
      if (!c) throw std::invalid_argument("multiplication table column is not a permutation");
  }

  auto check = [&](int a, int b, int c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      throw std::invalid_argument("multiplication table is not associative");
  };
  if (order_ <= 64) {
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b)
        for (int c = 0; c < order_; ++c) check(a, b, c);
  } else {
    std::mt19937 rng(0x9e3779b9u ^ static_cast<unsigned>(order_));
    std::uniform_int_distribution<int> pick(0, order_ - 1);
    for (int t = 0; t < 10 * order_; ++t) check(pick(rng), pick(rng), pick(rng));
  }
}

int FiniteGroup::power(int g, long long e) const {
  if (e < 0) {
    g = inv(g);
    e = -e;
  }
  int acc = identity_;
  int base = g;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

int FiniteGroup::element_order(int g) const {
  int x = g;
  int n = 1;
  while (x != identity_) {
    x = mul(x, g);
    ++n;
  }
  return n;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

namespace {

GroupPtr cyclic(long long n, int bound) {
  if (n > bound) throw std::invalid_argument("group order exceeds configured bound");
  int m = static_cast<int>(n);
  std::vector<int> t(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) t[static_cast<size_t>(a) * m + b] = (a + b) % m;
  return std::make_shared<FiniteGroup>("C" + std::to_string(n), m, std::move(t));
}

// Order 2n: indices 0..n-1 are rotations r^i, n..2n-1 are reflections r^i s.
GroupPtr dihedral(long long n, int bound) {
  if (2 * n > bound) throw std::invalid_argument("group order exceeds configured bound");
  int m = static_cast<int>(n);
  int ord = 2 * m;
  std::vector<int> t(static_cast<size_t>(ord) * ord);
  auto idx = [&](int a, int b) -> int& { return t[static_cast<size_t>(a) * ord + b]; };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      idx(i, j) = (i + j) % m;                  // r^i r^j
      idx(i, m + j) = m + (i + j) % m;          // r^i (r^j s)
      idx(m + i, j) = m + ((i - j) % m + m) % m;  // (r^i s) r^j = r^(i-j) s
      idx(m + i, m + j) = ((i - j) % m + m) % m;  // (r^i s)(r^j s) = r^(i-j)
    }
  return std::make_shared<FiniteGroup>("D" + std::to_string(n), ord, std::move(t));
}

bool perm_is_even(const std::vector<int>& p) {
  int n = static_cast<int>(p.size());
  std::vector<char> seen(n);
  int transpositions = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

GroupPtr permutation_list_group(std::string name, std::vector<std::vector<int>> elems,
                                std::optional<PermGenerators> perm = std::nullopt) {
  int ord = static_cast<int>(elems.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < ord; ++i) index[elems[i]] = i;
  int degree = static_cast<int>(elems[0].size());
  std::vector<int> t(static_cast<size_t>(ord) * ord);
  std::vector<int> prod(degree);
  for (int i = 0; i < ord; ++i)
    for (int j = 0; j < ord; ++j) {
      for (int p = 0; p < degree; ++p) prod[p] = elems[i][elems[j][p]];
      auto it = index.find(prod);
      if (it == index.end()) throw std::logic_error("permutation set not closed");
      t[static_cast<size_t>(i) * ord + j] = it->second;
    }
  return std::make_shared<FiniteGroup>(std::move(name), ord, std::move(t), std::move(perm));
}

GroupPtr symmetric(long long n, int bound, bool alternating_only) {
  if (n < 1) throw std::invalid_argument("degree must be positive");
  long long ord = 1;
  for (long long i = 2; i <= n; ++i) {
    ord *= i;
    if (ord > 4 * static_cast<long long>(bound)) break;
  }
  if (alternating_only && n >= 2) ord /= 2;
  if (ord > bound) throw std::invalid_argument("group order exceeds configured bound");
  std::vector<int> base(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) base[static_cast<size_t>(i)] = i;
  std::vector<std::vector<int>> elems;
  do {
    if (!alternating_only || perm_is_even(base)) elems.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  std::string name = (alternating_only ? "A" : "S") + std::to_string(n);
  return permutation_list_group(std::move(name), std::move(elems));
}

// 1, -1, i, -i, j, -j, k, -k; index = 2 * basis + sign.
GroupPtr quaternion8() {
  // basis unit products: entry {sign, basis} of b1 * b2 with 0=1,1=i,2=j,3=k
  static const int bmul[4][4][2] = {
      {{0, 0}, {0, 1}, {0, 2}, {0, 3}},
      {{0, 1}, {1, 0}, {0, 3}, {1, 2}},
      {{0, 2}, {1, 3}, {1, 0}, {0, 1}},
      {{0, 3}, {0, 2}, {1, 1}, {1, 0}},
  };
  std::vector<int> t(64);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int b1 = x / 2, s1 = x % 2, b2 = y / 2, s2 = y % 2;
      int s = (s1 + s2 + bmul[b1][b2][0]) % 2;
      int b = bmul[b1][b2][1];
      t[static_cast<size_t>(x) * 8 + y] = 2 * b + s;
    }
  return std::make_shared<FiniteGroup>("Q8", 8, std::move(t));
}

GroupPtr klein4() {
  std::vector<int> t(16);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) t[static_cast<size_t>(x) * 4 + y] = x ^ y;
  return std::make_shared<FiniteGroup>("V4", 4, std::move(t));
}

GroupPtr parse_name(const std::string& token, int bound) {
  if (token == "Q8") return quaternion8();
  if (token == "V4") return klein4();
  if (token.size() < 2) throw std::invalid_argument("unrecognized group name '" + token + "'");
  char kind = token[0];
  for (size_t i = 1; i < token.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(token[i])))
      throw std::invalid_argument("unrecognized group name '" + token + "'");
  long long v = std::stoll(token.substr(1));
  if (v <= 0) throw std::invalid_argument("group order parameter must be positive in '" + token + "'");
  switch (kind) {
    case 'C': return cyclic(v, bound);
    case 'D': return dihedral(v, bound);
    case 'S': return symmetric(v, bound, false);
    case 'A': return symmetric(v, bound, true);
    default: throw std::invalid_argument("unrecognized group name '" + token + "'");
  }
}

std::vector<std::vector<int>> parse_cycles(const std::string& text, int degree,
                                           const std::string& spec) {
  std::vector<std::vector<int>> cycles;
  size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(')
      throw std::invalid_argument("expected '(' in permutation spec '" + spec + "'");
    size_t close = text.find(')', i);
    if (close == std::string::npos)
      throw std::invalid_argument("unbalanced parentheses in permutation spec '" + spec + "'");
    std::istringstream in(text.substr(i + 1, close - i - 1));
    std::vector<int> cycle;
    long long p;
    while (in >> p) {
      if (p < 1 || p > degree)
        throw std::invalid_argument("cycle point out of range in permutation spec '" + spec + "'");
      cycle.push_back(static_cast<int>(p - 1));
    }
    if (!in.eof())
      throw std::invalid_argument("malformed cycle in permutation spec '" + spec + "'");
    if (cycle.empty())
      throw std::invalid_argument("empty cycle in permutation spec '" + spec + "'");
    cycles.push_back(std::move(cycle));
    i = close + 1;
  }
  if (cycles.empty())
    throw std::invalid_argument("generator without cycles in permutation spec '" + spec + "'");
  return cycles;
}

std::string render_cycles(const std::vector<int>& img) {
  int degree = static_cast<int>(img.size());
  std::string out;
  std::vector<char> seen(degree);
  for (int p = 0; p < degree; ++p) {
    if (seen[p] || img[p] == p) {
      seen[p] = 1;
      continue;
    }
    out += '(';
    bool first = true;
    for (int q = p; !seen[q]; q = img[q]) {
      seen[q] = 1;
      if (!first) out += ' ';
      out += std::to_string(q + 1);
      first = false;
    }
    out += ')';
  }
  if (out.empty()) out = "(1)";
  return out;
}

GroupPtr parse_perm_group(const std::string& spec, int bound) {
  size_t open = spec.find('(');
  size_t close = spec.find(')', open == std::string::npos ? 0 : open);
  size_t colon = spec.find(':', close == std::string::npos ? 0 : close);
  if (open == std::string::npos || close == std::string::npos || colon == std::string::npos)
    throw std::invalid_argument("malformed permutation spec '" + spec + "'");
  std::string deg_text = trim(spec.substr(open + 1, close - open - 1));
  if (deg_text.empty() ||
      !std::all_of(deg_text.begin(), deg_text.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw std::invalid_argument("malformed degree in permutation spec '" + spec + "'");
  long long degree = std::stoll(deg_text);
  if (degree < 1 || degree > 4096)
    throw std::invalid_argument("permutation degree out of range in '" + spec + "'");

  std::string body = trim(spec.substr(colon + 1));
  if (body.empty())
    throw std::invalid_argument("empty generator set in permutation spec '" + spec + "'");

  std::vector<std::vector<int>> gens;
  size_t start = 0;
  while (start <= body.size()) {
    size_t comma = body.find(',', start);
    std::string token = trim(comma == std::string::npos ? body.substr(start)
                                                        : body.substr(start, comma - start));
    if (token.empty())
      throw std::invalid_argument("empty generator in permutation spec '" + spec + "'");
    auto cycles = parse_cycles(token, static_cast<int>(degree), spec);
    std::vector<int> img(static_cast<size_t>(degree));
    for (int p = 0; p < degree; ++p) img[static_cast<size_t>(p)] = p;
    std::vector<char> used(static_cast<size_t>(degree));
    for (const auto& cycle : cycles) {
      for (int p : cycle) {
        if (used[static_cast<size_t>(p)])
          throw std::invalid_argument("cycles within a generator must be disjoint in '" + spec + "'");
        used[static_cast<size_t>(p)] = 1;
      }
      for (size_t k = 0; k < cycle.size(); ++k)
        img[static_cast<size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
    }
    gens.push_back(std::move(img));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }

  // Breadth-first closure from the identity, multiplying on the right by the
  // generators in input order; discovery order is the element order.
  std::vector<std::vector<int>> elems;
  std::map<std::vector<int>, int> index;
  std::vector<int> id(static_cast<size_t>(degree));
  for (int p = 0; p < degree; ++p) id[static_cast<size_t>(p)] = p;
  elems.push_back(id);
  index[id] = 0;
  std::vector<int> prod(static_cast<size_t>(degree));
  for (size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      for (int p = 0; p < degree; ++p)
        prod[static_cast<size_t>(p)] = elems[head][static_cast<size_t>(g[static_cast<size_t>(p)])];
      if (index.emplace(prod, static_cast<int>(elems.size())).second) {
        elems.push_back(prod);
        if (static_cast<int>(elems.size()) > bound)
          throw std::invalid_argument("group order exceeds configured bound");
      }
    }
  }

  std::string name = "perm(" + std::to_string(degree) + "): ";
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) name += ", ";
    name += render_cycles(gens[i]);
  }
  PermGenerators pg{static_cast<int>(degree), gens};
  return permutation_list_group(std::move(name), std::move(elems), std::move(pg));
}

}  // namespace

GroupPtr parse_group(const std::string& spec, int order_bound) {
  std::string s = trim(spec);
  if (s.empty()) throw std::invalid_argument("empty group spec");
  if (s.rfind("perm", 0) == 0) return parse_perm_group(s, order_bound);

  std::vector<std::string> tokens;
  size_t start = 0;
  while (start <= s.size()) {
    size_t x = s.find('x', start);
    tokens.push_back(trim(x == std::string::npos ? s.substr(start) : s.substr(start, x - start)));
    if (x == std::string::npos) break;
    start = x + 1;
  }
  for (const auto& t : tokens)
    if (t.empty()) throw std::invalid_argument("empty factor in group spec '" + spec + "'");

  GroupPtr g = parse_name(tokens[0], order_bound);
  for (size_t i = 1; i < tokens.size(); ++i)
    g = direct_product(g, parse_name(tokens[i], order_bound), order_bound).group;
  return g;
}

Subgroup::Subgroup(GroupPtr parent_in, std::vector<int> members_in)
    : parent(std::move(parent_in)), members(std::move(members_in)) {
  if (!parent) throw std::invalid_argument("subgroup without parent group");
  if (members.empty()) throw std::invalid_argument("subgroup must contain the identity");
  if (!std::is_sorted(members.begin(), members.end()))
    throw std::invalid_argument("subgroup members must be sorted");
  for (size_t i = 0; i + 1 < members.size(); ++i)
    if (members[i] == members[i + 1]) throw std::invalid_argument("duplicate subgroup member");
  for (int m : members)
    if (m < 0 || m >= parent->order()) throw std::invalid_argument("subgroup member out of range");
  if (!contains(parent->identity()))
    throw std::invalid_argument("subgroup must contain the identity");
  for (int a : members)
    for (int b : members)
      if (!contains(parent->mul(a, b)))
        throw std::invalid_argument("subgroup members are not closed under multiplication");
  if (parent->order() % static_cast<int>(members.size()) != 0)
    throw std::invalid_argument("subgroup order does not divide the group order");
}

bool Subgroup::contains(int g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

GroupHom::GroupHom(GroupPtr source_in, GroupPtr target_in, std::vector<int> images_in)
    : source(std::move(source_in)), target(std::move(target_in)), images(std::move(images_in)) {
  if (!source || !target) throw std::invalid_argument("homomorphism without source or target");
  if (images.size() != static_cast<size_t>(source->order()))
    throw std::invalid_argument("homomorphism image list size mismatch");
  for (int x : images)
    if (x < 0 || x >= target->order())
      throw std::invalid_argument("homomorphism image out of range");
  if (images[source->identity()] != target->identity())
    throw std::invalid_argument("homomorphism does not preserve the identity");
  auto check = [&](int a, int b) {
    if (images[source->mul(a, b)] != target->mul(images[a], images[b]))
      throw std::invalid_argument("map is not multiplicative");
  };
  int n = source->order();
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) check(a, b);
  } else {
    std::mt19937 rng(0x7f4a7c15u ^ static_cast<unsigned>(n));
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < 10 * n; ++t) check(pick(rng), pick(rng));
  }
}

DirectProduct direct_product(GroupPtr left, GroupPtr right, int order_bound) {
  long long ord = static_cast<long long>(left->order()) * right->order();
  if (ord > order_bound) throw std::invalid_argument("group order exceeds configured bound");
  int n = static_cast<int>(ord);
  int nr = right->order();
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int g = left->mul(a / nr, b / nr);
      int k = right->mul(a % nr, b % nr);
      t[static_cast<size_t>(a) * n + b] = g * nr + k;
    }
  GroupPtr prod = std::make_shared<FiniteGroup>(left->name() + "x" + right->name(), n, std::move(t));

  std::vector<int> el(static_cast<size_t>(left->order()));
  for (int g = 0; g < left->order(); ++g) el[static_cast<size_t>(g)] = g * nr + right->identity();
  std::vector<int> er(static_cast<size_t>(nr));
  for (int k = 0; k < nr; ++k) er[static_cast<size_t>(k)] = left->identity() * nr + k;
  std::vector<int> pl(static_cast<size_t>(n)), pr(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) {
    pl[static_cast<size_t>(x)] = x / nr;
    pr[static_cast<size_t>(x)] = x % nr;
  }
  return DirectProduct{prod,
                       left,
                       right,
                       GroupHom(left, prod, std::move(el)),
                       GroupHom(right, prod, std::move(er)),
                       GroupHom(prod, left, std::move(pl)),
                       GroupHom(prod, right, std::move(pr))};
}

std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& seeds) {
  std::vector<char> in(static_cast<size_t>(g.order()));
  std::vector<int> list;
  std::vector<int> queue;
  auto add = [&](int x) {
    if (!in[static_cast<size_t>(x)]) {
      in[static_cast<size_t>(x)] = 1;
      list.push_back(x);
      queue.push_back(x);
    }
  };
  add(g.identity());
  for (int s : seeds) {
    if (s < 0 || s >= g.order()) throw std::invalid_argument("generator index out of range");
    add(s);
  }
  while (!queue.empty()) {
    int x = queue.back();
    queue.pop_back();
    for (size_t i = 0; i < list.size(); ++i) {
      add(g.mul(x, list[i]));
      add(g.mul(list[i], x));
    }
  }
  std::sort(list.begin(), list.end());
  return list;
}

std::vector<int> conjugate_members(const FiniteGroup& g, const std::vector<int>& members, int x) {
  std::vector<int> out;
  out.reserve(members.size());
  for (int m : members) out.push_back(g.conj(x, m));
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup normalizer(GroupPtr g, const Subgroup& h) {
  if (h.parent.get() != g.get())
    throw std::invalid_argument("normalizer: subgroup belongs to a different group");
  std::vector<int> members;
  for (int x = 0; x < g->order(); ++x)
    if (conjugate_members(*g, h.members, x) == h.members) members.push_back(x);
  return Subgroup(g, std::move(members));
}

QuotientGroup quotient_group(GroupPtr g, const Subgroup& n) {
  if (n.parent.get() != g.get())
    throw std::invalid_argument("quotient_group: subgroup belongs to a different group");
  for (int x = 0; x < g->order(); ++x)
    for (int m : n.members)
      if (!n.contains(g->conj(x, m)))
        throw std::invalid_argument(
            "quotient_group: subgroup is not normal; conjugation by element " +
            std::to_string(x) + " moves member " + std::to_string(m) + " to " +
            std::to_string(g->conj(x, m)) + " outside the subgroup");

  std::vector<int> coset_of(static_cast<size_t>(g->order()), -1);
  std::vector<std::vector<int>> cosets;
  for (int x = 0; x < g->order(); ++x) {
    if (coset_of[static_cast<size_t>(x)] >= 0) continue;
    std::vector<int> coset;
    for (int m : n.members) coset.push_back(g->mul(x, m));
    std::sort(coset.begin(), coset.end());
    int idx = static_cast<int>(cosets.size());
    for (int y : coset) coset_of[static_cast<size_t>(y)] = idx;
    cosets.push_back(std::move(coset));
  }

  int q = static_cast<int>(cosets.size());
  std::vector<int> t(static_cast<size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      t[static_cast<size_t>(i) * q + j] =
          coset_of[static_cast<size_t>(g->mul(cosets[static_cast<size_t>(i)][0],
                                              cosets[static_cast<size_t>(j)][0]))];
  GroupPtr quot = std::make_shared<FiniteGroup>(
      g->name() + "/" + std::to_string(n.order()), q, std::move(t));
  std::vector<int> proj(coset_of.begin(), coset_of.end());
  return QuotientGroup{quot, GroupHom(g, quot, std::move(proj)), std::move(cosets)};
}

Subgroup commutator_subgroup(GroupPtr g) {
  std::vector<int> comms;
  for (int a = 0; a < g->order(); ++a)
    for (int b = 0; b < g->order(); ++b)
      comms.push_back(g->mul(g->mul(a, b), g->mul(g->inv(a), g->inv(b))));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return Subgroup(g, generated_subgroup(*g, comms));
}

namespace {

long long p_valuation(long long n, long long p) {
  long long v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

}  // namespace

std::vector<long long> abelianization(const FiniteGroup& g) {
  GroupPtr gp = std::make_shared<FiniteGroup>(g.name(), g.order(), [&] {
    std::vector<int> t(static_cast<size_t>(g.order()) * g.order());
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b) t[static_cast<size_t>(a) * g.order() + b] = g.mul(a, b);
    return t;
  }());
  QuotientGroup q = quotient_group(gp, commutator_subgroup(gp));
  const FiniteGroup& ab = *q.group;

  // For each prime: the count of elements killed by p^j determines the
  // partition of the p-primary component (conjugate partition of the
  // valuation increments).
  std::vector<std::vector<long long>> parts_per_prime;
  for (auto [p, a] : factorize(ab.order())) {
    std::vector<long long> increments;
    long long prev = 0;  // valuation of S_0 = 1
    for (long long j = 1; j <= a; ++j) {
      long long pj = 1;
      for (long long k = 0; k < j; ++k) pj *= p;
      long long count = 0;
      for (int x = 0; x < ab.order(); ++x)
        if (ab.power(x, pj) == ab.identity()) ++count;
      long long val = p_valuation(count, p);
      increments.push_back(val - prev);
      prev = val;
      if (increments.back() == 0) break;
    }
    std::vector<long long> parts;
    for (long long i = 1; i <= (increments.empty() ? 0 : increments[0]); ++i) {
      long long lambda = 0;
      for (long long inc : increments)
        if (inc >= i) ++lambda;
      parts.push_back(lambda);
    }
    parts_per_prime.push_back(std::move(parts));
  }

  size_t m = 0;
  for (const auto& parts : parts_per_prime) m = std::max(m, parts.size());
  std::vector<long long> factors;
  for (size_t k = 0; k < m; ++k) {
    long long d = 1;
    size_t pi = 0;
    for (auto [p, a] : factorize(ab.order())) {
      const auto& parts = parts_per_prime[pi];
      long long e = k < parts.size() ? parts[k] : 0;
      for (long long i = 0; i < e; ++i) d *= p;
      ++pi;
    }
    factors.push_back(d);
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

SubgroupGroup subgroup_as_group(const Subgroup& h) {
  int n = h.order();
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int prod = h.parent->mul(h.members[static_cast<size_t>(i)], h.members[static_cast<size_t>(j)]);
      auto it = std::lower_bound(h.members.begin(), h.members.end(), prod);
      t[static_cast<size_t>(i) * n + j] = static_cast<int>(it - h.members.begin());
    }
  GroupPtr grp = std::make_shared<FiniteGroup>(
      h.parent->name() + "|" + std::to_string(n), n, std::move(t));
  std::vector<int> to_parent = h.members;
  return SubgroupGroup{grp, h.members, GroupHom(grp, h.parent, std::move(to_parent))};
}

namespace {

std::map<int, int> order_profile(const FiniteGroup& g) {
  std::map<int, int> prof;
  for (int x = 0; x < g.order(); ++x) ++prof[g.element_order(x)];
  return prof;
}

bool is_dihedral_group(const FiniteGroup& g) {
  int n = g.order();
  if (n % 2 != 0 || n < 6) return false;
  int m = n / 2;
  for (int r = 0; r < n; ++r) {
    if (g.element_order(r) != m) continue;
    std::vector<int> cyc = generated_subgroup(g, {r});
    for (int s = 0; s < n; ++s) {
      if (std::binary_search(cyc.begin(), cyc.end(), s)) continue;
      if (g.mul(s, s) == g.identity() && g.conj(s, r) == g.inv(r)) return true;
    }
  }
  return false;
}

}  // namespace

std::string structure_name(const FiniteGroup& g) {
  int n = g.order();
  if (n == 1) return "1";
  if (g.is_abelian()) {
    std::string out;
    for (long long d : abelianization(g)) {
      if (!out.empty()) out += "x";
      out += "C" + std::to_string(d);
    }
    return out;
  }
  if (n == 6) return "S3";
  if (is_dihedral_group(g)) return "D" + std::to_string(n / 2);
  auto prof = order_profile(g);
  if (n == 8 && prof[2] == 1) return "Q8";
  if (n == 12 && prof[2] == 3 && prof[3] == 8) return "A4";
  if (n == 12 && prof[2] == 1) return "Dic3";
  if (n == 24 && prof[2] == 9 && prof[3] == 8 && prof[4] == 6) return "S4";
  if (n == 60 && prof[2] == 15 && prof[3] == 20 && prof[5] == 24) return "A5";
  return "G" + std::to_string(n);
}

}  // namespace burnside
