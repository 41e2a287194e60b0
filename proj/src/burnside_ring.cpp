#include "burnside/burnside_ring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "burnside/arith.hpp"

namespace burnside {

namespace {

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

TableOfMarks table_of_marks(const ClassificationPtr& cls) {
  const FiniteGroup& g = *cls->group();
  int m = cls->count();
  TableOfMarks t{cls, std::vector<std::vector<long long>>(
                          static_cast<size_t>(m), std::vector<long long>(static_cast<size_t>(m), 0))};
  for (int k = 0; k < m; ++k) {
    const auto& kk = cls->cls(k).representative.members;
    for (int h = 0; h < m; ++h) {
      // |(G/K)^H| = |{x : x H x^-1 <= K}| / |K|
      const auto& hh = cls->cls(h).representative.members;
      long long transporter = 0;
      for (int x = 0; x < g.order(); ++x) {
        bool inside = true;
        for (int v : hh)
          if (!std::binary_search(kk.begin(), kk.end(), g.conj(x, v))) {
            inside = false;
            break;
          }
        if (inside) ++transporter;
      }
      if (transporter % static_cast<long long>(kk.size()) != 0)
        throw std::logic_error("transporter count not divisible by subgroup order");
      t.m[static_cast<size_t>(k)][static_cast<size_t>(h)] =
          transporter / static_cast<long long>(kk.size());
    }
  }
  return t;
}

BurnsideElement::BurnsideElement(ClassificationPtr cls, std::vector<long long> c)
    : classification(std::move(cls)), coeff(std::move(c)) {
  if (!classification) throw std::invalid_argument("element without classification");
  if (coeff.size() != static_cast<size_t>(classification->count()))
    throw std::invalid_argument("element coefficient count mismatch");
}

BurnsideElement& BurnsideElement::operator+=(const BurnsideElement& o) {
  if (classification.get() != o.classification.get())
    throw std::invalid_argument("elements of different Burnside rings");
  for (size_t i = 0; i < coeff.size(); ++i) coeff[i] += o.coeff[i];
  return *this;
}

BurnsideElement& BurnsideElement::operator-=(const BurnsideElement& o) {
  if (classification.get() != o.classification.get())
    throw std::invalid_argument("elements of different Burnside rings");
  for (size_t i = 0; i < coeff.size(); ++i) coeff[i] -= o.coeff[i];
  return *this;
}

BurnsideElement& BurnsideElement::operator*=(long long s) {
  for (auto& c : coeff) c *= s;
  return *this;
}

BurnsideRing::BurnsideRing(ClassificationPtr cls) : cls_(std::move(cls)) {
  marks_ = table_of_marks(cls_);
  const FiniteGroup& g = *cls_->group();
  int m = cls_->count();
  products_.assign(static_cast<size_t>(m) * m, {});

  // [G/H][G/K] = sum over double cosets HgK of [G/(H cap gKg^-1)]: the orbit
  // of (eH, gK) under the diagonal action has stabilizer H cap gKg^-1.
  for (int i = 0; i < m; ++i) {
    const auto& hh = cls_->cls(i).representative.members;
    for (int j = i; j < m; ++j) {
      const auto& kk = cls_->cls(j).representative.members;
      std::vector<long long> out(static_cast<size_t>(m), 0);
      std::vector<char> covered(static_cast<size_t>(g.order()), 0);
      for (int x = 0; x < g.order(); ++x) {
        if (covered[static_cast<size_t>(x)]) continue;
        for (int a : hh)
          for (int b : kk) covered[static_cast<size_t>(g.mul(g.mul(a, x), b))] = 1;
        std::vector<int> stab = intersect_sorted(hh, conjugate_members(g, kk, x));
        ++out[static_cast<size_t>(cls_->class_of(stab))];
      }
      products_[static_cast<size_t>(i) * m + j] = out;
      products_[static_cast<size_t>(j) * m + i] = std::move(out);
    }
  }
}

std::shared_ptr<const BurnsideRing> BurnsideRing::create(GroupPtr g) {
  return create(subgroup_classes(std::move(g)));
}

std::shared_ptr<const BurnsideRing> BurnsideRing::create(ClassificationPtr cls) {
  return std::shared_ptr<const BurnsideRing>(new BurnsideRing(std::move(cls)));
}

BurnsideElement BurnsideRing::zero() const {
  return BurnsideElement(cls_, std::vector<long long>(static_cast<size_t>(cls_->count()), 0));
}

BurnsideElement BurnsideRing::basis(int cls_index) const {
  if (cls_index < 0 || cls_index >= cls_->count())
    throw std::invalid_argument("basis class index out of range");
  BurnsideElement e = zero();
  e.coeff[static_cast<size_t>(cls_index)] = 1;
  return e;
}

BurnsideElement BurnsideRing::unit() const { return basis(cls_->count() - 1); }

const std::vector<long long>& BurnsideRing::basis_product(int i, int j) const {
  return products_[static_cast<size_t>(i) * cls_->count() + j];
}

BurnsideElement BurnsideRing::multiply(const BurnsideElement& a, const BurnsideElement& b) const {
  if (a.classification.get() != cls_.get() || b.classification.get() != cls_.get())
    throw std::invalid_argument("elements of a different Burnside ring");
  BurnsideElement out = zero();
  int m = cls_->count();
  for (int i = 0; i < m; ++i) {
    if (a.coeff[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; j < m; ++j) {
      if (b.coeff[static_cast<size_t>(j)] == 0) continue;
      long long c = a.coeff[static_cast<size_t>(i)] * b.coeff[static_cast<size_t>(j)];
      const auto& prod = basis_product(i, j);
      for (int k = 0; k < m; ++k) out.coeff[static_cast<size_t>(k)] += c * prod[static_cast<size_t>(k)];
    }
  }
  return out;
}

long long BurnsideRing::mark(int h_class, const BurnsideElement& x) const {
  if (x.classification.get() != cls_.get())
    throw std::invalid_argument("element of a different Burnside ring");
  if (h_class < 0 || h_class >= cls_->count())
    throw std::invalid_argument("mark class index out of range");
  long long out = 0;
  for (int k = 0; k < cls_->count(); ++k)
    out += x.coeff[static_cast<size_t>(k)] *
           marks_.m[static_cast<size_t>(k)][static_cast<size_t>(h_class)];
  return out;
}

std::vector<long long> BurnsideRing::marks_vector(const BurnsideElement& x) const {
  std::vector<long long> out(static_cast<size_t>(cls_->count()));
  for (int h = 0; h < cls_->count(); ++h) out[static_cast<size_t>(h)] = mark(h, x);
  return out;
}

BurnsideIdeal BurnsideRing::augmentation_ideal() const {
  BurnsideIdeal ideal;
  int m = cls_->count();
  for (int k = 0; k + 1 < m; ++k) {
    BurnsideElement gen = basis(k);
    long long index = static_cast<long long>(group()->order()) / cls_->order_of(k);
    gen -= unit() * index;
    ideal.generators.push_back(std::move(gen));
  }
  return ideal;
}

IntegerIdeal BurnsideRing::phi_ideal(int h_class, const BurnsideIdeal& ideal) const {
  long long g = 0;
  for (const auto& gen : ideal.generators) g = std::gcd(g, mark(h_class, gen));
  return IntegerIdeal{g < 0 ? -g : g};
}

TrichotomyReport BurnsideRing::verify_trichotomy() const {
  TrichotomyReport report;
  BurnsideIdeal ideal = augmentation_ideal();
  for (int h = 0; h < cls_->count(); ++h) {
    TrichotomyRow row{};
    row.class_index = h;
    row.label = cls_->cls(h).label;
    row.subgroup_order = cls_->order_of(h);
    row.ideal = phi_ideal(h, ideal).generator;
    long long base = prime_power_base(row.subgroup_order);
    if (row.subgroup_order == 1) {
      row.expected = IdealForm::zero;
      row.prime = 0;
      row.ok = row.ideal == 0;
    } else if (base > 0) {
      row.expected = IdealForm::prime_power;
      row.prime = base;
      row.ok = row.ideal > 1 && prime_power_base(row.ideal) == base;
    } else {
      row.expected = IdealForm::unit;
      row.prime = 0;
      row.ok = row.ideal == 1;
    }
    if (row.ideal > 1) {
      long long b = prime_power_base(row.ideal);
      if (b > 0) {
        long long e = 0;
        for (long long v = row.ideal; v > 1; v /= b) ++e;
        row.exponent = e;
      }
    }
    report.rows.push_back(std::move(row));
    report.pass = report.pass && report.rows.back().ok;
  }
  return report;
}

}  // namespace burnside
