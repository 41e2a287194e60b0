#include "burnside/json_io.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace burnside {

namespace {

Json big_to_json(const BigInt& v) {
  if (v <= BigInt(std::numeric_limits<long long>::max()))
    return Json(v.convert_to<long long>());
  return Json(v.str());
}

std::string pad_left(const std::string& s, size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string kind_name(DecompositionKind k) {
  switch (k) {
    case DecompositionKind::full: return "full";
    case DecompositionKind::p_local: return "p-local";
    case DecompositionKind::dual: return "dual";
    case DecompositionKind::fixed_point_splitting: return "fixed-point-splitting";
  }
  return "?";
}

std::string form_name(IdealForm f) {
  switch (f) {
    case IdealForm::zero: return "zero";
    case IdealForm::prime_power: return "prime-power";
    case IdealForm::unit: return "unit";
  }
  return "?";
}

std::string ideal_text(long long generator) {
  if (generator == 1) return "Z";
  return "(" + std::to_string(generator) + ")";
}

std::string invariants_text(const std::vector<long long>& inv) {
  std::string out = "[";
  for (size_t i = 0; i < inv.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(inv[i]);
  }
  return out + "]";
}

std::string descriptor_with_confidence(const ProfiniteAbelianDescriptor& d) {
  std::string out = descriptor_to_string(d) + " (" + confidence_name(d.confidence);
  if (d.confidence == Confidence::unresolved && d.unresolved_depth >= 0)
    out += " at depth " + std::to_string(d.unresolved_depth);
  return out + ")";
}

}  // namespace

Json descriptor_json(const ProfiniteAbelianDescriptor& d) {
  Json j;
  j["free"] = d.free;
  j["padic"] = Json::object();
  for (const auto& [p, b] : d.padic) j["padic"][std::to_string(p)] = b;
  j["torsion"] = d.torsion;
  j["confidence"] = confidence_name(d.confidence);
  if (d.confidence == Confidence::unresolved && d.unresolved_depth >= 0)
    j["unresolved_depth"] = d.unresolved_depth;
  return j;
}

Json marks_json(const TableOfMarks& t) {
  Json j;
  j["group"] = t.classification->group()->name();
  Json classes = Json::array();
  Json orders = Json::array();
  for (int i = 0; i < t.classification->count(); ++i) {
    classes.push_back(t.classification->cls(i).label);
    orders.push_back(t.classification->order_of(i));
  }
  j["classes"] = std::move(classes);
  j["orders"] = std::move(orders);
  j["matrix"] = t.m;
  return j;
}

std::string marks_text(const TableOfMarks& t) {
  int n = t.classification->count();
  size_t width = 1;
  for (int i = 0; i < n; ++i)
    width = std::max(width, t.classification->cls(i).label.size());
  for (const auto& row : t.m)
    for (long long v : row) width = std::max(width, std::to_string(v).size());

  std::ostringstream out;
  out << "table of marks of " << t.classification->group()->name() << "\n";
  out << pad_right("", width + 2);
  for (int i = 0; i < n; ++i)
    out << pad_left(t.classification->cls(i).label, width + 2);
  out << "\n";
  for (int k = 0; k < n; ++k) {
    out << pad_right(t.classification->cls(k).label, width + 2);
    for (int h = 0; h < n; ++h)
      out << pad_left(std::to_string(t.m[static_cast<size_t>(k)][static_cast<size_t>(h)]),
                      width + 2);
    out << "\n";
  }
  return out.str();
}

Json trichotomy_json(const std::string& group_name, const TrichotomyReport& r) {
  Json j;
  j["group"] = group_name;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json o;
    o["class"] = row.label;
    o["order"] = row.subgroup_order;
    o["ideal"] = row.ideal;
    o["form"] = form_name(row.expected);
    o["prime"] = row.prime;
    o["exponent"] = row.exponent;
    o["ok"] = row.ok;
    rows.push_back(std::move(o));
  }
  j["rows"] = std::move(rows);
  j["pass"] = r.pass;
  return j;
}

std::string trichotomy_text(const std::string& group_name, const TrichotomyReport& r) {
  std::ostringstream out;
  out << "fixed-point ideals of the augmentation ideal of " << group_name << "\n";
  size_t lw = 5;
  for (const auto& row : r.rows) lw = std::max(lw, row.label.size());
  out << pad_right("class", lw + 2) << pad_left("|H|", 6) << pad_left("ideal", 8)
      << "  expected form" << "\n";
  for (const auto& row : r.rows) {
    std::string expect = form_name(row.expected);
    if (row.expected == IdealForm::prime_power)
      expect += " (p=" + std::to_string(row.prime) + ", k=" + std::to_string(row.exponent) + ")";
    out << pad_right(row.label, lw + 2) << pad_left(std::to_string(row.subgroup_order), 6)
        << pad_left(ideal_text(row.ideal), 8) << "  " << expect << "  "
        << (row.ok ? "ok" : "MISMATCH") << "\n";
  }
  out << (r.pass ? "trichotomy holds" : "trichotomy FAILED") << "\n";
  return out.str();
}

Json tower_json(const QuotientTower& t) {
  Json levels = Json::array();
  for (int n = 1; n <= t.depth; ++n) {
    const TowerLevel& level = t.levels[static_cast<size_t>(n - 1)];
    Json o;
    o["n"] = n;
    o["free"] = level.free_rank;
    Json factors = Json::array();
    for (const BigInt& f : level.factors) factors.push_back(big_to_json(f));
    o["factors"] = std::move(factors);
    levels.push_back(std::move(o));
  }
  return levels;
}

std::string tower_level_text(const TowerLevel& level) {
  std::string out;
  auto append = [&](const std::string& term) {
    if (!out.empty()) out += " + ";
    out += term;
  };
  if (level.free_rank == 1)
    append("Z");
  else if (level.free_rank > 1)
    append("Z^" + std::to_string(level.free_rank));
  for (const BigInt& f : level.factors) append("Z/" + f.str());
  return out.empty() ? "0" : out;
}

Json completion_json(const CompletionReport& r) {
  Json j;
  j["group"] = r.group_name;
  j["module"] = r.module_kind;
  if (r.module_kind == "bundle") j["target"] = r.target_name;
  j["depth"] = r.tower.depth;
  j["tower"] = tower_json(r.tower);
  j["tower_classification"] = descriptor_json(r.tower_class);
  j["closed_form"] = descriptor_json(r.closed_form);
  j["match"] = r.match;
  return j;
}

std::string completion_text(const CompletionReport& r) {
  std::ostringstream out;
  out << "completion of the " << r.module_kind << " module of " << r.group_name;
  if (r.module_kind == "bundle") out << " with target " << r.target_name;
  out << " at the augmentation ideal\n";
  for (int n = 1; n <= r.tower.depth; ++n)
    out << "M/J^" << n << (n < 10 ? " " : "") << "M = "
        << tower_level_text(r.tower.levels[static_cast<size_t>(n - 1)]) << "\n";
  out << "tower classification: " << descriptor_with_confidence(r.tower_class) << "\n";
  out << "closed form:          " << descriptor_with_confidence(r.closed_form) << "\n";
  out << "match: " << (r.match ? "yes" : "NO") << "\n";
  return out.str();
}

Json decomposition_json(const WedgeDecomposition& d) {
  Json j;
  j["kind"] = kind_name(d.kind);
  j["source"] = d.source_name;
  j["target"] = d.target_name;
  if (d.has_prime) j["prime"] = d.prime;
  if (d.kind == DecompositionKind::p_local) j["leading"] = d.leading;
  if (d.kind != DecompositionKind::fixed_point_splitting)
    j["convention"] = kCompletionConvention;
  Json summands = Json::array();
  for (const auto& s : d.summands) {
    Json o;
    Json h;
    h["class"] = s.pair.h_label;
    h["order"] = s.pair.h_order;
    h["members"] = s.pair.subgroup.members;
    o["H"] = std::move(h);
    o["phi"] = s.pair.phi.images;
    Json w;
    w["order"] = s.weyl.order;
    w["abelianization"] = s.weyl.abelian_invariants;
    w["name"] = s.weyl.name;
    o["weyl"] = std::move(w);
    if (s.completion_prime >= 0)
      o["prime"] = s.completion_prime;
    else
      o["prime"] = nullptr;
    summands.push_back(std::move(o));
  }
  j["summands"] = std::move(summands);
  if (d.kind == DecompositionKind::full || d.kind == DecompositionKind::dual)
    j["pi0"] = descriptor_json(pi0_descriptor(d));
  return j;
}

std::string decomposition_text(const WedgeDecomposition& d) {
  std::ostringstream out;
  out << kind_name(d.kind) << " decomposition, source " << d.source_name << ", target "
      << d.target_name;
  if (d.has_prime) out << ", prime " << d.prime;
  out << "\n";
  if (d.kind == DecompositionKind::p_local) out << "leading term: " << d.leading << "\n";
  int i = 0;
  for (const auto& s : d.summands) {
    out << "summand " << ++i << ": H = " << s.pair.h_label << " (order " << s.pair.h_order
        << "), phi = [";
    for (size_t k = 0; k < s.pair.phi.images.size(); ++k) {
      if (k) out << " ";
      out << s.pair.phi.images[k];
    }
    out << "], W = " << s.weyl.name << " (order " << s.weyl.order << ", abelianization "
        << invariants_text(s.weyl.abelian_invariants) << ")";
    if (s.completion_prime > 0)
      out << ", completed at " << s.completion_prime;
    else if (s.completion_prime == 0)
      out << ", uncompleted";
    out << "\n";
  }
  if (d.summands.empty()) out << "no summands\n";
  if (d.kind == DecompositionKind::full || d.kind == DecompositionKind::dual)
    out << "pi0 = " << descriptor_to_string(pi0_descriptor(d)) << "\n";
  if (d.kind != DecompositionKind::fixed_point_splitting)
    out << "convention: " << kCompletionConvention << "\n";
  return out.str();
}

Json crosscheck_json(const CrosscheckReport& r) {
  Json j;
  j["source"] = r.source_name;
  j["target"] = r.target_name;
  j["pi0"] = descriptor_json(r.pi0);
  j["closed_form"] = descriptor_json(r.closed_form);
  j["tower"] = descriptor_json(r.tower);
  j["depth_used"] = r.depth_used;
  j["pass"] = r.pass;
  return j;
}

std::string crosscheck_text(const CrosscheckReport& r) {
  std::ostringstream out;
  out << "crosscheck, source " << r.source_name << ", target " << r.target_name << "\n";
  out << "wedge pi0:    " << descriptor_to_string(r.pi0) << "\n";
  out << "closed form:  " << descriptor_to_string(r.closed_form) << "\n";
  out << "tower (depth " << r.depth_used << "): " << descriptor_with_confidence(r.tower) << "\n";
  if (r.tower.confidence == Confidence::unresolved)
    out << "tower classification unresolved; rerun with a larger depth\n";
  out << (r.pass ? "PASS" : "FAIL") << "\n";
  return out.str();
}

Json classification_json(const std::string& spec, const SubgroupClassification& cls) {
  Json j;
  j["format_version"] = kCacheFormatVersion;
  j["spec"] = spec;
  j["group_order"] = cls.group()->order();
  Json classes = Json::array();
  for (int i = 0; i < cls.count(); ++i) {
    Json o;
    o["label"] = cls.cls(i).label;
    o["members"] = cls.cls(i).representative.members;
    o["orbit"] = cls.cls(i).orbit;
    classes.push_back(std::move(o));
  }
  j["classes"] = std::move(classes);
  Json sub = Json::array();
  for (int h = 0; h < cls.count(); ++h) {
    Json row = Json::array();
    for (int k = 0; k < cls.count(); ++k) row.push_back(cls.is_subconjugate(h, k) ? 1 : 0);
    sub.push_back(std::move(row));
  }
  j["subconjugate"] = std::move(sub);
  return j;
}

ClassificationPtr classification_from_json(const std::string& spec, int order_bound,
                                           const Json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("cache document is not an object");
  if (doc.at("format_version").get<int>() != kCacheFormatVersion)
    throw std::invalid_argument("cache format version mismatch");
  if (doc.at("spec").get<std::string>() != spec)
    throw std::invalid_argument("cache spec mismatch");
  GroupPtr g = parse_group(spec, order_bound);
  if (doc.at("group_order").get<int>() != g->order())
    throw std::invalid_argument("cache group order mismatch");

  std::vector<SubgroupClass> classes;
  for (const Json& o : doc.at("classes")) {
    Subgroup rep(g, o.at("members").get<std::vector<int>>());
    classes.push_back(SubgroupClass{std::move(rep),
                                    o.at("orbit").get<std::vector<std::vector<int>>>(),
                                    o.at("label").get<std::string>()});
  }
  std::vector<std::vector<char>> sub;
  for (const Json& row : doc.at("subconjugate")) {
    std::vector<char> r;
    for (const Json& v : row) r.push_back(v.get<int>() ? 1 : 0);
    sub.push_back(std::move(r));
  }
  return SubgroupClassification::from_parts(std::move(g), std::move(classes), std::move(sub));
}

}  // namespace burnside
