#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "burnside/stable_maps.hpp"
#include "oracles.hpp"

using namespace burnside;

namespace {

PairEnumeration pairs_for(const char* source, const char* target) {
  return pair_classes(subgroup_classes(parse_group(source)), parse_group(target));
}

std::vector<long long> weyl_orders(const WedgeDecomposition& d) {
  std::vector<long long> out;
  for (const auto& s : d.summands) out.push_back(s.weyl.order);
  return out;
}

std::vector<long long> summand_primes(const WedgeDecomposition& d) {
  std::vector<long long> out;
  for (const auto& s : d.summands) out.push_back(s.completion_prime);
  return out;
}

}  // namespace

TEST_CASE("homomorphism counts") {
  auto count = [](const char* h, const char* k) {
    return hom_images(*parse_group(h), *parse_group(k)).size();
  };
  CHECK(count("C2", "C2") == 2);
  CHECK(count("C3", "C2") == 1);
  CHECK(count("C2", "C3") == 1);
  CHECK(count("S3", "C2") == 2);
  CHECK(count("C6", "C6") == 6);
  CHECK(count("Q8", "C2") == 4);
  CHECK(count("C1", "S3") == 1);
}

TEST_CASE("homomorphisms are valid and deterministic") {
  GroupPtr s3 = parse_group("S3");
  GroupPtr c2 = parse_group("C2");
  auto homs = hom_images(*s3, *c2);
  REQUIRE(homs.size() == 2);
  for (const auto& img : homs)
    for (int a = 0; a < s3->order(); ++a)
      for (int b = 0; b < s3->order(); ++b)
        CHECK(img[static_cast<size_t>(s3->mul(a, b))] ==
              c2->mul(img[static_cast<size_t>(a)], img[static_cast<size_t>(b)]));
  // trivial hom sorts first
  CHECK(homs[0] == std::vector<int>(6, 0));
  CHECK(hom_images(*s3, *c2) == homs);
}

TEST_CASE("pair class counts") {
  CHECK(pairs_for("C2", "C2").classes.size() == 3);
  CHECK(pairs_for("C3", "C2").classes.size() == 2);
  CHECK(pairs_for("C2", "C3").classes.size() == 2);
  CHECK(pairs_for("S3", "C2").classes.size() == 6);
}

TEST_CASE("pair classes against the product subgroup oracle") {
  const std::pair<const char*, const char*> cases[] = {
      {"C2", "C2"}, {"C3", "C2"}, {"C2", "C3"}, {"S3", "C2"}, {"C2", "C1"},
      {"S3", "C1"}, {"D4", "C2"}, {"A4", "C2"}, {"S4", "C2"}};
  for (const auto& [src, tgt] : cases) {
    PairEnumeration pairs = pairs_for(src, tgt);
    std::vector<std::vector<int>> got;
    for (const auto& pc : pairs.classes) got.push_back(pc.graph.members);
    CHECK(got == testing::graph_subgroup_class_reps(pairs.product));
  }
}

TEST_CASE("pairs with trivial target mirror the subgroup classes") {
  for (const char* spec : {"S3", "D4"}) {
    ClassificationPtr cls = subgroup_classes(parse_group(spec));
    PairEnumeration pairs = pair_classes(cls, parse_group("C1"));
    REQUIRE(static_cast<int>(pairs.classes.size()) == cls->count());
    for (int i = 0; i < cls->count(); ++i) {
      CHECK(pairs.classes[static_cast<size_t>(i)].h_class == i);
      CHECK(pairs.classes[static_cast<size_t>(i)].subgroup.members ==
            cls->cls(i).representative.members);
    }
  }
}

TEST_CASE("pair class metadata") {
  PairEnumeration pairs = pairs_for("C2", "C2");
  REQUIRE(pairs.classes.size() == 3);
  CHECK(pairs.classes[0].h_order == 1);
  CHECK(pairs.classes[0].prime == 0);
  CHECK(pairs.classes[0].in_prime_power_family());
  CHECK(pairs.classes[1].h_order == 2);
  CHECK(pairs.classes[1].prime == 2);
  CHECK(pairs.classes[1].prime_power);
  CHECK(pairs.classes[2].display_name == "(C2, phi=[0 1])");
  CHECK(pairs.classes[2].h_label == "C2");
  // phi_of reads images by parent element
  CHECK(pairs.classes[2].phi_of(0) == 0);
  CHECK(pairs.classes[2].phi_of(1) == 1);
  CHECK_THROWS_AS(pairs.classes[0].phi_of(1), std::invalid_argument);

  PairEnumeration s3c2 = pairs_for("S3", "C2");
  for (const auto& pc : s3c2.classes) {
    if (pc.h_order == 6) {
      CHECK(pc.prime == -1);
      CHECK_FALSE(pc.in_prime_power_family());
    }
  }
}

TEST_CASE("conjugate graphs land in the same class") {
  PairEnumeration pairs = pairs_for("S3", "C2");
  const FiniteGroup& p = *pairs.product.group;
  for (size_t i = 0; i < pairs.classes.size(); ++i)
    for (int x = 0; x < p.order(); ++x) {
      std::vector<int> conj = conjugate_members(p, pairs.classes[i].graph.members, x);
      REQUIRE(pairs.class_of_graph.count(conj) == 1);
      CHECK(pairs.class_of_graph.at(conj) == static_cast<int>(i));
    }
}

TEST_CASE("weyl groups of sample pairs") {
  PairEnumeration c2c2 = pairs_for("C2", "C2");
  CHECK(weyl_group(c2c2.classes[0]).order == 4);  // trivial pair in an abelian product
  CHECK(weyl_group(c2c2.classes[1]).order == 2);  // (C2, trivial)
  CHECK(weyl_group(c2c2.classes[2]).order == 2);  // (C2, identity)

  PairEnumeration s3c2 = pairs_for("S3", "C2");
  for (const auto& pc : s3c2.classes) {
    if (pc.h_order == 2 && pc.phi.images == std::vector<int>{0, 0})
      CHECK(weyl_group(pc).order == 2);
  }
}

TEST_CASE("weyl order times pair order is the normalizer order") {
  for (const char* tgt : {"C1", "C2"}) {
    PairEnumeration pairs = pairs_for("D4", tgt);
    for (const auto& pc : pairs.classes) {
      Subgroup n = normalizer(pairs.product.group, pc.graph);
      CHECK(weyl_group(pc).order * pc.graph.order() == n.order());
    }
  }
}

TEST_CASE("fixed point splitting") {
  ClassificationPtr s3 = subgroup_classes(parse_group("S3"));
  WedgeDecomposition d =
      fixed_point_splitting(s3, parse_group("C1"), family_classes(s3, FamilyKind::all));
  CHECK(d.kind == DecompositionKind::fixed_point_splitting);
  CHECK(d.summands.size() == 4);
  CHECK(weyl_orders(d) == std::vector<long long>{6, 1, 2, 1});
  CHECK(summand_primes(d) == std::vector<long long>{-1, -1, -1, -1});

  ClassificationPtr c3 = subgroup_classes(parse_group("C3"));
  WedgeDecomposition f1 =
      fixed_point_splitting(c3, parse_group("C2"), family_classes(c3, FamilyKind::trivial_only));
  REQUIRE(f1.summands.size() == 1);
  CHECK(f1.summands[0].weyl.order == 6);

  ClassificationPtr c2 = subgroup_classes(parse_group("C2"));
  WedgeDecomposition fp2 =
      fixed_point_splitting(c2, parse_group("C2"), family_classes(c2, FamilyKind::p_subgroups, 2));
  CHECK(fp2.summands.size() == 3);

  // family built over a different classification is rejected
  CHECK_THROWS_AS(
      fixed_point_splitting(c2, parse_group("C2"), family_classes(c3, FamilyKind::all)),
      std::invalid_argument);
}

TEST_CASE("full decomposition keeps prime power pairs only") {
  WedgeDecomposition d = function_decomposition(subgroup_classes(parse_group("C2")), parse_group("C2"));
  CHECK(d.kind == DecompositionKind::full);
  CHECK(summand_primes(d) == std::vector<long long>{0, 2, 2});
  CHECK(weyl_orders(d) == std::vector<long long>{4, 2, 2});

  WedgeDecomposition c6 = function_decomposition(subgroup_classes(parse_group("C6")), parse_group("C2"));
  CHECK(c6.summands.size() == 4);
  for (const auto& s : c6.summands) CHECK(s.pair.h_order != 6);
  CHECK(summand_primes(c6) == std::vector<long long>{0, 2, 2, 3});
}

TEST_CASE("p local decomposition") {
  ClassificationPtr c2 = subgroup_classes(parse_group("C2"));
  WedgeDecomposition at2 = p_local_decomposition(c2, parse_group("C2"), 2);
  CHECK(at2.kind == DecompositionKind::p_local);
  CHECK(at2.has_prime);
  CHECK(at2.prime == 2);
  CHECK(at2.leading == "Sigma^inf (BC2_+)^_2 smash Sigma^inf (BC2_+)");
  CHECK(at2.summands.size() == 2);

  WedgeDecomposition at3 = p_local_decomposition(c2, parse_group("C2"), 3);
  CHECK(at3.summands.empty());
  CHECK(at3.leading == "Sigma^inf (BC2_+)^_3 smash Sigma^inf (BC2_+)");

  WedgeDecomposition s4 = p_local_decomposition(subgroup_classes(parse_group("S4")), parse_group("C1"), 3);
  REQUIRE(s4.summands.size() == 1);
  CHECK(s4.summands[0].pair.h_order == 3);

  CHECK_THROWS_AS(p_local_decomposition(c2, parse_group("C2"), 6), std::invalid_argument);
  CHECK_THROWS_AS(p_local_decomposition(c2, parse_group("C2"), 1), std::invalid_argument);
}

TEST_CASE("dual decomposition of S3") {
  WedgeDecomposition d = dual_decomposition(subgroup_classes(parse_group("S3")));
  CHECK(d.kind == DecompositionKind::dual);
  REQUIRE(d.summands.size() == 3);

  CHECK(d.summands[0].pair.h_order == 1);
  CHECK(d.summands[0].completion_prime == 0);
  CHECK(d.summands[0].weyl.order == 6);
  CHECK(d.summands[0].weyl.name == "S3");

  CHECK(d.summands[1].pair.h_label == "C2");
  CHECK(d.summands[1].completion_prime == 2);
  CHECK(d.summands[1].weyl.order == 1);

  CHECK(d.summands[2].pair.h_label == "C3");
  CHECK(d.summands[2].completion_prime == 3);
  CHECK(d.summands[2].weyl.order == 2);

  ProfiniteAbelianDescriptor pi0 = pi0_descriptor(d);
  CHECK(pi0.free == 1);
  CHECK(pi0.padic == std::map<long long, long long>{{2, 1}, {3, 1}});

  WedgeDecomposition triv = dual_decomposition(subgroup_classes(parse_group("C1")));
  REQUIRE(triv.summands.size() == 1);
  CHECK(triv.summands[0].weyl.order == 1);
}

TEST_CASE("dual decomposition at a prime") {
  WedgeDecomposition q8 = dual_decomposition_at(subgroup_classes(parse_group("Q8")), 2);
  CHECK(q8.summands.size() == 6);
  ProfiniteAbelianDescriptor pi0 = pi0_descriptor(q8);
  CHECK(pi0.free == 0);
  CHECK(pi0.padic == std::map<long long, long long>{{2, 6}});

  // at 3 only the trivial class survives, completed at 3
  WedgeDecomposition at3 = dual_decomposition_at(subgroup_classes(parse_group("Q8")), 3);
  REQUIRE(at3.summands.size() == 1);
  CHECK(at3.summands[0].completion_prime == 3);

  CHECK_THROWS_AS(dual_decomposition_at(subgroup_classes(parse_group("Q8")), 4),
                  std::invalid_argument);
}

TEST_CASE("pi0 is defined for full and dual kinds only") {
  ClassificationPtr s3 = subgroup_classes(parse_group("S3"));
  WedgeDecomposition split =
      fixed_point_splitting(s3, parse_group("C1"), family_classes(s3, FamilyKind::all));
  CHECK_THROWS_AS(pi0_descriptor(split), std::invalid_argument);
  WedgeDecomposition local = p_local_decomposition(s3, parse_group("C2"), 2);
  CHECK_THROWS_AS(pi0_descriptor(local), std::invalid_argument);
}

TEST_CASE("crosscheck ties the three computations together") {
  CrosscheckReport r = crosscheck(subgroup_classes(parse_group("C2")), parse_group("C2"));
  CHECK(r.pass);
  CHECK(r.depth_used == 12);
  CHECK(r.pi0.free == 1);
  CHECK(r.pi0.padic == std::map<long long, long long>{{2, 2}});
  CHECK(r.pi0.same_shape(r.closed_form));
  CHECK(r.pi0.same_shape(r.tower));

  CrosscheckReport s3 = crosscheck(subgroup_classes(parse_group("S3")), parse_group("C1"));
  CHECK(s3.pass);
  CHECK(s3.pi0.free == 1);
  CHECK(s3.pi0.padic == std::map<long long, long long>{{2, 1}, {3, 1}});

  const std::pair<const char*, const char*> more[] = {
      {"C2", "C1"}, {"C3", "C2"}, {"C2", "C3"}, {"S3", "C2"}};
  for (const auto& [src, tgt] : more) {
    CrosscheckReport rep = crosscheck(subgroup_classes(parse_group(src)), parse_group(tgt));
    CHECK(rep.pass);
    CHECK(rep.depth_used == 12);
  }
}
