#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "burnside/group.hpp"

using namespace burnside;

TEST_CASE("parsing the named groups") {
  CHECK(parse_group("C6")->order() == 6);
  CHECK(parse_group("C6")->is_abelian());
  CHECK(parse_group("C1")->order() == 1);
  CHECK(parse_group("D4")->order() == 8);
  CHECK(!parse_group("D4")->is_abelian());
  CHECK(parse_group("S4")->order() == 24);
  CHECK(parse_group("A4")->order() == 12);
  CHECK(parse_group("A5")->order() == 60);
  CHECK(parse_group("Q8")->order() == 8);
  CHECK(parse_group("V4")->order() == 4);
  CHECK(parse_group("V4")->is_abelian());
  CHECK(parse_group(" S3 ")->order() == 6);
}

TEST_CASE("q8 has a unique involution") {
  GroupPtr q = parse_group("Q8");
  int involutions = 0;
  for (int x = 0; x < 8; ++x)
    if (q->element_order(x) == 2) ++involutions;
  CHECK(involutions == 1);
  int fours = 0;
  for (int x = 0; x < 8; ++x)
    if (q->element_order(x) == 4) ++fours;
  CHECK(fours == 6);
}

TEST_CASE("products parse and multiply componentwise") {
  GroupPtr g = parse_group("C2xC3");
  CHECK(g->order() == 6);
  CHECK(g->is_abelian());
  CHECK(g->name() == "C2xC3");
  // C2 x C3 is cyclic of order 6
  bool has6 = false;
  for (int x = 0; x < 6; ++x) has6 = has6 || g->element_order(x) == 6;
  CHECK(has6);

  GroupPtr s3c2 = parse_group("S3xC2");
  CHECK(s3c2->order() == 12);
  CHECK(!s3c2->is_abelian());
}

TEST_CASE("permutation group specs") {
  GroupPtr s3 = parse_group("perm(3): (1 2), (1 2 3)");
  CHECK(s3->order() == 6);
  CHECK(!s3->is_abelian());
  CHECK(s3->perm_generators().has_value());
  CHECK(s3->perm_generators()->degree == 3);

  GroupPtr d4 = parse_group("perm(4): (1 2 3 4), (1 3)");
  CHECK(d4->order() == 8);

  GroupPtr v4 = parse_group("perm(4): (1 2)(3 4), (1 3)(2 4)");
  CHECK(v4->order() == 4);
  CHECK(v4->is_abelian());

  CHECK(parse_group("perm(5): (1 2 3 4 5)")->order() == 5);
  CHECK(parse_group("perm(3): (1)")->order() == 1);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_group("BADNAME"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_group("C"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group("C0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group("Cx2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group("C2x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group("C100", 50), std::invalid_argument);
  CHECK_THROWS_AS(parse_group("S6"), std::invalid_argument);  // order 720 > 512
  CHECK_THROWS_AS(parse_group("C600"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group("perm(3): (1 4)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group("perm(3): (1 2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group("perm(3):"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group("perm(3): (1 1 2)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group("perm(0): (1)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group("perm(16): (1 2 3 4 5 6 7 8)(9 10)", 7), std::invalid_argument);
}

TEST_CASE("element arithmetic") {
  GroupPtr d4 = parse_group("D4");
  for (int x = 0; x < d4->order(); ++x) {
    CHECK(d4->mul(x, d4->inv(x)) == d4->identity());
    CHECK(d4->power(x, d4->element_order(x)) == d4->identity());
    CHECK(d4->power(x, -1) == d4->inv(x));
    CHECK(d4->power(x, 0) == d4->identity());
    CHECK(d4->power(x, 5) == d4->mul(d4->power(x, 3), d4->power(x, 2)));
  }
  // conj is an action: (gh) . x = g . (h . x)
  for (int g = 0; g < 8; ++g)
    for (int h = 0; h < 8; ++h)
      for (int x = 0; x < 8; ++x)
        CHECK(d4->conj(d4->mul(g, h), x) == d4->conj(g, d4->conj(h, x)));
}

TEST_CASE("invalid tables are rejected") {
  CHECK_THROWS_AS(FiniteGroup("bad", 2, {0, 1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteGroup("bad", 2, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteGroup("bad", 2, {0, 5, 5, 0}), std::invalid_argument);
  // Latin square but not associative: x*y = some non-associative quasigroup
  CHECK_THROWS_AS(FiniteGroup("bad", 5, {0, 1, 2, 3, 4,
                                         1, 0, 3, 4, 2,
                                         2, 4, 0, 1, 3,
                                         3, 2, 4, 0, 1,
                                         4, 3, 1, 2, 0}),
                  std::invalid_argument);
}

TEST_CASE("subgroups and generated closures") {
  GroupPtr s3 = parse_group("S3");
  CHECK(generated_subgroup(*s3, {}) == std::vector<int>{0});
  // whole group from any transposition plus any 3-cycle
  int transposition = -1, threecycle = -1;
  for (int x = 0; x < 6; ++x) {
    if (s3->element_order(x) == 2 && transposition < 0) transposition = x;
    if (s3->element_order(x) == 3 && threecycle < 0) threecycle = x;
  }
  CHECK(generated_subgroup(*s3, {transposition, threecycle}).size() == 6);
  CHECK(generated_subgroup(*s3, {threecycle}).size() == 3);

  Subgroup h(s3, generated_subgroup(*s3, {transposition}));
  CHECK(h.order() == 2);
  CHECK(h.contains(0));
  CHECK_THROWS_AS(Subgroup(s3, std::vector<int>{0, transposition, threecycle}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Subgroup(s3, std::vector<int>{transposition}), std::invalid_argument);
}

TEST_CASE("normalizers") {
  GroupPtr s3 = parse_group("S3");
  int transposition = -1, threecycle = -1;
  for (int x = 0; x < 6; ++x) {
    if (s3->element_order(x) == 2 && transposition < 0) transposition = x;
    if (s3->element_order(x) == 3 && threecycle < 0) threecycle = x;
  }
  Subgroup c2(s3, generated_subgroup(*s3, {transposition}));
  CHECK(normalizer(s3, c2).order() == 2);
  Subgroup c3(s3, generated_subgroup(*s3, {threecycle}));
  CHECK(normalizer(s3, c3).order() == 6);
}

TEST_CASE("quotients") {
  GroupPtr s4 = parse_group("S4");
  // normal V4: identity plus the three double transpositions; in S4 those
  // are the order-2 elements fixing no point, equivalently the ones whose
  // centralizer has order 8
  std::vector<int> v4{0};
  for (int x = 1; x < 24; ++x) {
    if (s4->element_order(x) != 2) continue;
    int cent = 0;
    for (int y = 0; y < 24; ++y)
      if (s4->mul(x, y) == s4->mul(y, x)) ++cent;
    if (cent == 8) v4.push_back(x);
  }
  std::sort(v4.begin(), v4.end());
  REQUIRE(v4.size() == 4);
  QuotientGroup q = quotient_group(s4, Subgroup(s4, v4));
  CHECK(q.group->order() == 6);
  CHECK(!q.group->is_abelian());
  CHECK(q.cosets.size() == 6);
  // projection is the quotient map
  for (int a = 0; a < 24; ++a)
    for (int b = 0; b < 24; ++b)
      CHECK(q.projection.apply(s4->mul(a, b)) ==
            q.group->mul(q.projection.apply(a), q.projection.apply(b)));

  // non-normal subgroup raises and names a conjugator
  GroupPtr s3 = parse_group("S3");
  int transposition = 1;
  while (s3->element_order(transposition) != 2) ++transposition;
  try {
    quotient_group(s3, Subgroup(s3, generated_subgroup(*s3, {transposition})));
    CHECK(false);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("conjugation by element") != std::string::npos);
  }
}

TEST_CASE("commutators and abelianizations") {
  CHECK(commutator_subgroup(parse_group("S3")).order() == 3);
  CHECK(commutator_subgroup(parse_group("C6")).order() == 1);
  CHECK(commutator_subgroup(parse_group("Q8")).order() == 2);
  CHECK(commutator_subgroup(parse_group("S4")).order() == 12);

  CHECK(abelianization(*parse_group("S3")) == std::vector<long long>{2});
  CHECK(abelianization(*parse_group("Q8")) == std::vector<long long>{2, 2});
  CHECK(abelianization(*parse_group("C12")) == std::vector<long long>{12});
  CHECK(abelianization(*parse_group("C2xC6")) == std::vector<long long>{2, 6});
  CHECK(abelianization(*parse_group("S4")) == std::vector<long long>{2});
  CHECK(abelianization(*parse_group("A4")) == std::vector<long long>{3});
  CHECK(abelianization(*parse_group("C1")).empty());
  CHECK(abelianization(*parse_group("C2xC2xC2")) == std::vector<long long>{2, 2, 2});
}

TEST_CASE("direct product plumbing") {
  DirectProduct p = direct_product(parse_group("S3"), parse_group("C2"));
  CHECK(p.group->order() == 12);
  for (int g = 0; g < 6; ++g)
    for (int k = 0; k < 2; ++k) {
      int x = p.encode(g, k);
      CHECK(p.decode(x) == std::make_pair(g, k));
      CHECK(p.project_left.apply(x) == g);
      CHECK(p.project_right.apply(x) == k);
    }
  for (int g = 0; g < 6; ++g) CHECK(p.decode(p.embed_left.apply(g)) == std::make_pair(g, 0));
  CHECK_THROWS_AS(direct_product(parse_group("S4"), parse_group("S4")), std::invalid_argument);
}

TEST_CASE("subgroup as standalone group") {
  GroupPtr s4 = parse_group("S4");
  int threecycle = 1;
  while (s4->element_order(threecycle) != 3) ++threecycle;
  Subgroup c3(s4, generated_subgroup(*s4, {threecycle}));
  SubgroupGroup sg = subgroup_as_group(c3);
  CHECK(sg.group->order() == 3);
  CHECK(sg.to_parent == c3.members);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(sg.inclusion.apply(sg.group->mul(i, j)) ==
            s4->mul(sg.inclusion.apply(i), sg.inclusion.apply(j)));
}

TEST_CASE("structure names") {
  CHECK(structure_name(*parse_group("C1")) == "1");
  CHECK(structure_name(*parse_group("C6")) == "C6");
  CHECK(structure_name(*parse_group("C2xC3")) == "C6");
  CHECK(structure_name(*parse_group("V4")) == "C2xC2");
  CHECK(structure_name(*parse_group("S3")) == "S3");
  CHECK(structure_name(*parse_group("D4")) == "D4");
  CHECK(structure_name(*parse_group("D6")) == "D6");
  CHECK(structure_name(*parse_group("Q8")) == "Q8");
  CHECK(structure_name(*parse_group("A4")) == "A4");
  CHECK(structure_name(*parse_group("S4")) == "S4");
  CHECK(structure_name(*parse_group("A5")) == "A5");
  CHECK(structure_name(*parse_group("C2xC6")) == "C2xC6");
}

TEST_CASE("homomorphism validation") {
  GroupPtr c2 = parse_group("C2");
  GroupPtr c4 = parse_group("C4");
  GroupHom ok(c2, c4, {0, 2});
  CHECK(ok.apply(1) == 2);
  CHECK_THROWS_AS(GroupHom(c2, c4, std::vector<int>{0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(GroupHom(c2, c4, std::vector<int>{1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(GroupHom(c2, c4, std::vector<int>{0}), std::invalid_argument);
}
