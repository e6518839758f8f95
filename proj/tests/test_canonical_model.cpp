#include <doctest.h>

#include "eqvb/canonical_model.hpp"
#include "eqvb/catalog.hpp"
#include "eqvb/rng.hpp"

using namespace eqvb;

namespace {

Subgroup a3_in_s3(const GroupPtr& s3) {
  for (int x = 1; x < 6; ++x)
    if (s3->mul(x, x) != s3->identity()) return Subgroup::closure(s3, {x});
  throw std::logic_error("no 3-cycle found");
}

}  // namespace

TEST_CASE("H = G gives a single base point with the spec action") {
  auto s3 = symmetric_3();
  auto cat = irreducibles(s3);
  auto model = CanonicalModel::build(s3, Subgroup::full(s3), RepSpec::regular_nontrivial(cat));
  CHECK(model->base_count() == 1);
  CHECK(model->fiber_dim() == 5);  // 1 + 4
  for (int g = 0; g < 6; ++g) {
    auto [b, m] = model->act(g, 0);
    CHECK(b == 0);
    CHECK(max_abs(m - model->fiber_rep(g)) < 1e-12);
  }
}

TEST_CASE("S3 over A3 with one character has 2 base points and 1-dim fibers") {
  auto s3 = symmetric_3();
  Subgroup a3 = a3_in_s3(s3);
  auto cat = irreducibles(embed(a3).group);
  int k = cat.trivial_index == 0 ? 1 : 0;
  auto model = CanonicalModel::build(s3, a3, RepSpec::single(cat, k, 1));
  CHECK(model->base_count() == 2);  // coset count oracle: [S3 : A3] = 2
  CHECK(model->fiber_dim() == 1);
}

TEST_CASE("a spec containing the trivial irrep is rejected") {
  auto s3 = symmetric_3();
  Subgroup a3 = a3_in_s3(s3);
  auto cat = irreducibles(embed(a3).group);
  CHECK_THROWS_AS(RepSpec::single(cat, cat.trivial_index, 1), TrivialComponentError);
}

TEST_CASE("building over a non-normal subgroup is rejected") {
  auto s3 = symmetric_3();
  int t = -1;
  for (int x = 1; x < 6; ++x)
    if (s3->mul(x, x) == s3->identity()) t = x;
  Subgroup h = Subgroup::closure(s3, {t});
  auto cat = irreducibles(embed(h).group);
  int k = cat.trivial_index == 0 ? 1 : 0;
  CHECK_THROWS_AS(CanonicalModel::build(s3, h, RepSpec::single(cat, k, 1)), NotNormalError);
}

TEST_CASE("identity acts as the identity") {
  auto d4 = dihedral_group(4);
  Subgroup center = Subgroup::closure(d4, {2});  // r^2
  auto cat = irreducibles(embed(center).group);
  int k = cat.trivial_index == 0 ? 1 : 0;
  auto model = CanonicalModel::build(d4, center, RepSpec::single(cat, k, 2));
  for (int b = 0; b < model->base_count(); ++b) {
    auto [b2, m] = model->act(d4->identity(), b);
    CHECK(b2 == b);
    CHECK(max_abs(m - Mat::Identity(2, 2)) < 1e-12);
  }
}

TEST_CASE("h in H at the identity coset acts by the spec representation") {
  auto s3 = symmetric_3();
  Subgroup a3 = a3_in_s3(s3);
  auto cat = irreducibles(embed(a3).group);
  std::vector<std::pair<int, int>> km;
  for (int k = 0; k < cat.count(); ++k)
    if (k != cat.trivial_index) km.push_back({k, 1});
  auto model = CanonicalModel::build(s3, a3, RepSpec::make(cat, km));
  for (int h : a3.elements()) {
    auto [b, m] = model->act(h, 0);
    CHECK(b == 0);
    CHECK(max_abs(m - model->fiber_rep(h)) < 1e-12);
  }
}

TEST_CASE("action axiom holds on full sweeps for several models") {
  auto z4 = cyclic_group(4);
  Subgroup z2 = Subgroup::closure(z4, {2});
  auto cat_z2 = irreducibles(embed(z2).group);
  int k = cat_z2.trivial_index == 0 ? 1 : 0;
  auto m1 = CanonicalModel::build(z4, z2, RepSpec::single(cat_z2, k, 1));
  CHECK(action_axiom_residual(*m1) <= 1e-12);
  CHECK(stabilizers_are_exactly_h(*m1));

  auto s3 = symmetric_3();
  Subgroup a3 = a3_in_s3(s3);
  auto cat_a3 = irreducibles(embed(a3).group);
  auto m2 = CanonicalModel::build(s3, a3, RepSpec::regular_nontrivial(cat_a3));
  CHECK(action_axiom_residual(*m2) <= 1e-9);
  CHECK(stabilizers_are_exactly_h(*m2));

  auto a4 = alternating_4();
  // V4 inside A4: the unique normal subgroup of order 4
  Subgroup v4 = [&] {
    for (const auto& s : all_subgroups(a4))
      if (s.size() == 4) return s;
    throw std::logic_error("V4 not found");
  }();
  auto cat_v4 = irreducibles(embed(v4).group);
  auto m3 = CanonicalModel::build(a4, v4, RepSpec::regular_nontrivial(cat_v4));
  CHECK(action_axiom_residual(*m3) <= 1e-9);
  CHECK(stabilizers_are_exactly_h(*m3));
}

TEST_CASE("two-path evaluation on random triples") {
  auto q8 = quaternion_8();
  Subgroup zi = Subgroup::closure(q8, {2});  // <i>, order 4, normal
  REQUIRE(zi.size() == 4);
  auto cat = irreducibles(embed(zi).group);
  auto model = CanonicalModel::build(q8, zi, RepSpec::regular_nontrivial(cat));
  Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    int g1 = rng.uniform_int(0, 7), g2 = rng.uniform_int(0, 7);
    int b = rng.uniform_int(0, model->base_count() - 1);
    auto first = model->act(g1, b);
    auto second = model->act(g2, first.base);
    auto direct = model->act(q8->mul(g2, g1), b);
    CHECK(second.base == direct.base);
    CHECK(max_abs(second.matrix * first.matrix - direct.matrix) <= 1e-10);
    CHECK(unitary_residual(first.matrix) <= 1e-10);
  }
}

TEST_CASE("build_Xk over Z4 / Z2") {
  auto z4 = cyclic_group(4);
  Subgroup z2 = Subgroup::closure(z4, {2});
  auto cat = irreducibles(embed(z2).group);
  int k = cat.trivial_index == 0 ? 1 : 0;
  auto model = build_Xk(z4, z2, cat, k);
  CHECK(model->base_count() == 2);
  CHECK(model->fiber_dim() == 1);
  CHECK_THROWS_AS(build_Xk(z4, z2, cat, cat.trivial_index), TrivialComponentError);
}

TEST_CASE("total fixed points") {
  auto s3 = symmetric_3();
  Subgroup a3 = a3_in_s3(s3);
  auto cat = irreducibles(embed(a3).group);
  auto model = CanonicalModel::build(s3, a3, RepSpec::regular_nontrivial(cat));

  // trivial K fixes everything with full fiber dimension
  auto all = total_fixed_points(*model, Subgroup::trivial(s3));
  CHECK(all.size() == 2);
  for (const auto& f : all) CHECK(f.fiber_dim == model->fiber_dim());

  // K = H fixes every base point with zero fixed fiber directions
  auto fixed_h = total_fixed_points(*model, a3);
  CHECK(fixed_h.size() == 2);
  for (const auto& f : fixed_h) CHECK(f.fiber_dim == 0);

  // a transposition subgroup moves both cosets: empty fixed set
  int t = -1;
  for (int x = 1; x < 6; ++x)
    if (s3->mul(x, x) == s3->identity()) t = x;
  auto none = total_fixed_points(*model, Subgroup::closure(s3, {t}));
  CHECK(none.empty());
}

TEST_CASE("component conjugation bookkeeping") {
  // S3 / A3: the nontrivial base translation swaps the two nontrivial characters
  auto s3 = symmetric_3();
  Subgroup a3 = a3_in_s3(s3);
  auto cat = irreducibles(embed(a3).group);
  std::vector<std::pair<int, int>> km;
  for (int k = 0; k < cat.count(); ++k)
    if (k != cat.trivial_index) km.push_back({k, 1});
  auto model = CanonicalModel::build(s3, a3, RepSpec::make(cat, km));
  REQUIRE(model->base_count() == 2);
  CHECK(model->components_fixed_by(0));
  CHECK_FALSE(model->components_fixed_by(1));
  CHECK(model->component_image(1, 0) == 1);
  CHECK(model->component_image(1, 1) == 0);
  CHECK(model->component_fixing_translations() == std::vector<int>{0});

  // D4 / center: conjugation is trivial on the central subgroup
  auto d4 = dihedral_group(4);
  Subgroup center = Subgroup::closure(d4, {2});
  auto cat_c = irreducibles(embed(center).group);
  int k = cat_c.trivial_index == 0 ? 1 : 0;
  auto m2 = CanonicalModel::build(d4, center, RepSpec::single(cat_c, k, 2));
  CHECK(static_cast<int>(m2->component_fixing_translations().size()) == m2->base_count());
}
