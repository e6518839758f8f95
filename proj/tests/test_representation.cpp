#include <doctest.h>

#include <cmath>
#include <numbers>

#include "eqvb/catalog.hpp"
#include "eqvb/representation.hpp"
#include "eqvb/rng.hpp"

using namespace eqvb;

namespace {

Mat random_unitary(int n, Rng& rng) {
  Mat a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = rng.complex_gaussian();
  Eigen::HouseholderQR<Mat> qr(a);
  return qr.householderQ() * Mat::Identity(n, n);
}

// explicit 2-dim irrep of S3: identity -> I, 3-cycles -> rotations by +-120
// degrees, transpositions -> reflections
Representation s3_standard_rep(const GroupPtr& s3) {
  using std::numbers::pi;
  int r = -1;
  for (int x = 0; x < 6; ++x)
    if (x != s3->identity() && s3->mul(x, x) != s3->identity()) {
      r = x;
      break;
    }
  int r2 = s3->mul(r, r);
  int s = -1;
  for (int x = 0; x < 6; ++x)
    if (x != s3->identity() && x != r && x != r2) {
      s = x;
      break;
    }
  auto rot = [](double t) {
    Mat m(2, 2);
    m << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
    return m;
  };
  std::vector<Mat> mats(6);
  mats[s3->identity()] = Mat::Identity(2, 2);
  mats[r] = rot(2 * pi / 3);
  mats[r2] = rot(4 * pi / 3);
  Mat refl(2, 2);
  refl << 1, 0, 0, -1;
  mats[s] = refl;
  mats[s3->mul(s, r)] = mats[s] * mats[r];
  mats[s3->mul(s, r2)] = mats[s] * mats[r2];
  return Representation::make(s3, std::move(mats));
}

}  // namespace

TEST_CASE("characters of basic representations") {
  auto z3 = cyclic_group(3);
  CHECK(character(Representation::trivial(z3)).isApprox(Vec::Ones(3)));

  Vec chi_reg = character(Representation::regular(z3));
  CHECK(std::abs(chi_reg(0) - 3.0) < 1e-12);
  CHECK(std::abs(chi_reg(1)) < 1e-12);
  CHECK(std::abs(chi_reg(2)) < 1e-12);

  auto s3 = symmetric_3();
  Vec chi2 = character(s3_standard_rep(s3));
  const auto& classes = s3->conjugacy_classes();
  for (size_t c = 0; c < classes.size(); ++c) {
    int rep = classes[c][0];
    double expected;
    if (rep == s3->identity()) expected = 2.0;
    else if (s3->mul(rep, rep) == s3->identity()) expected = 0.0;  // transpositions
    else expected = -1.0;                                          // 3-cycles
    CHECK(std::abs(chi2(c) - expected) < 1e-12);
  }
}

TEST_CASE("irreducibles of the trivial group") {
  auto cat = irreducibles(cyclic_group(1));
  CHECK(cat.count() == 1);
  CHECK(cat.degree(0) == 1);
  CHECK(cat.trivial_index == 0);
}

TEST_CASE("irreducibles of Z3 are 1, omega, omega^2") {
  auto cat = irreducibles(cyclic_group(3));
  REQUIRE(cat.count() == 3);
  for (int k = 0; k < 3; ++k) CHECK(cat.degree(k) == 1);
  const Cplx omega = std::polar(1.0, 2 * std::numbers::pi / 3);
  std::vector<Cplx> vals;
  for (int k = 0; k < 3; ++k)
    if (k != cat.trivial_index) vals.push_back(cat.table.rows[k](1));
  REQUIRE(vals.size() == 2);
  CHECK(((std::abs(vals[0] - omega) < 1e-9 && std::abs(vals[1] - std::conj(omega)) < 1e-9) ||
         (std::abs(vals[1] - omega) < 1e-9 && std::abs(vals[0] - std::conj(omega)) < 1e-9)));
}

TEST_CASE("irreducible degrees over the catalog") {
  auto degrees = [](const GroupPtr& g) { return irreducibles(g).table.degrees; };
  CHECK(degrees(symmetric_3()) == std::vector<int>{1, 1, 2});
  CHECK(degrees(dihedral_group(4)) == std::vector<int>{1, 1, 1, 1, 2});
  CHECK(degrees(quaternion_8()) == std::vector<int>{1, 1, 1, 1, 2});
  CHECK(degrees(alternating_4()) == std::vector<int>{1, 1, 1, 3});
}

TEST_CASE("completeness and orthogonality over the catalog") {
  for (const auto& entry : builtin_catalog()) {
    CAPTURE(entry.name);
    auto cat = irreducibles(entry.group);
    CHECK(cat.count() == static_cast<int>(entry.group->conjugacy_classes().size()));
    int dsum = 0;
    for (int d : cat.table.degrees) dsum += d * d;
    CHECK(dsum == entry.group->order());
    CHECK(cat.table.orthonormality_residual() <= 1e-8);
    for (const auto& irr : cat.irreps) {
      CHECK(irr.multiplicativity_residual() <= 1e-8);
      CHECK(irr.unitarity_residual() <= 1e-8);
    }
    for (int k = 1; k < cat.count(); ++k) CHECK(cat.degree(k - 1) <= cat.degree(k));
  }
}

TEST_CASE("multiplicity examples") {
  auto s3 = symmetric_3();
  auto cat = irreducibles(s3);

  for (int k = 0; k < cat.count(); ++k)
    for (int j = 0; j < cat.count(); ++j)
      CHECK(multiplicity(cat.irreps[k], cat, j) == (j == k ? 1 : 0));

  auto reg = Representation::regular(s3);
  for (int k = 0; k < cat.count(); ++k) CHECK(multiplicity(reg, cat, k) == cat.degree(k));

  auto z2 = cyclic_group(2);
  auto cat2 = irreducibles(z2);
  Mat d = Mat::Identity(2, 2);
  d(1, 1) = -1;
  auto rho = Representation::make(z2, {Mat::Identity(2, 2), d});
  CHECK(multiplicity(rho, cat2, 0) == 1);
  CHECK(multiplicity(rho, cat2, 1) == 1);

  // trivial multiplicity = dimension of the fixed subspace (projector rank)
  Mat avg = Mat::Zero(2, 2);
  for (int g = 0; g < 2; ++g) avg += rho.at(g);
  avg /= 2.0;
  CHECK(multiplicity(rho, cat2, cat2.trivial_index) == rank_within(avg, 1e-8));
}

TEST_CASE("isotypic decomposition of block-form input") {
  auto z2 = cyclic_group(2);
  auto cat = irreducibles(z2);
  Mat d = Mat::Identity(2, 2);
  d(1, 1) = -1;
  auto rho = Representation::make(z2, {Mat::Identity(2, 2), d});
  auto dec = isotypic_decompose(rho, cat);
  CHECK(dec.block_residual(rho, cat) <= 1e-8);
  int total_mult = 0;
  for (const auto& c : dec.components) total_mult += c.multiplicity;
  CHECK(total_mult == 2);
}

TEST_CASE("isotypic decomposition of the regular representation of Z3") {
  auto z3 = cyclic_group(3);
  auto cat = irreducibles(z3);
  auto reg = Representation::regular(z3);
  auto dec = isotypic_decompose(reg, cat);
  for (const auto& c : dec.components) CHECK(c.multiplicity == 1);
  CHECK(unitary_residual(dec.change_of_basis) <= 1e-9);
  CHECK(dec.block_residual(reg, cat) <= 1e-8);

  // oracle: the projector e_k = (d_k/|H|) sum chi_k(h^-1) rho(h) has rank m_k d_k
  for (int k = 0; k < cat.count(); ++k) {
    Mat ek = Mat::Zero(3, 3);
    for (int g = 0; g < 3; ++g)
      ek += std::conj(cat.table.rows[k](z3->class_of(g))) * reg.at(g);
    ek /= 3.0;
    CHECK(rank_within(ek, 1e-8) == 1);
  }
}

TEST_CASE("isotypic decomposition recovers rho2 + rho2 of S3") {
  auto s3 = symmetric_3();
  auto cat = irreducibles(s3);
  int k2 = cat.count() - 1;  // the 2-dim irrep sorts last
  REQUIRE(cat.degree(k2) == 2);
  const auto& irr = cat.irreps[k2];
  std::vector<Mat> mats(6);
  for (int g = 0; g < 6; ++g) mats[g] = direct_sum({irr.at(g), irr.at(g)});
  Rng rng(7);
  Mat u = random_unitary(4, rng);
  for (auto& m : mats) m = u * m * u.adjoint();
  auto rho = Representation::make(s3, std::move(mats));
  auto dec = isotypic_decompose(rho, cat);
  for (const auto& c : dec.components)
    CHECK(c.multiplicity == (c.irrep_index == k2 ? 2 : 0));
  CHECK(dec.block_residual(rho, cat) <= 1e-7);
}

TEST_CASE("random conjugated direct sums round trip") {
  Rng rng(2024);
  for (const auto& name : {"Z4", "S3", "D4"}) {
    auto g = catalog_group(name);
    auto cat = irreducibles(g);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<int> mult(cat.count());
      int dim = 0;
      for (int k = 0; k < cat.count(); ++k) {
        mult[k] = rng.uniform_int(0, 2);
        dim += mult[k] * cat.degree(k);
      }
      if (dim == 0) continue;
      std::vector<Mat> mats(g->order());
      for (int x = 0; x < g->order(); ++x) {
        std::vector<Mat> blocks;
        for (int k = 0; k < cat.count(); ++k)
          for (int c = 0; c < mult[k]; ++c) blocks.push_back(cat.irreps[k].at(x));
        mats[x] = direct_sum(blocks);
      }
      Mat u = random_unitary(dim, rng);
      for (auto& m : mats) m = u * m * u.adjoint();
      auto rho = Representation::make(g, std::move(mats));
      auto dec = isotypic_decompose(rho, cat);
      for (int k = 0; k < cat.count(); ++k) CHECK(dec.components[k].multiplicity == mult[k]);
      CHECK(dec.block_residual(rho, cat) <= 1e-7);
    }
  }
}

TEST_CASE("unitarize examples") {
  auto z2 = cyclic_group(2);
  Mat d = Mat::Identity(2, 2);
  d(1, 1) = -1;
  auto u = unitarize(z2, {Mat::Identity(2, 2), d});
  CHECK(max_abs(u.at(1) - d) < 1e-9);

  Mat bad(2, 2);
  bad << 1, 1, 0, -1;
  CHECK(max_abs(bad * bad - Mat::Identity(2, 2)) < 1e-12);
  auto fixed = unitarize(z2, {Mat::Identity(2, 2), bad});
  CHECK(fixed.unitarity_residual() <= 1e-9);
  CHECK(std::abs(fixed.at(1).trace() - bad.trace()) < 1e-9);

  auto z3 = cyclic_group(3);
  auto triv = unitarize(z3, Representation::trivial(z3).matrices);
  CHECK(triv.degree == 1);
}
