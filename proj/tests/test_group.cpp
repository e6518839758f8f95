#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "eqvb/catalog.hpp"
#include "eqvb/group.hpp"

using namespace eqvb;

namespace {

// brute-force oracle: all subgroups by closing every subset of a small
// generating pool (complete because every subgroup is generated by its own
// elements)
std::set<std::vector<int>> subgroups_brute_force(const GroupPtr& g) {
  const int n = g->order();
  REQUIRE(n <= 12);
  std::set<std::vector<int>> found;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> gens;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) gens.push_back(i);
    found.insert(Subgroup::closure(g, gens).elements());
  }
  return found;
}

std::vector<int> compose_perm(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

}  // namespace

TEST_CASE("order-2 table is Z2") {
  auto g = FiniteGroup::from_table({{0, 1}, {1, 0}});
  CHECK(g->order() == 2);
  CHECK(g->identity() == 0);
  CHECK(g->inv(1) == 1);
}

TEST_CASE("constant table is rejected as latin-square failure") {
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 0}, {0, 0}}), NotAGroupError);
  try {
    FiniteGroup::from_table({{0, 0}, {0, 0}});
  } catch (const NotAGroupError& e) {
    CHECK(e.axiom() == "latin-square");
  }
}

TEST_CASE("non-associative latin square is rejected with the right axiom") {
  // order-5 latin square (cyclic shifted rows) that is not a group table:
  // row i column j -> (2i + j) mod 5 has an identity-free structure
  std::vector<std::vector<int>> t(5, std::vector<int>(5));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) t[i][j] = (2 * i + j) % 5;
  try {
    FiniteGroup::from_table(t);
    CHECK(false);
  } catch (const NotAGroupError& e) {
    CHECK(e.axiom() == "associativity");
  }
}

TEST_CASE("permutation closure of (01),(012) is S3 with 3 classes") {
  auto g = FiniteGroup::from_permutations(3, {{1, 0, 2}, {1, 2, 0}});
  CHECK(g->order() == 6);
  CHECK(g->conjugacy_classes().size() == 3);

  // independent oracle: closure enumeration over permutation composition
  std::set<std::vector<int>> elems = {{0, 1, 2}, {1, 0, 2}, {1, 2, 0}};
  bool grew = true;
  while (grew) {
    grew = false;
    auto snapshot = elems;
    for (const auto& a : snapshot)
      for (const auto& b : snapshot)
        if (elems.insert(compose_perm(a, b)).second) grew = true;
  }
  CHECK(elems.size() == 6);
}

TEST_CASE("group axioms hold on the whole catalog") {
  for (const auto& entry : builtin_catalog()) {
    const auto& g = entry.group;
    const int n = g->order();
    CAPTURE(entry.name);
    for (int a = 0; a < n; ++a) {
      CHECK(g->mul(g->identity(), a) == a);
      CHECK(g->mul(a, g->identity()) == a);
      CHECK(g->mul(a, g->inv(a)) == g->identity());
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          CHECK(g->mul(g->mul(a, b), c) == g->mul(a, g->mul(b, c)));
    }
  }
}

TEST_CASE("subgroup closure examples") {
  auto s3 = symmetric_3();
  CHECK(Subgroup::closure(s3, {}).size() == 1);

  // find a transposition: an element of order 2
  int transposition = -1, threecycle = -1;
  for (int x = 0; x < 6; ++x) {
    if (x == s3->identity()) continue;
    if (s3->mul(x, x) == s3->identity()) transposition = x;
    else threecycle = x;
  }
  CHECK(Subgroup::closure(s3, {transposition}).size() == 2);
  CHECK(Subgroup::closure(s3, {transposition, threecycle}).size() == 6);
}

TEST_CASE("all_subgroups matches brute force and expected counts") {
  CHECK(all_subgroups(cyclic_group(2)).size() == 2);

  auto s3 = symmetric_3();
  auto subs = all_subgroups(s3);
  CHECK(subs.size() == 6);
  auto oracle = subgroups_brute_force(s3);
  CHECK(oracle.size() == 6);
  for (const auto& s : subs) CHECK(oracle.count(s.elements()) == 1);

  auto d4 = dihedral_group(4);
  auto subs_d4 = all_subgroups(d4);
  CHECK(subs_d4.size() == 10);
  auto oracle_d4 = subgroups_brute_force(d4);
  CHECK(oracle_d4.size() == 10);

  // closure under conjugation
  for (const auto& s : subs_d4) {
    for (int g = 0; g < d4->order(); ++g) {
      auto conj = conjugate_subgroup(g, s).elements();
      CHECK(std::any_of(subs_d4.begin(), subs_d4.end(),
                        [&](const Subgroup& t) { return t.elements() == conj; }));
    }
  }
}

TEST_CASE("normalizer examples") {
  auto s3 = symmetric_3();
  CHECK(normalizer(Subgroup::full(s3)).size() == 6);

  int transposition = -1;
  for (int x = 1; x < 6; ++x)
    if (x != s3->identity() && s3->mul(x, x) == s3->identity()) {
      transposition = x;
      break;
    }
  Subgroup h = Subgroup::closure(s3, {transposition});
  Subgroup n = normalizer(h);
  CHECK(n.size() == 2);
  CHECK(n == h);

  // brute-force oracle over all elements
  std::vector<int> expected;
  for (int g = 0; g < 6; ++g)
    if (conjugate_subgroup(g, h) == h) expected.push_back(g);
  CHECK(n.elements() == expected);

  // D4: normalizer of a reflection subgroup has order 4
  auto d4 = dihedral_group(4);
  Subgroup refl = Subgroup::closure(d4, {4});  // s
  CHECK(refl.size() == 2);
  Subgroup nd = normalizer(refl);
  CHECK(nd.size() == 4);
  CHECK(nd.contains(2));  // r^2 normalizes every reflection
}

TEST_CASE("conjugate subgroup examples") {
  auto s3 = symmetric_3();
  int transposition = -1, threecycle = -1;
  for (int x = 1; x < 6; ++x) {
    if (s3->mul(x, x) == s3->identity() && x != s3->identity()) transposition = x;
    if (s3->mul(x, x) != s3->identity() && x != s3->identity()) threecycle = x;
  }
  Subgroup h = Subgroup::closure(s3, {transposition});
  CHECK(conjugate_subgroup(s3->identity(), h) == h);
  Subgroup conj = conjugate_subgroup(threecycle, h);
  CHECK(conj.size() == 2);
  CHECK_FALSE(conj == h);

  Subgroup a3 = Subgroup::closure(s3, {threecycle});
  for (int g = 0; g < 6; ++g) CHECK(conjugate_subgroup(g, a3) == a3);
  CHECK(a3.is_normal());
}

TEST_CASE("conjugation classes of a subgroup") {
  auto s3 = symmetric_3();
  int threecycle = -1;
  for (int x = 1; x < 6; ++x)
    if (s3->mul(x, x) != s3->identity()) threecycle = x;
  Subgroup a3 = Subgroup::closure(s3, {threecycle});
  CHECK(conjugation_classes_of(a3).size() == 1);

  int transposition = -1;
  for (int x = 1; x < 6; ++x)
    if (s3->mul(x, x) == s3->identity()) transposition = x;
  Subgroup h = Subgroup::closure(s3, {transposition});
  auto entries = conjugation_classes_of(h);
  CHECK(entries.size() == 3);
  std::set<std::vector<int>> distinct;
  for (const auto& e : entries) distinct.insert(e.subgroup.elements());
  CHECK(distinct.size() == 3);

  // brute force: {gHg^-1 : g in G}
  std::set<std::vector<int>> brute;
  for (int g = 0; g < 6; ++g) brute.insert(conjugate_subgroup(g, h).elements());
  CHECK(brute == distinct);

  auto d4 = dihedral_group(4);
  Subgroup refl = Subgroup::closure(d4, {4});
  CHECK(conjugation_classes_of(refl).size() == 2);  // [D4 : N(H)] = 2
}

TEST_CASE("coset decomposition and quotient") {
  auto s3 = symmetric_3();
  CHECK(CosetDecomposition(s3, Subgroup::full(s3)).num_cosets() == 1);

  int threecycle = -1;
  for (int x = 1; x < 6; ++x)
    if (s3->mul(x, x) != s3->identity()) threecycle = x;
  Subgroup a3 = Subgroup::closure(s3, {threecycle});
  QuotientGroup q{CosetDecomposition(s3, a3)};
  CHECK(q.group()->order() == 2);
  CHECK(q.group()->identity() == 0);
  // quotient isomorphic to Z2: the nontrivial element squares to the identity
  CHECK(q.group()->mul(1, 1) == 0);

  // coset multiplication oracle: projection is a homomorphism
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y)
      CHECK(q.project(s3->mul(x, y)) == q.group()->mul(q.project(x), q.project(y)));

  int transposition = -1;
  for (int x = 1; x < 6; ++x)
    if (s3->mul(x, x) == s3->identity()) transposition = x;
  Subgroup h = Subgroup::closure(s3, {transposition});
  CHECK_THROWS_AS(QuotientGroup{CosetDecomposition(s3, h)}, NotNormalError);
}

TEST_CASE("h_part properties") {
  auto s3 = symmetric_3();
  int threecycle = -1;
  for (int x = 1; x < 6; ++x)
    if (s3->mul(x, x) != s3->identity()) threecycle = x;
  Subgroup a3 = Subgroup::closure(s3, {threecycle});
  CosetDecomposition dec(s3, a3);

  CHECK(dec.h_part(s3->identity()) == s3->identity());
  for (int h : a3.elements()) CHECK(dec.h_part(h) == h);

  // s([g]) * u(g) = g and u(g) in H, for every g
  for (int g = 0; g < 6; ++g) {
    int u = dec.h_part(g);
    CHECK(a3.contains(u));
    CHECK(s3->mul(dec.representative(dec.coset_of(g)), u) == g);
  }

  // explicit: g = transposition * threecycle
  int transposition = -1;
  for (int x = 1; x < 6; ++x)
    if (s3->mul(x, x) == s3->identity()) transposition = x;
  int g = s3->mul(transposition, threecycle);
  int s_rep = dec.representative(dec.coset_of(g));
  CHECK(dec.h_part(g) == s3->mul(s3->inv(s_rep), g));
}

TEST_CASE("transversal determinism and identity convention") {
  for (const auto& entry : builtin_catalog()) {
    const auto& g = entry.group;
    for (const auto& sub : all_subgroups(g)) {
      CosetDecomposition dec(g, sub);
      CHECK(dec.representative(dec.coset_of(g->identity())) == g->identity());
      CHECK(dec.coset_of(g->identity()) == 0);
      for (int c = 1; c < dec.num_cosets(); ++c)
        CHECK(dec.representative(c) == dec.cosets()[c][0]);
      // cosets partition the group into |H|-sized parts
      int total = 0;
      for (const auto& coset : dec.cosets()) {
        CHECK(static_cast<int>(coset.size()) == sub.size());
        total += static_cast<int>(coset.size());
      }
      CHECK(total == g->order());
    }
  }
}

TEST_CASE("conjugation homomorphism between normalizers") {
  auto s3 = symmetric_3();
  int transposition = -1;
  for (int x = 1; x < 6; ++x)
    if (s3->mul(x, x) == s3->identity()) transposition = x;
  Subgroup h = Subgroup::closure(s3, {transposition});
  Subgroup n = normalizer(h);
  for (int g = 0; g < 6; ++g) {
    auto hom = conjugation_homomorphism(g, n);
    CHECK(hom.is_bijective());
    CHECK(hom.domain->order() == n.size());
    // s_g(x) = g x g^{-1} elementwise
    EmbeddedGroup dom = embed(n);
    EmbeddedGroup cod = embed(conjugate_subgroup(g, n));
    for (int i = 0; i < dom.group->order(); ++i)
      CHECK(cod.to_parent[hom.map[i]] == s3->conjugate(g, dom.to_parent[i]));
  }
}

TEST_CASE("embedded subgroup multiplication agrees with parent") {
  auto d4 = dihedral_group(4);
  Subgroup rot = Subgroup::closure(d4, {1});
  EmbeddedGroup em = embed(rot);
  CHECK(em.group->order() == 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(em.to_parent[em.group->mul(i, j)] == d4->mul(em.to_parent[i], em.to_parent[j]));
}
