#include "eqvb/catalog.hpp"

#include <mutex>

namespace eqvb {

GroupPtr cyclic_group(int n) {
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = i == 0 ? "e" : "g^" + std::to_string(i);
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return FiniteGroup::from_table(std::move(table), std::move(labels));
}

GroupPtr dihedral_group(int n) {
  // elements 0..n-1 rotations r^i, n..2n-1 reflections s r^i
  const int m = 2 * n;
  auto idx = [n](bool refl, int rot) { return (refl ? n : 0) + ((rot % n) + n) % n; };
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a) {
    bool fa = a >= n;
    int ra = a % n;
    for (int b = 0; b < m; ++b) {
      bool fb = b >= n;
      int rb = b % n;
      // (s^fa r^ra)(s^fb r^rb) = s^(fa+fb) r^(rb +- ra)
      table[a][b] = idx(fa != fb, fb ? rb - ra : rb + ra);
    }
  }
  std::vector<std::string> labels(m);
  for (int i = 0; i < n; ++i) {
    labels[i] = i == 0 ? "e" : "r^" + std::to_string(i);
    labels[n + i] = i == 0 ? "s" : "s r^" + std::to_string(i);
  }
  return FiniteGroup::from_table(std::move(table), std::move(labels));
}

GroupPtr symmetric_3() { return FiniteGroup::from_permutations(3, {{1, 0, 2}, {1, 2, 0}}); }

GroupPtr alternating_4() { return FiniteGroup::from_permutations(4, {{1, 0, 3, 2}, {1, 2, 0, 3}}); }

GroupPtr quaternion_8() {
  // 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k
  auto neg = [](int x) { return x ^ 1; };
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  // unit multiplication on {1,i,j,k} with sign tracking
  auto mul_units = [&](int a, int b) -> int {  // a,b in {0:1,1:i,2:j,3:k} -> signed index
    static const int prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{+1, +1, +1, +1},
                                   {+1, -1, +1, -1},
                                   {+1, -1, -1, +1},
                                   {+1, +1, -1, -1}};
    int base = 2 * prod[a][b];
    return sign[a][b] > 0 ? base : base ^ 1;
  };
  for (int x = 0; x < 8; ++x) {
    int ux = x / 2, sx = x % 2;
    for (int y = 0; y < 8; ++y) {
      int uy = y / 2, sy = y % 2;
      int r = mul_units(ux, uy);
      if ((sx + sy) % 2 == 1) r = neg(r);
      table[x][y] = r;
    }
  }
  std::vector<std::string> labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return FiniteGroup::from_table(std::move(table), std::move(labels));
}

GroupPtr klein_four() {
  return direct_product(cyclic_group(2), cyclic_group(2));
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
  const int na = a->order(), nb = b->order(), n = na * nb;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    int ai = i / nb, bi = i % nb;
    labels[i] = "(" + a->label(ai) + "," + b->label(bi) + ")";
    for (int j = 0; j < n; ++j) {
      int aj = j / nb, bj = j % nb;
      table[i][j] = a->mul(ai, aj) * nb + b->mul(bi, bj);
    }
  }
  return FiniteGroup::from_table(std::move(table), std::move(labels));
}

const std::vector<CatalogEntry>& builtin_catalog() {
  static std::vector<CatalogEntry> entries;
  static std::once_flag once;
  std::call_once(once, [] {
    entries = {
        {"Z2", cyclic_group(2)},   {"Z3", cyclic_group(3)},    {"Z4", cyclic_group(4)},
        {"Z2xZ2", klein_four()},   {"S3", symmetric_3()},      {"D4", dihedral_group(4)},
        {"Q8", quaternion_8()},    {"A4", alternating_4()},
    };
  });
  return entries;
}

GroupPtr catalog_group(const std::string& name) {
  for (const auto& e : builtin_catalog())
    if (e.name == name) return e.group;
  throw InputError("unknown catalog group: " + name);
}

}  // namespace eqvb
