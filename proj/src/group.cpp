#include "eqvb/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "eqvb/parallel.hpp"

namespace eqvb {

namespace {

std::vector<int> compose_perm(const std::vector<int>& a, const std::vector<int>& b) {
  // (a b)(x) = a(b(x))
  std::vector<int> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

}  // namespace

std::string cycle_notation(const std::vector<int>& perm) {
  std::string out;
  std::vector<char> seen(perm.size(), 0);
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == static_cast<int>(i)) continue;
    out += '(';
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += ' ';
      out += std::to_string(j);
      first = false;
      j = static_cast<size_t>(perm[j]);
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

GroupPtr FiniteGroup::from_table(std::vector<std::vector<int>> table,
                                 std::optional<std::vector<std::string>> labels) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw NotAGroupError("latin-square", "empty table");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      throw NotAGroupError("latin-square", "table is not square");
    for (int j = 0; j < n; ++j)
      if (table[i][j] < 0 || table[i][j] >= n)
        throw NotAGroupError("latin-square", "entry out of range at (" + std::to_string(i) +
                                                 "," + std::to_string(j) + ")");
  }
  // rows and columns must be permutations
  for (int i = 0; i < n; ++i) {
    std::vector<char> row(n, 0), col(n, 0);
    for (int j = 0; j < n; ++j) {
      if (row[table[i][j]]++)
        throw NotAGroupError("latin-square", "row " + std::to_string(i) + " repeats an entry");
      if (col[table[j][i]]++)
        throw NotAGroupError("latin-square", "column " + std::to_string(i) + " repeats an entry");
    }
  }
  // associativity over all triples
  {
    const size_t nn = static_cast<size_t>(n);
    size_t bad = par::first_violation(nn * nn * nn, [&](size_t idx) {
      int a = static_cast<int>(idx / (nn * nn));
      int b = static_cast<int>((idx / nn) % nn);
      int c = static_cast<int>(idx % nn);
      return table[table[a][b]][c] != table[a][table[b][c]];
    });
    if (bad != par::npos) {
      size_t a = bad / (nn * nn), b = (bad / nn) % nn, c = bad % nn;
      throw NotAGroupError("associativity", "(" + std::to_string(a) + "*" + std::to_string(b) +
                                                ")*" + std::to_string(c) + " differs");
    }
  }
  // two-sided identity
  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw NotAGroupError("identity", "no two-sided identity element");
  // inverses
  std::vector<int> inverses(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (table[x][y] == identity && table[y][x] == identity) {
        inverses[x] = y;
        break;
      }
    }
    if (inverses[x] < 0)
      throw NotAGroupError("inverse", "element " + std::to_string(x) + " has no inverse");
  }

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->order_ = n;
  g->table_ = std::move(table);
  g->identity_ = identity;
  g->inverses_ = std::move(inverses);
  if (labels) {
    if (static_cast<int>(labels->size()) != n)
      throw InputError("label count does not match group order");
    g->labels_ = std::move(*labels);
  }
  g->finalize();
  return g;
}

GroupPtr FiniteGroup::from_permutations(int degree, const std::vector<std::vector<int>>& generators,
                                        int order_bound) {
  if (degree <= 0) throw InputError("permutation degree must be positive");
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  for (const auto& p : generators) {
    if (static_cast<int>(p.size()) != degree) throw InputError("generator has wrong degree");
    std::vector<char> seen(degree, 0);
    for (int v : p) {
      if (v < 0 || v >= degree || seen[v]++) throw InputError("generator is not a permutation");
    }
  }
  std::set<std::vector<int>> elems;
  std::queue<std::vector<int>> work;
  elems.insert(id);
  work.push(id);
  while (!work.empty()) {
    auto cur = work.front();
    work.pop();
    for (const auto& gen : generators) {
      for (const auto& prod : {compose_perm(cur, gen), compose_perm(gen, cur)}) {
        if (elems.insert(prod).second) {
          if (static_cast<int>(elems.size()) > order_bound)
            throw TooLargeError("permutation closure exceeds bound " + std::to_string(order_bound));
          work.push(prod);
        }
      }
    }
  }
  std::vector<std::vector<int>> sorted(elems.begin(), elems.end());  // identity is lex-least
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = static_cast<int>(i);
  const int n = static_cast<int>(sorted.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = index.at(compose_perm(sorted[i], sorted[j]));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = cycle_notation(sorted[i]);
  return from_table(std::move(table), std::move(labels));
}

void FiniteGroup::finalize() {
  if (labels_.empty()) {
    labels_.resize(order_);
    for (int i = 0; i < order_; ++i) labels_[i] = std::to_string(i);
  }
  class_of_.assign(order_, -1);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < order_; ++x) {
    if (class_of_[x] >= 0) continue;
    std::set<int> cls;
    for (int g = 0; g < order_; ++g) cls.insert(conjugate(g, x));
    std::vector<int> sorted(cls.begin(), cls.end());
    int id = static_cast<int>(classes.size());
    for (int y : sorted) class_of_[y] = id;
    classes.push_back(std::move(sorted));
  }
  // identity class first, rest by smallest member
  const int id_class = class_of_[identity_];
  std::vector<int> order_keys(classes.size());
  std::iota(order_keys.begin(), order_keys.end(), 0);
  std::sort(order_keys.begin(), order_keys.end(), [&](int a, int b) {
    if ((a == id_class) != (b == id_class)) return a == id_class;
    return classes[a][0] < classes[b][0];
  });
  classes_.resize(classes.size());
  for (size_t pos = 0; pos < order_keys.size(); ++pos) {
    classes_[pos] = std::move(classes[order_keys[pos]]);
    for (int y : classes_[pos]) class_of_[y] = static_cast<int>(pos);
  }
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<int> elements) : parent_(std::move(parent)) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  member_.assign(parent_->order(), 0);
  for (int e : elements) {
    if (e < 0 || e >= parent_->order()) throw InputError("subgroup element out of range");
    member_[e] = 1;
  }
  if (!member_[parent_->identity()]) throw InputError("subgroup does not contain the identity");
  for (int a : elements) {
    if (!member_[parent_->inv(a)]) throw InputError("subgroup not closed under inverses");
    for (int b : elements)
      if (!member_[parent_->mul(a, b)]) throw InputError("subgroup not closed under products");
  }
  if (parent_->order() % static_cast<int>(elements.size()) != 0)
    throw InputError("subgroup order does not divide group order");  // unreachable if closed
  elements_ = std::move(elements);
}

Subgroup Subgroup::trivial(GroupPtr g) {
  int e = g->identity();
  return Subgroup(std::move(g), {e});
}

Subgroup Subgroup::full(GroupPtr g) {
  std::vector<int> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(std::move(g), std::move(all));
}

Subgroup Subgroup::closure(GroupPtr g, const std::vector<int>& generators) {
  std::set<int> elems{g->identity()};
  for (int x : generators) {
    if (x < 0 || x >= g->order()) throw InputError("generator out of range");
    elems.insert(x);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(elems.begin(), elems.end());
    for (int a : cur) {
      if (elems.insert(g->inv(a)).second) grew = true;
      for (int b : cur)
        if (elems.insert(g->mul(a, b)).second) grew = true;
    }
  }
  return Subgroup(std::move(g), std::vector<int>(elems.begin(), elems.end()));
}

bool Subgroup::is_normal() const {
  for (int g = 0; g < parent_->order(); ++g)
    for (int h : elements_)
      if (!contains(parent_->conjugate(g, h))) return false;
  return true;
}

EmbeddedGroup embed(const Subgroup& h) {
  const auto& parent = h.parent();
  const auto& elems = h.elements();
  const int n = h.size();
  std::vector<int> from_parent(parent->order(), -1);
  for (int i = 0; i < n; ++i) from_parent[elems[i]] = i;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = from_parent[parent->mul(elems[i], elems[j])];
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = parent->label(elems[i]);
  EmbeddedGroup out;
  out.group = FiniteGroup::from_table(std::move(table), std::move(labels));
  out.to_parent = elems;
  out.from_parent = std::move(from_parent);
  return out;
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g, int order_bound) {
  if (g->order() > order_bound)
    throw TooLargeError("group order " + std::to_string(g->order()) + " exceeds bound " +
                        std::to_string(order_bound));
  std::set<std::vector<int>> found;
  std::vector<Subgroup> out;
  auto add = [&](Subgroup s) {
    if (found.insert(s.elements()).second) out.push_back(std::move(s));
  };
  add(Subgroup::trivial(g));
  for (int a = 0; a < g->order(); ++a) {
    add(Subgroup::closure(g, {a}));
    for (int b = a + 1; b < g->order(); ++b) add(Subgroup::closure(g, {a, b}));
  }
  // saturate by pairwise joins; every subgroup is a join of cyclic ones
  bool grew = true;
  while (grew) {
    grew = false;
    const size_t n = out.size();
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = i + 1; j < n; ++j) {
        std::vector<int> gens = out[i].elements();
        gens.insert(gens.end(), out[j].elements().begin(), out[j].elements().end());
        Subgroup joined = Subgroup::closure(g, gens);
        if (found.insert(joined.elements()).second) {
          out.push_back(std::move(joined));
          grew = true;
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements() < b.elements();
  });
  return out;
}

Subgroup normalizer(const Subgroup& h) {
  const auto& g = h.parent();
  std::vector<int> elems;
  for (int x = 0; x < g->order(); ++x) {
    bool norm = true;
    for (int y : h.elements())
      if (!h.contains(g->conjugate(x, y))) {
        norm = false;
        break;
      }
    if (norm) elems.push_back(x);
  }
  return Subgroup(g, std::move(elems));
}

Subgroup conjugate_subgroup(int g, const Subgroup& h) {
  const auto& parent = h.parent();
  std::vector<int> elems;
  elems.reserve(h.size());
  for (int y : h.elements()) elems.push_back(parent->conjugate(g, y));
  return Subgroup(parent, std::move(elems));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  std::vector<int> gens = a.elements();
  gens.insert(gens.end(), b.elements().begin(), b.elements().end());
  return Subgroup::closure(a.parent(), gens);
}

std::vector<ConjugateEntry> conjugation_classes_of(const Subgroup& h) {
  CosetDecomposition dec(h.parent(), normalizer(h));
  std::vector<ConjugateEntry> out;
  out.reserve(dec.num_cosets());
  for (int c = 0; c < dec.num_cosets(); ++c) {
    int rep = dec.representative(c);
    out.push_back({rep, conjugate_subgroup(rep, h)});
  }
  return out;
}

CosetDecomposition::CosetDecomposition(GroupPtr group, Subgroup subgroup)
    : group_(std::move(group)), subgroup_(std::move(subgroup)) {
  if (subgroup_.parent().get() != group_.get())
    throw ModelMismatchError("subgroup belongs to a different group");
  const int n = group_->order();
  coset_of_.assign(n, -1);
  // identity's coset first with the identity as representative
  auto emit = [&](int rep) {
    std::vector<int> coset;
    coset.reserve(subgroup_.size());
    for (int h : subgroup_.elements()) coset.push_back(group_->mul(rep, h));
    std::sort(coset.begin(), coset.end());
    int id = static_cast<int>(cosets_.size());
    for (int x : coset) coset_of_[x] = id;
    cosets_.push_back(std::move(coset));
    transversal_.push_back(rep);
  };
  emit(group_->identity());
  for (int x = 0; x < n; ++x)
    if (coset_of_[x] < 0) emit(x);  // x is the smallest member of its coset
}

int CosetDecomposition::h_part(int g) const {
  int s = transversal_[coset_of_[g]];
  return group_->mul(group_->inv(s), g);
}

QuotientGroup::QuotientGroup(CosetDecomposition dec) : dec_(std::move(dec)) {
  const auto& g = dec_.group();
  const auto& h = dec_.subgroup();
  for (int x = 0; x < g->order(); ++x)
    for (int y : h.elements())
      if (!h.contains(g->conjugate(x, y)))
        throw NotNormalError("subgroup is not normal: " + g->label(x) + " conjugates " +
                             g->label(y) + " outside");
  const int m = dec_.num_cosets();
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[i][j] = dec_.coset_of(g->mul(dec_.representative(i), dec_.representative(j)));
  // well-definedness: representative choice must not matter
  for (int x = 0; x < g->order(); ++x)
    for (int y = 0; y < g->order(); ++y)
      if (dec_.coset_of(g->mul(x, y)) != table[dec_.coset_of(x)][dec_.coset_of(y)])
        throw NotNormalError("coset multiplication is not well defined");
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) labels[i] = "[" + g->label(dec_.representative(i)) + "]";
  quotient_ = FiniteGroup::from_table(std::move(table), std::move(labels));
}

bool GroupHomomorphism::is_bijective() const {
  if (domain->order() != codomain->order()) return false;
  std::vector<char> hit(codomain->order(), 0);
  for (int v : map)
    if (hit[v]++) return false;
  return true;
}

GroupHomomorphism make_homomorphism(GroupPtr domain, GroupPtr codomain, std::vector<int> map) {
  if (static_cast<int>(map.size()) != domain->order())
    throw InputError("homomorphism map has wrong size");
  for (int v : map)
    if (v < 0 || v >= codomain->order()) throw InputError("homomorphism value out of range");
  if (map[domain->identity()] != codomain->identity())
    throw InputError("homomorphism does not fix the identity");
  for (int a = 0; a < domain->order(); ++a)
    for (int b = 0; b < domain->order(); ++b)
      if (map[domain->mul(a, b)] != codomain->mul(map[a], map[b]))
        throw InputError("map is not multiplicative at (" + std::to_string(a) + "," +
                         std::to_string(b) + ")");
  return GroupHomomorphism{std::move(domain), std::move(codomain), std::move(map)};
}

GroupHomomorphism conjugation_homomorphism(int g, const Subgroup& h) {
  EmbeddedGroup dom = embed(h);
  EmbeddedGroup cod = embed(conjugate_subgroup(g, h));
  std::vector<int> map(dom.group->order());
  for (int i = 0; i < dom.group->order(); ++i)
    map[i] = cod.to_local(h.parent()->conjugate(g, dom.to_parent[i]));
  return make_homomorphism(dom.group, cod.group, std::move(map));
}

}  // namespace eqvb
