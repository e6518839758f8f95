#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eqvb/errors.hpp"

namespace eqvb {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Finite group given by its full multiplication table. Elements are indices
/// 0..order-1. Construction validates every axiom (Latin square, associativity,
/// identity, inverses) and reports the first one that fails.
class FiniteGroup {
 public:
  static GroupPtr from_table(std::vector<std::vector<int>> table,
                             std::optional<std::vector<std::string>> labels = std::nullopt);

  /// Closure of one-line permutations on `degree` letters. Elements are sorted
  /// lexicographically by their one-line image, which puts the identity first.
  static GroupPtr from_permutations(int degree, const std::vector<std::vector<int>>& generators,
                                    int order_bound = 4096);

  int order() const { return order_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverses_[a]; }
  int identity() const { return identity_; }
  /// g x g^{-1}
  int conjugate(int g, int x) const { return mul(mul(g, x), inv(g)); }
  const std::vector<std::vector<int>>& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int g) const { return labels_[g]; }
  bool is_abelian() const;

  /// Conjugacy classes: class of the identity first, the rest ordered by their
  /// smallest member. Each class is sorted.
  const std::vector<std::vector<int>>& conjugacy_classes() const { return classes_; }
  int class_of(int g) const { return class_of_[g]; }

 private:
  FiniteGroup() = default;
  void finalize();  // inverses, classes, labels

  int order_ = 0;
  std::vector<std::vector<int>> table_;
  int identity_ = -1;
  std::vector<int> inverses_;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
};

/// Subgroup of a fixed parent group, stored as a sorted element list.
class Subgroup {
 public:
  Subgroup(GroupPtr parent, std::vector<int> elements);

  static Subgroup trivial(GroupPtr g);
  static Subgroup full(GroupPtr g);
  /// Smallest subgroup containing the generators.
  static Subgroup closure(GroupPtr g, const std::vector<int>& generators);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<int>& elements() const { return elements_; }
  bool contains(int g) const { return member_[g] != 0; }
  int size() const { return static_cast<int>(elements_.size()); }
  int index() const { return parent_->order() / size(); }
  bool is_normal() const;
  bool operator==(const Subgroup& o) const { return elements_ == o.elements_; }

 private:
  GroupPtr parent_;
  std::vector<int> elements_;
  std::vector<char> member_;
};

/// Subgroup re-indexed as a standalone group. to_parent is ascending, so the
/// local numbering is determined by the element set alone.
struct EmbeddedGroup {
  GroupPtr group;
  std::vector<int> to_parent;
  std::vector<int> from_parent;  // -1 outside the subgroup

  int to_local(int parent_elt) const { return from_parent[parent_elt]; }
};

EmbeddedGroup embed(const Subgroup& h);

/// All subgroups, closed under conjugation. Throws TooLarge above the bound.
std::vector<Subgroup> all_subgroups(const GroupPtr& g, int order_bound = 48);

Subgroup normalizer(const Subgroup& h);
Subgroup conjugate_subgroup(int g, const Subgroup& h);
Subgroup join(const Subgroup& a, const Subgroup& b);

struct ConjugateEntry {
  int coset_rep;  // smallest representative of its N(H)-coset
  Subgroup subgroup;
};

/// One entry per coset of N(H); the subgroups are pairwise distinct.
std::vector<ConjugateEntry> conjugation_classes_of(const Subgroup& h);

/// Left cosets gH. Coset 0 is the identity's coset with representative the
/// identity; the rest are ordered by smallest member with that member as
/// representative.
class CosetDecomposition {
 public:
  CosetDecomposition(GroupPtr group, Subgroup subgroup);

  const GroupPtr& group() const { return group_; }
  const Subgroup& subgroup() const { return subgroup_; }
  int num_cosets() const { return static_cast<int>(cosets_.size()); }
  const std::vector<std::vector<int>>& cosets() const { return cosets_; }
  int coset_of(int g) const { return coset_of_[g]; }
  int representative(int coset) const { return transversal_[coset]; }
  const std::vector<int>& transversal() const { return transversal_; }

  /// H-part of g: s([g])^{-1} g, always in H, with g = s([g]) * h_part(g).
  int h_part(int g) const;

 private:
  GroupPtr group_;
  Subgroup subgroup_;
  std::vector<std::vector<int>> cosets_;
  std::vector<int> transversal_;
  std::vector<int> coset_of_;
};

/// Quotient by a normal subgroup; the quotient is a FiniteGroup on coset
/// indices (identity coset = 0).
class QuotientGroup {
 public:
  explicit QuotientGroup(CosetDecomposition dec);  // throws NotNormal

  const CosetDecomposition& cosets() const { return dec_; }
  const GroupPtr& group() const { return quotient_; }
  int project(int g) const { return dec_.coset_of(g); }

 private:
  CosetDecomposition dec_;
  GroupPtr quotient_;
};

struct GroupHomomorphism {
  GroupPtr domain;
  GroupPtr codomain;
  std::vector<int> map;  // domain element -> codomain element

  bool is_bijective() const;
};

/// Validates map(xy) = map(x)map(y) on all pairs and map(e) = e.
GroupHomomorphism make_homomorphism(GroupPtr domain, GroupPtr codomain, std::vector<int> map);

/// n Mapsto g n g^{-1} between the embedded groups of H and gHg^{-1}.
GroupHomomorphism conjugation_homomorphism(int g, const Subgroup& h);

/// Cycle notation for a one-line permutation ("e" for the identity).
std::string cycle_notation(const std::vector<int>& perm);

}  // namespace eqvb
