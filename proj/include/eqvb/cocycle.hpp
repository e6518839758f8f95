#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eqvb/automorphism.hpp"

namespace eqvb {

/// Finite connected 2-complex: charts (vertices), edges, and triangles whose
/// three edges must all be present. Stands in for an atlas of connected charts
/// with connected intersections, so transition data is constant per edge.
class BaseComplex {
 public:
  static std::shared_ptr<const BaseComplex> make(int charts,
                                                 std::vector<std::pair<int, int>> edges,
                                                 std::vector<std::array<int, 3>> triangles);

  int charts() const { return charts_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  /// index of the edge {a,b}; -1 if absent
  int edge_index(int a, int b) const;
  bool edge_in_triangle(int edge) const { return in_triangle_[edge] != 0; }

  /// BFS tree rooted at chart 0: parent chart per chart (-1 at the root).
  const std::vector<int>& tree_parent() const { return tree_parent_; }
  /// charts in BFS order (root first)
  const std::vector<int>& tree_order() const { return tree_order_; }

 private:
  BaseComplex() = default;
  int charts_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::array<int, 3>> triangles_;
  std::vector<char> in_triangle_;
  std::vector<int> tree_parent_;
  std::vector<int> tree_order_;
};

using ComplexPtr = std::shared_ptr<const BaseComplex>;

ComplexPtr cycle_complex(int n);
/// complete graph on n charts with every triple as a triangle
ComplexPtr complete_complex(int n);

struct CocycleReport {
  bool ok = true;
  double max_residual = 0;
  std::vector<std::string> violations;
};

/// G0-valued edge labels. label(a,b) for a<b is stored; the reverse
/// orientation is the inverse. Triangle law: label(a,b) label(b,c) = label(a,c).
struct DiscreteCocycle {
  ComplexPtr complex;
  GroupPtr group;
  std::vector<int> labels;  // per edge index

  int label(int from, int to) const;
};

DiscreteCocycle make_discrete_cocycle(ComplexPtr complex, GroupPtr group, std::vector<int> labels);
CocycleReport validate(const DiscreteCocycle& c);

/// Per-edge tuples of automorphisms of the single-irrep models X_k. The
/// cocycle law per component uses chain order: chain(l(a,b), l(b,c)) = l(a,c).
struct VectCocycle {
  ComplexPtr complex;
  ModelPtr model;  // parent model X_rho; component k lives on component_model(model, k)
  std::vector<std::vector<AutElement>> labels;  // [edge][component]

  AutElement label(int from, int to, int comp) const;
};

/// X_k model for spec position p (the parent itself when single-component).
ModelPtr component_model(const ModelPtr& model, size_t p);

VectCocycle make_vect_cocycle(ComplexPtr complex, ModelPtr model,
                              std::vector<std::vector<AutElement>> labels);
CocycleReport validate(const VectCocycle& c, double tol = 1e-7);

/// Aut(X_rho)-valued cocycle.
struct AutCocycle {
  ComplexPtr complex;
  ModelPtr model;
  std::vector<AutElement> labels;

  AutElement label(int from, int to) const;
};

AutCocycle make_aut_cocycle(ComplexPtr complex, ModelPtr model, std::vector<AutElement> labels);
CocycleReport validate(const AutCocycle& c, double tol = 1e-7);

DiscreteCocycle apply_coboundary(const DiscreteCocycle& c, const std::vector<int>& cochain);
VectCocycle apply_coboundary(const VectCocycle& c,
                             const std::vector<std::vector<AutElement>>& cochain);
AutCocycle apply_coboundary(const AutCocycle& c, const std::vector<AutElement>& cochain);

/// Principal G0-covering glued from a discrete cocycle: vertices chart x G0,
/// the lifted edge of {a,b} at deck coordinate x joins (a,x) to (b, x*q_ab).
/// The deck action is left multiplication on the coordinate.
struct CoveringSpace {
  ComplexPtr base;
  GroupPtr deck;
  DiscreteCocycle cocycle;
  std::vector<std::pair<int, int>> lifted_edges;  // edge e at coord x sits at index e*|G0|+x
  int num_components = 0;
  std::vector<int> component_of;  // per vertex
  std::vector<int> component_root;

  int vertex(int chart, int x) const { return chart * deck->order() + x; }
  int chart_of(int v) const { return v / deck->order(); }
  int deck_coord(int v) const { return v % deck->order(); }
  int vertex_count() const { return base->charts() * deck->order(); }
  int deck_act(int g, int v) const { return vertex(chart_of(v), deck->mul(g, deck_coord(v))); }
};

CoveringSpace build_covering(const DiscreteCocycle& c);

/// Independent component count: index of the subgroup generated by the
/// cycle-basis holonomies.
int covering_component_count_oracle(const DiscreteCocycle& c);

/// Holonomy of each non-tree edge, conjugated back to the root chart.
std::vector<int> cycle_holonomies(const DiscreteCocycle& c);

struct Normalization {
  VectCocycle normalized;
  DiscreteCocycle discrete;                      // the common pr of all components
  std::vector<std::vector<AutElement>> witness;  // [chart][component]
};

/// Aligns the discrete parts of all components to a single cocycle a_{ab} by a
/// per-chart, per-component coboundary whose entries are lifted from G0.
/// Throws NotCompatible when no alignment exists.
Normalization normalize_transitions(const VectCocycle& v, std::uint64_t seed = 0xa11);

/// Inclusion into Bundle(X, Aut(X_rho)): normalize, then assemble each edge
/// tuple via in_image_of_i.
AutCocycle include_cocycle(const VectCocycle& v, std::uint64_t seed = 0xa11);

struct Decomposition {
  CoveringSpace covering;
  DiscreteCocycle discrete;
  VectCocycle vect;
};

/// Splits an Aut(X_rho)-cocycle into its principal G0-covering and the
/// residual per-component vector data.
Decomposition decompose_cocycle(const AutCocycle& b);

/// GL(m_k)-valued cocycle on the covering. Fiber matrices compose in function
/// order, so the triangle law reads B_ac = B_bc * B_ab.
struct MatrixCocycle {
  std::shared_ptr<const CoveringSpace> covering;
  int component = 0;
  std::vector<Mat> labels;  // per lifted edge
};

double matrix_cocycle_residual(const MatrixCocycle& c);

/// Pullback of normalized vector data to the covering, reduced to its
/// GL(m_k)-valued cocycles (one per component with m_k > 0).
std::vector<MatrixCocycle> extract_multiplicity_cocycles(const VectCocycle& normalized,
                                                         const CoveringSpace& covering,
                                                         std::uint64_t seed = 0xa11);

/// Witness cochain c with c_a^{-1} c1(a,b) c_b = c2(a,b) on every edge, or
/// absence. Complete search: the witness value at the root chart determines
/// the rest along a spanning tree.
std::optional<std::vector<int>> discrete_cohomologous(const DiscreteCocycle& c1,
                                                      const DiscreteCocycle& c2,
                                                      double enumeration_bound = 1e6);

// --- randomized instance generators used by the verification suites ---

/// Random valid cocycle: coboundary values on triangle edges, free values on
/// the rest; all labels restricted to the given allowed set (element flags).
DiscreteCocycle random_discrete_cocycle(const ComplexPtr& complex, const GroupPtr& group,
                                        const std::vector<char>& allowed, Rng& rng);

/// Random compatible transition data over the model: per-chart conjugates of a
/// common-pr base cocycle. Always normalizable.
VectCocycle random_compatible_vect_cocycle(const ComplexPtr& complex, const ModelPtr& model,
                                           Rng& rng);

}  // namespace eqvb
