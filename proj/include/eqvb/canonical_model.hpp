#pragma once

#include <memory>
#include <vector>

#include "eqvb/group.hpp"
#include "eqvb/representation.hpp"

namespace eqvb {

/// Fiber specification over H: chosen irreducibles with multiplicities. The
/// trivial irreducible is excluded (no fixed vectors of H in the fiber).
struct RepSpec {
  GroupPtr H;  // the stationary group as a standalone group
  struct Component {
    int irrep_index;
    Representation irrep;
    int multiplicity;
    int degree() const { return irrep.degree; }
    int dim() const { return multiplicity * irrep.degree; }
  };
  std::vector<Component> components;  // ascending irrep_index
  int fiber_dim = 0;
  std::vector<int> offsets;  // block offset per component

  static RepSpec make(const IrrepCatalog& cat, const std::vector<std::pair<int, int>>& km);
  static RepSpec single(const IrrepCatalog& cat, int k, int m = 1);
  /// m_k = d_k over every nontrivial irreducible.
  static RepSpec regular_nontrivial(const IrrepCatalog& cat);

  /// directsum_k I_{m_k} (x) rho_k(h), h in H-local indices.
  Mat rho(int h_local) const;
  /// character of rho per H-class
  Vec character_vector() const;
  int component_count() const { return static_cast<int>(components.size()); }
};

class CanonicalModel;
using ModelPtr = std::shared_ptr<const CanonicalModel>;

/// The bundle G0 x (directsum_k F_k (x) V_k) over the discrete base G0 = G/H
/// (H normal), with the left G-action
///   g1 . ([g], v) = ([g1 g], rho(s([g1 g])^{-1} g1 s([g])) v).
class CanonicalModel {
 public:
  /// Build and validate; throws NotNormal / TrivialComponentPresent.
  static ModelPtr build(GroupPtr G, Subgroup H, RepSpec spec);

  const GroupPtr& group() const { return G_; }
  const Subgroup& stationary() const { return H_; }
  const QuotientGroup& quotient() const { return *quotient_; }
  const CosetDecomposition& cosets() const { return quotient_->cosets(); }
  const RepSpec& spec() const { return spec_; }
  const EmbeddedGroup& h_embedding() const { return h_embed_; }

  int base_count() const { return quotient_->group()->order(); }
  int fiber_dim() const { return spec_.fiber_dim; }

  struct ActResult {
    int base;
    Mat matrix;
  };
  ActResult act(int g1, int base) const;
  int act_base(int g1, int base) const { return quotient_->group()->mul(quotient_->project(g1), base); }
  Mat act_matrix(int g1, int base) const;

  /// Right translation of base points, [g] -> [g a].
  int translate(int base, int a) const { return quotient_->group()->mul(base, a); }

  /// rho at the fiber over [1], parent element h in H.
  Mat fiber_rep(int h_parent) const { return spec_.rho(h_embed_.to_local(h_parent)); }

  /// sigma_a = conjugation by s(a)^{-1} maps each irrep of H to another one;
  /// returns the catalog index k' with rho_k o sigma_a ~ rho_{k'}. Indices are
  /// spec component positions (not catalog indices); -1 if the image leaves the
  /// spec's component set.
  int component_image(int a, int comp_pos) const { return comp_image_[a][comp_pos]; }
  /// true when conjugation by (any representative of) a fixes every spec component
  bool components_fixed_by(int a) const;
  /// base translations whose conjugation fixes every spec component (a subgroup of G0)
  std::vector<int> component_fixing_translations() const;

  /// Single-component submodels X_k, in spec order. For a model that is
  /// already single-component this is {itself-equivalent copy}.
  const std::vector<ModelPtr>& component_models() const { return component_models_; }

  /// Structural equality of the ambient data (same G table, H, spec shape).
  bool same_shape(const CanonicalModel& other) const;

 private:
  CanonicalModel() = default;

  GroupPtr G_;
  Subgroup H_{nullptr, {}};
  std::shared_ptr<const QuotientGroup> quotient_;
  RepSpec spec_;
  EmbeddedGroup h_embed_;
  std::vector<std::vector<int>> comp_image_;  // [a][comp_pos] -> comp_pos' or -1
  std::vector<ModelPtr> component_models_;
};

/// Single-irrep model X_k.
ModelPtr build_Xk(GroupPtr G, Subgroup H, const IrrepCatalog& cat, int k, int m = 1);

struct FixedBasePoint {
  int base;
  int fiber_dim;  // dimension of the joint fixed subspace over this point
};

/// Base points fixed by every element of K, with the dimension of the fixed
/// fiber subspace (rank of the averaged projector). Non-fixed points omitted.
std::vector<FixedBasePoint> total_fixed_points(const CanonicalModel& model, const Subgroup& K,
                                               double tol = 1e-8);

/// Max residual of the action axiom act(g2, act_base(g1, b)) o act(g1, b) =
/// act(g2 g1, b) over all of G x G x G0.
double action_axiom_residual(const CanonicalModel& model);

/// Exact check that the stabilizer of every base point is H.
bool stabilizers_are_exactly_h(const CanonicalModel& model);

}  // namespace eqvb
