#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "eqvb/canonical_model.hpp"
#include "eqvb/rng.hpp"

namespace eqvb {

/// Equivariant automorphism of a canonical model: a base translation
/// a ([g] -> [g a]) plus one invertible fiber matrix per base point, the one
/// over [g] mapping fiber([g]) -> fiber([g a]). Validated on construction:
/// equivariance against the canonical action, invertibility, and determination
/// by the matrix over [1].
class AutElement {
 public:
  static AutElement make(ModelPtr model, int a, std::vector<Mat> fiber_maps, double tol = 1e-8);
  static AutElement identity(ModelPtr model);

  const ModelPtr& model() const { return model_; }
  int base_translation() const { return a_; }
  const Mat& map_at(int base) const { return maps_[base]; }
  const std::vector<Mat>& fiber_maps() const { return maps_; }
  int apply_base(int base) const { return model_->translate(base, a_); }

  double equivariance_residual() const;
  double determination_residual() const;
  double worst_condition_number() const;

 private:
  AutElement(ModelPtr model, int a, std::vector<Mat> maps)
      : model_(std::move(model)), a_(a), maps_(std::move(maps)) {}
  friend AutElement compose(const AutElement&, const AutElement&);
  friend AutElement inverse(const AutElement&);

  ModelPtr model_;
  int a_;
  std::vector<Mat> maps_;
};

/// A o B: apply B first. On abelian quotients (every catalog case) pr is then
/// multiplicative; see chain() for the order used by cocycle pipelines.
AutElement compose(const AutElement& a, const AutElement& b);
/// apply A first, then B (= B o A); pr(chain(A,B)) = pr(A) pr(B) for any G0.
AutElement chain(const AutElement& a, const AutElement& b);
AutElement inverse(const AutElement& a);

/// Base translation of A, the G0-part of the exact sequence.
int pr(const AutElement& a);

/// One invertible m_k x m_k block per spec component.
struct BlockTuple {
  std::vector<Mat> blocks;
};

/// Kernel embedding: a = 1, every fiber map = directsum_k B_k (x) I_{d_k}.
AutElement phi(const ModelPtr& model, const BlockTuple& blocks, double tol = 1e-8);

/// Inverse of phi on a kernel element (pr = 1): partial traces over each V_k.
/// Throws if A is not within tol of a phi-image.
BlockTuple block_extract(const AutElement& a, double tol = 1e-7);

/// Restrictions A|_{X_k} as automorphisms of the single-component models, in
/// spec order. Throws BlockMixing when A genuinely permutes components (which
/// happens exactly when conjugation by the base translation moves some irrep).
std::vector<AutElement> restrict_to_components(const AutElement& a, double tol = 1e-7);

struct AssembleResult {
  bool in_image = false;
  std::optional<AutElement> assembled;
  std::string reason;
};

/// Membership test for the image of the per-component restriction map: a tuple
/// assembles into Aut(X_rho) iff all base translations agree.
AssembleResult in_image_of_i(const ModelPtr& model, const std::vector<AutElement>& components,
                             double tol = 1e-8);

/// Lift of a base translation: solves the intertwining condition
/// A[1] rho(h) = rho(s(a)^{-1} h s(a)) A[1] for an invertible A[1], then
/// propagates along the base by equivariance. Throws NoInvertibleIntertwiner
/// when conjugation by s(a) permutes irreps with mismatched multiplicities.
AutElement lift(const ModelPtr& model, int a, std::uint64_t seed = 0x11f7, int attempts = 32,
                double invertibility_cut = 1e-6);

/// Base translations with a lift, i.e. im(pr). A subgroup of G0.
std::vector<int> liftable_translations(const ModelPtr& model);

/// Random element: phi(random blocks) composed with a lift of a random
/// liftable translation (restricted to component-fixing ones when
/// block_preserving is set).
AutElement random_aut(const ModelPtr& model, Rng& rng, bool block_preserving = false);
BlockTuple random_blocks(const ModelPtr& model, Rng& rng);

struct ExactSequenceCheck {
  std::string name;
  bool pass;
  double residual;
};

/// Sampled exactness of 1 -> prod GL(F_k) -> Aut(X_rho) -> G0 -> 1:
/// phi injective, ker(pr) = im(phi), pr onto via lifts.
std::vector<ExactSequenceCheck> verify_exact_sequence(const ModelPtr& model, int samples,
                                                      std::uint64_t seed, double tol = 1e-7);

}  // namespace eqvb
