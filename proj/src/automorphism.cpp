#include "eqvb/automorphism.hpp"

#include <algorithm>
#include <cmath>

#include "eqvb/errors.hpp"
#include "eqvb/parallel.hpp"

namespace eqvb {

namespace {

// With the smallest-representative transversal, the canonical action of the
// representative s(b) maps fiber([1]) to fiber(b) by the identity matrix, so
// determination by the map over [1] reads A[[b]] = act_matrix(s(b), a) A[[1]].
Mat propagate(const CanonicalModel& model, int a, const Mat& a1, int base) {
  int s_b = model.cosets().representative(base);
  return model.act_matrix(s_b, a) * a1;
}

}  // namespace

AutElement AutElement::make(ModelPtr model, int a, std::vector<Mat> fiber_maps, double tol) {
  if (a < 0 || a >= model->base_count()) throw InputError("base translation out of range");
  if (static_cast<int>(fiber_maps.size()) != model->base_count())
    throw InputError("need one fiber map per base point");
  const int d = model->fiber_dim();
  for (const Mat& m : fiber_maps)
    if (m.rows() != d || m.cols() != d) throw InputError("fiber map has wrong size");
  AutElement out(std::move(model), a, std::move(fiber_maps));
  for (const Mat& m : out.maps_)
    if (smallest_singular_value(m) < 1e-10 * std::max(1.0, max_abs(m)))
      throw SingularBlockError("fiber map is numerically singular");
  double eres = out.equivariance_residual();
  if (eres > tol)
    throw InputError("fiber maps are not equivariant (residual " + std::to_string(eres) + ")");
  double dres = out.determination_residual();
  if (dres > tol)
    throw InputError("fiber maps are not determined by the map over [1] (residual " +
                     std::to_string(dres) + ")");
  return out;
}

AutElement AutElement::identity(ModelPtr model) {
  int nb = model->base_count();
  int d = model->fiber_dim();
  return AutElement(std::move(model), 0, std::vector<Mat>(nb, Mat::Identity(d, d)));
}

double AutElement::equivariance_residual() const {
  const auto& m = *model_;
  const int n = m.group()->order();
  const int nb = m.base_count();
  return par::max_reduce(static_cast<size_t>(n) * nb, [&](size_t idx) {
    int g1 = static_cast<int>(idx / nb);
    int b = static_cast<int>(idx % nb);
    int gb = m.act_base(g1, b);
    // A[[g1 b]] phi(b, g1) = phi(b a, g1) A[[b]]
    Mat lhs = maps_[gb] * m.act_matrix(g1, b);
    Mat rhs = m.act_matrix(g1, m.translate(b, a_)) * maps_[b];
    return max_abs(lhs - rhs);
  });
}

double AutElement::determination_residual() const {
  double r = 0;
  for (int b = 0; b < model_->base_count(); ++b)
    r = std::max(r, max_abs(maps_[b] - propagate(*model_, a_, maps_[0], b)));
  return r;
}

double AutElement::worst_condition_number() const {
  double r = 1;
  for (const Mat& m : maps_) r = std::max(r, condition_number(m));
  return r;
}

AutElement compose(const AutElement& a, const AutElement& b) {
  if (!a.model_->same_shape(*b.model_)) throw ModelMismatchError("compose over different models");
  const auto& q = a.model_->quotient().group();
  int target = q->mul(b.a_, a.a_);  // apply b, then a
  std::vector<Mat> maps(a.maps_.size());
  for (int x = 0; x < static_cast<int>(maps.size()); ++x)
    maps[x] = a.maps_[a.model_->translate(x, b.a_)] * b.maps_[x];
  return AutElement(a.model_, target, std::move(maps));
}

AutElement chain(const AutElement& a, const AutElement& b) { return compose(b, a); }

AutElement inverse(const AutElement& a) {
  const auto& q = a.model_->quotient().group();
  int ainv = q->inv(a.a_);
  std::vector<Mat> maps(a.maps_.size());
  for (int x = 0; x < static_cast<int>(maps.size()); ++x)
    maps[x] = a.maps_[a.model_->translate(x, ainv)].inverse();
  return AutElement(a.model_, ainv, std::move(maps));
}

int pr(const AutElement& a) { return a.base_translation(); }

AutElement phi(const ModelPtr& model, const BlockTuple& blocks, double tol) {
  const auto& comps = model->spec().components;
  if (blocks.blocks.size() != comps.size())
    throw ModelMismatchError("block tuple size does not match the spec");
  std::vector<Mat> expanded;
  for (size_t p = 0; p < comps.size(); ++p) {
    const Mat& b = blocks.blocks[p];
    if (b.rows() != comps[p].multiplicity || b.cols() != comps[p].multiplicity)
      throw ModelMismatchError("block has wrong size for its multiplicity space");
    if (smallest_singular_value(b) < 1e-10 * std::max(1.0, max_abs(b)))
      throw SingularBlockError("block is singular");
    expanded.push_back(kron(b, Mat::Identity(comps[p].degree(), comps[p].degree())));
  }
  Mat fiber = direct_sum(expanded);
  std::vector<Mat> maps(model->base_count(), fiber);
  return AutElement::make(model, 0, std::move(maps), tol);
}

BlockTuple block_extract(const AutElement& a, double tol) {
  if (pr(a) != 0) throw PreconditionError("block extraction requires a kernel element (pr = 1)");
  const auto& model = *a.model();
  const auto& comps = model.spec().components;
  const Mat& a1 = a.map_at(0);
  BlockTuple out;
  for (size_t p = 0; p < comps.size(); ++p) {
    const int m = comps[p].multiplicity, d = comps[p].degree(), off = model.spec().offsets[p];
    Mat b = Mat::Zero(m, m);
    for (int i = 0; i < m; ++i)
      for (int i2 = 0; i2 < m; ++i2) {
        Cplx acc = 0;
        for (int j = 0; j < d; ++j) acc += a1(off + i * d + j, off + i2 * d + j);
        b(i, i2) = acc / static_cast<double>(d);
      }
    out.blocks.push_back(b);
  }
  // the extraction must reproduce the element
  AutElement rebuilt = phi(a.model(), out, 1e-6);
  double res = 0;
  for (int b = 0; b < model.base_count(); ++b)
    res = std::max(res, max_abs(rebuilt.map_at(b) - a.map_at(b)));
  if (res > tol)
    throw BlockMixingError("kernel element is not of block form (residual " + std::to_string(res) +
                           ")");
  return out;
}

std::vector<AutElement> restrict_to_components(const AutElement& a, double tol) {
  const auto& model = *a.model();
  const auto& comps = model.spec().components;
  if (comps.size() == 1) return {a};
  if (!model.components_fixed_by(a.base_translation()))
    throw BlockMixingError(
        "the base translation's conjugation permutes the components; the restriction "
        "A|_{X_k}: X_k -> X_k is undefined");
  const auto& sub_models = model.component_models();
  std::vector<AutElement> out;
  for (size_t p = 0; p < comps.size(); ++p) {
    const int off = model.spec().offsets[p], dim = comps[p].dim();
    std::vector<Mat> maps(model.base_count());
    double off_block = 0;
    for (int b = 0; b < model.base_count(); ++b) {
      maps[b] = a.map_at(b).block(off, off, dim, dim);
      // everything this block row/column touches outside the diagonal block
      Mat full = a.map_at(b);
      for (size_t q = 0; q < comps.size(); ++q) {
        if (q == p) continue;
        const int off2 = model.spec().offsets[q], dim2 = comps[q].dim();
        off_block = std::max(off_block, max_abs(full.block(off, off2, dim, dim2)));
        off_block = std::max(off_block, max_abs(full.block(off2, off, dim2, dim)));
      }
    }
    if (off_block > tol)
      throw BlockMixingError("fiber maps mix components (off-block residual " +
                             std::to_string(off_block) + ")");
    out.push_back(AutElement::make(sub_models[p], a.base_translation(), std::move(maps), tol));
  }
  return out;
}

AssembleResult in_image_of_i(const ModelPtr& model, const std::vector<AutElement>& components,
                             double tol) {
  const auto& comps = model->spec().components;
  if (components.size() != comps.size())
    throw ModelMismatchError("component count does not match the model spec");
  if (comps.size() == 1) {
    if (!components[0].model()->same_shape(*model))
      throw ModelMismatchError("component belongs to a different model");
    return {true, components[0], ""};
  }
  const auto& subs = model->component_models();
  for (size_t p = 0; p < comps.size(); ++p)
    if (!components[p].model()->same_shape(*subs[p]))
      throw ModelMismatchError("component " + std::to_string(p) + " is over the wrong model");
  int a0 = components[0].base_translation();
  for (size_t p = 1; p < comps.size(); ++p)
    if (components[p].base_translation() != a0)
      return {false, std::nullopt,
              "base translations differ between components " + std::to_string(0) + " and " +
                  std::to_string(p)};
  std::vector<Mat> maps(model->base_count());
  for (int b = 0; b < model->base_count(); ++b) {
    std::vector<Mat> blocks;
    for (const auto& c : components) blocks.push_back(c.map_at(b));
    maps[b] = direct_sum(blocks);
  }
  return {true, AutElement::make(model, a0, std::move(maps), tol), ""};
}

namespace {

// Orthonormal basis of {T : T rho(h) = rho(sigma(h)) T} via the averaging
// projector applied to the standard matrix basis.
std::vector<Mat> intertwiner_basis(const CanonicalModel& model, int a) {
  const auto& hg = model.h_embedding().group;
  const int nh = hg->order();
  const int d = model.fiber_dim();
  const auto& g = model.group();
  int s = model.cosets().representative(a);

  std::vector<Mat> rho(nh), rho_sigma(nh);
  for (int h = 0; h < nh; ++h) {
    rho[h] = model.spec().rho(h);
    int h_parent = model.h_embedding().to_parent[h];
    int conj = g->conjugate(g->inv(s), h_parent);
    rho_sigma[h] = model.spec().rho(model.h_embedding().to_local(conj));
  }

  std::vector<Mat> basis;
  for (int p = 0; p < d; ++p) {
    for (int q = 0; q < d; ++q) {
      Mat t = Mat::Zero(d, d);
      t(p, q) = 1.0;
      Mat proj = Mat::Zero(d, d);
      for (int h = 0; h < nh; ++h) proj += rho_sigma[h] * t * rho[h].adjoint();
      proj /= static_cast<double>(nh);
      for (const Mat& b : basis) {
        Cplx c = (b.adjoint() * proj).trace();
        proj -= c * b;
      }
      double norm = proj.norm();
      if (norm > 1e-8) basis.push_back(proj / norm);
    }
  }
  return basis;
}

}  // namespace

AutElement lift(const ModelPtr& model, int a, std::uint64_t seed, int attempts,
                double invertibility_cut) {
  if (a == 0) return AutElement::identity(model);
  std::vector<Mat> basis = intertwiner_basis(*model, a);
  const int d = model->fiber_dim();
  if (basis.empty())
    throw NoInvertibleIntertwinerError(
        "the intertwining condition for this base translation has no nonzero solutions "
        "(conjugation moves an irreducible out of the spec)");
  Rng rng(seed ^ (0x9e37u * static_cast<std::uint64_t>(a)));
  for (int attempt = 0; attempt < attempts; ++attempt) {
    Mat cand = Mat::Zero(d, d);
    for (const Mat& b : basis) cand += rng.complex_gaussian() * b;
    cand *= std::sqrt(static_cast<double>(d)) / std::max(cand.norm(), 1e-300);
    if (smallest_singular_value(cand) <= invertibility_cut) continue;
    Mat a1 = unitary_polar_factor(cand);  // stays an intertwiner, perfectly conditioned
    std::vector<Mat> maps(model->base_count());
    for (int b = 0; b < model->base_count(); ++b) maps[b] = propagate(*model, a, a1, b);
    return AutElement::make(model, a, std::move(maps));
  }
  throw NoInvertibleIntertwinerError(
      "no invertible point found in the intertwiner space (conjugation permutes irreducibles "
      "with mismatched multiplicities)");
}

std::vector<int> liftable_translations(const ModelPtr& model) {
  const auto& comps = model->spec().components;
  std::vector<int> out;
  for (int a = 0; a < model->base_count(); ++a) {
    bool ok = true;
    std::vector<char> hit(comps.size(), 0);
    for (size_t p = 0; p < comps.size() && ok; ++p) {
      int q = model->component_image(a, p);
      if (q < 0 || hit[q] || comps[p].multiplicity != comps[q].multiplicity) ok = false;
      else hit[q] = 1;
    }
    if (ok) out.push_back(a);
  }
  return out;
}

BlockTuple random_blocks(const ModelPtr& model, Rng& rng) {
  BlockTuple out;
  for (const auto& comp : model->spec().components) {
    const int m = comp.multiplicity;
    Mat b(m, m);
    do {
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) b(i, j) = rng.complex_gaussian();
    } while (smallest_singular_value(b) < 1e-3);
    out.blocks.push_back(b);
  }
  return out;
}

AutElement random_aut(const ModelPtr& model, Rng& rng, bool block_preserving) {
  std::vector<int> pool =
      block_preserving ? model->component_fixing_translations() : liftable_translations(model);
  int a = pool[static_cast<size_t>(rng.uniform_int(0, static_cast<int>(pool.size()) - 1))];
  AutElement k = phi(model, random_blocks(model, rng));
  if (a == 0) return k;
  return compose(k, lift(model, a, rng.engine()()));
}

std::vector<ExactSequenceCheck> verify_exact_sequence(const ModelPtr& model, int samples,
                                                      std::uint64_t seed, double tol) {
  std::vector<ExactSequenceCheck> out;
  Rng rng(seed);

  // phi: injective and multiplicative
  {
    double res = 0;
    bool pass = true;
    for (int t = 0; t < samples; ++t) {
      BlockTuple b1 = random_blocks(model, rng), b2 = random_blocks(model, rng);
      AutElement p1 = phi(model, b1), p2 = phi(model, b2);
      BlockTuple back = block_extract(p1);
      for (size_t p = 0; p < b1.blocks.size(); ++p)
        res = std::max(res, max_abs(back.blocks[p] - b1.blocks[p]));
      // phi(b1) phi(b2) = phi(b1 b2) with compose = function composition
      AutElement prod = compose(p1, p2);
      BlockTuple mult;
      for (size_t p = 0; p < b1.blocks.size(); ++p)
        mult.blocks.push_back(b1.blocks[p] * b2.blocks[p]);
      AutElement expected = phi(model, mult);
      for (int b = 0; b < model->base_count(); ++b)
        res = std::max(res, max_abs(prod.map_at(b) - expected.map_at(b)));
    }
    pass = res <= tol;
    out.push_back({"phi-monomorphism", pass, res});
  }

  // ker(pr) = im(phi): project random elements to the kernel, block-extract,
  // and rebuild
  {
    double res = 0;
    for (int t = 0; t < samples; ++t) {
      AutElement a = random_aut(model, rng);
      AutElement k = pr(a) == 0 ? a : compose(a, inverse(lift(model, pr(a), seed ^ 0x77)));
      if (pr(k) != 0) {
        res = 1.0;
        break;
      }
      BlockTuple b = block_extract(k);
      AutElement rebuilt = phi(model, b);
      for (int x = 0; x < model->base_count(); ++x)
        res = std::max(res, max_abs(rebuilt.map_at(x) - k.map_at(x)));
    }
    out.push_back({"kernel-equals-image", res <= tol, res});
  }

  // pr surjective: a lift for every base translation
  {
    double res = 0;
    bool pass = true;
    std::string missing;
    for (int a = 0; a < model->base_count(); ++a) {
      try {
        AutElement l = lift(model, a, seed ^ (31u * a));
        if (pr(l) != a) pass = false;
        res = std::max(res, l.equivariance_residual());
      } catch (const NoInvertibleIntertwinerError&) {
        pass = false;
      }
    }
    out.push_back({"pr-epimorphism", pass, res});
  }
  return out;
}

}  // namespace eqvb
