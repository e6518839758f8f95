#include "eqvb/canonical_model.hpp"

#include <algorithm>
#include <cmath>

#include "eqvb/errors.hpp"
#include "eqvb/parallel.hpp"

namespace eqvb {

RepSpec RepSpec::make(const IrrepCatalog& cat, const std::vector<std::pair<int, int>>& km) {
  RepSpec spec;
  spec.H = cat.table.group;
  std::vector<std::pair<int, int>> sorted = km;
  std::sort(sorted.begin(), sorted.end());
  for (auto [k, m] : sorted) {
    if (k < 0 || k >= cat.count()) throw InputError("irrep index out of range");
    if (m <= 0) throw InputError("multiplicities must be positive");
    if (k == cat.trivial_index)
      throw TrivialComponentError(
          "the trivial irreducible is not allowed in a fiber spec: the stationary group must "
          "have no fixed vectors in the fiber");
    if (!spec.components.empty() && spec.components.back().irrep_index == k)
      throw InputError("duplicate irrep index in spec");
    spec.offsets.push_back(spec.fiber_dim);
    spec.components.push_back({k, cat.irreps[k], m});
    spec.fiber_dim += m * cat.degree(k);
  }
  if (spec.fiber_dim < 1) throw InputError("fiber spec must have positive dimension");
  return spec;
}

RepSpec RepSpec::single(const IrrepCatalog& cat, int k, int m) { return make(cat, {{k, m}}); }

RepSpec RepSpec::regular_nontrivial(const IrrepCatalog& cat) {
  std::vector<std::pair<int, int>> km;
  for (int k = 0; k < cat.count(); ++k)
    if (k != cat.trivial_index) km.push_back({k, cat.degree(k)});
  return make(cat, km);
}

Mat RepSpec::rho(int h_local) const {
  std::vector<Mat> blocks;
  blocks.reserve(components.size());
  for (const auto& c : components)
    blocks.push_back(kron(Mat::Identity(c.multiplicity, c.multiplicity), c.irrep.at(h_local)));
  return direct_sum(blocks);
}

Vec RepSpec::character_vector() const {
  const auto& classes = H->conjugacy_classes();
  Vec chi = Vec::Zero(classes.size());
  for (const auto& c : components)
    for (size_t cl = 0; cl < classes.size(); ++cl)
      chi(cl) += static_cast<double>(c.multiplicity) * c.irrep.at(classes[cl][0]).trace();
  return chi;
}

ModelPtr CanonicalModel::build(GroupPtr G, Subgroup H, RepSpec spec) {
  if (H.parent().get() != G.get()) throw ModelMismatchError("subgroup belongs to a different group");
  if (!H.is_normal()) throw NotNormalError("stationary subgroup must be normal here");

  auto model = std::shared_ptr<CanonicalModel>(new CanonicalModel());
  model->G_ = G;
  model->H_ = H;
  model->h_embed_ = embed(H);
  // spec must be over a structural copy of H (same table under the canonical embedding)
  if (spec.H->order() != H.size())
    throw ModelMismatchError("spec is over a group of different order");
  if (spec.H->table() != model->h_embed_.group->table())
    throw ModelMismatchError("spec group table does not match the embedded stationary subgroup");
  model->spec_ = std::move(spec);
  model->quotient_ = std::make_shared<QuotientGroup>(CosetDecomposition(G, H));

  // conjugation action of base translations on spec components, via characters
  std::vector<Vec> comp_chars;
  const auto& hg = model->h_embed_.group;
  const auto& classes = hg->conjugacy_classes();
  for (const auto& comp : model->spec_.components) {
    Vec chi(classes.size());
    for (size_t c = 0; c < classes.size(); ++c) chi(c) = comp.irrep.at(classes[c][0]).trace();
    comp_chars.push_back(chi);
  }
  const int n_base = model->quotient_->group()->order();
  model->comp_image_.assign(n_base,
                            std::vector<int>(model->spec_.components.size(), -1));
  for (int a = 0; a < n_base; ++a) {
    int s = model->quotient_->cosets().representative(a);
    for (size_t p = 0; p < model->spec_.components.size(); ++p) {
      // character of rho_p o sigma_a, sigma_a(h) = s^{-1} h s
      Vec moved(classes.size());
      for (size_t c = 0; c < classes.size(); ++c) {
        int h_parent = model->h_embed_.to_parent[classes[c][0]];
        int conj = G->conjugate(G->inv(s), h_parent);
        moved(c) = comp_chars[p](hg->class_of(model->h_embed_.to_local(conj)));
      }
      for (size_t q = 0; q < model->spec_.components.size(); ++q) {
        if ((moved - comp_chars[q]).cwiseAbs().maxCoeff() < 1e-6) {
          model->comp_image_[a][p] = static_cast<int>(q);
          break;
        }
      }
    }
  }

  if (model->spec_.components.size() > 1) {
    for (const auto& comp : model->spec_.components) {
      RepSpec sub;
      sub.H = model->spec_.H;
      sub.components = {comp};
      sub.offsets = {0};
      sub.fiber_dim = comp.dim();
      model->component_models_.push_back(build(G, H, std::move(sub)));
    }
  }
  return model;
}

CanonicalModel::ActResult CanonicalModel::act(int g1, int base) const {
  return {act_base(g1, base), act_matrix(g1, base)};
}

Mat CanonicalModel::act_matrix(int g1, int base) const {
  const auto& dec = quotient_->cosets();
  int s_from = dec.representative(base);
  int s_to = dec.representative(act_base(g1, base));
  int h = G_->mul(G_->mul(G_->inv(s_to), g1), s_from);
  return spec_.rho(h_embed_.to_local(h));
}

bool CanonicalModel::components_fixed_by(int a) const {
  for (size_t p = 0; p < spec_.components.size(); ++p)
    if (comp_image_[a][p] != static_cast<int>(p)) return false;
  return true;
}

std::vector<int> CanonicalModel::component_fixing_translations() const {
  std::vector<int> out;
  for (int a = 0; a < base_count(); ++a)
    if (components_fixed_by(a)) out.push_back(a);
  return out;
}

bool CanonicalModel::same_shape(const CanonicalModel& other) const {
  if (G_.get() != other.G_.get()) return false;
  if (!(H_ == other.H_)) return false;
  if (spec_.components.size() != other.spec_.components.size()) return false;
  for (size_t i = 0; i < spec_.components.size(); ++i) {
    if (spec_.components[i].irrep_index != other.spec_.components[i].irrep_index) return false;
    if (spec_.components[i].multiplicity != other.spec_.components[i].multiplicity) return false;
  }
  return true;
}

ModelPtr build_Xk(GroupPtr G, Subgroup H, const IrrepCatalog& cat, int k, int m) {
  return CanonicalModel::build(std::move(G), std::move(H), RepSpec::single(cat, k, m));
}

std::vector<FixedBasePoint> total_fixed_points(const CanonicalModel& model, const Subgroup& K,
                                               double tol) {
  if (K.parent().get() != model.group().get())
    throw ModelMismatchError("subgroup belongs to a different group");
  std::vector<FixedBasePoint> out;
  for (int b = 0; b < model.base_count(); ++b) {
    bool fixed = true;
    for (int k : K.elements())
      if (model.act_base(k, b) != b) {
        fixed = false;
        break;
      }
    if (!fixed) continue;
    Mat avg = Mat::Zero(model.fiber_dim(), model.fiber_dim());
    for (int k : K.elements()) avg += model.act_matrix(k, b);
    avg /= static_cast<double>(K.size());
    out.push_back({b, rank_within(avg, tol)});
  }
  return out;
}

double action_axiom_residual(const CanonicalModel& model) {
  const int n = model.group()->order();
  const int nb = model.base_count();
  const size_t total = static_cast<size_t>(n) * n * nb;
  return par::max_reduce(total, [&](size_t idx) {
    int g2 = static_cast<int>(idx / (static_cast<size_t>(n) * nb));
    int g1 = static_cast<int>((idx / nb) % n);
    int b = static_cast<int>(idx % nb);
    auto first = model.act(g1, b);
    auto second = model.act(g2, first.base);
    auto direct = model.act(model.group()->mul(g2, g1), b);
    if (second.base != direct.base) return 1.0;  // base mismatch is a hard failure
    return max_abs(second.matrix * first.matrix - direct.matrix);
  });
}

bool stabilizers_are_exactly_h(const CanonicalModel& model) {
  const int n = model.group()->order();
  for (int b = 0; b < model.base_count(); ++b)
    for (int g = 0; g < n; ++g) {
      bool stabilizes = model.act_base(g, b) == b;
      if (stabilizes != model.stationary().contains(g)) return false;
    }
  return true;
}

}  // namespace eqvb
