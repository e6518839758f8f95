#include "eqvb/cocycle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>

#include "eqvb/errors.hpp"

namespace eqvb {

namespace {

AutElement chain3(const AutElement& a, const AutElement& b, const AutElement& c) {
  return chain(chain(a, b), c);
}

double aut_distance(const AutElement& a, const AutElement& b) {
  if (a.base_translation() != b.base_translation()) return 1.0;
  double r = 0;
  for (int x = 0; x < a.model()->base_count(); ++x)
    r = std::max(r, max_abs(a.map_at(x) - b.map_at(x)));
  return r;
}

}  // namespace

std::shared_ptr<const BaseComplex> BaseComplex::make(int charts,
                                                     std::vector<std::pair<int, int>> edges,
                                                     std::vector<std::array<int, 3>> triangles) {
  if (charts < 1) throw InputError("a complex needs at least one chart");
  auto cx = std::shared_ptr<BaseComplex>(new BaseComplex());
  cx->charts_ = charts;
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : edges) {
    if (a > b) std::swap(a, b);
    if (a == b || a < 0 || b >= charts) throw InputError("bad edge");
    if (!seen.insert({a, b}).second) throw InputError("duplicate edge");
    cx->edges_.push_back({a, b});
  }
  std::sort(cx->edges_.begin(), cx->edges_.end());
  for (auto t : triangles) {
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2]) throw InputError("degenerate triangle");
    for (auto [a, b] : {std::pair{t[0], t[1]}, std::pair{t[1], t[2]}, std::pair{t[0], t[2]}})
      if (cx->edge_index(a, b) < 0)
        throw InputError("triangle edge {" + std::to_string(a) + "," + std::to_string(b) +
                         "} is missing");
    cx->triangles_.push_back(t);
  }
  std::sort(cx->triangles_.begin(), cx->triangles_.end());
  cx->in_triangle_.assign(cx->edges_.size(), 0);
  for (const auto& t : cx->triangles_)
    for (auto [a, b] : {std::pair{t[0], t[1]}, std::pair{t[1], t[2]}, std::pair{t[0], t[2]}})
      cx->in_triangle_[cx->edge_index(a, b)] = 1;

  // connectivity + BFS tree from chart 0
  cx->tree_parent_.assign(charts, -2);
  cx->tree_parent_[0] = -1;
  std::queue<int> work;
  work.push(0);
  cx->tree_order_.push_back(0);
  while (!work.empty()) {
    int c = work.front();
    work.pop();
    for (const auto& [a, b] : cx->edges_) {
      int other = -1;
      if (a == c) other = b;
      else if (b == c) other = a;
      else continue;
      if (cx->tree_parent_[other] == -2) {
        cx->tree_parent_[other] = c;
        cx->tree_order_.push_back(other);
        work.push(other);
      }
    }
  }
  if (static_cast<int>(cx->tree_order_.size()) != charts)
    throw InputError("complex is not connected");
  return cx;
}

int BaseComplex::edge_index(int a, int b) const {
  if (a > b) std::swap(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{a, b});
  if (it == edges_.end() || *it != std::pair{a, b}) return -1;
  return static_cast<int>(it - edges_.begin());
}

ComplexPtr cycle_complex(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return BaseComplex::make(n, std::move(edges), {});
}

ComplexPtr complete_complex(int n) {
  std::vector<std::pair<int, int>> edges;
  std::vector<std::array<int, 3>> tris;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      edges.push_back({a, b});
      for (int c = b + 1; c < n; ++c) tris.push_back({a, b, c});
    }
  return BaseComplex::make(n, std::move(edges), std::move(tris));
}

int DiscreteCocycle::label(int from, int to) const {
  int e = complex->edge_index(from, to);
  if (e < 0) throw InputError("no such edge");
  return from < to ? labels[e] : group->inv(labels[e]);
}

DiscreteCocycle make_discrete_cocycle(ComplexPtr complex, GroupPtr group,
                                      std::vector<int> labels) {
  if (static_cast<int>(labels.size()) != complex->edge_count())
    throw InputError("need one label per edge");
  for (int v : labels)
    if (v < 0 || v >= group->order()) throw InputError("label out of range");
  return DiscreteCocycle{std::move(complex), std::move(group), std::move(labels)};
}

CocycleReport validate(const DiscreteCocycle& c) {
  CocycleReport rep;
  for (const auto& t : c.complex->triangles()) {
    int ab = c.label(t[0], t[1]), bc = c.label(t[1], t[2]), ac = c.label(t[0], t[2]);
    if (c.group->mul(ab, bc) != ac) {
      rep.ok = false;
      rep.max_residual = 1.0;
      rep.violations.push_back("triangle (" + std::to_string(t[0]) + "," + std::to_string(t[1]) +
                               "," + std::to_string(t[2]) + ") violates the composition law");
    }
  }
  return rep;
}

ModelPtr component_model(const ModelPtr& model, size_t p) {
  if (model->spec().component_count() == 1) {
    if (p != 0) throw InputError("single-component model has only component 0");
    return model;
  }
  return model->component_models().at(p);
}

AutElement VectCocycle::label(int from, int to, int comp) const {
  int e = complex->edge_index(from, to);
  if (e < 0) throw InputError("no such edge");
  return from < to ? labels[e][comp] : inverse(labels[e][comp]);
}

VectCocycle make_vect_cocycle(ComplexPtr complex, ModelPtr model,
                              std::vector<std::vector<AutElement>> labels) {
  if (static_cast<int>(labels.size()) != complex->edge_count())
    throw InputError("need one label tuple per edge");
  const int k = model->spec().component_count();
  for (const auto& tuple : labels) {
    if (static_cast<int>(tuple.size()) != k)
      throw InputError("label tuple size does not match the component count");
    for (int p = 0; p < k; ++p)
      if (!tuple[p].model()->same_shape(*component_model(model, p)))
        throw ModelMismatchError("label lives on the wrong component model");
  }
  return VectCocycle{std::move(complex), std::move(model), std::move(labels)};
}

CocycleReport validate(const VectCocycle& c, double tol) {
  CocycleReport rep;
  const int k = c.model->spec().component_count();
  for (const auto& t : c.complex->triangles()) {
    for (int p = 0; p < k; ++p) {
      double res = aut_distance(chain(c.label(t[0], t[1], p), c.label(t[1], t[2], p)),
                                c.label(t[0], t[2], p));
      rep.max_residual = std::max(rep.max_residual, res);
      if (res > tol) {
        rep.ok = false;
        rep.violations.push_back("triangle (" + std::to_string(t[0]) + "," +
                                 std::to_string(t[1]) + "," + std::to_string(t[2]) +
                                 ") fails in component " + std::to_string(p));
      }
    }
  }
  return rep;
}

AutElement AutCocycle::label(int from, int to) const {
  int e = complex->edge_index(from, to);
  if (e < 0) throw InputError("no such edge");
  return from < to ? labels[e] : inverse(labels[e]);
}

AutCocycle make_aut_cocycle(ComplexPtr complex, ModelPtr model, std::vector<AutElement> labels) {
  if (static_cast<int>(labels.size()) != complex->edge_count())
    throw InputError("need one label per edge");
  for (const auto& l : labels)
    if (!l.model()->same_shape(*model)) throw ModelMismatchError("label lives on the wrong model");
  return AutCocycle{std::move(complex), std::move(model), std::move(labels)};
}

CocycleReport validate(const AutCocycle& c, double tol) {
  CocycleReport rep;
  for (const auto& t : c.complex->triangles()) {
    double res =
        aut_distance(chain(c.label(t[0], t[1]), c.label(t[1], t[2])), c.label(t[0], t[2]));
    rep.max_residual = std::max(rep.max_residual, res);
    if (res > tol) {
      rep.ok = false;
      rep.violations.push_back("triangle (" + std::to_string(t[0]) + "," + std::to_string(t[1]) +
                               "," + std::to_string(t[2]) + ") violates the composition law");
    }
  }
  return rep;
}

DiscreteCocycle apply_coboundary(const DiscreteCocycle& c, const std::vector<int>& cochain) {
  if (static_cast<int>(cochain.size()) != c.complex->charts())
    throw InputError("need one cochain value per chart");
  std::vector<int> labels(c.labels.size());
  for (int e = 0; e < c.complex->edge_count(); ++e) {
    auto [a, b] = c.complex->edges()[e];
    labels[e] = c.group->mul(c.group->mul(c.group->inv(cochain[a]), c.labels[e]), cochain[b]);
  }
  return DiscreteCocycle{c.complex, c.group, std::move(labels)};
}

VectCocycle apply_coboundary(const VectCocycle& c,
                             const std::vector<std::vector<AutElement>>& cochain) {
  if (static_cast<int>(cochain.size()) != c.complex->charts())
    throw InputError("need one cochain tuple per chart");
  std::vector<std::vector<AutElement>> labels = c.labels;
  for (int e = 0; e < c.complex->edge_count(); ++e) {
    auto [a, b] = c.complex->edges()[e];
    for (size_t p = 0; p < labels[e].size(); ++p)
      labels[e][p] = chain3(inverse(cochain[a][p]), c.labels[e][p], cochain[b][p]);
  }
  return VectCocycle{c.complex, c.model, std::move(labels)};
}

AutCocycle apply_coboundary(const AutCocycle& c, const std::vector<AutElement>& cochain) {
  if (static_cast<int>(cochain.size()) != c.complex->charts())
    throw InputError("need one cochain value per chart");
  std::vector<AutElement> labels = c.labels;
  for (int e = 0; e < c.complex->edge_count(); ++e) {
    auto [a, b] = c.complex->edges()[e];
    labels[e] = chain3(inverse(cochain[a]), c.labels[e], cochain[b]);
  }
  return AutCocycle{c.complex, c.model, std::move(labels)};
}

CoveringSpace build_covering(const DiscreteCocycle& c) {
  auto rep = validate(c);
  if (!rep.ok) throw PreconditionError("cannot build a covering from an invalid cocycle");
  CoveringSpace cov;
  cov.base = c.complex;
  cov.deck = c.group;
  cov.cocycle = c;
  const int n = c.group->order();
  for (int e = 0; e < c.complex->edge_count(); ++e) {
    auto [a, b] = c.complex->edges()[e];
    for (int x = 0; x < n; ++x)
      cov.lifted_edges.push_back({cov.vertex(a, x), cov.vertex(b, c.group->mul(x, c.labels[e]))});
  }
  // components by BFS
  const int nv = cov.vertex_count();
  cov.component_of.assign(nv, -1);
  std::vector<std::vector<int>> adj(nv);
  for (auto [u, v] : cov.lifted_edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (int v = 0; v < nv; ++v) {
    if (cov.component_of[v] >= 0) continue;
    int id = cov.num_components++;
    cov.component_root.push_back(v);
    std::queue<int> work;
    work.push(v);
    cov.component_of[v] = id;
    while (!work.empty()) {
      int u = work.front();
      work.pop();
      for (int w : adj[u])
        if (cov.component_of[w] < 0) {
          cov.component_of[w] = id;
          work.push(w);
        }
    }
  }
  return cov;
}

std::vector<int> cycle_holonomies(const DiscreteCocycle& c) {
  const auto& cx = *c.complex;
  const auto& g = c.group;
  // tree weights w(chart): product of labels from the root
  std::vector<int> w(cx.charts(), g->identity());
  for (int chart : cx.tree_order()) {
    int p = cx.tree_parent()[chart];
    if (p < 0) continue;
    w[chart] = g->mul(w[p], c.label(p, chart));
  }
  std::vector<int> hols;
  for (int e = 0; e < cx.edge_count(); ++e) {
    auto [a, b] = cx.edges()[e];
    bool tree_edge = cx.tree_parent()[b] == a || cx.tree_parent()[a] == b;
    if (tree_edge) continue;
    hols.push_back(g->mul(g->mul(w[a], c.labels[e]), g->inv(w[b])));
  }
  return hols;
}

int covering_component_count_oracle(const DiscreteCocycle& c) {
  Subgroup hol = Subgroup::closure(c.group, cycle_holonomies(c));
  return c.group->order() / hol.size();
}

namespace {

// complete spanning-tree search for a witness cochain with values restricted
// per chart through `allowed` (empty = no restriction)
std::optional<std::vector<int>> witness_search(const DiscreteCocycle& c1,
                                               const DiscreteCocycle& c2,
                                               const std::vector<char>& allowed) {
  const auto& cx = *c1.complex;
  const auto& g = c1.group;
  for (int root_val = 0; root_val < g->order(); ++root_val) {
    if (!allowed.empty() && !allowed[root_val]) continue;
    std::vector<int> cochain(cx.charts(), -1);
    cochain[0] = root_val;
    bool ok = true;
    for (int chart : cx.tree_order()) {
      int p = cx.tree_parent()[chart];
      if (p < 0) continue;
      // c_b = c1(p,b)^{-1} c_p c2(p,b)
      cochain[chart] = g->mul(g->mul(g->inv(c1.label(p, chart)), cochain[p]), c2.label(p, chart));
      if (!allowed.empty() && !allowed[cochain[chart]]) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    for (int e = 0; e < cx.edge_count() && ok; ++e) {
      auto [a, b] = cx.edges()[e];
      ok = g->mul(g->mul(g->inv(cochain[a]), c1.labels[e]), cochain[b]) == c2.labels[e];
    }
    if (ok) return cochain;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<int>> discrete_cohomologous(const DiscreteCocycle& c1,
                                                      const DiscreteCocycle& c2,
                                                      double enumeration_bound) {
  if (c1.complex.get() != c2.complex.get() && c1.complex->edges() != c2.complex->edges())
    throw ModelMismatchError("cocycles over different complexes");
  if (c1.group->order() != c2.group->order())
    throw ModelMismatchError("cocycles over different groups");
  double space = std::pow(static_cast<double>(c1.group->order()),
                          static_cast<double>(c1.complex->charts() - 1));
  if (space > enumeration_bound)
    throw TooLargeError("witness search space exceeds the enumeration bound");
  return witness_search(c1, c2, {});
}

Normalization normalize_transitions(const VectCocycle& v, std::uint64_t seed) {
  auto rep = validate(v);
  if (!rep.ok) throw PreconditionError("transition data violates the cocycle law");
  const auto& cx = *v.complex;
  const int nk = v.model->spec().component_count();
  const auto& quotient = v.model->quotient().group();

  // discrete parts per component
  std::vector<DiscreteCocycle> b(nk, DiscreteCocycle{v.complex, quotient, {}});
  for (int p = 0; p < nk; ++p) {
    std::vector<int> labels(cx.edge_count());
    for (int e = 0; e < cx.edge_count(); ++e) labels[e] = pr(v.labels[e][p]);
    b[p].labels = std::move(labels);
  }

  bool already = true;
  for (int p = 1; p < nk && already; ++p) already = b[p].labels == b[0].labels;

  std::vector<std::vector<AutElement>> witness(cx.charts());
  std::vector<std::vector<AutElement>> out_labels = v.labels;
  if (already) {
    for (int chart = 0; chart < cx.charts(); ++chart)
      for (int p = 0; p < nk; ++p)
        witness[chart].push_back(AutElement::identity(component_model(v.model, p)));
    return {VectCocycle{v.complex, v.model, std::move(out_labels)}, b[0], std::move(witness)};
  }

  // per component: align to component 0 by a liftable witness cochain
  std::vector<std::vector<int>> cochains(nk, std::vector<int>(cx.charts(), quotient->identity()));
  for (int p = 1; p < nk; ++p) {
    ModelPtr sub = component_model(v.model, p);
    std::vector<char> allowed(quotient->order(), 0);
    for (int a : liftable_translations(sub)) allowed[a] = 1;
    auto found = witness_search(b[p], b[0], allowed);
    if (!found) {
      // distinguish a genuine incompatibility from a liftability failure
      auto unrestricted = witness_search(b[p], b[0], {});
      if (unrestricted)
        throw NotCompatibleError(
            "discrete parts align over G0 but no liftable witness exists for component " +
            std::to_string(p));
      throw NotCompatibleError("discrete parts of components 0 and " + std::to_string(p) +
                               " are not cohomologous");
    }
    cochains[p] = *found;
  }

  Rng rng(seed);
  for (int chart = 0; chart < cx.charts(); ++chart) {
    witness[chart].reserve(nk);
    for (int p = 0; p < nk; ++p) {
      ModelPtr sub = component_model(v.model, p);
      int a = cochains[p][chart];
      witness[chart].push_back(a == quotient->identity() ? AutElement::identity(sub)
                                                         : lift(sub, a, rng.engine()()));
    }
  }
  VectCocycle normalized = apply_coboundary(v, witness);
  // the discrete parts now agree exactly
  for (int e = 0; e < cx.edge_count(); ++e)
    for (int p = 0; p < nk; ++p)
      if (pr(normalized.labels[e][p]) != b[0].labels[e])
        throw ConvergenceError("normalization failed to align discrete parts");
  return {std::move(normalized), b[0], std::move(witness)};
}

AutCocycle include_cocycle(const VectCocycle& v, std::uint64_t seed) {
  Normalization n = normalize_transitions(v, seed);
  std::vector<AutElement> labels;
  labels.reserve(n.normalized.labels.size());
  for (const auto& tuple : n.normalized.labels) {
    auto res = in_image_of_i(v.model, tuple);
    if (!res.in_image) throw NotCompatibleError("normalized tuple failed to assemble: " + res.reason);
    labels.push_back(*res.assembled);
  }
  return make_aut_cocycle(v.complex, v.model, std::move(labels));
}

Decomposition decompose_cocycle(const AutCocycle& b) {
  auto rep = validate(b);
  if (!rep.ok) throw PreconditionError("input violates the cocycle law");
  std::vector<int> discrete_labels(b.complex->edge_count());
  for (int e = 0; e < b.complex->edge_count(); ++e) discrete_labels[e] = pr(b.labels[e]);
  DiscreteCocycle discrete =
      make_discrete_cocycle(b.complex, b.model->quotient().group(), std::move(discrete_labels));
  CoveringSpace covering = build_covering(discrete);
  const int nk = b.model->spec().component_count();
  std::vector<std::vector<AutElement>> vect_labels;
  vect_labels.reserve(b.labels.size());
  for (const auto& l : b.labels) {
    auto parts = restrict_to_components(l);
    if (static_cast<int>(parts.size()) != nk)
      throw BlockMixingError("label restriction returned the wrong arity");
    vect_labels.push_back(std::move(parts));
  }
  return {std::move(covering), std::move(discrete),
          VectCocycle{b.complex, b.model, std::move(vect_labels)}};
}

double matrix_cocycle_residual(const MatrixCocycle& c) {
  const auto& cov = *c.covering;
  const auto& cx = *cov.base;
  const int n = cov.deck->order();
  double r = 0;
  for (const auto& t : cx.triangles()) {
    int e_ab = cx.edge_index(t[0], t[1]);
    int e_bc = cx.edge_index(t[1], t[2]);
    int e_ac = cx.edge_index(t[0], t[2]);
    for (int x = 0; x < n; ++x) {
      int y = cov.deck->mul(x, cov.cocycle.labels[e_ab]);
      const Mat& ab = c.labels[e_ab * n + x];
      const Mat& bc = c.labels[e_bc * n + y];
      const Mat& ac = c.labels[e_ac * n + x];
      r = std::max(r, max_abs(bc * ab - ac));
    }
  }
  return r;
}

std::vector<MatrixCocycle> extract_multiplicity_cocycles(const VectCocycle& normalized,
                                                         const CoveringSpace& covering,
                                                         std::uint64_t seed) {
  const auto& cx = *normalized.complex;
  const int nk = normalized.model->spec().component_count();
  const int n = covering.deck->order();
  auto cov_ptr = std::make_shared<CoveringSpace>(covering);

  // relative deck coordinate: per vertex, root^-1 * x (stays inside the
  // subgroup generated by the labels, hence liftable in every component)
  std::vector<int> rel(covering.vertex_count());
  for (int v = 0; v < covering.vertex_count(); ++v) {
    int root = covering.component_root[covering.component_of[v]];
    rel[v] = covering.deck->mul(covering.deck->inv(covering.deck_coord(root)),
                                covering.deck_coord(v));
  }

  std::vector<MatrixCocycle> out;
  for (int p = 0; p < nk; ++p) {
    ModelPtr sub = component_model(normalized.model, p);
    // one transporter per deck value, shared across vertices
    std::map<int, AutElement> transport;
    auto transporter = [&](int a) -> const AutElement& {
      auto it = transport.find(a);
      if (it != transport.end()) return it->second;
      AutElement t = a == covering.deck->identity()
                         ? AutElement::identity(sub)
                         : lift(sub, a, seed ^ (0x51u * static_cast<std::uint64_t>(a + 1)));
      return transport.emplace(a, std::move(t)).first->second;
    };
    MatrixCocycle mc;
    mc.covering = cov_ptr;
    mc.component = p;
    mc.labels.resize(covering.lifted_edges.size());
    for (int e = 0; e < cx.edge_count(); ++e) {
      for (int x = 0; x < n; ++x) {
        auto [u, w] = covering.lifted_edges[e * n + x];
        AutElement kernel = chain3(transporter(rel[u]), normalized.labels[e][p],
                                   inverse(transporter(rel[w])));
        if (pr(kernel) != 0)
          throw ConvergenceError("pullback label failed to land in the kernel");
        BlockTuple b = block_extract(kernel);
        mc.labels[e * n + x] = b.blocks[0];
      }
    }
    out.push_back(std::move(mc));
  }
  return out;
}

DiscreteCocycle random_discrete_cocycle(const ComplexPtr& complex, const GroupPtr& group,
                                        const std::vector<char>& allowed, Rng& rng) {
  std::vector<int> pool;
  for (int x = 0; x < group->order(); ++x)
    if (allowed.empty() || allowed[x]) pool.push_back(x);
  auto pick = [&] { return pool[static_cast<size_t>(rng.uniform_int(0, static_cast<int>(pool.size()) - 1))]; };
  std::vector<int> cochain(complex->charts());
  for (int& v : cochain) v = pick();
  std::vector<int> labels(complex->edge_count());
  for (int e = 0; e < complex->edge_count(); ++e) {
    auto [a, b] = complex->edges()[e];
    if (complex->edge_in_triangle(e))
      labels[e] = group->mul(group->inv(cochain[a]), cochain[b]);
    else
      labels[e] = pick();
  }
  return make_discrete_cocycle(complex, group, std::move(labels));
}

VectCocycle random_compatible_vect_cocycle(const ComplexPtr& complex, const ModelPtr& model,
                                           Rng& rng) {
  const int nk = model->spec().component_count();
  const auto& quotient = model->quotient().group();

  // translations liftable in every component
  std::vector<char> common(quotient->order(), 1);
  for (int p = 0; p < nk; ++p) {
    std::vector<char> flag(quotient->order(), 0);
    for (int a : liftable_translations(component_model(model, p))) flag[a] = 1;
    for (int x = 0; x < quotient->order(); ++x) common[x] = common[x] && flag[x];
  }

  DiscreteCocycle q = random_discrete_cocycle(complex, quotient, common, rng);

  // per-chart, per-component random conjugators
  std::vector<std::vector<AutElement>> conj(complex->charts());
  for (int chart = 0; chart < complex->charts(); ++chart)
    for (int p = 0; p < nk; ++p)
      conj[chart].push_back(random_aut(component_model(model, p), rng));

  // triangle edges carry pure coboundaries (on a fully triangulated complex
  // every cocycle is one); edges outside all triangles are unconstrained
  std::vector<std::vector<AutElement>> labels(complex->edge_count());
  for (int e = 0; e < complex->edge_count(); ++e) {
    auto [a, b] = complex->edges()[e];
    for (int p = 0; p < nk; ++p) {
      ModelPtr sub = component_model(model, p);
      if (complex->edge_in_triangle(e)) {
        labels[e].push_back(chain(inverse(conj[a][p]), conj[b][p]));
      } else {
        AutElement base = q.labels[e] == quotient->identity()
                              ? phi(sub, random_blocks(sub, rng))
                              : chain(lift(sub, q.labels[e], rng.engine()()),
                                      phi(sub, random_blocks(sub, rng)));
        labels[e].push_back(chain3(inverse(conj[a][p]), base, conj[b][p]));
      }
    }
  }
  return make_vect_cocycle(complex, model, std::move(labels));
}

}  // namespace eqvb
