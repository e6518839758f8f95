#include "eqvb/representation.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "eqvb/errors.hpp"
#include "eqvb/parallel.hpp"

namespace eqvb {

namespace {
constexpr double kSolveTol = 1e-10;  // linear-algebra cutoffs; verification uses the caller's tol
}

Representation Representation::make(GroupPtr group, std::vector<Mat> matrices, double tol) {
  if (static_cast<int>(matrices.size()) != group->order())
    throw InputError("representation needs one matrix per group element");
  const int d = static_cast<int>(matrices[0].rows());
  for (const Mat& m : matrices)
    if (m.rows() != d || m.cols() != d) throw InputError("representation matrices must be square and equally sized");
  Representation rho{std::move(group), d, std::move(matrices)};
  const int e = rho.group->identity();
  if (max_abs(rho.matrices[e] - Mat::Identity(d, d)) > tol)
    throw InputError("matrix at the identity is not I");
  rho.matrices[e] = Mat::Identity(d, d);  // snap exactly
  double mres = rho.multiplicativity_residual();
  if (mres > tol)
    throw InputError("matrices are not multiplicative (residual " + std::to_string(mres) + ")");
  double ures = rho.unitarity_residual();
  if (ures > tol)
    throw InputError("matrices are not unitary (residual " + std::to_string(ures) + ")");
  return rho;
}

Representation Representation::trivial(GroupPtr group) {
  std::vector<Mat> mats(group->order(), Mat::Identity(1, 1));
  return Representation{std::move(group), 1, std::move(mats)};
}

Representation Representation::regular(GroupPtr group) {
  const int n = group->order();
  std::vector<Mat> mats(n, Mat::Zero(n, n));
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < n; ++x) mats[g](group->mul(g, x), x) = 1.0;
  return Representation{std::move(group), n, std::move(mats)};
}

double Representation::multiplicativity_residual() const {
  const int n = group->order();
  return par::max_reduce(static_cast<size_t>(n) * n, [&](size_t idx) {
    int a = static_cast<int>(idx / n), b = static_cast<int>(idx % n);
    return max_abs(matrices[a] * matrices[b] - matrices[group->mul(a, b)]);
  });
}

double Representation::unitarity_residual() const {
  double r = 0;
  for (const Mat& m : matrices) r = std::max(r, unitary_residual(m));
  return r;
}

Vec character(const Representation& rho, double tol) {
  const auto& classes = rho.group->conjugacy_classes();
  Vec chi(classes.size());
  for (size_t c = 0; c < classes.size(); ++c) {
    chi(c) = rho.at(classes[c][0]).trace();
    for (int g : classes[c]) {
      if (std::abs(rho.at(g).trace() - chi(c)) > tol * 10)
        throw ConvergenceError("trace is not constant on a conjugacy class");
    }
  }
  return chi;
}

Cplx CharacterTable::inner(const Vec& a, const Vec& b) const {
  Cplx s = 0;
  for (int c = 0; c < num_classes(); ++c)
    s += static_cast<double>(class_sizes[c]) * a(c) * std::conj(b(c));
  return s / static_cast<double>(group->order());
}

double CharacterTable::orthonormality_residual() const {
  double r = 0;
  for (int j = 0; j < num_classes(); ++j)
    for (int k = 0; k < num_classes(); ++k) {
      Cplx v = inner(rows[j], rows[k]);
      r = std::max(r, std::abs(v - (j == k ? Cplx(1) : Cplx(0))));
    }
  return r;
}

namespace {

// ---- character table via class sums -------------------------------------

// Splits class space into the common eigenvectors of the class-sum
// multiplication operators; each line is one irreducible character.
std::vector<Vec> class_algebra_lines(const GroupPtr& h) {
  const auto& classes = h->conjugacy_classes();
  const int r = static_cast<int>(classes.size());

  // structure constants: C_i C_j = sum_k n_ijk C_k; M_i acts on class space
  std::vector<Eigen::MatrixXd> M(r, Eigen::MatrixXd::Zero(r, r));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      // count products x*y with x in C_i, y in C_j landing in each class,
      // normalized by target class size
      std::vector<double> counts(r, 0.0);
      for (int x : classes[i])
        for (int y : classes[j]) counts[h->class_of(h->mul(x, y))] += 1.0;
      for (int k = 0; k < r; ++k) M[i](k, j) = counts[k] / static_cast<double>(classes[k].size());
    }
  }

  // refine subspaces by the eigenspaces of each M_i
  std::vector<Mat> spaces{Mat::Identity(r, r)};
  for (int i = 0; i < r; ++i) {
    std::vector<Mat> next;
    for (const Mat& q : spaces) {
      if (q.cols() == 1) {
        next.push_back(q);
        continue;
      }
      Mat a = q.adjoint() * (M[i].cast<Cplx>() * q);
      Eigen::ComplexEigenSolver<Mat> es(a);
      if (es.info() != Eigen::Success) throw ConvergenceError("class-sum eigensolver failed");
      // cluster eigenvalues
      std::vector<int> idx(a.rows());
      std::iota(idx.begin(), idx.end(), 0);
      std::sort(idx.begin(), idx.end(), [&](int x, int y) {
        Cplx ex = es.eigenvalues()(x), ey = es.eigenvalues()(y);
        if (std::abs(ex.real() - ey.real()) > 1e-7) return ex.real() < ey.real();
        return ex.imag() < ey.imag();
      });
      const double cluster_tol = 1e-6;
      size_t start = 0;
      for (size_t t = 1; t <= idx.size(); ++t) {
        if (t == idx.size() ||
            std::abs(es.eigenvalues()(idx[t]) - es.eigenvalues()(idx[t - 1])) > cluster_tol) {
          Mat sub(a.rows(), static_cast<Eigen::Index>(t - start));
          for (size_t u = start; u < t; ++u)
            sub.col(static_cast<Eigen::Index>(u - start)) = es.eigenvectors().col(idx[u]);
          Mat lifted = q * sub;
          // re-orthonormalize
          Eigen::HouseholderQR<Mat> qr(lifted);
          Mat thinq = qr.householderQ() * Mat::Identity(lifted.rows(), lifted.cols());
          next.push_back(thinq);
          start = t;
        }
      }
    }
    spaces = std::move(next);
  }
  if (static_cast<int>(spaces.size()) != r)
    throw ConvergenceError("class-sum splitting did not separate all characters");

  std::vector<Vec> lines;
  lines.reserve(r);
  for (const Mat& q : spaces) lines.push_back(q.col(0));
  return lines;
}

}  // namespace

IrrepCatalog irreducibles(const GroupPtr& h, double tol, std::uint64_t seed) {
  const auto& classes = h->conjugacy_classes();
  const int r = static_cast<int>(classes.size());
  const int n = h->order();

  // --- characters ---
  std::vector<Vec> lines = class_algebra_lines(h);

  // rebuild M_i once more for eigenvalue extraction
  std::vector<Eigen::MatrixXd> M(r, Eigen::MatrixXd::Zero(r, r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      std::vector<double> counts(r, 0.0);
      for (int x : classes[i])
        for (int y : classes[j]) counts[h->class_of(h->mul(x, y))] += 1.0;
      for (int k = 0; k < r; ++k) M[i](k, j) = counts[k] / static_cast<double>(classes[k].size());
    }

  std::vector<Vec> rows;
  std::vector<int> degrees;
  for (const Vec& v : lines) {
    Vec omega(r);
    for (int i = 0; i < r; ++i) {
      Vec mv = M[i].cast<Cplx>() * v;
      omega(i) = v.dot(mv) / v.squaredNorm();  // Rayleigh quotient on the eigenline
    }
    // sum_i |omega_i|^2 / |C_i| = n / d^2
    double s = 0;
    for (int i = 0; i < r; ++i) s += std::norm(omega(i)) / static_cast<double>(classes[i].size());
    double draw = std::sqrt(static_cast<double>(n) / s);
    int d = static_cast<int>(std::lround(draw));
    if (d < 1 || std::abs(draw - d) > 1e-4)
      throw ConvergenceError("irreducible degree did not round to an integer: " +
                             std::to_string(draw));
    Vec chi(r);
    for (int i = 0; i < r; ++i)
      chi(i) = static_cast<double>(d) * omega(i) / static_cast<double>(classes[i].size());
    rows.push_back(chi);
    degrees.push_back(d);
  }

  // canonical order: ascending degree, then lexicographic character values
  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  auto key = [&](int i, int c) {
    Cplx v = rows[i](c);
    auto snap = [](double x) { return std::lround(x * 1e6); };
    return std::pair<long, long>(snap(v.real()), snap(v.imag()));
  };
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (degrees[a] != degrees[b]) return degrees[a] < degrees[b];
    for (int c = 0; c < r; ++c) {
      auto ka = key(a, c), kb = key(b, c);
      if (ka != kb) return ka < kb;
    }
    return false;
  });

  CharacterTable table;
  table.group = h;
  for (const auto& cls : classes) {
    table.class_reps.push_back(cls[0]);
    table.class_sizes.push_back(static_cast<int>(cls.size()));
  }
  for (int i : perm) {
    table.degrees.push_back(degrees[i]);
    table.rows.push_back(rows[i]);
  }

  int dsum = 0;
  for (int d : table.degrees) dsum += d * d;
  if (dsum != n) throw ConvergenceError("degrees do not satisfy sum d^2 = |H|");
  if (table.orthonormality_residual() > tol)
    throw ConvergenceError("character rows are not orthonormal to tolerance");

  // --- explicit irreducibles from the regular representation ---
  Representation reg = Representation::regular(h);
  IrrepCatalog cat;
  cat.table = std::move(table);
  Rng rng(seed);

  for (int k = 0; k < r; ++k) {
    const int d = cat.table.degrees[k];
    const Vec& chi = cat.table.rows[k];
    // central idempotent e_k = (d/|H|) sum_h conj(chi(h)) reg(h); Hermitian
    Mat ek = Mat::Zero(n, n);
    for (int g = 0; g < n; ++g)
      ek += std::conj(chi(h->class_of(g))) * reg.at(g);
    ek *= static_cast<double>(d) / static_cast<double>(n);
    Mat basis = near_one_eigenspace((ek + ek.adjoint()) / 2.0, 1e-6);
    if (basis.cols() != d * d)
      throw ConvergenceError("isotypic block of the regular representation has wrong dimension");

    std::vector<Mat> mats(n);
    if (d == 1) {
      Vec v = basis.col(0);
      for (int g = 0; g < n; ++g) {
        Mat m(1, 1);
        m(0, 0) = (v.adjoint() * (reg.at(g) * v))(0);
        mats[g] = m;
      }
    } else {
      // restrict reg to the isotypic block, then split off one copy with a
      // random equivariant map (its eigenspaces are subrepresentations)
      std::vector<Mat> rho_w(n);
      for (int g = 0; g < n; ++g) rho_w[g] = basis.adjoint() * reg.at(g) * basis;
      const int dim_w = d * d;
      bool done = false;
      for (int attempt = 0; attempt < 24 && !done; ++attempt) {
        Mat rnd(dim_w, dim_w);
        for (int i = 0; i < dim_w; ++i)
          for (int j = 0; j < dim_w; ++j) rnd(i, j) = rng.complex_gaussian();
        Mat t = Mat::Zero(dim_w, dim_w);
        for (int g = 0; g < n; ++g) t += rho_w[g] * rnd * rho_w[h->inv(g)];
        t /= static_cast<double>(n);
        t = (t + t.adjoint()) / 2.0;  // Hermitian equivariant map: orthogonal eigenspaces
        Eigen::SelfAdjointEigenSolver<Mat> es(t);
        // find a d-dimensional eigenvalue cluster
        const auto& ev = es.eigenvalues();
        int start = 0;
        while (start < dim_w && !done) {
          int end = start + 1;
          while (end < dim_w && std::abs(ev(end) - ev(start)) < 1e-7) ++end;
          if (end - start == d) {
            Mat sub = es.eigenvectors().block(0, start, dim_w, d);
            mats.assign(n, Mat());
            for (int g = 0; g < n; ++g) mats[g] = sub.adjoint() * rho_w[g] * sub;
            done = true;
          }
          start = end;
        }
      }
      if (!done)
        throw ConvergenceError("failed to split an isotypic block into irreducibles");
    }
    Representation rho_k = Representation::make(h, std::move(mats), tol * 10);
    // character must match row k
    Vec got = character(rho_k, tol);
    if ((got - chi).cwiseAbs().maxCoeff() > 1e-6)
      throw ConvergenceError("realized irreducible does not match its character row");
    cat.irreps.push_back(std::move(rho_k));
  }

  for (int k = 0; k < r; ++k) {
    bool all_one = true;
    for (int c = 0; c < r; ++c)
      if (std::abs(cat.table.rows[k](c) - 1.0) > 1e-8) all_one = false;
    if (all_one) {
      cat.trivial_index = k;
      break;
    }
  }
  if (cat.trivial_index < 0) throw ConvergenceError("trivial character not found");
  return cat;
}

int multiplicity(const Representation& rho, const IrrepCatalog& cat, int k, double tol) {
  Vec chi = character(rho, tol);
  Cplx v = cat.table.inner(chi, cat.table.rows[k]);
  long m = std::lround(v.real());
  if (std::abs(v - Cplx(static_cast<double>(m))) > 10 * tol)
    throw NonIntegralMultiplicityError("multiplicity " + std::to_string(v.real()) + "+" +
                                       std::to_string(v.imag()) + "i is not an integer");
  if (m < 0) throw NonIntegralMultiplicityError("negative multiplicity");
  return static_cast<int>(m);
}

std::vector<int> multiplicities(const Representation& rho, const IrrepCatalog& cat, double tol) {
  std::vector<int> out(cat.count());
  for (int k = 0; k < cat.count(); ++k) out[k] = multiplicity(rho, cat, k, tol);
  return out;
}

IsotypicDecomposition isotypic_decompose(const Representation& rho, const IrrepCatalog& cat,
                                         double tol) {
  const GroupPtr& h = rho.group;
  const int n = h->order();
  const int dim = rho.degree;
  std::vector<int> mult = multiplicities(rho, cat, tol);
  int total = 0;
  for (int k = 0; k < cat.count(); ++k) total += mult[k] * cat.degree(k);
  if (total != dim) throw ConvergenceError("multiplicities do not add up to the degree");

  // columns of U^{-1}: images T_i e_j of an orthonormal intertwiner basis
  Mat uinv(dim, dim);
  Eigen::Index col = 0;
  IsotypicDecomposition out;
  for (int k = 0; k < cat.count(); ++k) {
    out.components.push_back({k, mult[k]});
    if (mult[k] == 0) continue;
    const Representation& irr = cat.irreps[k];
    const int d = cat.degree(k);
    // averaging projector onto Hom_H(V_k, rho); scan standard basis matrices
    std::vector<Mat> inters;
    for (int p = 0; p < dim && static_cast<int>(inters.size()) < mult[k]; ++p) {
      for (int q = 0; q < d && static_cast<int>(inters.size()) < mult[k]; ++q) {
        Mat t = Mat::Zero(dim, d);
        t(p, q) = 1.0;
        Mat proj = Mat::Zero(dim, d);
        for (int g = 0; g < n; ++g) proj += rho.at(g) * t * irr.at(h->inv(g)).eval();
        proj /= static_cast<double>(n);
        // Gram-Schmidt against current basis with <S,T> = tr(S^H T)/d
        for (const Mat& b : inters) {
          Cplx c = (b.adjoint() * proj).trace() / static_cast<double>(d);
          proj -= c * b;
        }
        double norm = std::sqrt(std::abs((proj.adjoint() * proj).trace().real()) / d);
        if (norm > kSolveTol * 100) inters.push_back(proj / norm);
      }
    }
    if (static_cast<int>(inters.size()) != mult[k])
      throw ConvergenceError("intertwiner space has unexpected dimension for component " +
                             std::to_string(k));
    for (const Mat& t : inters)
      for (int j = 0; j < d; ++j) uinv.col(col++) = t.col(j);
  }
  Mat u = uinv.adjoint();  // uinv has orthonormal columns
  out.change_of_basis = u;
  if (unitary_residual(u) > tol * 10)
    throw ConvergenceError("change of basis failed to be unitary");
  double res = out.block_residual(rho, cat);
  if (res > tol * 10)
    throw ConvergenceError("isotypic block residual " + std::to_string(res));
  return out;
}

double IsotypicDecomposition::block_residual(const Representation& rho,
                                             const IrrepCatalog& cat) const {
  const GroupPtr& h = rho.group;
  const Mat& u = change_of_basis;
  double r = 0;
  for (int g = 0; g < h->order(); ++g) {
    std::vector<Mat> blocks;
    for (const auto& comp : components) {
      if (comp.multiplicity == 0) continue;
      blocks.push_back(kron(Mat::Identity(comp.multiplicity, comp.multiplicity),
                            cat.irreps[comp.irrep_index].at(g)));
    }
    Mat expected = direct_sum(blocks);
    r = std::max(r, max_abs(u * rho.at(g) * u.adjoint() - expected));
  }
  return r;
}

Representation unitarize(const GroupPtr& group, const std::vector<Mat>& family, double tol) {
  if (static_cast<int>(family.size()) != group->order())
    throw InputError("need one matrix per group element");
  const int d = static_cast<int>(family[0].rows());
  Mat s = Mat::Zero(d, d);
  for (const Mat& m : family) s += m.adjoint() * m;
  s /= static_cast<double>(family.size());
  Eigen::LLT<Mat> llt(s);
  if (llt.info() != Eigen::Success) throw ConvergenceError("averaged Gram matrix is not positive definite");
  Mat l = llt.matrixL();
  Mat t = l.adjoint();
  Mat tinv = t.inverse();
  std::vector<Mat> mats(family.size());
  for (size_t g = 0; g < family.size(); ++g) mats[g] = t * family[g] * tinv;
  return Representation::make(group, std::move(mats), tol);
}

}  // namespace eqvb
