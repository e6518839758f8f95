#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "eqvb/group.hpp"
#include "eqvb/linalg.hpp"
#include "eqvb/rng.hpp"

namespace eqvb {

/// Unitary matrix representation of a finite group: one matrix per element,
/// multiplicative within tol, unitary within tol, exactly I at the identity.
struct Representation {
  GroupPtr group;
  int degree = 0;
  std::vector<Mat> matrices;

  static Representation make(GroupPtr group, std::vector<Mat> matrices, double tol = 1e-8);
  static Representation trivial(GroupPtr group);
  static Representation regular(GroupPtr group);

  const Mat& at(int g) const { return matrices[g]; }

  double multiplicativity_residual() const;
  double unitarity_residual() const;
};

/// Trace of rho on each conjugacy class (class order as in the group).
Vec character(const Representation& rho, double tol = 1e-8);

struct CharacterTable {
  GroupPtr group;
  std::vector<int> class_reps;
  std::vector<int> class_sizes;
  std::vector<int> degrees;    // one per irreducible, ascending
  std::vector<Vec> rows;       // characters per class, same order as degrees

  int num_classes() const { return static_cast<int>(class_reps.size()); }
  /// Max residual of (1/|H|) sum_c |c| chi_j(c) conj(chi_k(c)) - delta_jk.
  double orthonormality_residual() const;
  /// (1/|H|) sum_c |c| a(c) conj(b(c))
  Cplx inner(const Vec& a, const Vec& b) const;
};

/// Character table plus explicit unitary models of every irreducible, in the
/// canonical order: ascending degree, ties broken lexicographically by
/// character values (identity class first, then ascending class
/// representative).
struct IrrepCatalog {
  CharacterTable table;
  std::vector<Representation> irreps;
  int trivial_index = -1;

  int count() const { return static_cast<int>(irreps.size()); }
  int degree(int k) const { return table.degrees[k]; }
};

/// Character table by simultaneous eigen-splitting of the class-sum matrices,
/// irreducibles by central idempotents on the regular representation. The seed
/// only steers tie-breaking inside isotypic blocks; results are validated to
/// tol and the construction retries internally before failing.
IrrepCatalog irreducibles(const GroupPtr& h, double tol = 1e-8, std::uint64_t seed = 0x1337);

/// <chi_rho, chi_k> rounded to the nearest integer; throws
/// NonIntegralMultiplicity if the rounding error exceeds 10*tol.
int multiplicity(const Representation& rho, const IrrepCatalog& cat, int k, double tol = 1e-8);
std::vector<int> multiplicities(const Representation& rho, const IrrepCatalog& cat,
                                double tol = 1e-8);

struct IsotypicComponent {
  int irrep_index = -1;
  int multiplicity = 0;
};

/// U rho(h) U^{-1} = directsum_k (I_{m_k} (x) rho_k(h)), blocks ascending in k,
/// multiplicity index outer. components lists every irrep (zero multiplicities
/// included); U is unitary.
struct IsotypicDecomposition {
  std::vector<IsotypicComponent> components;
  Mat change_of_basis;  // U

  double block_residual(const Representation& rho, const IrrepCatalog& cat) const;
};

IsotypicDecomposition isotypic_decompose(const Representation& rho, const IrrepCatalog& cat,
                                         double tol = 1e-8);

/// Weyl averaging: any multiplicative matrix family becomes a unitary
/// representation similar to it.
Representation unitarize(const GroupPtr& group, const std::vector<Mat>& family,
                         double tol = 1e-8);

}  // namespace eqvb
