#pragma once

#include <string>
#include <vector>

#include "eqvb/group.hpp"

namespace eqvb {

GroupPtr cyclic_group(int n);
GroupPtr dihedral_group(int n);  // order 2n; rotations first, then reflections
GroupPtr symmetric_3();
GroupPtr alternating_4();
GroupPtr quaternion_8();
GroupPtr klein_four();
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);

struct CatalogEntry {
  std::string name;
  GroupPtr group;
};

/// Built-in groups used by the verification suites:
/// Z2, Z3, Z4, Z2xZ2, S3, D4, Q8, A4.
const std::vector<CatalogEntry>& builtin_catalog();

GroupPtr catalog_group(const std::string& name);

}  // namespace eqvb
