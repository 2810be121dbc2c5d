// Block structures of twisted group algebras over the complex numbers.
//
// A twisted algebra decomposes into full matrix blocks; everything we ever
// compare is the multiset of block dimensions with multiplicities.  Two
// independent routes produce it:
//
//   * through a designated central subgroup Z of a covering group E with
//     Z <= Z(E) n E': the blocks twisted by (the class of) a character chi
//     of Z are the irreducibles of E lying over chi (profile_via_repgroup);
//   * from an explicit cocycle: build the extension it defines and read
//     the degrees over a faithful character of the new kernel
//     (wedderburn_via_cocycle).
//
// alpha_regular_count gives a third, representation-free count of the
// blocks for cross-checking: a class is alpha-regular when the cocycle
// commutes on it against its centralizer.
#pragma once

#include <json.hpp>
#include <map>
#include <string>

#include "clifford.hpp"
#include "cohomology.hpp"

namespace tgrip {

struct WedderburnType {
  DegreeMultiset blocks;  // dimension -> multiplicity, ascending

  i64 total() const;    // sum of m * d^2
  i64 nblocks() const;  // sum of m
  std::string str() const;  // "9x[1x1] + 2x[3x3]"

  bool operator==(const WedderburnType& o) const { return blocks == o.blocks; }
  bool operator!=(const WedderburnType& o) const { return !(*this == o); }
  bool operator<(const WedderburnType& o) const { return blocks < o.blocks; }
};

// Pairwise products {(d1*d2, m1*m2)}: the type of a tensor product of two
// block algebras, hence of a coprime direct product under a product class.
WedderburnType tensor_type(const WedderburnType& a, const WedderburnType& b);

// The full family of twisted types reachable through one central subgroup
// of one covering group, keyed by the characters of that subgroup.
struct TgripProfile {
  PcGroupPtr rep;                     // the covering group E
  Subgroup z;                         // central subgroup inside Z(E) n E'
  CentralQuotient cq;                 // E -> G = E/Z, with section
  AbelianDual dual;                   // character group of Z
  std::vector<i64> kernel_invariants; // invariant factors of Z
  std::map<Vec, WedderburnType> types;  // character t-vector -> type

  const WedderburnType& at(const Character& chi) const;
  // A cocycle on G representing the class this character is responsible
  // for (its transgression along the quotient).
  Cocycle class_of(const Character& chi) const;
};

// Throws invalid_argument unless z <= Z(rep) n rep'.
TgripProfile profile_via_repgroup(PcGroupPtr rep, const Subgroup& z);

// Type of the algebra twisted by this cocycle, through the extension it
// defines and the canonical faithful character of the new kernel.
WedderburnType wedderburn_via_cocycle(const Cocycle& alpha);

// Number of alpha-regular conjugacy classes; equals the block count.
i64 alpha_regular_count(const Cocycle& alpha);

nlohmann::ordered_json profile_json(const TgripProfile& pr,
                                    const std::string& name, i64 p);

}  // namespace tgrip
