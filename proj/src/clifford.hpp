// Degrees of complex irreducible representations lying over an invariant
// character of an abelian normal subgroup, by Clifford-theoretic recursion.
//
// The pair (N, theta) is reduced until N is central and theta faithful:
// factoring out ker(theta) -- climbing through central pieces -- makes N
// central automatically, because the full group then stabilises a faithful
// character of N, forcing [N, G] = 1.  If the group is abelian the degrees
// are all one; if N is smaller than the full centre the answer splits over
// the extensions of theta to the centre; otherwise a noncentral abelian
// normal subgroup exists, every character of it above theta has a proper
// inertia group, and Clifford correspondence hands the problem to that
// stabiliser with the degree scaled by its index.
#pragma once

#include <map>

#include "dual.hpp"

namespace tgrip {

// degree -> number of irreducibles of that degree
using DegreeMultiset = std::map<i64, i64>;

// Degrees of the irreducibles of the ambient group of theta's subgroup N
// whose restriction to N lies over theta.  N must be abelian and normal and
// theta invariant under the whole group; the result always satisfies
// sum m * d^2 = [G : N].
DegreeMultiset degrees_over(const Character& theta);

// All irreducible degrees of the group.
DegreeMultiset irreducible_degrees(const PcGroupPtr& g);

}  // namespace tgrip
