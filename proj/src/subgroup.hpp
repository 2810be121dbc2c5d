#pragma once

// Subgroup arithmetic on top of the collector: induced generating sequences
// (igs), constructive membership, orbit/stabilizer for solvable actions,
// centres, derived subgroups, central quotients with canonical sections, and
// verified homomorphisms.

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pcgroup.hpp"

namespace tgrip {

// A subgroup held as an induced generating sequence: igs[t] has strictly
// increasing leading indices lead[t], leading exponent p^{v_t}, and the
// chain S_t = <igs[t], igs[t+1], ...> satisfies S_{t+1} normal in S_t with
// cyclic quotient of order rel[t].  |S| = prod rel[t].
struct Subgroup {
  PcGroupPtr g;
  std::vector<Elt> igs;
  std::vector<int> lead;
  std::vector<i64> rel;
  i64 order = 1;
};

Subgroup igs_close(PcGroupPtr g, const std::vector<Elt>& gens);
Subgroup whole_group(PcGroupPtr g);
Subgroup trivial_subgroup(PcGroupPtr g);

// Chain exponents of x over the igs (constructive membership), or nullopt.
std::optional<Vec> strip(const Subgroup& s, const Elt& x);
bool contains(const Subgroup& s, const Elt& x);
bool subgroup_le(const Subgroup& a, const Subgroup& b);
bool subgroup_eq(const Subgroup& a, const Subgroup& b);
bool is_central(const Subgroup& s);
bool is_normal(const Subgroup& s);
bool is_abelian(const Subgroup& s);

std::vector<Elt> materialize(const Subgroup& s);  // all elements; size capped

Subgroup normal_closure(PcGroupPtr g, const std::vector<Elt>& gens);
Subgroup derived_subgroup(PcGroupPtr g);
Subgroup center(PcGroupPtr g);
Subgroup centralizer(PcGroupPtr g, const Elt& x);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
Subgroup join(const Subgroup& a, const Subgroup& b);

std::vector<Elt> conj_class(PcGroupPtr g, const Elt& x);
// Class representatives with class sizes, identity class first.
std::vector<std::pair<Elt, i64>> conjugacy_classes(PcGroupPtr g);

// ---------------------------------------------------------------- orbits ---
// Right action of the subgroup h on points; act(x, g) must define a group
// action for g in the ambient group of h.  The stabilizer comes back as a
// subgroup, and |orbit| * |stab| == |h| is asserted.
template <class Point>
struct OrbitStab {
  std::vector<Point> orbit;
  std::map<Point, Elt> transversal;  // point -> u with act(seed, u) == point
  Subgroup stab;
};

template <class Point, class Act>
OrbitStab<Point> orbit_stabilizer(const Subgroup& h, const Point& seed,
                                  Act act) {
  const PcGroup& g = *h.g;
  OrbitStab<Point> res;
  res.orbit.push_back(seed);
  res.transversal[seed] = g.id();
  std::vector<Elt> stab_gens;
  // Deepest igs element first: each step extends the acting group by one
  // cyclic layer on top, which maps the current orbit onto blocks.
  for (int t = (int)h.igs.size() - 1; t >= 0; --t) {
    const Elt& a = h.igs[t];
    // Find the least d >= 1 with seed^(a^d) back in the current orbit.
    i64 d = 1;
    Point q = act(seed, a);
    while (res.transversal.find(q) == res.transversal.end()) {
      q = act(q, a);
      ++d;
      if (d > h.rel[t])
        throw std::runtime_error("orbit_stabilizer: action is inconsistent");
    }
    if (h.rel[t] % d != 0)
      throw std::runtime_error("orbit_stabilizer: block size does not divide");
    if (d < h.rel[t]) {
      // a^d returns into the orbit: correct it back to a stabilizer element.
      Elt ad = g.pow(a, d);
      stab_gens.push_back(g.mul(ad, g.inv(res.transversal[q])));
    }
    if (d > 1) {
      std::vector<Point> base = res.orbit;
      std::vector<Point> prev = base;
      Elt aj = g.id();
      for (i64 j = 1; j < d; ++j) {
        aj = g.mul(aj, a);
        std::vector<Point> next;
        next.reserve(prev.size());
        for (size_t u = 0; u < prev.size(); ++u) {
          Point np = act(prev[u], a);
          next.push_back(np);
          res.orbit.push_back(np);
          res.transversal[np] = g.mul(res.transversal[base[u]], aj);
        }
        prev = std::move(next);
      }
    }
  }
  res.stab = igs_close(h.g, stab_gens);
  if ((i64)res.orbit.size() * res.stab.order != h.order)
    throw std::runtime_error("orbit_stabilizer: orbit-stabilizer count");
  return res;
}

// ------------------------------------------------------------ quotients ---
// G/K for a central subgroup K.  Quotient generators are the images of the
// parent generators whose relative order stays >= 2; the canonical section
// places the same exponents back (pruned coordinates are zero on canonical
// representatives by construction).
struct CentralQuotient {
  PcGroupPtr parent;
  PcGroupPtr q;
  Subgroup kernel;           // in the parent
  std::vector<int> kept;     // parent index of each quotient generator
  std::vector<i64> new_r;    // full-length relative orders in the quotient

  Elt canon(const Elt& x) const;  // canonical coset representative in parent
  Elt proj(const Elt& x) const;   // parent -> quotient
  Elt lift(const Elt& qx) const;  // quotient -> parent (section)
};

CentralQuotient quotient_central(PcGroupPtr g, const Subgroup& k);

Subgroup second_center(PcGroupPtr g);
// <Z(G), x> for a section lift x of the first igs element of Z(G/Z(G));
// abelian, normal, strictly above the centre.  Requires G nonabelian.
Subgroup noncentral_abelian_normal(PcGroupPtr g);

// ------------------------------------------------------- homomorphisms ---
struct GroupHom {
  PcGroupPtr src, dst;
  std::vector<Elt> img;  // images of the src generators
  Elt apply(const Elt& x) const;
};

// Builds a homomorphism from generator images, checking every defining
// relation of src (von Dyck).  Throws on a violated relation.
GroupHom make_hom(PcGroupPtr src, PcGroupPtr dst, std::vector<Elt> img);
bool is_isomorphism(const GroupHom& h);

// --------------------------------------------- presentations of subgroups --
struct InducedGroup {
  PcGroupPtr q;                 // standalone group on the igs
  Subgroup sub;                 // the subgroup it was made from
  GroupHom embed;               // q -> parent, igs images
  Elt to_sub(const Elt& x) const;    // parent element of S -> q coordinates
};

InducedGroup induced_presentation(const Subgroup& s);

// Invariant factors of an abelian subgroup (d_1 | d_2 | ...).
std::vector<i64> abelian_invariants(const Subgroup& s);

// Invariant factors of G/[G,G], read off the abelianised presentation.
std::vector<i64> abelianization(const PcGroupPtr& g);

// ------------------------------------------------------------- products ---
struct ProductGroup {
  PcGroupPtr q;
  GroupHom embed_a, embed_b;
};

ProductGroup direct_product(PcGroupPtr a, PcGroupPtr b);
// Quotient of a x b identifying embed_a(x) with embed_b(y) for each listed
// pair; the identified elements must be central in their factors.
ProductGroup central_product(PcGroupPtr a, PcGroupPtr b,
                             const std::vector<std::pair<Elt, Elt>>& ids);

}  // namespace tgrip
