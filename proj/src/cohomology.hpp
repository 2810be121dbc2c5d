// Second cohomology of finite p-groups through relation tails.
//
// A central extension of a pc-presented group Q by Z/e is pinned down by one
// value in Z/e per presentation relation (the "tail" the relation picks up in
// the extension).  Because the kernel is central, the collector's overlap
// discrepancies are Z-linear in the tails, so the consistent tail vectors
// form the kernel Z of a small integer matrix; tails reachable by changing
// the section span a subgroup B, and H^2(Q, Z/e) = Z/B.  This keeps every
// computation at a handful of unknowns regardless of |Q|, and cocycles only
// ever need to exist as functions: converting a function to its tail vector
// takes one twisted evaluation per relation.
//
// Classes over the full circle group are decided through the extension
// itself: pushing [E] along a faithful character of the kernel A gives the
// trivial class exactly when A meets the derived subgroup of E trivially.
#pragma once

#include <functional>

#include "dual.hpp"

namespace tgrip {

// Normalised 2-cocycle with values written additively in Z/mod: the stored
// integer f(x, y) stands for a root of unity of order dividing mod.
struct Cocycle {
  PcGroupPtr q;
  i64 mod = 1;
  std::function<i64(const Elt&, const Elt&)> f;
  i64 operator()(const Elt& x, const Elt& y) const { return f(x, y); }
};

Cocycle zero_cocycle(PcGroupPtr q, i64 mod);
Cocycle cocycle_add(const Cocycle& a, const Cocycle& b);
Cocycle cocycle_sub(const Cocycle& a, const Cocycle& b);
// The same class with values pushed into Z/bigger (mod | bigger).
Cocycle rescale_cocycle(const Cocycle& a, i64 bigger);
// delta mu (x, y) = mu(x) + mu(y) - mu(xy), for any mu with mu(id) = 0.
Cocycle coboundary(PcGroupPtr q, i64 mod, std::function<i64(const Elt&)> mu);
// Exhaustive check of the 2-cocycle identity; throws above the order cap.
bool is_cocycle(const Cocycle& a, i64 max_order = 64);

// Tail vector of a cocycle: one entry per relation, power relations first
// (slot i for g_i^{r_i}), then commutators [g_j, g_i] ordered by i, then j.
Vec tails_of_cocycle(const Cocycle& a);
int ntails(const PcGroupPtr& q);
int pow_slot(const PcGroupPtr& q, int i);
int comm_slot(const PcGroupPtr& q, int j, int i);  // j > i

// The extension group E(tails): generators of q in order plus one central z
// of order e appended last; throws if the tails are not consistent.
struct CentralExtension {
  PcGroupPtr e;
  PcGroupPtr base;
  i64 mod = 1;
  GroupHom proj;                        // e -> base, kills z
  Elt z;                                // generator of the kernel
  std::function<Elt(const Elt&)> lift;  // canonical section, z-coordinate 0
};
CentralExtension central_extension(PcGroupPtr q, i64 e, const Vec& tails);

// Z/B bookkeeping for a fixed (Q, e) with e a prime power (or 1).
class TailSpace {
 public:
  TailSpace(PcGroupPtr q, i64 e);

  const PcGroupPtr& group() const { return q_; }
  i64 modulus() const { return e_; }
  bool consistent(const Vec& tails) const;        // lies in Z
  bool trivial_class(const Vec& tails) const;     // lies in B
  bool same_class(const Vec& s, const Vec& t) const;
  i64 h2_size() const { return zsize_ / bsize_; }
  // |p^j H2| for j = 0, 1, ... down to 1 (inclusive).
  std::vector<i64> h2_filtration() const;
  std::vector<i64> h2_invariants() const;
  const Mat& z_gens() const { return zgens_; }
  const Mat& b_gens() const { return bgens_; }

 private:
  PcGroupPtr q_;
  i64 e_;
  int m_;
  Mat constraints_;  // overlap discrepancies, rows x m_
  Mat zgens_, bgens_;
  i64 zsize_ = 1, bsize_ = 1;
};

// Invariants of H^2(q, Z/e); empty means the group is trivial.
std::vector<i64> h2_invariants(PcGroupPtr q, i64 e);
// Invariants of the Schur multiplier H^2(q, Cx), via Z/e tails with e grown
// until the reported group stabilises.
std::vector<i64> schur_multiplier(PcGroupPtr q);

// Function cocycle of a tail vector, through the canonical section of E(t).
Cocycle cocycle_from_tails(PcGroupPtr q, i64 e, const Vec& tails);

// A covering group: central extension whose kernel sits inside Z(E) n E' and
// realises the full multiplier, so its kernel characters reach every class
// over the circle group.  Found by searching small combinations of consistent
// tail classes; throws logic_error if none works (does not happen for the
// p-groups this library handles).
struct SchurCover {
  PcGroupPtr e;     // covering group (equals base when the multiplier is 1)
  PcGroupPtr base;
  Subgroup z;       // kernel subgroup of e, invariants = multiplier
  GroupHom proj;    // e -> base
};
SchurCover schur_cover(PcGroupPtr q);

// Transgression of a character of the kernel of a central quotient:
// tra(chi)(x, y) = chi(lift(x) lift(y) lift(xy)^-1) on the quotient group.
Cocycle transgress(const Character& chi, const CentralQuotient& cq);

// Cocycle on the parent group from one on the quotient group.
Cocycle inflate(const Cocycle& a, const CentralQuotient& cq);
// Pullback along a homomorphism phi : src -> a.q.
Cocycle pullback(const Cocycle& a, const GroupHom& phi);

bool cohomologous(const Cocycle& a, const Cocycle& b);  // over Z/mod
// Is the class trivial once the coefficients are pushed into the circle
// group?  Decided on the extension E(a): kernel meets E' trivially.
bool is_trivial_over_Cx(const Cocycle& a);
bool cohomologous_over_Cx(const Cocycle& a, const Cocycle& b);

}  // namespace tgrip
