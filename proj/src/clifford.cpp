#include "clifford.hpp"

#include <set>
#include <stdexcept>

namespace tgrip {

namespace {

// theta's values read through a map into its domain: values[j] must land on
// the dual's basis elements under `into`, with exponents compatible.
Character character_through(const AbelianDual& dual,
                            const Character& theta,
                            const std::function<Elt(const Elt&)>& into) {
  i64 e_from = theta.dual.exponent();
  i64 e_to = dual.exponent();
  if (e_to != 1 && e_from % e_to != 0)
    throw std::logic_error("character transport: exponent grew");
  Character out{dual, Vec(dual.invariants().size(), 0)};
  for (size_t j = 0; j < dual.basis().size(); ++j) {
    i64 v = theta.eval(into(dual.basis()[j]));
    i64 scale = e_from / e_to;
    if (v % scale != 0)
      throw std::logic_error("character transport: value order too large");
    i64 vs = v / scale;
    i64 step = e_to / dual.invariants()[j];
    if (vs % step != 0)
      throw std::logic_error("character transport: basis order too large");
    out.t[j] = vs / step;
  }
  return out;
}

void check_invariant(const DegreeMultiset& d, i64 index, const char* where) {
  i64 total = 0;
  for (auto& [deg, cnt] : d) total += cnt * deg * deg;
  if (total != index)
    throw std::logic_error(std::string("degrees: sum of squares is off in ") +
                           where);
}

DegreeMultiset degrees_rec(Character theta, int fuel) {
  if (fuel <= 0) throw std::logic_error("degrees: recursion fuel exhausted");
  Subgroup n = theta.dual.group();
  const PcGroupPtr& g = n.g;
  i64 index = g->order() / n.order;

  // Reduce by the kernel of theta, climbing through central slices.  The
  // kernel is normal (the whole group stabilises theta), so it meets the
  // centre nontrivially at every step.
  Subgroup k = char_kernel(theta);
  if (k.order > 1) {
    Subgroup k1 = intersect(k, center(g));
    if (k1.order == 1)
      throw std::logic_error("degrees: kernel misses the centre");
    auto cq = quotient_central(g, k1);
    std::vector<Elt> nim;
    for (auto& s : n.igs) nim.push_back(cq.proj(s));
    Subgroup n2 = igs_close(cq.q, nim);
    AbelianDual d2(n2);
    // lift lands inside N because N contains the kernel slice
    auto cqc = cq;
    Character t2 = character_through(
        d2, theta, [cqc](const Elt& x) { return cqc.lift(x); });
    auto out = degrees_rec(std::move(t2), fuel - 1);
    check_invariant(out, index, "kernel reduction");
    return out;
  }

  // theta faithful and invariant: [N, G] <= ker theta = 1, N is central.
  if (!is_central(n))
    throw std::logic_error("degrees: faithful invariant pair not central");

  if (is_abelian(whole_group(g))) {
    // every extension of theta to G is an irreducible of degree one
    return DegreeMultiset{{1, index}};
  }

  Subgroup zg = center(g);
  if (n.order < zg.order) {
    // split over the extensions of theta to the full centre
    AbelianDual dz(zg);
    DegreeMultiset out;
    for (auto& psi : extend_characters(theta, dz))
      for (auto& [deg, cnt] : degrees_rec(psi, fuel - 1)) out[deg] += cnt;
    check_invariant(out, index, "centre extension");
    return out;
  }

  // N = Z(G), theta faithful, G nonabelian: pick a noncentral abelian
  // normal subgroup above N and walk the character orbits above theta.
  Subgroup na = noncentral_abelian_normal(g);
  AbelianDual dn(na);
  std::vector<Character> above = extend_characters(theta, dn);
  std::set<Character> pending(above.begin(), above.end());
  DegreeMultiset out;
  while (!pending.empty()) {
    Character rep = *pending.begin();
    auto os = orbit_stabilizer<Character>(
        whole_group(g), rep,
        [&](const Character& c, const Elt& x) { return conj_character(c, x); });
    for (auto& c : os.orbit) pending.erase(c);
    i64 orbit_index = g->order() / os.stab.order;
    if (orbit_index <= 1)
      throw std::logic_error("degrees: faithful orbit has full inertia");
    // Clifford correspondence: irreducibles of G over the orbit match those
    // of the inertia group over rep, with degree scaled by the orbit size.
    auto ig = induced_presentation(os.stab);
    std::vector<Elt> nim;
    for (auto& s : na.igs) nim.push_back(ig.to_sub(s));
    Subgroup n_in = igs_close(ig.q, nim);
    AbelianDual din(n_in);
    auto emb = ig.embed;
    Character rep_in = character_through(
        din, rep, [emb](const Elt& x) { return emb.apply(x); });
    for (auto& [deg, cnt] : degrees_rec(std::move(rep_in), fuel - 1))
      out[deg * orbit_index] += cnt;
  }
  check_invariant(out, index, "orbit split");
  return out;
}

}  // namespace

DegreeMultiset degrees_over(const Character& theta) {
  Subgroup n = theta.dual.group();
  if (!is_normal(n))
    throw std::invalid_argument("degrees_over: subgroup not normal");
  for (int i = 0; i < n.g->ngens(); ++i)
    if (!(conj_character(theta, n.g->gen(i)) == theta))
      throw std::invalid_argument("degrees_over: character not invariant");
  auto out = degrees_rec(theta, 64);
  check_invariant(out, n.g->order() / n.order, "degrees_over");
  return out;
}

DegreeMultiset irreducible_degrees(const PcGroupPtr& g) {
  AbelianDual dt(trivial_subgroup(g));
  return degrees_over(trivial_character(dt));
}

}  // namespace tgrip
