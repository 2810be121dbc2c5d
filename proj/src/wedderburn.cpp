#include "wedderburn.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tgrip {

i64 WedderburnType::total() const {
  i64 t = 0;
  for (auto& [d, m] : blocks) t += m * d * d;
  return t;
}

i64 WedderburnType::nblocks() const {
  i64 t = 0;
  for (auto& [d, m] : blocks) t += m;
  return t;
}

std::string WedderburnType::str() const {
  std::ostringstream os;
  bool first = true;
  for (auto& [d, m] : blocks) {
    if (!first) os << " + ";
    os << m << "x[" << d << "x" << d << "]";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

WedderburnType tensor_type(const WedderburnType& a, const WedderburnType& b) {
  WedderburnType t;
  for (auto& [d1, m1] : a.blocks)
    for (auto& [d2, m2] : b.blocks) t.blocks[d1 * d2] += m1 * m2;
  return t;
}

const WedderburnType& TgripProfile::at(const Character& chi) const {
  auto it = types.find(chi.t);
  if (it == types.end())
    throw std::invalid_argument("profile: character not from this kernel");
  return it->second;
}

Cocycle TgripProfile::class_of(const Character& chi) const {
  if (!rep)
    throw std::logic_error(
        "class_of: profile has no covering group attached (synthetic "
        "forced-type or expectation profile)");
  return transgress(chi, cq);
}

TgripProfile profile_via_repgroup(PcGroupPtr rep, const Subgroup& z) {
  Subgroup zc = center(rep);
  Subgroup der = derived_subgroup(rep);
  for (const Elt& w : z.igs)
    if (!contains(zc, w) || !contains(der, w))
      throw std::invalid_argument("not a representation group witness");

  TgripProfile pr{rep, z, quotient_central(rep, z), AbelianDual(z), {}, {}};
  pr.kernel_invariants = pr.dual.invariants();
  for (i64 ci = 0; ci < pr.dual.size(); ++ci) {
    Character chi = character_at(pr.dual, ci);
    pr.types[chi.t] = WedderburnType{degrees_over(chi)};
  }

  // The trivial character sees the plain group algebra of the quotient.
  Character triv = trivial_character(pr.dual);
  if (pr.at(triv).blocks != irreducible_degrees(pr.cq.q))
    throw std::logic_error("profile: trivial class disagrees with the quotient");
  // Galois symmetry: powering a character by a unit permutes the primitive
  // roots of unity, which cannot change any block dimension.
  i64 ex = pr.dual.exponent();
  for (auto& [t, type] : pr.types) {
    Character chi{pr.dual, t};
    for (i64 k = 2; k < ex; ++k) {
      if (std::gcd(k, ex) != 1) continue;
      if (!(pr.at(char_pow(chi, k)) == type))
        throw std::logic_error("profile: Galois symmetry violated");
    }
  }
  return pr;
}

WedderburnType wedderburn_via_cocycle(const Cocycle& alpha) {
  i64 e = alpha.mod;
  if (e <= 1) return WedderburnType{irreducible_degrees(alpha.q)};
  CentralExtension ext = central_extension(alpha.q, e, tails_of_cocycle(alpha));
  Subgroup zs = igs_close(ext.e, {ext.z});
  AbelianDual dz(zs);
  // zs is cyclic of order e, generated by z; pick the character sending z
  // to the canonical primitive root (value 1 in Z/e).
  Vec c = dz.coords(ext.z);
  Character lam{dz, {inv_mod(c[0], e)}};
  if (lam.eval(ext.z) != 1)
    throw std::logic_error("twisted type: kernel character not canonical");
  return WedderburnType{degrees_over(lam)};
}

i64 alpha_regular_count(const Cocycle& alpha) {
  i64 e = alpha.mod;
  i64 cnt = 0;
  for (auto& [x, sz] : conjugacy_classes(alpha.q)) {
    bool regular = true;
    for (const Elt& h : materialize(centralizer(alpha.q, x))) {
      i64 d = (alpha(x, h) - alpha(h, x)) % e;
      if (d != 0) {
        regular = false;
        break;
      }
    }
    cnt += regular ? 1 : 0;
  }
  return cnt;
}

nlohmann::ordered_json profile_json(const TgripProfile& pr,
                                    const std::string& name, i64 p) {
  nlohmann::ordered_json j;
  j["group"] = name;
  j["p"] = p;
  j["kernel_invariants"] = pr.kernel_invariants;
  auto classes = nlohmann::ordered_json::array();
  for (i64 ci = 0; ci < pr.dual.size(); ++ci) {
    Character chi = character_at(pr.dual, ci);
    nlohmann::ordered_json row;
    row["chi"] = chi.t;
    auto blocks = nlohmann::ordered_json::array();
    for (auto& [d, m] : pr.at(chi).blocks)
      blocks.push_back(nlohmann::ordered_json::array({d, m}));
    row["blocks"] = blocks;
    classes.push_back(row);
  }
  j["classes"] = classes;
  return j;
}

}  // namespace tgrip
