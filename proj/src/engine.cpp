#include "engine.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace tgrip {

namespace {

std::string inv_str(const std::vector<i64>& v) {
  if (v.empty()) return "1";
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

i64 size_of(const std::vector<i64>& inv) {
  i64 s = 1;
  for (i64 d : inv) s *= d;
  return s;
}

// Multiset of (character order, block type) over a profile; a group
// isomorphism of the character groups preserves it, so a mismatch is a hard
// obstruction while a match licenses the search.
using Signature = std::pair<i64, WedderburnType>;

std::map<Signature, i64> signature_multiset(const TgripProfile& p) {
  std::map<Signature, i64> out;
  for (const auto& [t, ty] : p.types) ++out[{Character{p.dual, t}.order(), ty}];
  return out;
}

std::string first_difference(const std::map<Signature, i64>& a,
                             const std::map<Signature, i64>& b) {
  for (const auto& [sig, cnt] : a) {
    auto it = b.find(sig);
    i64 other = it == b.end() ? 0 : it->second;
    if (other != cnt)
      return "order-" + std::to_string(sig.first) + " classes of type " +
             sig.second.str() + ": " + std::to_string(cnt) + " vs " +
             std::to_string(other);
  }
  for (const auto& [sig, cnt] : b)
    if (!a.count(sig))
      return "order-" + std::to_string(sig.first) + " classes of type " +
             sig.second.str() + ": 0 vs " + std::to_string(cnt);
  return "";
}

// Runs fn over all exponent vectors c with c[i] in [0, inv[i]) for i < upto
// and zero beyond; stops early when fn returns false.
bool odometer(const std::vector<i64>& inv, int upto,
              const std::function<bool(const std::vector<i64>&)>& fn) {
  std::vector<i64> c(inv.size(), 0);
  for (;;) {
    if (!fn(c)) return false;
    int i = 0;
    while (i < upto && ++c[i] == inv[i]) c[i++] = 0;
    if (i == upto) return true;
  }
}

}  // namespace

const char* to_string(TgripStatus s) {
  switch (s) {
    case TgripStatus::EQUIVALENT: return "EQUIVALENT";
    case TgripStatus::NOT_EQUIVALENT: return "NOT_EQUIVALENT";
    default: return "UNKNOWN";
  }
}

const char* to_string(CertStatus s) {
  switch (s) {
    case CertStatus::VERIFIED: return "VERIFIED";
    case CertStatus::FAILED: return "FAILED";
    default: return "NOT_VERIFIABLE";
  }
}

TgripVerdict tgrip_compare(const TgripProfile& a, const TgripProfile& b,
                           i64 bound) {
  TgripVerdict v;
  if (a.kernel_invariants != b.kernel_invariants) {
    v.status = TgripStatus::NOT_EQUIVALENT;
    v.obstruction = "multiplier invariant factors differ: " +
                    inv_str(a.kernel_invariants) + " vs " +
                    inv_str(b.kernel_invariants);
    return v;
  }
  v.witness_mod = a.kernel_invariants;
  const WedderburnType& orda = a.at(trivial_character(a.dual));
  const WedderburnType& ordb = b.at(trivial_character(b.dual));
  if (orda != ordb) {
    v.status = TgripStatus::NOT_EQUIVALENT;
    v.obstruction =
        "ordinary algebras differ: " + orda.str() + " vs " + ordb.str();
    return v;
  }
  auto siga = signature_multiset(a), sigb = signature_multiset(b);
  if (siga != sigb) {
    v.status = TgripStatus::NOT_EQUIVALENT;
    v.obstruction = "signature multisets differ at " +
                    first_difference(siga, sigb);
    return v;
  }
  const std::vector<i64>& inv = a.kernel_invariants;
  int k = (int)inv.size();
  if (k == 0) {
    v.status = TgripStatus::EQUIVALENT;
    v.note = "trivial character groups; ordinary algebras match";
    return v;
  }
  i64 n = a.dual.size();
  if (n > bound) {
    v.status = TgripStatus::UNKNOWN;
    v.note = "character group order " + std::to_string(n) +
             " exceeds the search bound " + std::to_string(bound) +
             "; invariants and signatures agree";
    return v;
  }

  // Images for the basis character e_i must share its order and type.
  std::vector<std::vector<std::vector<i64>>> cand(k);
  for (int i = 0; i < k; ++i) {
    std::vector<i64> e(k, 0);
    e[i] = 1;
    const WedderburnType& want = a.at(Character{a.dual, e});
    for (i64 idx = 0; idx < n; ++idx) {
      Character y = character_at(b.dual, idx);
      if (y.order() == inv[i] && b.at(y) == want) cand[i].push_back(y.t);
    }
  }

  std::vector<std::vector<i64>> img(k);
  auto image_of = [&](const std::vector<i64>& c) {
    Character y = trivial_character(b.dual);
    for (int i = 0; i < k; ++i)
      if (c[i] != 0) y = char_mul(y, char_pow(Character{b.dual, img[i]}, c[i]));
    return y;
  };
  auto matches = [&](const std::vector<i64>& c) {
    return b.at(image_of(c)) == a.at(Character{a.dual, c});
  };
  std::function<bool(int)> rec = [&](int j) -> bool {
    if (j == k) {
      std::set<std::vector<i64>> seen;
      bool ok = odometer(inv, k, [&](const std::vector<i64>& c) {
        if (!matches(c)) return false;
        seen.insert(image_of(c).t);
        return true;
      });
      return ok && (i64)seen.size() == n;
    }
    for (const auto& y : cand[j]) {
      img[j] = y;
      // every combination newly reachable with this image must match
      bool good = odometer(inv, j + 1, [&](const std::vector<i64>& c) {
        return c[j] == 0 || matches(c);
      });
      if (good && rec(j + 1)) return true;
    }
    return false;
  };
  if (rec(0)) {
    v.status = TgripStatus::EQUIVALENT;
    v.witness = img;
    v.note = "character-group isomorphism verified on all " +
             std::to_string(n) + " classes";
  } else {
    v.status = TgripStatus::UNKNOWN;
    v.note = "no character-group isomorphism matches the profiles within the "
             "search bound; invariants and signatures agree";
  }
  return v;
}

nlohmann::ordered_json verdict_json(const TgripVerdict& v) {
  nlohmann::ordered_json j;
  j["status"] = to_string(v.status);
  j["witness_mod"] = v.witness_mod;
  j["witness"] = v.witness;
  j["obstruction"] = v.obstruction;
  j["note"] = v.note;
  return j;
}

nlohmann::ordered_json report_json(const CertReport& r) {
  nlohmann::ordered_json j;
  j["status"] = to_string(r.status);
  j["checks"] = r.checks;
  j["detail"] = r.detail;
  return j;
}

namespace {

// Exponent vector expressing target over the given independent generators of
// z, by bounded enumeration; nullopt when it is not in their span.
std::optional<std::vector<i64>> coords_over(const PcGroupPtr& g,
                                            const std::vector<Elt>& gens,
                                            const Elt& target) {
  std::vector<i64> ords;
  for (const Elt& x : gens) ords.push_back(g->elt_order(x));
  std::optional<std::vector<i64>> out;
  odometer(ords, (int)ords.size(), [&](const std::vector<i64>& c) {
    Elt acc = g->id();
    for (size_t j = 0; j < gens.size(); ++j)
      acc = g->mul(acc, g->pow(gens[j], c[j]));
    if (acc == target) {
      out = c;
      return false;
    }
    return true;
  });
  return out;
}

i64 multiplier_size(const PcGroupPtr& g, i64 declared, std::string* prov) {
  if (declared >= 1) {
    *prov = "declared";
    return declared;
  }
  if (declared == kSizeMissing) return -1;
  *prov = "computed";
  return size_of(schur_multiplier(g));
}

struct CertFail {
  explicit CertFail(std::string w) : what(std::move(w)) {}
  std::string what;
};

}  // namespace

CertReport verify_quotient_certificate(const QuotientCertificate& cert) {
  CertReport r;
  try {
    const auto &g1 = cert.g1, &g2 = cert.g2;
    if (!g1 || !g2) throw CertFail("certificate groups are not available");
    if (!is_central(cert.z1) || !is_central(cert.z2))
      throw CertFail("Z_j is not central");
    // (a) kernels inside the derived subgroups: transgressions injective
    if (!subgroup_le(cert.z1, derived_subgroup(g1)))
      throw CertFail("Z1 is not inside G1': transgression 1 not injective");
    if (!subgroup_le(cert.z2, derived_subgroup(g2)))
      throw CertFail("Z2 is not inside G2': transgression 2 not injective");
    r.checks.push_back("Z_j <= G_j' on both sides: transgressions injective");

    // i : Z2 -> Z1 on an independent generating set
    if (cert.z2_basis.empty() ||
        cert.z2_basis.size() != cert.i_images.size())
      throw CertFail("i: generator and image counts differ");
    i64 span = 1;
    for (const Elt& x : cert.z2_basis) {
      if (!contains(cert.z2, x)) throw CertFail("i: generator outside Z2");
      span *= g2->elt_order(x);
    }
    if (span != cert.z2.order ||
        igs_close(g2, cert.z2_basis).order != cert.z2.order)
      throw CertFail("i: generators are not an independent basis of Z2");
    for (size_t j = 0; j < cert.i_images.size(); ++j) {
      if (!contains(cert.z1, cert.i_images[j]))
        throw CertFail("i: image outside Z1");
      if (g1->elt_order(cert.i_images[j]) != g2->elt_order(cert.z2_basis[j]))
        throw CertFail("i: image order differs from generator order");
    }
    if (igs_close(g1, cert.i_images).order != cert.z1.order)
      throw CertFail("i: images do not span Z1");
    r.checks.push_back("i : Z2 -> Z1 is an isomorphism");

    // phi : G2/Z2 -> G1/Z1 from parent generator images
    auto cq1 = quotient_central(g1, cert.z1);
    auto cq2 = quotient_central(g2, cert.z2);
    std::vector<Elt> imgs;
    for (int qg = 0; qg < cq2.q->ngens(); ++qg) {
      int parent = cq2.kept[qg];
      const Elt* w = nullptr;
      for (const auto& [gi, word] : cert.phi)
        if (gi == parent) w = &word;
      if (!w)
        throw CertFail("phi: no image for generator " +
                       g2->gen_name(parent));
      imgs.push_back(cq1.proj(*w));
    }
    GroupHom phi;
    try {
      phi = make_hom(cq2.q, cq1.q, imgs);
    } catch (const std::exception& ex) {
      throw CertFail(std::string("phi is not a homomorphism: ") + ex.what());
    }
    if (!is_isomorphism(phi))
      throw CertFail("phi is a homomorphism but not an isomorphism");
    r.checks.push_back("phi : G2/Z2 -> G1/Z1 is an isomorphism");

    // (b) exactness counts |M(G_j/Z_j)| = |Z_j| * |M(G_j)|
    std::string prov1, prov2;
    i64 m1 = multiplier_size(g1, cert.m_g1, &prov1);
    i64 m2 = multiplier_size(g2, cert.m_g2, &prov2);
    if (m1 < 0 || m2 < 0) {
      if (!cert.exactness_granted) {
        r.status = CertStatus::NOT_VERIFIABLE;
        r.detail = "multiplier size unavailable for " +
                   std::string(m1 < 0 ? "G1" : "G2") +
                   "; exactness count cannot be checked";
        return r;
      }
      r.checks.push_back(
          "exactness granted structurally; count check skipped (sizes "
          "unavailable)");
    } else {
      i64 q1 = size_of(schur_multiplier(cq1.q));
      i64 q2 = size_of(schur_multiplier(cq2.q));
      if (q1 != cert.z1.order * m1)
        throw CertFail("exactness count fails on side 1: |M(G1/Z1)| = " +
                       std::to_string(q1) + " but |Z1|*|M(G1)| = " +
                       std::to_string(cert.z1.order * m1));
      if (q2 != cert.z2.order * m2)
        throw CertFail("exactness count fails on side 2: |M(G2/Z2)| = " +
                       std::to_string(q2) + " but |Z2|*|M(G2)| = " +
                       std::to_string(cert.z2.order * m2));
      r.checks.push_back("|M(G_j/Z_j)| = |Z_j|*|M(G_j)| on both sides (M " +
                         prov1 + "/" + prov2 + ")");
    }

    // (c) the transgression square commutes over the circle group
    AbelianDual d1(cert.z1), d2(cert.z2);
    if (d1.invariants() != d2.invariants())
      throw CertFail("Z1 and Z2 are not isomorphic");
    i64 expz = d1.exponent();
    for (size_t m = 0; m < d1.invariants().size(); ++m) {
      std::vector<i64> t(d1.invariants().size(), 0);
      t[m] = 1;
      Character chi{d1, t};
      Cocycle pulled = pullback(transgress(chi, cq1), phi);
      // ibar(chi) = chi o i as a character of Z2
      std::vector<i64> t2(d2.invariants().size(), 0);
      for (size_t bm = 0; bm < d2.basis().size(); ++bm) {
        auto c = coords_over(g2, cert.z2_basis, d2.basis()[bm]);
        if (!c) throw CertFail("i: basis element escapes the generators");
        Elt ib = g1->id();
        for (size_t j = 0; j < cert.i_images.size(); ++j)
          ib = g1->mul(ib, g1->pow(cert.i_images[j], (*c)[j]));
        i64 val = chi.eval(ib);  // additive in Z/expz
        i64 step = expz / d2.invariants()[bm];
        if (val % step != 0)
          throw CertFail("i does not transport characters");
        t2[bm] = (val / step) % d2.invariants()[bm];
      }
      Cocycle tra2 = transgress(Character{d2, t2}, cq2);
      if (!is_trivial_over_Cx(cocycle_sub(pulled, tra2)))
        throw CertFail(
            "diagram does not commute over the circle group at generator "
            "character " +
            std::to_string(m + 1));
    }
    r.checks.push_back(
        "transgression square commutes over the circle group on all "
        "generator characters");
    r.status = CertStatus::VERIFIED;
  } catch (const CertFail& f) {
    r.status = CertStatus::FAILED;
    r.detail = f.what;
  }
  return r;
}

namespace {

// Derived subgroup of the subgroup generated by the given elements: normal
// closure, inside that subgroup, of the commutators of its igs.
Subgroup derived_of(const PcGroupPtr& g, const Subgroup& s) {
  std::vector<Elt> comms;
  for (size_t i = 0; i < s.igs.size(); ++i)
    for (size_t j = i + 1; j < s.igs.size(); ++j)
      comms.push_back(g->comm(s.igs[i], s.igs[j]));
  Subgroup d = igs_close(g, comms);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Elt> add;
    for (const Elt& x : d.igs)
      for (const Elt& c : s.igs) {
        Elt y = g->conj(x, c);
        if (!contains(d, y)) add.push_back(y);
      }
    if (!add.empty()) {
      add.insert(add.end(), d.igs.begin(), d.igs.end());
      d = igs_close(g, add);
      grew = true;
    }
  }
  return d;
}

}  // namespace

CertReport verify_central_product_certificate(
    const CentralProductCertificate& cert) {
  CertReport r;
  try {
    const auto &g1 = cert.g1, &g2 = cert.g2;
    if (!g1 || !g2) throw CertFail("certificate groups are not available");
    auto structure = [&](const PcGroupPtr& g, const std::vector<Elt>& fa,
                         const std::vector<Elt>& fb,
                         int side) -> Subgroup {
      for (const Elt& x : fa)
        for (const Elt& y : fb)
          if (!g->is_id(g->comm(x, y)))
            throw CertFail("factors of G" + std::to_string(side) +
                           " do not commute elementwise");
      std::vector<Elt> all = fa;
      all.insert(all.end(), fb.begin(), fb.end());
      if (igs_close(g, all).order != g->order())
        throw CertFail("factors of G" + std::to_string(side) +
                       " do not generate the group");
      Subgroup da = derived_of(g, igs_close(g, fa));
      Subgroup db = derived_of(g, igs_close(g, fb));
      return intersect(da, db);
    };
    Subgroup z1 = structure(g1, cert.fac1a, cert.fac1b, 1);
    Subgroup z2 = structure(g2, cert.fac2a, cert.fac2b, 2);
    r.checks.push_back(
        "central product structure on both sides; Z_j = F_j1' n F_j2'");

    QuotientCertificate qc;
    qc.g1 = g1;
    qc.g2 = g2;
    qc.z1 = z1;
    qc.z2 = z2;
    qc.z2_basis = cert.z2_basis;
    qc.i_images = cert.i_images;
    qc.phi = cert.phi;
    qc.m_g1 = cert.m_g1;
    qc.m_g2 = cert.m_g2;
    qc.exactness_granted = true;
    CertReport inner = verify_quotient_certificate(qc);
    r.checks.insert(r.checks.end(), inner.checks.begin(), inner.checks.end());
    r.status = inner.status;
    r.detail = inner.detail;
  } catch (const CertFail& f) {
    r.status = CertStatus::FAILED;
    r.detail = f.what;
  }
  return r;
}

QuotientCertificate quotient_cert(const CertInst& ci) {
  if (ci.kind != "quotient")
    throw EngineError("certificate is not of quotient kind");
  QuotientCertificate qc;
  qc.g1 = ci.e1->group;
  qc.g2 = ci.e2->group;
  qc.z1 = igs_close(qc.g1, ci.z1_gens);
  qc.z2 = igs_close(qc.g2, ci.z2_gens);
  qc.z2_basis = ci.z2_gens;
  qc.i_images = ci.i_images;
  qc.phi = ci.phi;
  qc.m_g1 = ci.e1->has_h2 ? size_of(ci.e1->expected_h2) : kSizeCompute;
  qc.m_g2 = ci.e2->has_h2 ? size_of(ci.e2->expected_h2) : kSizeCompute;
  return qc;
}

CentralProductCertificate product_cert(const CertInst& ci) {
  if (ci.kind != "centralproduct")
    throw EngineError("certificate is not of central product kind");
  CentralProductCertificate c;
  c.g1 = ci.e1->group;
  c.g2 = ci.e2->group;
  c.fac1a = ci.fac1a;
  c.fac1b = ci.fac1b;
  c.fac2a = ci.fac2a;
  c.fac2b = ci.fac2b;
  c.z2_basis = ci.z2_gens;
  c.i_images = ci.i_images;
  c.phi = ci.phi;
  c.m_g1 = ci.e1->has_h2 ? size_of(ci.e1->expected_h2) : kSizeCompute;
  c.m_g2 = ci.e2->has_h2 ? size_of(ci.e2->expected_h2) : kSizeCompute;
  return c;
}

CentralProductCertificate extraspecial_cert(const CatalogEntry& e1,
                                            const CatalogEntry& e2) {
  if (e1.cp_factors.size() != 2 || e2.cp_factors.size() != 2)
    throw EngineError(
        "extraspecial certificate needs two amalgamated factors (r = 2)");
  CentralProductCertificate c;
  c.g1 = e1.group;
  c.g2 = e2.group;
  c.fac1a = e1.cp_factors[0];
  c.fac1b = e1.cp_factors[1];
  c.fac2a = e2.cp_factors[0];
  c.fac2b = e2.cp_factors[1];
  c.z2_basis = {e2.cp_z};
  c.i_images = {e1.cp_z};
  auto gen_index = [](const PcGroupPtr& g, const Elt& x) {
    int d = g->depth(x);
    if (d >= g->ngens() || !(x == g->gen(d)))
      throw EngineError("amalgam factor generator is not a pc generator");
    return d;
  };
  for (int f = 0; f < 2; ++f) {
    const auto& from = f == 0 ? c.fac2a : c.fac2b;
    const auto& to = f == 0 ? c.fac1a : c.fac1b;
    if (from.size() != to.size())
      throw EngineError("amalgam factors have different generator counts");
    for (size_t t = 0; t + 1 < from.size(); ++t)  // last entry is the centre
      c.phi.push_back({gen_index(c.g2, from[t]), to[t]});
  }
  return c;
}

std::optional<WedderburnType> central_type_shortcut(PcGroupPtr g,
                                                    const Subgroup& z) {
  i64 p;
  int k;
  if (!prime_power(g->order(), &p, &k) || k != 5) return std::nullopt;
  if (z.order <= 1 || !is_central(z)) return std::nullopt;
  if (!subgroup_le(z, derived_subgroup(g))) return std::nullopt;
  auto cq = quotient_central(g, z);
  if (cq.q->order() < p * p) return std::nullopt;
  // exactness by counting
  if (size_of(schur_multiplier(cq.q)) !=
      z.order * size_of(schur_multiplier(g)))
    return std::nullopt;
  // G/Z must not be of central type.  Abelian quotients are of central type
  // exactly when the invariants pair up (A x A shape); nonabelian ones can
  // only be when their order is a square, which we do not try to refute.
  if (derived_subgroup(cq.q).order == 1) {
    auto inv = abelianization(cq.q);
    bool doubled = inv.size() % 2 == 0;
    for (size_t i = 0; doubled && i + 1 < inv.size(); i += 2)
      doubled = inv[i] == inv[i + 1];
    if (doubled) return std::nullopt;
  } else {
    i64 zk = 1;
    int j = 0;
    while (zk < z.order) zk *= p, ++j;
    if ((5 - j) % 2 == 0) return std::nullopt;
  }
  WedderburnType forced;
  forced.blocks[p] = g->order() / (p * p);
  return forced;
}

TgripProfile profile_via_shortcut(PcGroupPtr g, const Subgroup& z) {
  auto forced = central_type_shortcut(g, z);
  if (!forced)
    throw EngineError("forced-type shortcut does not apply to this pair");
  auto m = schur_multiplier(g);
  TgripProfile pr{};
  pr.rep = nullptr;
  if (m.empty())
    pr.z = trivial_subgroup(g);
  else
    pr.z = whole_group(PcGroupBuilder(m).build_derived());
  pr.dual = AbelianDual(pr.z);
  pr.kernel_invariants = pr.dual.invariants();
  WedderburnType ordinary{irreducible_degrees(g)};
  for (i64 idx = 0; idx < pr.dual.size(); ++idx) {
    Character chi = character_at(pr.dual, idx);
    pr.types[chi.t] = chi.order() == 1 ? ordinary : *forced;
  }
  return pr;
}

TgripProfile profile_via_cover(PcGroupPtr g) {
  auto sc = schur_cover(std::move(g));
  return profile_via_repgroup(sc.e, sc.z);
}

TgripProfile profile_product(const TgripProfile& a, const TgripProfile& b) {
  i64 na = a.at(trivial_character(a.dual)).total();
  i64 nb = b.at(trivial_character(b.dual)).total();
  if (std::gcd(na, nb) != 1)
    throw EngineError("profile_product: factor orders share a prime");
  const auto &ia = a.kernel_invariants, &ib = b.kernel_invariants;
  std::vector<i64> rel = ia;
  rel.insert(rel.end(), ib.begin(), ib.end());
  TgripProfile pr{};
  pr.rep = nullptr;
  if (rel.empty())
    pr.z = trivial_subgroup(a.dual.group().g);
  else
    pr.z = whole_group(PcGroupBuilder(rel).build_derived());
  pr.dual = AbelianDual(pr.z);
  pr.kernel_invariants = pr.dual.invariants();
  int ka = (int)ia.size(), kb = (int)ib.size();
  i64 expk = pr.dual.exponent();
  const auto& kg = pr.z.g;
  for (i64 idx = 0; idx < pr.dual.size(); ++idx) {
    Character chi = character_at(pr.dual, idx);
    std::vector<i64> ta(ka), tb(kb);
    for (int j = 0; j < ka + kb; ++j) {
      i64 v = chi.eval(kg->gen(j));
      i64 d = j < ka ? ia[j] : ib[j - ka];
      i64 step = expk / d;
      if (v % step != 0)
        throw std::logic_error("profile_product: character value off-grid");
      (j < ka ? ta[j] : tb[j - ka]) = (v / step) % d;
    }
    pr.types[chi.t] =
        tensor_type(a.at(Character{a.dual, ta}), b.at(Character{b.dual, tb}));
  }
  return pr;
}

TgripVerdict product_compose(const std::vector<TgripVerdict>& factors) {
  TgripVerdict v;
  for (const auto& f : factors)
    if (f.status == TgripStatus::NOT_EQUIVALENT) {
      v.status = TgripStatus::NOT_EQUIVALENT;
      v.obstruction = "coprime factor obstruction: " + f.obstruction;
      return v;
    }
  for (const auto& f : factors)
    if (f.status == TgripStatus::UNKNOWN) {
      v.status = TgripStatus::UNKNOWN;
      v.note = "a coprime factor comparison is unresolved";
      return v;
    }
  v.status = TgripStatus::EQUIVALENT;
  v.note = "composed from " + std::to_string(factors.size()) +
           " coprime factor comparisons";
  return v;
}

std::optional<TgripProfile> profile_of_entry(const CatalogEntry& e) {
  if (e.sflag) return std::nullopt;
  static std::map<std::string, std::optional<TgripProfile>> cache;
  std::string key =
      e.name + "|" + std::to_string(e.p) + "|" + std::to_string(e.r);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::optional<TgripProfile> out;
  if (e.rep_group)
    out = profile_via_repgroup(e.rep_group, e.rep_kernel);
  else if (e.has_shortcut && e.group) {
    try {
      out = profile_via_shortcut(e.group, e.shortcut_z);
    } catch (const EngineError&) {
      out = std::nullopt;
    }
  }
  if (!out && e.group && e.group->order() <= kDefaultSearchBound)
    out = profile_via_cover(e.group);
  cache.emplace(key, out);
  return out;
}

namespace {

bool registry_cert_verifies(const Catalog& c, const CatalogEntry& a,
                            const CatalogEntry& b) {
  i64 r = a.uses_r ? a.r : b.r;
  for (const auto& ci : c.certs_for(a.name, b.name, a.p, r)) {
    CertReport rep = ci.kind == "quotient"
                         ? verify_quotient_certificate(quotient_cert(ci))
                         : verify_central_product_certificate(product_cert(ci));
    if (rep.ok()) return true;
  }
  return false;
}

std::vector<std::string> cert_partners(const Catalog& c,
                                       const std::string& name) {
  std::vector<std::string> out;
  for (const auto& ct : c.certs()) {
    if (ct.g1 == name) out.push_back(ct.g2);
    if (ct.g2 == name) out.push_back(ct.g1);
  }
  return out;
}

}  // namespace

TgripVerdict compare_entries(const Catalog& c, const CatalogEntry& a,
                             const CatalogEntry& b, i64 bound) {
  TgripVerdict v;
  if (a.sflag || b.sflag) {
    v.status = TgripStatus::UNKNOWN;
    v.note = "equivalence left unresolved: no representation-group witness "
             "for " +
             std::string(a.sflag ? a.name : b.name);
    return v;
  }
  if (a.p != b.p) {
    v.status = TgripStatus::NOT_EQUIVALENT;
    v.obstruction = "groups live at different primes";
    return v;
  }
  if (a.name == b.name && a.r == b.r) {
    v.status = TgripStatus::EQUIVALENT;
    v.note = "identical catalog entries";
    for (size_t i = 0; i < a.expected_h2.size(); ++i) {
      std::vector<i64> e(a.expected_h2.size(), 0);
      e[i] = 1;
      v.witness.push_back(e);
    }
    v.witness_mod = a.expected_h2;
    return v;
  }
  auto pa = profile_of_entry(a), pb = profile_of_entry(b);
  if (pa && pb) {
    v = tgrip_compare(*pa, *pb, bound);
    if (v.status != TgripStatus::UNKNOWN) return v;
  }
  // registry certificates: direct, then one hop through a shared partner
  if (registry_cert_verifies(c, a, b)) {
    TgripVerdict w;
    w.status = TgripStatus::EQUIVALENT;
    w.note = "verified registry certificate";
    return w;
  }
  auto linked = [&](const CatalogEntry& x, const CatalogEntry& t) {
    if (registry_cert_verifies(c, x, t)) return true;
    auto px = profile_of_entry(x), pt = profile_of_entry(t);
    return px && pt &&
           tgrip_compare(*px, *pt, bound).status == TgripStatus::EQUIVALENT;
  };
  std::vector<std::string> hops = cert_partners(c, a.name);
  for (const auto& tn : cert_partners(c, b.name)) hops.push_back(tn);
  for (const auto& tn : hops) {
    if (!c.has(tn)) continue;
    try {
      const CatalogEntry& t = c.get(tn, a.p, 1);
      if (t.sflag) continue;
      if (linked(a, t) && linked(t, b)) {
        TgripVerdict w;
        w.status = TgripStatus::EQUIVALENT;
        w.note = "chained through " + tn + " via registry certificates";
        return w;
      }
    } catch (const CatalogError&) {
      continue;
    }
  }
  if (!pa || !pb) {
    const CatalogEntry& miss = !pa ? a : b;
    if (a.has_h2 && b.has_h2 && a.expected_h2 != b.expected_h2) {
      v.status = TgripStatus::NOT_EQUIVALENT;
      v.obstruction = "declared multiplier invariants differ (registry "
                      "expectation): " +
                      inv_str(a.expected_h2) + " vs " + inv_str(b.expected_h2);
      return v;
    }
    auto oa = a.expects.find("ordinary");
    auto ob = b.expects.find("ordinary");
    if (oa != a.expects.end() && ob != b.expects.end() &&
        oa->second != ob->second) {
      v.status = TgripStatus::NOT_EQUIVALENT;
      v.obstruction = "declared ordinary algebras differ (registry "
                      "expectation): " +
                      oa->second.str() + " vs " + ob->second.str();
      return v;
    }
    v.status = TgripStatus::UNKNOWN;
    v.note = "no computable profile for " + miss.name +
             "; declared invariants agree where available";
    return v;
  }
  return v;  // the profile comparison's UNKNOWN carries its note
}

}  // namespace tgrip
