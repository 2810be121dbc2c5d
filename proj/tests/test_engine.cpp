#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catalog.hpp"
#include "engine.hpp"

using namespace tgrip;

namespace {

const CatalogEntry& ent(const std::string& name, i64 p = 5, i64 r = 1) {
  return Catalog::builtin().get(name, p, r);
}

const TgripProfile& prof(const std::string& name, i64 p = 5, i64 r = 1) {
  auto po = profile_of_entry(ent(name, p, r));
  REQUIRE(po.has_value());
  // profile_of_entry caches by entry, so the reference stays valid
  static std::map<std::string, TgripProfile> keep;
  return keep.emplace(name + "@" + std::to_string(p), *po).first->second;
}

TgripVerdict cmp(const std::string& a, const std::string& b, i64 ra = 1,
                 i64 rb = 1) {
  const Catalog& c = Catalog::builtin();
  return compare_entries(c, c.get(a, 5, ra), c.get(b, 5, rb));
}

// The one quotient certificate of the Phi9 pair at the given parameter.
QuotientCertificate phi9_cert(i64 r) {
  auto cis =
      Catalog::builtin().certs_for("Phi9(2111)a", "Phi9(2111)br", 5, r);
  REQUIRE(cis.size() == 1);
  return quotient_cert(cis[0]);
}

}  // namespace

TEST_CASE("a profile compared with itself") {
  const TgripProfile& pr = prof("Phi2(32)a1");
  TgripVerdict v = tgrip_compare(pr, pr);
  CHECK(v.status == TgripStatus::EQUIVALENT);
  CHECK(v.witness_mod == std::vector<i64>{5});
  REQUIRE(v.witness.size() == 1);
  CHECK(v.witness[0] == std::vector<i64>{1});  // identity on the one generator
  CHECK(v.obstruction.empty());

  auto j = verdict_json(v);
  CHECK(j["status"] == "EQUIVALENT");
  CHECK(j["witness"][0][0] == 1);
}

TEST_CASE("verdicts do not depend on the argument order") {
  const TgripProfile& a = prof("Phi2(32)a1");
  const TgripProfile& b = prof("Phi2(32)a2");
  TgripVerdict v1 = tgrip_compare(a, b);
  TgripVerdict v2 = tgrip_compare(b, a);
  CHECK(v1.status == TgripStatus::EQUIVALENT);
  CHECK(v2.status == TgripStatus::EQUIVALENT);
  // the two witnesses are mutually inverse unit maps on a Z/5 line
  REQUIRE(v1.witness.size() == 1);
  REQUIRE(v2.witness.size() == 1);
  i64 k1 = v1.witness[0][0], k2 = v2.witness[0][0];
  CHECK((k1 * k2) % 5 == 1);
}

TEST_CASE("equivalence inside the order-3125 classes") {
  // one-generator kernels
  CHECK(cmp("Phi2(32)a1", "Phi2(32)a2").status == TgripStatus::EQUIVALENT);
  // two-generator kernels, including the forced-type member
  for (const char* other : {"Phi2(311)b", "Phi2(311)c", "Phi2(221)b"})
    CHECK(cmp("Phi2(311)a", other).status == TgripStatus::EQUIVALENT);
  CHECK(cmp("Phi3(2111)d", "Phi3(2111)e").status == TgripStatus::EQUIVALENT);
  // three-generator kernels (order-125 character groups)
  CHECK(cmp("Phi2(221)a", "Phi2(221)d").status == TgripStatus::EQUIVALENT);
  // across families with matching profiles
  CHECK(cmp("Phi6(2111)a", "Phi9(2111)a").status == TgripStatus::EQUIVALENT);
}

TEST_CASE("certificate-backed equivalence reaches entries without covers") {
  // direct registry certificate, both parameter values
  for (i64 r : {1, 2}) {
    TgripVerdict v = cmp("Phi9(2111)a", "Phi9(2111)br", 1, r);
    CHECK(v.status == TgripStatus::EQUIVALENT);
    CHECK(v.note.find("certificate") != std::string::npos);
  }
  // one hop: profile equality to Phi9(2111)a, then its certificate
  CHECK(cmp("Phi6(2111)a", "Phi9(2111)br", 1, 2).status ==
        TgripStatus::EQUIVALENT);
  // the two parameter values connect through the shared base entry
  CHECK(cmp("Phi9(2111)br", "Phi9(2111)br", 1, 2).status ==
        TgripStatus::EQUIVALENT);
}

TEST_CASE("obstructions name the violated invariant") {
  TgripVerdict v = cmp("Phi2(32)a1", "Phi2(311)a");
  CHECK(v.status == TgripStatus::NOT_EQUIVALENT);
  CHECK(v.obstruction.find("invariant factors") != std::string::npos);
  CHECK(v.witness.empty());

  v = cmp("ESp", "ESp2");  // order 125: multipliers (5,5) and trivial
  CHECK(v.status == TgripStatus::NOT_EQUIVALENT);
  CHECK(v.obstruction.find("(5,5) vs 1") != std::string::npos);

  v = cmp("Phi2(32)a1", "Phi6(2111)a");  // same multiplier, ordinary differs
  CHECK(v.status == TgripStatus::NOT_EQUIVALENT);
  CHECK(v.obstruction.find("ordinary") != std::string::npos);

  v = compare_entries(Catalog::builtin(), ent("ESp", 3), ent("ESp", 5));
  CHECK(v.status == TgripStatus::NOT_EQUIVALENT);
  CHECK(v.obstruction.find("primes") != std::string::npos);
}

TEST_CASE("a bounded search never reports non-equivalence") {
  const TgripProfile& a = prof("Phi2(32)a1");
  const TgripProfile& b = prof("Phi2(32)a2");
  TgripVerdict v = tgrip_compare(a, b, /*bound=*/1);
  CHECK(v.status == TgripStatus::UNKNOWN);
  CHECK(v.note.find("search bound") != std::string::npos);
  CHECK(v.obstruction.empty());
  CHECK(v.witness.empty());
}

TEST_CASE("deliberately open entries stay open") {
  for (const char* s : {"Phi4(221)b", "Phi4(221)f0", "Phi6(11111)"}) {
    TgripVerdict v = cmp(s, s);
    CHECK(v.status == TgripStatus::UNKNOWN);
    CHECK(v.note.find(s) != std::string::npos);
  }
  CHECK(cmp("Phi4(221)b", "Phi2(311)a").status == TgripStatus::UNKNOWN);
}

TEST_CASE("expectation-only entries compare by declared invariants") {
  // (5,25) against trivial: declared multipliers differ
  TgripVerdict v = cmp("Phi2(221)c", "Phi2(41)");
  CHECK(v.status == TgripStatus::NOT_EQUIVALENT);
  CHECK(v.obstruction.find("registry expectation") != std::string::npos);
  // matching declarations but no presentation on either side: left open
  v = cmp("Phi2(2111)a", "Phi2(2111)b");
  CHECK(v.status == TgripStatus::UNKNOWN);
  CHECK(v.note.find("no computable profile") != std::string::npos);
}

TEST_CASE("quotient certificates from the registry verify") {
  const Catalog& c = Catalog::builtin();
  auto cis = c.certs_for("Phi12(214)b", "Phi12(214)e", 5);
  REQUIRE(cis.size() == 1);
  CertReport r = verify_quotient_certificate(quotient_cert(cis[0]));
  CHECK(r.status == CertStatus::VERIFIED);
  CHECK(r.checks.size() == 5);
  CHECK(r.ok());

  for (i64 rr : {1, 2}) {
    CertReport q = verify_quotient_certificate(phi9_cert(rr));
    INFO("r = ", rr, ": ", q.detail);
    CHECK(q.status == CertStatus::VERIFIED);
  }

  auto j = report_json(r);
  CHECK(j["status"] == "VERIFIED");
  CHECK(j["checks"].size() == 5);
}

TEST_CASE("a group certifies against itself with identity maps") {
  QuotientCertificate qc = phi9_cert(1);
  QuotientCertificate self;
  self.g1 = self.g2 = qc.g1;
  self.z1 = self.z2 = qc.z1;
  self.z2_basis = qc.z1.igs;
  self.i_images = qc.z1.igs;
  for (int i = 0; i < qc.g1->ngens(); ++i)
    self.phi.push_back({i, qc.g1->gen(i)});
  CHECK(verify_quotient_certificate(self).status == CertStatus::VERIFIED);
}

TEST_CASE("certificate verification distinguishes failure from missing data") {
  QuotientCertificate qc = phi9_cert(1);

  SUBCASE("missing multiplier sizes are notverifiable, not false") {
    qc.m_g1 = kSizeMissing;
    CertReport r = verify_quotient_certificate(qc);
    CHECK(r.status == CertStatus::NOT_VERIFIABLE);
    CHECK(!r.ok());
    CHECK(r.detail.find("unavailable") != std::string::npos);
  }
  SUBCASE("granted exactness bridges missing sizes") {
    qc.m_g1 = qc.m_g2 = kSizeMissing;
    qc.exactness_granted = true;
    CHECK(verify_quotient_certificate(qc).status == CertStatus::VERIFIED);
  }
  SUBCASE("wrong declared sizes fail the count") {
    qc.m_g1 = 125;
    CertReport r = verify_quotient_certificate(qc);
    CHECK(r.status == CertStatus::FAILED);
    CHECK(r.detail.find("count") != std::string::npos);
  }
  SUBCASE("a rescaled kernel map breaks the diagram") {
    REQUIRE(qc.i_images.size() == 1);
    qc.i_images[0] = qc.g1->pow(qc.i_images[0], 2);
    CertReport r = verify_quotient_certificate(qc);
    CHECK(r.status == CertStatus::FAILED);
    CHECK(r.detail.find("commute") != std::string::npos);
  }
  SUBCASE("a collapsed quotient map is not an isomorphism") {
    for (auto& [gi, w] : qc.phi) w = qc.g1->id();
    CertReport r = verify_quotient_certificate(qc);
    CHECK(r.status == CertStatus::FAILED);
    CHECK(r.detail.find("isomorphism") != std::string::npos);
  }
}

TEST_CASE("central product certificates verify") {
  const Catalog& c = Catalog::builtin();
  auto cis = c.certs_for("Phi5(214)c", "Phi5(2211)b", 5);
  REQUIRE(cis.size() == 1);
  CertReport r = verify_central_product_certificate(product_cert(cis[0]));
  INFO(r.detail);
  CHECK(r.status == CertStatus::VERIFIED);
  CHECK(r.checks.size() == 6);  // structure check + the delegated five
}

TEST_CASE("the amalgamated extraspecial pairs certify at both primes") {
  const Catalog& c = Catalog::builtin();
  for (i64 p : {3, 5}) {
    CentralProductCertificate cert =
        extraspecial_cert(c.get("ESp", p, 2), c.get("ESp2", p, 2));
    CertReport r = verify_central_product_certificate(cert);
    INFO("p = ", p, ": ", r.detail);
    CHECK(r.status == CertStatus::VERIFIED);
  }
}

TEST_CASE("central product structure checks catch wrong factors") {
  const Catalog& c = Catalog::builtin();
  CentralProductCertificate cert =
      extraspecial_cert(c.get("ESp", 5, 2), c.get("ESp2", 5, 2));

  SUBCASE("factors that do not span") {
    cert.fac1a.pop_back();
    cert.fac1a.pop_back();  // drop y1 and the centre from the first factor
    CertReport r = verify_central_product_certificate(cert);
    CHECK(r.status == CertStatus::FAILED);
    CHECK(r.detail.find("generate") != std::string::npos);
  }
  SUBCASE("factors that do not commute") {
    // move the second factor's y across: [x2, y2] = z breaks elementwise
    // commutation between the lists
    cert.fac1a.push_back(cert.fac1b[1]);
    CertReport r = verify_central_product_certificate(cert);
    CHECK(r.status == CertStatus::FAILED);
    CHECK(r.detail.find("commute") != std::string::npos);
  }
}

TEST_CASE("the forced-type route matches the computed one") {
  const CatalogEntry& e311 = ent("Phi2(311)a");
  auto forced = central_type_shortcut(e311.group, derived_subgroup(e311.group));
  REQUIRE(forced.has_value());
  CHECK(forced->blocks == DegreeMultiset{{5, 125}});

  // dual route: the representation-group profile gives the same type on
  // every nontrivial class
  const TgripProfile& full = prof("Phi2(311)a");
  for (const auto& [t, ty] : full.types) {
    if (Character{full.dual, t}.order() == 1) continue;
    CHECK(ty == *forced);
  }

  // the declared witness on the entry that has no representation group
  const CatalogEntry& e221b = ent("Phi2(221)b");
  auto fb = central_type_shortcut(e221b.group, e221b.shortcut_z);
  REQUIRE(fb.has_value());
  CHECK(*fb == *forced);
}

TEST_CASE("the forced-type route refuses out-of-scope inputs") {
  // central-type quotient: extraspecial of order p^5 over its centre
  const CatalogEntry& es = ent("ESp", 5, 2);
  CHECK(!central_type_shortcut(es.group, derived_subgroup(es.group)));
  // wrong order
  const CatalogEntry& small = ent("ESp", 5, 1);
  CHECK(!central_type_shortcut(small.group, derived_subgroup(small.group)));
  CHECK_THROWS_AS(
      profile_via_shortcut(es.group, derived_subgroup(es.group)),
      EngineError);
}

TEST_CASE("covering-group profiles at oracle scale") {
  // C_3 x C_3: one-dimensional ordinary classes, simple twisted ones
  auto pr = profile_via_cover(parse_presentation("gens: x(p) y(p)", 3));
  CHECK(pr.kernel_invariants == std::vector<i64>{3});
  CHECK(pr.at(trivial_character(pr.dual)).blocks == DegreeMultiset{{1, 9}});
  for (i64 i = 1; i < 3; ++i)
    CHECK(pr.at(character_at(pr.dual, i)).blocks == DegreeMultiset{{3, 1}});

  // cyclic groups cover themselves; the profile is the plain group algebra
  auto cy = profile_via_cover(parse_presentation("gens: x(p^2)", 5));
  CHECK(cy.kernel_invariants.empty());
  CHECK(cy.at(trivial_character(cy.dual)).blocks == DegreeMultiset{{1, 25}});
}

TEST_CASE("coprime products compose and refuse") {
  const Catalog& c = Catalog::builtin();
  auto p27a = profile_via_cover(c.get("ESp", 3, 1).group);
  auto p27b = profile_via_cover(c.get("ESp2", 3, 1).group);
  auto pc2 = profile_via_cover(PcGroupBuilder({2}).build());

  auto q1 = profile_product(p27a, pc2);
  auto q2 = profile_product(p27b, pc2);
  CHECK(q1.at(trivial_character(q1.dual)).total() == 54);
  TgripVerdict v = tgrip_compare(q1, q2);
  CHECK(v.status == TgripStatus::NOT_EQUIVALENT);  // (3,3) vs trivial
  CHECK(tgrip_compare(q1, profile_product(p27a, pc2)).status ==
        TgripStatus::EQUIVALENT);

  CHECK_THROWS_AS(profile_product(p27a, p27b), EngineError);

  TgripVerdict ok, open, bad;
  ok.status = TgripStatus::EQUIVALENT;
  open.status = TgripStatus::UNKNOWN;
  bad.status = TgripStatus::NOT_EQUIVALENT;
  bad.obstruction = "x";
  CHECK(product_compose({ok, ok}).status == TgripStatus::EQUIVALENT);
  CHECK(product_compose({ok, open}).status == TgripStatus::UNKNOWN);
  CHECK(product_compose({open, bad}).status == TgripStatus::NOT_EQUIVALENT);
}

TEST_CASE("every witnessed verdict survives pointwise re-verification") {
  // re-run the witness check by hand for a two-generator kernel pair
  const TgripProfile& a = prof("Phi2(311)a");
  const TgripProfile& b = prof("Phi2(311)b");
  TgripVerdict v = tgrip_compare(a, b);
  REQUIRE(v.status == TgripStatus::EQUIVALENT);
  REQUIRE(v.witness.size() == 2);
  for (i64 idx = 0; idx < a.dual.size(); ++idx) {
    Character chi = character_at(a.dual, idx);
    Character img = trivial_character(b.dual);
    for (size_t j = 0; j < v.witness.size(); ++j)
      img = char_mul(img,
                     char_pow(Character{b.dual, v.witness[j]}, chi.t[j]));
    CHECK(b.at(img) == a.at(chi));
  }
}
