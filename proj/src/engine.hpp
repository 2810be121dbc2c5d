// Deciding and certifying twisted-group-ring equivalence.
//
// Two groups are equivalent when some isomorphism of their second cohomology
// groups matches twisted block structures class by class.  With profiles in
// hand this is a finite search over character-group isomorphisms; without
// them, sufficient criteria pass through verified certificates: a common
// central quotient with a commuting transgression square, or a central
// product decomposition where the square is granted structurally.
//
// Verdict discipline: NOT_EQUIVALENT is only ever issued on an invariant
// obstruction (multiplier invariants, ordinary algebra, signature multiset);
// a fruitless bounded search reports UNKNOWN.  Certificates report a third
// state, NOT_VERIFIABLE, when a required size is unavailable, which is
// deliberately distinct from a failed check.
#pragma once

#include <optional>

#include "catalog.hpp"
#include "wedderburn.hpp"

namespace tgrip {

struct EngineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class TgripStatus { EQUIVALENT, NOT_EQUIVALENT, UNKNOWN };
const char* to_string(TgripStatus s);

struct TgripVerdict {
  TgripStatus status = TgripStatus::UNKNOWN;
  // When EQUIVALENT through a direct search: row i holds the coordinates, in
  // the invariant basis of the second character group, of the image of the
  // i-th basis character of the first; witness_mod lists the shared invariant
  // factors.  Certificate-derived equivalences carry no matrix.
  std::vector<std::vector<i64>> witness;
  std::vector<i64> witness_mod;
  std::string obstruction;  // set exactly when NOT_EQUIVALENT
  std::string note;         // UNKNOWN cause or route information
};

inline constexpr i64 kDefaultSearchBound = 625;  // character-group order cap

// Exhaustive profile comparison: quick invariant rejects, then a signature-
// pruned backtracking search for a character-group isomorphism matching the
// profiles pointwise.  Symmetric and reflexive.
TgripVerdict tgrip_compare(const TgripProfile& a, const TgripProfile& b,
                           i64 bound = kDefaultSearchBound);

nlohmann::ordered_json verdict_json(const TgripVerdict& v);

enum class CertStatus { VERIFIED, FAILED, NOT_VERIFIABLE };
const char* to_string(CertStatus s);

struct CertReport {
  CertStatus status = CertStatus::NOT_VERIFIABLE;
  std::vector<std::string> checks;  // sub-checks that passed, in order
  std::string detail;               // cause when not VERIFIED
  bool ok() const { return status == CertStatus::VERIFIED; }
};

nlohmann::ordered_json report_json(const CertReport& r);

// Common central quotient: central subgroups Z_j <= G_j, an isomorphism
// i : Z_2 -> Z_1 given on an independent generating set, and an isomorphism
// phi : G_2/Z_2 -> G_1/Z_1 given by images of the parent generators of G_2.
// Multiplier sizes: >= 1 means declared (registry expectation), kSizeCompute
// asks for the tail-space computation, kSizeMissing makes the count check
// unverifiable.
inline constexpr i64 kSizeCompute = -1;
inline constexpr i64 kSizeMissing = -2;

struct QuotientCertificate {
  PcGroupPtr g1, g2;
  Subgroup z1, z2;
  std::vector<Elt> z2_basis;             // independent generators of z2
  std::vector<Elt> i_images;             // their images in g1
  std::vector<std::pair<int, Elt>> phi;  // g2 generator index -> word in g1
  i64 m_g1 = kSizeCompute, m_g2 = kSizeCompute;
  bool exactness_granted = false;  // count check advisory, not required
};

// (a) Z_j <= G_j' on both sides (transgressions injective); maps are
// isomorphisms; (b) |M(G_j/Z_j)| = |Z_j| * |M(G_j)| unless granted;
// (c) the transgression square commutes over the circle group on every
// generator character of Hom(Z_1).
CertReport verify_quotient_certificate(const QuotientCertificate& cert);

// Central products G = A.B, H = C.D with elementwise-commuting normal
// factors; the amalgamated subgroups Z_1 = A' n B', Z_2 = C' n D' are
// computed, the rest delegates to the quotient certificate with the count
// check advisory.
struct CentralProductCertificate {
  PcGroupPtr g1, g2;
  std::vector<Elt> fac1a, fac1b;  // generator lists of the two factors of g1
  std::vector<Elt> fac2a, fac2b;
  std::vector<Elt> z2_basis, i_images;
  std::vector<std::pair<int, Elt>> phi;
  i64 m_g1 = kSizeCompute, m_g2 = kSizeCompute;
};

CertReport verify_central_product_certificate(
    const CentralProductCertificate& cert);

// Registry certificate instances, converted for verification.
QuotientCertificate quotient_cert(const CertInst& ci);
CentralProductCertificate product_cert(const CertInst& ci);
// The extraspecial amalgam pair: factors and amalgamated centre are read off
// the builtin construction data of the two entries.
CentralProductCertificate extraspecial_cert(const CatalogEntry& e1,
                                            const CatalogEntry& e2);

// Forced block type: for |G| = p^5, Z <= G' n Z(G) with the exactness count
// holding and G/Z certified not of central type, every nontrivial class
// twists to p^3 blocks of size p.  nullopt when any hypothesis cannot be
// established.
std::optional<WedderburnType> central_type_shortcut(PcGroupPtr g,
                                                    const Subgroup& z);

// Profile with the forced type on every nontrivial class and the ordinary
// degrees on the trivial one, keyed over an abstract character group with
// the multiplier's invariants.  Throws EngineError when the shortcut does
// not apply.  The result has no covering group attached.
TgripProfile profile_via_shortcut(PcGroupPtr g, const Subgroup& z);

// Profile through a computed covering group (schur_cover).
TgripProfile profile_via_cover(PcGroupPtr g);

// Profile of a coprime direct product: character groups multiply, types
// tensor.  Throws EngineError when the factor orders share a prime.
TgripProfile profile_product(const TgripProfile& a, const TgripProfile& b);

// Verdict for a coprime direct product from per-factor verdicts: EQUIVALENT
// iff all factors are, NOT_EQUIVALENT as soon as one is.
TgripVerdict product_compose(const std::vector<TgripVerdict>& factors);

// Best available profile for a registry entry: attached representation
// group, forced-type shortcut, or a computed cover for small orders; nullopt
// for the unresolved set and for entries with no computable route.
std::optional<TgripProfile> profile_of_entry(const CatalogEntry& e);

// Name-level comparison: profile search first, then registry certificates,
// including one-hop chaining through a common certificate partner.  Entries
// in the unresolved set always produce UNKNOWN.
TgripVerdict compare_entries(const Catalog& c, const CatalogEntry& a,
                             const CatalogEntry& b,
                             i64 bound = kDefaultSearchBound);

}  // namespace tgrip
