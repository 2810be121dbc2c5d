#pragma once
// Registry of named group presentations, templated over an odd prime p (and
// an optional small integer parameter r).  Each entry instantiates to a
// concrete pc group on demand; instantiation immediately runs the checks
// declared alongside the presentation -- order, abelianisation, centre size,
// Schur multiplier invariants, and for representation groups the centrality
// of the declared kernel plus the isomorphism of the central quotient back
// onto the base group.  A failed cross-check never "repairs" the data: the
// discrepancy is recorded in the entry's flag list and the entry is returned
// as declared, so callers can distinguish "verified" from "as printed".
//
// Text format (one block per entry, `end` terminated, `#` comments):
//
//   group Phi2(32)a1
//   family: Phi2
//   h2: p
//   gens: a(p^2) a1(p^2) a2(p)
//   pow a = a2
//   comm a1 a = a2
//   expects: nontrivial = p x [p^2]
//   end
//
// Exponents and sizes are arithmetic expressions in p and r.  `comm x y = w`
// accepts the commutator in either argument order and w may be any word, so
// presentations can be transcribed as printed.  Representation groups are
// separate blocks carrying `repgroup-of:`, `kernel:` and `corr:` (base
// generator -> word in the representation group, modulo the kernel).
// Certificate blocks (`cert quotient A B`, `cert centralproduct A B`) hold
// the identification data consumed by the comparison engine.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "subgroup.hpp"
#include "wedderburn.hpp"

namespace tgrip {

struct CatalogError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ------------------------------------------------------------ templates ---
// Arithmetic over the template variables: literals, p, r, + - * ^, parens.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;
struct Expr {
  char op = 'n';  // 'n' literal, 'p', 'r', or one of + - * ^
  i64 num = 0;
  ExprPtr lhs, rhs;
  i64 eval(i64 p, i64 r) const;
};

// Parses a standalone expression ("p^2", "2*p^4-p^3-p", ...).
ExprPtr parse_expr(const std::string& text);

// One factor of a word template: generator name and exponent expression.
struct FactorT {
  std::string gen;
  ExprPtr exp;
};
using WordT = std::vector<FactorT>;

struct GenT {
  std::string name;
  ExprPtr relorder;
};

struct RelT {
  bool is_pow = false;  // pow a = w    vs    comm a b = w
  std::string a, b;
  WordT rhs;
};

struct ExpectT {
  std::string selector;  // "ordinary" | "nontrivial" | ...
  std::vector<std::pair<ExprPtr, ExprPtr>> terms;  // (multiplicity, degree)
};

struct EntryT {
  std::string name, family, equiv, note, repgroup_of, builtin;
  i64 minp = 3;
  bool external = false;  // expectation-only: no presentation carried
  bool sflag = false;     // left unresolved by the classification
  bool uses_r = false;
  std::vector<GenT> gens;
  std::vector<RelT> rels;
  std::vector<WordT> kernel;             // representation groups only
  std::vector<std::pair<std::string, WordT>> corr;
  std::vector<WordT> shortcut;           // central witness for forced type
  std::optional<std::vector<ExprPtr>> h2;  // ascending invariant factors
  ExprPtr order, center;                 // optional size checks
  std::optional<std::vector<ExprPtr>> abelianization;
  std::vector<ExpectT> expects;
};

struct CertT {
  std::string kind;  // "quotient" | "centralproduct"
  std::string g1, g2;
  std::vector<WordT> z1, z2;      // quotient: central subgroup generators
  std::vector<WordT> fac1, fac2;  // centralproduct: two '|'-separated lists
  int fac1_split = 0, fac2_split = 0;  // index where the second factor starts
  std::vector<WordT> i_images;    // Z2 generators -> words in G1
  std::vector<std::pair<std::string, WordT>> phi;  // G2 gen -> word in G1
};

// ------------------------------------------------- instantiated entries ---
struct CatalogEntry {
  std::string name, family, equiv, note, repgroup_of;
  i64 p = 0, r = 1, minp = 3;
  bool external = false, sflag = false, uses_r = false;

  PcGroupPtr group;      // null iff external (or the build itself failed)
  PcGroupPtr rep_group;  // attached representation group, when declared
  std::string rep_name;  // registry name of the attached representation group
  Subgroup rep_kernel;   // central kernel inside rep_group
  std::vector<Elt> corr_images;  // per base generator: lift in rep_group

  Subgroup shortcut_z;   // declared witness for the forced-type route
  bool has_shortcut = false;

  bool has_h2 = false;
  std::vector<i64> expected_h2;  // ascending invariant factors; {} = trivial

  // central-product scaffolding (extraspecial families built via amalgams)
  std::vector<std::vector<Elt>> cp_factors;
  Elt cp_z;

  std::map<std::string, WedderburnType> expects;
  std::vector<std::string> flags;  // cross-check failures, verbatim

  bool has_presentation() const { return group != nullptr; }
};

// Instantiated certificate data; hypothesis verification lives in the
// comparison engine, the catalog only evaluates the declared words.
struct CertInst {
  std::string kind, g1, g2;
  const CatalogEntry* e1 = nullptr;
  const CatalogEntry* e2 = nullptr;
  std::vector<Elt> z1_gens, z2_gens;    // quotient kind
  std::vector<Elt> fac1a, fac1b;        // centralproduct kind: factor gens
  std::vector<Elt> fac2a, fac2b;
  std::vector<Elt> i_images;            // in G1, one per z2/fac-centre gen
  std::vector<std::pair<int, Elt>> phi;  // (G2 generator index, image in G1)
};

// -------------------------------------------------------------- catalog ---
class Catalog {
 public:
  // The built-in registry (parsed once, shared).
  static const Catalog& builtin();
  // Parses a registry from text; throws CatalogError on malformed input.
  static Catalog from_text(const std::string& text);

  bool has(const std::string& name) const;
  const EntryT& entry_template(const std::string& name) const;

  // Instantiates (and caches) the named entry at the given prime.  Throws
  // CatalogError for unknown names, non-prime p, or p below the entry's
  // floor; soft cross-check failures land in the returned entry's flags.
  const CatalogEntry& get(const std::string& name, i64 p, i64 r = 1) const;

  std::vector<std::string> names() const;          // registry order
  std::vector<std::string> with_rep_group() const; // base entries only
  const std::vector<CertT>& certs() const { return certs_; }
  // Certificates covering the named pair (either order), instantiated.
  std::vector<CertInst> certs_for(const std::string& g1,
                                  const std::string& g2, i64 p,
                                  i64 r = 1) const;

 private:
  std::vector<std::string> order_;
  std::map<std::string, EntryT> entries_;
  std::map<std::string, std::string> rep_of_;  // base name -> rep entry name
  std::vector<CertT> certs_;
  mutable std::map<std::string, std::shared_ptr<CatalogEntry>> cache_;

  const CatalogEntry& instantiate(const std::string& name, i64 p, i64 r,
                                  bool attach_rep) const;
  void finish(const EntryT& t, const std::shared_ptr<CatalogEntry>& ep, i64 p,
              i64 r, bool attach_rep) const;
};

// Parses a one-off presentation ("gens: x(p) y(p) z(p); comm x y = z") and
// instantiates it at the given prime; statements split on ';' or newlines.
PcGroupPtr parse_presentation(const std::string& text, i64 p, i64 r = 1);

}  // namespace tgrip
