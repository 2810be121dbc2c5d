#pragma once

// Power-commutator presentations of finite solvable groups and the structured
// collector that turns words into normal forms.
//
// A presentation on generators g_0 < g_1 < ... < g_{n-1} consists of relative
// orders r_i >= 2 together with
//   power relations       g_i^{r_i} = w_i            (w_i over indices > i)
//   commutator relations  [g_j, g_i] = w_{ji}, j > i (w over indices > i)
// with [x, y] = x^-1 y^-1 x y.  Omitted commutators default to trivial.
// Every group element has a unique normal form g_0^{e_0} ... g_{n-1}^{e_{n-1}}
// with 0 <= e_i < r_i, and |G| = prod r_i once the presentation is consistent.

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "modring.hpp"

namespace tgrip {

constexpr int kMaxGens = 16;

// Normal-form element: exponent vector.  Unused slots are kept at zero so
// that default equality and hashing work on the whole array.
struct Elt {
  std::array<int32_t, kMaxGens> e{};
  int32_t n = 0;

  friend bool operator==(const Elt&, const Elt&) = default;
  friend bool operator<(const Elt& a, const Elt& b) {
    return a.e < b.e;
  }
};

struct EltHash {
  size_t operator()(const Elt& x) const {
    size_t h = 1469598103934665603ull;
    for (int i = 0; i < x.n; ++i) {
      h ^= (size_t)(uint32_t)x.e[i];
      h *= 1099511628211ull;
    }
    return h;
  }
};

// A word is a list of (generator index, exponent) pairs read left to right.
using Word = std::vector<std::pair<int, i64>>;

class PcGroup;
using PcGroupPtr = std::shared_ptr<const PcGroup>;

class PcGroup {
 public:
  int ngens() const { return n_; }
  i64 rel_order(int i) const { return r_[i]; }
  const std::vector<i64>& rel_orders() const { return r_; }
  i64 order() const { return order_; }
  const std::string& gen_name(int i) const { return names_[i]; }

  Elt id() const;
  Elt gen(int i) const;
  // Normal form of g_i^e for arbitrary (possibly negative) e.
  Elt gen_pow(int i, i64 e) const;
  Elt from_exps(const std::vector<i64>& exps) const;
  bool is_id(const Elt& x) const { return x == id(); }
  // Smallest index with nonzero exponent; ngens() for the identity.
  int depth(const Elt& x) const;

  Elt mul(const Elt& x, const Elt& y) const;
  Elt inv(const Elt& x) const;
  Elt pow(const Elt& x, i64 e) const;
  Elt conj(const Elt& x, const Elt& g) const;  // g^-1 x g
  Elt comm(const Elt& x, const Elt& y) const;  // x^-1 y^-1 x y
  i64 elt_order(const Elt& x) const;
  Elt eval_word(const Word& w) const;

  const Elt& power_word(int i) const { return pow_word_[i]; }
  // [g_j, g_i] for j > i.
  const Elt& comm_word(int j, int i) const { return comm_word_[j][i]; }

  // Mixed-radix index of a normal form (g_0 most significant) and back.
  i64 index_of(const Elt& x) const;
  Elt from_index(i64 idx) const;
  std::vector<Elt> elements() const;  // all of G in index order; |G| capped

  std::string show(const Elt& x) const;

  // Both sides of every collector overlap condition -- the k>j>i generator
  // triples, the power overlaps on both sides and the g_i <-> g_i^{r_i}
  // exchange -- evaluated without asserting equality.  The presentation is
  // consistent exactly when every pair matches; the order of the pairs is
  // deterministic, which lets extension machinery read off discrepancies.
  std::vector<std::pair<Elt, Elt>> overlap_pairs() const;

  // Verifies that the collector product is associative.  The generator and
  // power overlap identities are always checked -- they are a complete
  // consistency proof for a weighted presentation -- and for |G| <= 1000 an
  // exhaustive sweep of all triples over the multiplication table is run on
  // top as an independent oracle.  Generator inverses are verified in every
  // tier.  Throws std::runtime_error on any failure; returns the tier name
  // ("triples" or "overlap").
  std::string certify_consistency() const;

  // Cayley-table Light's test: tabulates all |G|^2 products and checks
  // a(sb) = (as)b for every generator s by table lookups, which implies
  // associativity on all triples.  Affordable to |G| = 10^4 (the table has
  // |G|^2 entries); throws std::invalid_argument above that and
  // std::runtime_error on an associativity failure.
  void verify_associativity() const;

 private:
  friend class PcGroupBuilder;
  PcGroup() = default;

  Elt mul_syl(const Elt& x, int i, i64 e) const;
  // g_j conjugated by g_i^e, from the incremental cache (j > i, 1 <= e < r_i).
  const Elt& conj_gen_pow(int i, i64 e, int j) const;
  const Elt& pow_word_inv(int i) const;
  void check_overlaps() const;
  void check_gen_inverses() const;

  int n_ = 0;
  i64 order_ = 1;
  std::vector<i64> r_;
  std::vector<std::string> names_;
  std::vector<Elt> pow_word_;
  std::vector<std::vector<Elt>> comm_word_;  // [j][i], j > i
  // conj_cache_[i][e-1][j-i-1] = g_j^{g_i^e}; rows built on demand.
  mutable std::vector<std::vector<std::vector<Elt>>> conj_cache_;
  mutable std::vector<Elt> pow_word_inv_;
  mutable std::vector<char> pow_word_inv_set_;
};

// Accepts raw relations (negative exponents, commutators in either order),
// validates the index constraints and normalises all right-hand sides into
// collector normal form, working from the last generator upwards so that
// every evaluation happens in an already-finished tail subgroup.
class PcGroupBuilder {
 public:
  explicit PcGroupBuilder(std::vector<i64> rel_orders);

  PcGroupBuilder& name(int i, std::string nm);
  PcGroupBuilder& power(int i, Word w);
  // [g_a, g_b] = w for distinct a, b; either order is accepted and stored as
  // [g_max, g_min] via [x,y]^-1 = [y,x].
  PcGroupBuilder& comm(int a, int b, Word w);

  // Builds and (by default) certifies the group.  The certification tier is
  // reported through *tier when given.
  PcGroupPtr build(bool certify = true, std::string* tier = nullptr);

  // Builds with the always-on tier only (overlap identities plus generator
  // inverses), skipping the exhaustive small-order table.  For presentations
  // whose relations were computed by collection inside an already-certified
  // group -- quotients, induced subgroups, direct products, extensions by
  // checked tails -- where the exhaustive tier would re-certify every
  // intermediate object of a recursion.
  PcGroupPtr build_derived();

 private:
  int n_;
  std::vector<i64> r_;
  std::vector<std::string> names_;
  std::vector<Word> raw_pow_;
  std::vector<char> has_pow_;
  struct RawComm {
    Word w;
    bool inverted = false;  // true when given as [g_min, g_max]
    bool set = false;
  };
  std::vector<std::vector<RawComm>> raw_comm_;
};

}  // namespace tgrip
