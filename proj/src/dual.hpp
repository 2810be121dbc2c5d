// Characters of finite abelian subgroups.
//
// An abelian subgroup is put into invariant form A ≅ ⊕ Z/d_i (d_1 | d_2 | ...)
// by running Smith normal form on its chain relation matrix; the transform
// gives explicit basis elements b_i of order d_i together with a coordinate
// map.  A character is stored by its values on that basis and evaluated
// additively in Z/exponent(A): the integer chi(x) stands for the root of
// unity zeta^chi(x) with zeta of order exponent(A).
#pragma once

#include <memory>

#include "subgroup.hpp"

namespace tgrip {

class AbelianDual {
 public:
  AbelianDual() = default;
  // Throws std::invalid_argument if the subgroup is not abelian.
  explicit AbelianDual(const Subgroup& a);

  bool valid() const { return d_ != nullptr; }
  const Subgroup& group() const { return d_->a; }
  const std::vector<i64>& invariants() const { return d_->inv; }
  i64 exponent() const { return d_->exponent; }  // 1 for the trivial group
  i64 size() const { return d_->size; }          // |A| = number of characters
  const std::vector<Elt>& basis() const { return d_->basis; }

  // Coordinates of x in the invariant basis; throws if x is outside A.
  Vec coords(const Elt& x) const;
  Elt from_coords(const Vec& t) const;

  bool same_as(const AbelianDual& o) const { return d_ == o.d_; }

 private:
  struct Data {
    Subgroup a;
    std::vector<i64> inv;
    i64 exponent = 1;
    i64 size = 1;
    std::vector<Elt> basis;
    Mat v;                  // column transform from chain coords
    std::vector<int> cols;  // column of v carrying each invariant
  };
  std::shared_ptr<const Data> d_;
};

struct Character {
  AbelianDual dual;
  // t[i] in [0, inv[i]); the value on basis[i] is t[i] * (exponent / inv[i]).
  std::vector<i64> t;

  i64 eval(const Elt& x) const;  // in Z/exponent
  // Same value pushed into Z/m for a larger modulus (exponent | m).
  i64 eval_mod(const Elt& x, i64 m) const;
  i64 order() const;

  bool operator==(const Character& o) const { return t == o.t; }
  bool operator!=(const Character& o) const { return t != o.t; }
  bool operator<(const Character& o) const { return t < o.t; }
};

Character trivial_character(const AbelianDual& dual);
Character character_at(const AbelianDual& dual, i64 index);  // mixed radix
i64 character_index(const Character& chi);

Character char_mul(const Character& x, const Character& y);
Character char_inv(const Character& x);
Character char_pow(const Character& x, i64 k);

Subgroup char_kernel(const Character& chi);
bool is_faithful(const Character& chi);

// chi viewed on a smaller subgroup (sub.group() must lie inside chi's group).
Character restrict_character(const Character& chi, const AbelianDual& sub);

// All characters of big.group() restricting to chi on chi's subgroup; there
// are exactly [big : sub] of them, returned in a deterministic order.
std::vector<Character> extend_characters(const Character& chi,
                                         const AbelianDual& big);

// Conjugation action on characters: result(x) = chi(g x g^-1).  With this
// convention conj_character(conj_character(chi, g), h) equals
// conj_character(chi, g*h), matching the right-action orbit machinery.
// g must normalise the subgroup.
Character conj_character(const Character& chi, const Elt& g);

}  // namespace tgrip
