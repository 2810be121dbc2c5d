#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "dual.hpp"

using namespace tgrip;

namespace {

PcGroupPtr c9xc3() {
  PcGroupBuilder b({3, 3, 3});
  b.power(0, {{1, 1}});
  return b.build();
}

PcGroupPtr heisenberg(int p) {
  PcGroupBuilder b({p, p, p});
  b.name(0, "a").name(1, "b").name(2, "c");
  b.comm(1, 0, {{2, -1}});
  return b.build();
}

}  // namespace

TEST_CASE("invariant basis of C9 x C3") {
  auto g = c9xc3();
  AbelianDual d(whole_group(g));
  CHECK(d.invariants() == std::vector<i64>{3, 9});
  CHECK(d.exponent() == 9);
  CHECK(d.size() == 27);
  CHECK(g->elt_order(d.basis()[0]) == 3);
  CHECK(g->elt_order(d.basis()[1]) == 9);
  // coords is a bijection onto the box
  std::set<Vec> seen;
  for (i64 i = 0; i < g->order(); ++i) seen.insert(d.coords(g->from_index(i)));
  CHECK((i64)seen.size() == g->order());
  for (auto& t : seen) CHECK(d.coords(d.from_coords(t)) == t);
}

TEST_CASE("every character is a homomorphism") {
  auto g = c9xc3();
  AbelianDual d(whole_group(g));
  for (i64 ci = 0; ci < d.size(); ++ci) {
    Character chi = character_at(d, ci);
    CHECK(character_index(chi) == ci);
    CHECK(chi.eval(g->id()) == 0);
    for (i64 i = 0; i < g->order(); ++i)
      for (i64 j = 0; j < g->order(); ++j) {
        Elt x = g->from_index(i), y = g->from_index(j);
        CHECK(chi.eval(g->mul(x, y)) ==
              mod_norm(chi.eval(x) + chi.eval(y), d.exponent()));
      }
  }
}

TEST_CASE("character group operations") {
  auto g = c9xc3();
  AbelianDual d(whole_group(g));
  std::mt19937_64 rng(5);
  for (int it = 0; it < 30; ++it) {
    Character a = character_at(d, (i64)(rng() % d.size()));
    Character b = character_at(d, (i64)(rng() % d.size()));
    Elt x = g->from_index((i64)(rng() % g->order()));
    CHECK(char_mul(a, b).eval(x) ==
          mod_norm(a.eval(x) + b.eval(x), d.exponent()));
    CHECK(char_mul(a, char_inv(a)) == trivial_character(d));
    CHECK(char_pow(a, 5).eval(x) == mod_norm(5 * a.eval(x), d.exponent()));
    CHECK(char_pow(a, a.order()) == trivial_character(d));
  }
}

TEST_CASE("kernels and value distribution") {
  auto g = c9xc3();
  AbelianDual d(whole_group(g));
  for (i64 ci = 0; ci < d.size(); ++ci) {
    Character chi = character_at(d, ci);
    Subgroup k = char_kernel(chi);
    std::map<i64, i64> hist;
    for (i64 i = 0; i < g->order(); ++i) {
      Elt x = g->from_index(i);
      ++hist[chi.eval(x)];
      CHECK((chi.eval(x) == 0) == contains(k, x));
    }
    // values spread evenly over the multiples of exponent/order
    i64 ord = chi.order();
    CHECK((i64)hist.size() == ord);
    for (auto& [v, cnt] : hist) {
      CHECK(v % (d.exponent() / ord) == 0);
      CHECK(cnt == g->order() / ord);
    }
  }
  // faithful characters exist only for cyclic groups
  for (i64 ci = 0; ci < d.size(); ++ci)
    CHECK(!is_faithful(character_at(d, ci)));
  auto h = heisenberg(3);
  AbelianDual dz(center(h));
  CHECK(dz.invariants() == std::vector<i64>{3});
  int faithful = 0;
  for (i64 ci = 0; ci < dz.size(); ++ci)
    if (is_faithful(character_at(dz, ci))) ++faithful;
  CHECK(faithful == 2);
}

TEST_CASE("restriction and extension") {
  auto g = c9xc3();
  AbelianDual big(whole_group(g));
  AbelianDual sub(igs_close(g, {g->pow(g->gen(0), 3), g->gen(2)}));
  CHECK(sub.size() == 9);
  CHECK(sub.exponent() == 3);
  for (i64 ci = 0; ci < sub.size(); ++ci) {
    Character chi = character_at(sub, ci);
    auto exts = extend_characters(chi, big);
    CHECK((i64)exts.size() == 3);  // index of the subgroup
    std::set<i64> distinct;
    for (auto& psi : exts) {
      CHECK(restrict_character(psi, sub) == chi);
      distinct.insert(character_index(psi));
    }
    CHECK(distinct.size() == exts.size());
  }
  // restriction of the full dual covers the small dual [A:B] times each
  std::map<i64, i64> mult;
  for (i64 ci = 0; ci < big.size(); ++ci)
    ++mult[character_index(restrict_character(character_at(big, ci), sub))];
  CHECK((i64)mult.size() == sub.size());
  for (auto& [idx, cnt] : mult) CHECK(cnt == 3);
  // extending from the trivial subgroup reproduces the whole dual
  AbelianDual triv(trivial_subgroup(g));
  auto all = extend_characters(trivial_character(triv), big);
  CHECK((i64)all.size() == big.size());
}

TEST_CASE("scaled evaluation") {
  auto h = heisenberg(3);
  AbelianDual dz(center(h));
  Character chi = character_at(dz, 1);
  std::set<i64> vals;
  for (i64 c = 0; c < 3; ++c)
    vals.insert(chi.eval_mod(h->pow(h->gen(2), c), 9));
  CHECK(vals == std::set<i64>{0, 3, 6});
  CHECK_THROWS_AS(chi.eval_mod(h->gen(2), 4), std::invalid_argument);
}

TEST_CASE("conjugation action on characters") {
  auto h = heisenberg(3);
  // <b, c> is normal abelian of order 9
  Subgroup a = igs_close(h, {h->gen(1), h->gen(2)});
  CHECK(a.order == 9);
  CHECK(is_normal(a));
  AbelianDual d(a);
  std::mt19937_64 rng(17);
  for (int it = 0; it < 40; ++it) {
    Character chi = character_at(d, (i64)(rng() % d.size()));
    Elt g = h->from_index((i64)(rng() % h->order()));
    Elt k = h->from_index((i64)(rng() % h->order()));
    // right action law
    CHECK(conj_character(conj_character(chi, g), k) ==
          conj_character(chi, h->mul(g, k)));
    // pointwise definition
    for (i64 i = 0; i < 9; ++i) {
      Elt x = d.from_coords({i % 3, i / 3});
      CHECK(conj_character(chi, g).eval(x) ==
            chi.eval(h->conj(x, h->inv(g))));
    }
  }
  // orbit/stabiliser over characters: orbit size times inertia size = |G|
  for (i64 ci = 0; ci < d.size(); ++ci) {
    Character chi = character_at(d, ci);
    auto os = orbit_stabilizer<Character>(
        whole_group(h), chi,
        [&](const Character& c, const Elt& g) { return conj_character(c, g); });
    CHECK((i64)os.orbit.size() * os.stab.order == h->order());
    // the centre acts trivially, so inertia always contains it
    CHECK(subgroup_le(center(h), os.stab));
  }
}

TEST_CASE("rejects non-abelian input") {
  auto h = heisenberg(3);
  CHECK_THROWS_AS(AbelianDual(whole_group(h)), std::invalid_argument);
}
