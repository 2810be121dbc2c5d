#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cohomology.hpp"

using namespace tgrip;

namespace {

PcGroupPtr cyclic(i64 p, int k) {  // C_{p^k} as a chain
  std::vector<i64> r(k, p);
  PcGroupBuilder b(r);
  for (int i = 0; i + 1 < k; ++i) b.power(i, {{i + 1, 1}});
  return b.build();
}

PcGroupPtr elem_abelian(i64 p, int k) {
  return PcGroupBuilder(std::vector<i64>(k, p)).build();
}

PcGroupPtr heisenberg(i64 p) {
  PcGroupBuilder b({p, p, p});
  b.name(0, "a").name(1, "b").name(2, "c");
  b.comm(1, 0, {{2, -1}});
  return b.build();
}

PcGroupPtr dihedral8() {
  PcGroupBuilder b({2, 2, 2});
  b.power(0, {{1, 1}});  // g0 = r, g1 = r^2, g2 = s
  b.comm(2, 0, {{1, 1}});
  return b.build();
}

PcGroupPtr quaternion8() {
  // g0 = i, g1 = j, g2 = -1
  PcGroupBuilder b({2, 2, 2});
  b.power(0, {{2, 1}});
  b.power(1, {{2, 1}});
  b.comm(1, 0, {{2, 1}});
  return b.build();
}

// Independent H^2 oracle: full cocycle tables alpha(x, y) for x, y != 1 as
// unknowns, cocycle identity rows, coboundaries from indicator functions.
i64 brute_h2_size(const PcGroupPtr& g, i64 e) {
  i64 nn = g->order();
  int nv = (int)((nn - 1) * (nn - 1));
  auto var = [&](i64 x, i64 y) -> int {  // indices, nonidentity
    return (int)((x - 1) * (nn - 1) + (y - 1));
  };
  auto add_term = [&](Vec& row, i64 x, i64 y, i64 c) {
    if (x == 0 || y == 0) return;  // normalised: alpha(1,-) = alpha(-,1) = 0
    row[var(x, y)] += c;
  };
  Mat rows;
  for (i64 x = 1; x < nn; ++x)
    for (i64 y = 1; y < nn; ++y) {
      i64 xy = g->index_of(g->mul(g->from_index(x), g->from_index(y)));
      for (i64 z = 1; z < nn; ++z) {
        i64 yz = g->index_of(g->mul(g->from_index(y), g->from_index(z)));
        Vec row(nv, 0);
        add_term(row, x, y, 1);
        add_term(row, xy, z, 1);
        add_term(row, y, z, -1);
        add_term(row, x, yz, -1);
        rows.push_back(std::move(row));
      }
    }
  i64 zsize = span_size_mod(kernel_mod(rows, nv, e), nv, e);
  Mat bgens;
  for (i64 w = 1; w < nn; ++w) {
    Vec row(nv, 0);
    for (i64 x = 1; x < nn; ++x)
      for (i64 y = 1; y < nn; ++y) {
        i64 c = 0;
        if (x == w) ++c;
        if (y == w) ++c;
        if (g->index_of(g->mul(g->from_index(x), g->from_index(y))) == w) --c;
        row[var(x, y)] = mod_norm(c, e);
      }
    bgens.push_back(std::move(row));
  }
  i64 bsize = span_size_mod(bgens, nv, e);
  return zsize / bsize;
}

}  // namespace

TEST_CASE("tail space sizes match the brute-force cocycle space") {
  struct Case {
    PcGroupPtr g;
    i64 e;
    i64 expect;
  };
  std::vector<Case> cases = {
      {cyclic(3, 1), 3, 3},      {cyclic(3, 2), 3, 3},
      {cyclic(3, 2), 9, 9},      {elem_abelian(2, 2), 2, 8},
      {elem_abelian(2, 2), 4, 8}, {elem_abelian(3, 2), 3, 27},
      {dihedral8(), 2, 8},       {quaternion8(), 2, 4},
  };
  for (auto& c : cases) {
    TailSpace ts(c.g, c.e);
    CHECK(ts.h2_size() == c.expect);
    CHECK(ts.h2_size() == brute_h2_size(c.g, c.e));
  }
}

TEST_CASE("cohomology group structure") {
  CHECK(h2_invariants(elem_abelian(3, 2), 3) == std::vector<i64>{3, 3, 3});
  CHECK(h2_invariants(dihedral8(), 2) == std::vector<i64>{2, 2, 2});
  CHECK(h2_invariants(quaternion8(), 2) == std::vector<i64>{2, 2});
  CHECK(h2_invariants(cyclic(3, 2), 9) == std::vector<i64>{9});
  CHECK(h2_invariants(cyclic(3, 2), 3) == std::vector<i64>{3});
  CHECK(h2_invariants(elem_abelian(2, 2), 4) == std::vector<i64>{2, 2, 2});
}

TEST_CASE("Schur multipliers") {
  // abelian: direct sum of gcds over pairs of invariants
  CHECK(schur_multiplier(cyclic(3, 1)).empty());
  CHECK(schur_multiplier(cyclic(5, 2)).empty());
  CHECK(schur_multiplier(elem_abelian(3, 2)) == std::vector<i64>{3});
  CHECK(schur_multiplier(elem_abelian(3, 3)) == std::vector<i64>{3, 3, 3});
  CHECK(schur_multiplier(elem_abelian(5, 2)) == std::vector<i64>{5});
  {
    PcGroupBuilder b({3, 3, 3});
    b.power(0, {{1, 1}});  // C9 x C3
    CHECK(schur_multiplier(b.build()) == std::vector<i64>{3});
  }
  // classic nonabelian values
  CHECK(schur_multiplier(heisenberg(3)) == std::vector<i64>{3, 3});
  CHECK(schur_multiplier(heisenberg(5)) == std::vector<i64>{5, 5});
  CHECK(schur_multiplier(dihedral8()) == std::vector<i64>{2});
  CHECK(schur_multiplier(quaternion8()).empty());
}

TEST_CASE("tails round-trip through the extension") {
  auto g = heisenberg(3);
  i64 e = 3;
  TailSpace ts(g, e);
  std::mt19937_64 rng(23);
  for (int it = 0; it < 8; ++it) {
    Vec t(ntails(g), 0);
    for (auto& row : ts.z_gens()) {
      i64 c = (i64)(rng() % e);
      for (size_t j = 0; j < t.size(); ++j)
        t[j] = mod_norm(t[j] + c * row[j], e);
    }
    REQUIRE(ts.consistent(t));
    Cocycle a = cocycle_from_tails(g, e, t);
    CHECK(is_cocycle(a));
    CHECK(tails_of_cocycle(a) == t);
  }
  // [c, b] = z is consistent: it builds a maximal-class group of order 81
  Vec tower(ntails(g), 0);
  tower[comm_slot(g, 2, 1)] = 1;
  CHECK(ts.consistent(tower));
  CHECK(central_extension(g, e, tower).e->order() == 81);
  // c^3 = z is not: c = [a, b]^-1 is central, so [a,b]^3 = [a, b^3] = 1
  Vec bad(ntails(g), 0);
  bad[pow_slot(g, 2)] = 1;
  REQUIRE(!ts.consistent(bad));
  CHECK_THROWS_AS(central_extension(g, e, bad), std::runtime_error);
}

TEST_CASE("coboundaries are trivial everywhere") {
  auto g = heisenberg(3);
  std::mt19937_64 rng(31);
  std::vector<i64> table(g->order());
  for (auto& v : table) v = (i64)(rng() % 3);
  table[0] = 0;
  auto mu = [g, table](const Elt& x) { return table[g->index_of(x)]; };
  Cocycle d = coboundary(g, 3, mu);
  CHECK(is_cocycle(d));
  TailSpace ts(g, 3);
  CHECK(ts.trivial_class(tails_of_cocycle(d)));
  CHECK(cohomologous(d, zero_cocycle(g, 3)));
  CHECK(is_trivial_over_Cx(d));
  // negative control: damaging one value breaks the cocycle identity
  Cocycle broken = d;
  auto fd = d.f;
  auto gg = g;
  broken.f = [fd, gg](const Elt& x, const Elt& y) -> i64 {
    if (x == gg->gen(0) && y == gg->gen(1)) return mod_norm(fd(x, y) + 1, 3);
    return fd(x, y);
  };
  CHECK(!is_cocycle(broken));
}

TEST_CASE("transgression of a cyclic extension") {
  // C9 as a central extension of C3 by C3: nontrivial with Z/3 coefficients
  // but trivial over the circle, because C3 has no multiplier.
  auto g = cyclic(3, 2);
  auto cq = quotient_central(g, igs_close(g, {g->gen(1)}));
  AbelianDual dk(cq.kernel);
  Character chi = character_at(dk, 1);
  REQUIRE(is_faithful(chi));
  Cocycle tra = transgress(chi, cq);
  CHECK(is_cocycle(tra));
  TailSpace ts(cq.q, 3);
  CHECK(!ts.trivial_class(tails_of_cocycle(tra)));
  CHECK(is_trivial_over_Cx(tra));
  CHECK(!cohomologous(tra, zero_cocycle(cq.q, 3)));
}

TEST_CASE("transgression of the Heisenberg extension") {
  auto g = heisenberg(3);
  auto cq = quotient_central(g, center(g));
  AbelianDual dk(cq.kernel);
  for (i64 ci = 0; ci < dk.size(); ++ci) {
    Character chi = character_at(dk, ci);
    Cocycle tra = transgress(chi, cq);
    CHECK(is_cocycle(tra));
    bool trivial = chi.order() == 1;
    CHECK(is_trivial_over_Cx(tra) == trivial);
    // five-term exactness: inflation of a transgression dies over Cx
    CHECK(is_trivial_over_Cx(inflate(tra, cq)));
  }
  // additivity in the character, pointwise
  Character c1 = character_at(dk, 1), c2 = character_at(dk, 2);
  Cocycle t1 = transgress(c1, cq), t2 = transgress(c2, cq);
  Cocycle t12 = transgress(char_mul(c1, c2), cq);
  for (i64 i = 0; i < cq.q->order(); ++i)
    for (i64 j = 0; j < cq.q->order(); ++j) {
      Elt x = cq.q->from_index(i), y = cq.q->from_index(j);
      CHECK(t12(x, y) == mod_norm(t1(x, y) + t2(x, y), 3));
    }
  // the faithful class rebuilds a nonabelian extension of order 27
  auto ext = central_extension(cq.q, 3, tails_of_cocycle(t1));
  CHECK(ext.e->order() == 27);
  CHECK(derived_subgroup(ext.e).order == 3);
  CHECK(contains(derived_subgroup(ext.e), ext.z));
}

TEST_CASE("pullback along an automorphism respects circle classes") {
  auto g = heisenberg(3);
  auto cq = quotient_central(g, center(g));
  AbelianDual dk(cq.kernel);
  Character chi = character_at(dk, 1);
  Cocycle tra = transgress(chi, cq);
  // inversion on the quotient C3 x C3
  GroupHom invmap = make_hom(
      cq.q, cq.q, {cq.q->inv(cq.q->gen(0)), cq.q->inv(cq.q->gen(1))});
  Cocycle pb = pullback(tra, invmap);
  CHECK(is_cocycle(pb));
  // inversion has determinant one on the alternating square, so the class
  // over the circle is preserved even though Z/3 classes may move
  CHECK(cohomologous_over_Cx(pb, tra));
  CHECK(!is_trivial_over_Cx(pb));
}

TEST_CASE("rescaling keeps the circle class") {
  auto g = heisenberg(3);
  auto cq = quotient_central(g, center(g));
  AbelianDual dk(cq.kernel);
  Cocycle tra = transgress(character_at(dk, 1), cq);
  Cocycle big = rescale_cocycle(tra, 9);
  CHECK(big.mod == 9);
  CHECK(is_cocycle(big));
  CHECK(!is_trivial_over_Cx(big));
  Cocycle triv = rescale_cocycle(transgress(trivial_character(dk), cq), 9);
  CHECK(is_trivial_over_Cx(triv));
}

TEST_CASE("degenerate modulus") {
  auto g = cyclic(3, 1);
  TailSpace ts(g, 1);
  CHECK(ts.h2_size() == 1);
  CHECK(ts.h2_invariants().empty());
  CHECK(is_trivial_over_Cx(zero_cocycle(g, 1)));
}

TEST_CASE("covering groups") {
  // trivial multiplier: the group covers itself
  auto c9 = cyclic(3, 2);
  auto sc = schur_cover(c9);
  CHECK(sc.e == c9);
  CHECK(sc.z.order == 1);

  // C_p x C_p: the cover is extraspecial of order p^3
  for (i64 p : {3, 5}) {
    auto a = elem_abelian(p, 2);
    auto c = schur_cover(a);
    CHECK(c.e->order() == p * p * p);
    CHECK(abelian_invariants(c.z) == std::vector<i64>{p});
    CHECK(subgroup_eq(c.z, derived_subgroup(c.e)));
    CHECK(subgroup_eq(c.z, center(c.e)));
    CHECK(is_isomorphism(c.proj) == false);  // kernel is not trivial
    for (int i = 0; i < a->ngens(); ++i)
      CHECK(c.proj.apply(c.e->gen(i)) == a->gen(i));
  }

  // C_p x C_p x C_p: kernel (Z/p)^3, cover of order p^6
  auto a3 = elem_abelian(3, 3);
  auto c3 = schur_cover(a3);
  CHECK(c3.e->order() == 729);
  CHECK(abelian_invariants(c3.z) == std::vector<i64>{3, 3, 3});
  CHECK(subgroup_eq(c3.z, derived_subgroup(c3.e)));

  // Heisenberg p^3: kernel (Z/p)^2, cover of order p^5; every nontrivial
  // kernel character transgresses to a class that survives over the circle
  auto h = heisenberg(3);
  auto ch = schur_cover(h);
  CHECK(ch.e->order() == 243);
  CHECK(abelian_invariants(ch.z) == std::vector<i64>{3, 3});
  CHECK(is_central(ch.z));
  CHECK(subgroup_le(ch.z, derived_subgroup(ch.e)));
  auto cq = quotient_central(ch.e, ch.z);
  AbelianDual dual(ch.z);
  for (i64 t = 0; t < dual.size(); ++t) {
    auto tra = transgress(character_at(dual, t), cq);
    CHECK(is_trivial_over_Cx(tra) == (t == 0));
  }
}
