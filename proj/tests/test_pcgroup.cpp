#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "pcgroup.hpp"

using namespace tgrip;

namespace {

// --- independent oracle: 3x3 unitriangular matrices over Z/p ---------------

struct M3 {
  int a[3][3];
};

M3 m3id() {
  M3 m{};
  for (int i = 0; i < 3; ++i) m.a[i][i] = 1;
  return m;
}

M3 m3mul(const M3& x, const M3& y, int p) {
  M3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int s = 0;
      for (int k = 0; k < 3; ++k) s += x.a[i][k] * y.a[k][j];
      r.a[i][j] = s % p;
    }
  return r;
}

bool m3eq(const M3& x, const M3& y) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (x.a[i][j] != y.a[i][j]) return false;
  return true;
}

M3 m3pow(M3 x, i64 e, int p) {
  M3 r = m3id();
  while (e > 0) {
    if (e & 1) r = m3mul(r, x, p);
    x = m3mul(x, x, p);
    e >>= 1;
  }
  return r;
}

i64 m3key(const M3& x) {
  i64 k = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) k = k * 64 + x.a[i][j];
  return k;
}

// a = I+E12, b = I+E23, c = I+E13; [b,a] = c^{-1}.
PcGroupPtr heisenberg(int p, std::string* tier = nullptr) {
  PcGroupBuilder b({p, p, p});
  b.name(0, "a").name(1, "b").name(2, "c");
  b.comm(1, 0, {{2, -1}});
  return b.build(true, tier);
}

i64 choose2(i64 n) { return n * (n - 1) / 2; }
i64 choose3(i64 n) { return n * (n - 1) * (n - 2) / 6; }

}  // namespace

TEST_CASE("collecting y*x in the exponent-p Heisenberg presentation") {
  // E = <x,y,z | [x,y]=z, x^p=y^p=z^p=1> at p=3: the commutator is supplied
  // in the [x,y] order and yx must collect to x y z^{p-1}.
  PcGroupBuilder b({3, 3, 3});
  b.name(0, "x").name(1, "y").name(2, "z");
  b.comm(0, 1, {{2, 1}});  // [x,y] = z
  auto g = b.build();
  Elt yx = g->mul(g->gen(1), g->gen(0));
  CHECK(yx == g->from_exps({1, 1, 2}));
  CHECK(g->show(yx) == "x y z^2");
}

TEST_CASE("unitriangular matrix oracle") {
  for (int p : {3, 5}) {
    CAPTURE(p);
    std::string tier;
    auto g = heisenberg(p, &tier);
    CHECK(tier == "triples");
    M3 a = m3id(), b = m3id(), c = m3id();
    a.a[0][1] = 1;
    b.a[1][2] = 1;
    c.a[0][2] = 1;
    // The presentation's commutator matches the matrix commutator.
    M3 ai = m3pow(a, p - 1, p), bi = m3pow(b, p - 1, p);
    M3 comm = m3mul(m3mul(bi, ai, p), m3mul(b, a, p), p);
    CHECK(m3eq(comm, m3pow(c, p - 1, p)));
    // phi(normal form (u,v,w)) = a^u b^v c^w is a bijective homomorphism.
    auto phi = [&](const Elt& x) {
      return m3mul(m3mul(m3pow(a, x.e[0], p), m3pow(b, x.e[1], p), p),
                   m3pow(c, x.e[2], p), p);
    };
    auto els = g->elements();
    std::set<i64> images;
    for (auto& x : els) images.insert(m3key(phi(x)));
    CHECK((i64)images.size() == g->order());
    for (auto& x : els)
      for (auto& y : els)
        CHECK(m3eq(phi(g->mul(x, y)), m3mul(phi(x), phi(y), p)));
    // Inverses and orders agree with the matrix side.
    std::mt19937_64 rng(5 + p);
    for (int it = 0; it < 50; ++it) {
      Elt x = g->from_index((i64)(rng() % g->order()));
      CHECK(g->is_id(g->mul(x, g->inv(x))));
      CHECK(g->is_id(g->mul(g->inv(x), x)));
      i64 ord = g->elt_order(x);
      CHECK(m3eq(m3pow(phi(x), ord, p), m3id()));
      CHECK(g->is_id(g->pow(x, ord)));
    }
  }
}

TEST_CASE("closed-form product in the exponent-p maximal-class group, p=5") {
  // <a, a1, a2, a3 | [a1,a]=a2, [a2,a]=a3, all fifth powers trivial>.
  // The collected product of two normal forms has the closed form
  //   (i1+i1', i2+i2', i1'i2+i3+i3', i2 C(i1',2) + i1'i3 + i4+i4')  (mod p).
  const int p = 5;
  PcGroupBuilder b({p, p, p, p});
  b.name(0, "a").name(1, "a1").name(2, "a2").name(3, "a3");
  b.comm(1, 0, {{2, 1}});
  b.comm(2, 0, {{3, 1}});
  std::string tier;
  auto g = b.build(true, &tier);
  CHECK(tier == "triples");
  for (i64 xi = 0; xi < g->order(); ++xi) {
    Elt x = g->from_index(xi);
    for (i64 yi = 0; yi < g->order(); ++yi) {
      Elt y = g->from_index(yi);
      i64 i1 = x.e[0], i2 = x.e[1], i3 = x.e[2], i4 = x.e[3];
      i64 j1 = y.e[0], j2 = y.e[1], j3 = y.e[2], j4 = y.e[3];
      Elt expect = g->from_exps({i1 + j1, i2 + j2, j1 * i2 + i3 + j3,
                                 i2 * choose2(j1) + j1 * i3 + i4 + j4});
      if (!(g->mul(x, y) == expect)) {
        CAPTURE(xi);
        CAPTURE(yi);
        REQUIRE(g->mul(x, y) == expect);
      }
    }
  }
}

TEST_CASE("closed-form product with a nontrivial first power word, p=5") {
  // Same commutator structure one class deeper, with a^p = a4 central.  The
  // last coordinate additionally picks up the base-p carry of i1+i1'.
  const int p = 5;
  PcGroupBuilder b({p, p, p, p, p});
  b.name(0, "a").name(1, "a1").name(2, "a2").name(3, "a3").name(4, "a4");
  b.power(0, {{4, 1}});
  b.comm(1, 0, {{2, 1}});
  b.comm(2, 0, {{3, 1}});
  b.comm(3, 0, {{4, 1}});
  auto g = b.build(false);  // certified exhaustively right here instead
  std::mt19937_64 rng(41);
  auto random_elt = [&] { return g->from_index((i64)(rng() % g->order())); };
  for (int it = 0; it < 200000; ++it) {
    Elt x = random_elt(), y = random_elt();
    i64 i1 = x.e[0], i2 = x.e[1], i3 = x.e[2], i4 = x.e[3], i5 = x.e[4];
    i64 j1 = y.e[0], j2 = y.e[1], j3 = y.e[2], j4 = y.e[3], j5 = y.e[4];
    i64 carry = (i1 + j1 >= p) ? 1 : 0;
    Elt expect = g->from_exps(
        {i1 + j1, i2 + j2, j1 * i2 + i3 + j3,
         i2 * choose2(j1) + j1 * i3 + i4 + j4,
         j1 * i4 + i3 * choose2(j1) + i2 * choose3(j1) + i5 + j5 + carry});
    REQUIRE(g->mul(x, y) == expect);
  }
}

TEST_CASE("cyclic p^2 via a power relation") {
  PcGroupBuilder b({3, 3});
  b.power(0, {{1, 1}});  // g^3 = h, so <g> = C9
  auto g = b.build();
  CHECK(g->order() == 9);
  CHECK(g->elt_order(g->gen(0)) == 9);
  CHECK(g->gen_pow(0, 3) == g->gen(1));
  CHECK(g->gen_pow(0, 9) == g->id());
  CHECK(g->gen_pow(0, -1) == g->mul(g->gen_pow(0, 2), g->gen_pow(1, 2)));
}

TEST_CASE("word evaluation with negative exponents") {
  auto g = heisenberg(5);
  // b^-1 a^-1 b a = [b, a] = c^-1
  Elt w = g->eval_word({{1, -1}, {0, -1}, {1, 1}, {0, 1}});
  CHECK(w == g->gen_pow(2, -1));
  CHECK(w == g->comm(g->gen(1), g->gen(0)));
}

TEST_CASE("index round trip and element enumeration") {
  auto g = heisenberg(3);
  auto els = g->elements();
  CHECK((i64)els.size() == 27);
  for (i64 i = 0; i < 27; ++i) CHECK(g->index_of(els[i]) == i);
}

TEST_CASE("inconsistent presentation is rejected") {
  // [h,g] = h makes conjugation by g an automorphism of order 2 on <h>=C3,
  // which cannot extend to an action of g with g^3 = 1.
  PcGroupBuilder b({3, 3});
  b.comm(1, 0, {{1, 1}});
  CHECK_THROWS_AS(b.build(), std::runtime_error);
}

TEST_CASE("mid-sized groups certify by overlaps, tables on demand") {
  std::string tier;
  auto g = heisenberg(11, &tier);
  CHECK(g->order() == 1331);
  CHECK(tier == "overlap");
  // the on-demand Cayley-table sweep agrees
  CHECK_NOTHROW(g->verify_associativity());
}

TEST_CASE("builder input validation") {
  CHECK_THROWS_AS(PcGroupBuilder({1, 3}), std::invalid_argument);
  // power words may only mention strictly later generators
  PcGroupBuilder b({3, 3});
  b.power(0, {{0, 1}});
  CHECK_THROWS_AS(b.build(), std::invalid_argument);
  PcGroupBuilder c({3, 3});
  c.power(1, {{0, 1}});
  CHECK_THROWS_AS(c.build(), std::invalid_argument);
}
