#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "subgroup.hpp"

using namespace tgrip;

namespace {

PcGroupPtr heisenberg(int p) {
  PcGroupBuilder b({p, p, p});
  b.name(0, "a").name(1, "b").name(2, "c");
  b.comm(1, 0, {{2, -1}});
  return b.build();
}

// Exponent-p maximal class group of order p^4 (p = 5).
PcGroupPtr maxclass4(int p) {
  PcGroupBuilder b({p, p, p, p});
  b.name(0, "a").name(1, "a1").name(2, "a2").name(3, "a3");
  b.comm(1, 0, {{2, 1}});
  b.comm(2, 0, {{3, 1}});
  return b.build();
}

// Independent subgroup oracle: set-wise closure under multiplication.
std::set<Elt> brute_closure(const PcGroupPtr& g, std::vector<Elt> gens) {
  std::set<Elt> s;
  s.insert(g->id());
  for (auto& x : gens) {
    s.insert(x);
    s.insert(g->inv(x));
  }
  for (;;) {
    std::set<Elt> next = s;
    for (auto& x : s)
      for (auto& y : s) next.insert(g->mul(x, y));
    if (next.size() == s.size()) return s;
    s = std::move(next);
  }
}

}  // namespace

TEST_CASE("igs closure against brute-force closure") {
  auto g = heisenberg(3);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    int ng = 1 + (int)(rng() % 2);
    std::vector<Elt> gens;
    for (int i = 0; i < ng; ++i)
      gens.push_back(g->from_index((i64)(rng() % g->order())));
    auto s = igs_close(g, gens);
    auto brute = brute_closure(g, gens);
    CHECK(s.order == (i64)brute.size());
    for (auto& x : brute) CHECK(contains(s, x));
    auto mat = materialize(s);
    CHECK((i64)mat.size() == s.order);
    for (auto& x : mat) CHECK(brute.count(x) == 1);
  }
}

TEST_CASE("igs closure exercises power relations") {
  PcGroupBuilder b({3, 3});
  b.power(0, {{1, 1}});  // C9
  auto g = b.build();
  auto whole = igs_close(g, {g->gen(0)});
  CHECK(whole.order == 9);
  auto sub = igs_close(g, {g->gen_pow(0, 3)});
  CHECK(sub.order == 3);
  CHECK(contains(sub, g->gen(1)));
  auto sq = igs_close(g, {g->pow(g->gen(0), 2)});  // still generates C9
  CHECK(sq.order == 9);
}

TEST_CASE("strip gives chain coordinates") {
  auto g = maxclass4(5);
  auto s = igs_close(g, {g->gen(1), g->gen(2), g->gen(3)});
  CHECK(s.order == 125);
  std::mt19937_64 rng(3);
  for (int it = 0; it < 100; ++it) {
    // random member: product of igs powers
    Elt x = g->id();
    for (size_t t = 0; t < s.igs.size(); ++t)
      x = g->mul(x, g->pow(s.igs[t], (i64)(rng() % s.rel[t])));
    auto c = strip(s, x);
    REQUIRE(c.has_value());
    Elt y = g->id();
    for (size_t t = 0; t < s.igs.size(); ++t)
      y = g->mul(y, g->pow(s.igs[t], (*c)[t]));
    CHECK(y == x);
  }
  CHECK(!strip(s, g->gen(0)).has_value());
}

TEST_CASE("centre, derived subgroup and centraliser of the Heisenberg group") {
  auto g = heisenberg(3);
  auto z = center(g);
  CHECK(z.order == 3);
  CHECK(contains(z, g->gen(2)));
  auto d = derived_subgroup(g);
  CHECK(subgroup_eq(z, d));
  auto c = centralizer(g, g->gen(0));
  CHECK(c.order == 9);
  CHECK(contains(c, g->gen(0)));
  CHECK(contains(c, g->gen(2)));
  CHECK(!contains(c, g->gen(1)));
  CHECK((i64)conj_class(g, g->gen(0)).size() == 3);
  auto cc = conjugacy_classes(g);
  CHECK((i64)cc.size() == 11);  // p^2 + p - 1 at p = 3
  i64 total = 0;
  for (auto& [rep, sz] : cc) total += sz;
  CHECK(total == g->order());
}

TEST_CASE("centre against brute force on the maximal class group") {
  auto g = maxclass4(5);
  auto z = center(g);
  // brute: commutes with both group generators
  i64 count = 0;
  for (i64 i = 0; i < g->order(); ++i) {
    Elt x = g->from_index(i);
    bool central = g->is_id(g->comm(x, g->gen(0))) &&
                   g->is_id(g->comm(x, g->gen(1)));
    if (central) ++count;
    CHECK(central == contains(z, x));
  }
  CHECK(z.order == count);
  CHECK(z.order == 5);
  CHECK(contains(z, g->gen(3)));
}

TEST_CASE("second centre and a noncentral abelian normal subgroup") {
  auto g = maxclass4(5);
  auto z = center(g);
  auto z2 = second_center(g);
  // brute: [x, gen] central for both generators
  for (i64 i = 0; i < g->order(); ++i) {
    Elt x = g->from_index(i);
    bool in2 = contains(z, g->comm(x, g->gen(0))) &&
               contains(z, g->comm(x, g->gen(1)));
    CHECK(in2 == contains(z2, x));
  }
  CHECK(z2.order == 25);
  auto n = noncentral_abelian_normal(g);
  CHECK(n.order == 25);
  CHECK(is_abelian(n));
  CHECK(is_normal(n));
  CHECK(!is_central(n));
  CHECK(subgroup_le(z, n));
  // class 2 group: Z2 is everything
  auto h = heisenberg(3);
  CHECK(second_center(h).order == h->order());
}

TEST_CASE("central quotient with section") {
  auto g = heisenberg(3);
  auto cq = quotient_central(g, center(g));
  CHECK(cq.q->order() == 9);
  CHECK(is_abelian(whole_group(cq.q)));
  for (i64 i = 0; i < cq.q->order(); ++i) {
    Elt q = cq.q->from_index(i);
    CHECK(cq.proj(cq.lift(q)) == q);
  }
  for (i64 i = 0; i < g->order(); ++i) {
    Elt x = g->from_index(i);
    Elt back = cq.lift(cq.proj(x));
    CHECK(contains(cq.kernel, g->mul(g->inv(back), x)));
  }
}

TEST_CASE("central quotient prunes unit generators") {
  PcGroupBuilder b({3, 3});
  b.power(0, {{1, 1}});  // C9
  auto g = b.build();
  auto k = igs_close(g, {g->gen(1)});  // <g^3>
  auto cq = quotient_central(g, k);
  CHECK(cq.q->order() == 3);
  CHECK(cq.q->ngens() == 1);
  CHECK(cq.proj(g->gen(0)) == cq.q->gen(0));
  CHECK(cq.q->is_id(cq.proj(g->gen(1))));
}

TEST_CASE("quotient of the maximal class group by its centre") {
  auto g = maxclass4(5);
  auto cq = quotient_central(g, center(g));
  CHECK(cq.q->order() == 125);
  CHECK(!is_abelian(whole_group(cq.q)));
  CHECK(center(cq.q).order == 5);
}

TEST_CASE("intersection and join") {
  auto g = maxclass4(5);
  auto a = igs_close(g, {g->gen(0), g->gen(3)});
  auto b2 = igs_close(g, {g->gen(1), g->gen(2), g->gen(3)});
  auto meet = intersect(a, b2);
  auto jn = join(a, b2);
  CHECK(jn.order == g->order());
  for (i64 i = 0; i < g->order(); ++i) {
    Elt x = g->from_index(i);
    CHECK(contains(meet, x) == (contains(a, x) && contains(b2, x)));
  }
}

TEST_CASE("induced presentations embed back") {
  auto g = maxclass4(5);
  auto s = igs_close(g, {g->gen(1), g->gen(2), g->gen(3)});
  auto ig = induced_presentation(s);
  CHECK(ig.q->order() == s.order);
  CHECK(igs_close(g, ig.embed.img).order == s.order);
  std::mt19937_64 rng(9);
  for (int it = 0; it < 50; ++it) {
    Elt x = ig.q->from_index((i64)(rng() % ig.q->order()));
    Elt y = ig.q->from_index((i64)(rng() % ig.q->order()));
    CHECK(ig.embed.apply(ig.q->mul(x, y)) ==
          g->mul(ig.embed.apply(x), ig.embed.apply(y)));
    CHECK(ig.to_sub(ig.embed.apply(x)) == x);
  }
}

TEST_CASE("abelian invariants") {
  PcGroupBuilder b({3, 3, 3});
  b.power(0, {{1, 1}});  // C9 x C3
  auto g = b.build();
  auto inv = abelian_invariants(whole_group(g));
  CHECK(inv == std::vector<i64>{3, 9});
  auto h = heisenberg(3);
  CHECK(abelian_invariants(igs_close(h, {h->gen(0), h->gen(2)})) ==
        std::vector<i64>{3, 3});
  CHECK_THROWS_AS(abelian_invariants(whole_group(h)), std::invalid_argument);
  CHECK(abelian_invariants(trivial_subgroup(h)).empty());
}

TEST_CASE("verified homomorphisms") {
  auto g = heisenberg(3);
  // In a class-2 group [x^-1, y^-1] = [x, y], so inverting both generators
  // forces the identity on the derived subgroup.
  GroupHom h =
      make_hom(g, g, {g->inv(g->gen(0)), g->inv(g->gen(1)), g->gen(2)});
  CHECK(is_isomorphism(h));
  // A bad assignment must throw: send c to the identity but keep a, b.
  CHECK_THROWS_AS(make_hom(g, g, {g->gen(0), g->gen(1), g->id()}),
                  std::runtime_error);
}

TEST_CASE("direct and central products of extraspecial groups") {
  auto e1 = heisenberg(3);
  auto e2 = heisenberg(3);
  auto d = direct_product(e1, e2);
  CHECK(d.q->order() == 729);
  CHECK(center(d.q).order == 9);
  // identify the two central generators
  auto cp = central_product(e1, e2, {{e1->gen(2), e2->gen(2)}});
  CHECK(cp.q->order() == 243);
  CHECK(center(cp.q).order == 3);
  CHECK(derived_subgroup(cp.q).order == 3);
  // the embeddings commute elementwise with each other
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(cp.q->is_id(
          cp.q->comm(cp.embed_a.img[i], cp.embed_b.img[j])));
}
