#include "subgroup.hpp"

#include <algorithm>

namespace tgrip {

namespace {

i64 ipow(i64 p, int v) {
  i64 r = 1;
  while (v-- > 0) r *= p;
  return r;
}

// Echelon sieve over leading indices.  Each occupied slot i holds an element
// of depth i whose leading exponent is exactly p^v for some v; inserting is
// noncommutative Gaussian elimination along the generator chain.
struct Sieve {
  PcGroupPtr g;
  std::vector<std::optional<Elt>> slot;
  std::vector<int> vexp;
  std::vector<i64> pp;
  std::vector<int> kk;
  bool changed = false;

  explicit Sieve(PcGroupPtr gp) : g(std::move(gp)) {
    int n = g->ngens();
    slot.resize(n);
    vexp.assign(n, 0);
    pp.resize(n);
    kk.resize(n);
    for (int i = 0; i < n; ++i) {
      i64 p;
      int k;
      if (!prime_power(g->rel_order(i), &p, &k))
        throw std::invalid_argument("igs: relative orders must be prime powers");
      pp[i] = p;
      kk[i] = k;
    }
  }

  // Power x up by a unit so its leading exponent becomes p^v exactly.
  Elt normalize(const Elt& x, int i, int v) const {
    i64 u = x.e[i] / ipow(pp[i], v);
    i64 m = ipow(pp[i], kk[i] - v);
    i64 c = inv_mod(mod_norm(u, m), m);
    return g->pow(x, c);
  }

  void insert(Elt x) {
    for (;;) {
      int i = g->depth(x);
      if (i == g->ngens()) return;
      int v = val_p(x.e[i], pp[i], kk[i]);
      if (!slot[i]) {
        slot[i] = normalize(x, i, v);
        vexp[i] = v;
        changed = true;
        return;
      }
      if (v < vexp[i]) {
        // x is the better pivot at this depth; displace and re-insert.
        Elt old = *slot[i];
        slot[i] = normalize(x, i, v);
        vexp[i] = v;
        changed = true;
        x = old;
        continue;
      }
      i64 c = x.e[i] / ipow(pp[i], vexp[i]);
      x = g->mul(x, g->pow(*slot[i], -c));
    }
  }
};

}  // namespace

Subgroup igs_close(PcGroupPtr g, const std::vector<Elt>& gens) {
  Sieve sv(g);
  for (auto& x : gens) sv.insert(x);
  // Close under chain powers and pairwise commutators so that stripping is
  // complete and the slot chain is subnormal with cyclic quotients.
  for (;;) {
    sv.changed = false;
    for (int i = 0; i < g->ngens(); ++i) {
      if (!sv.slot[i]) continue;
      i64 m = ipow(sv.pp[i], sv.kk[i] - sv.vexp[i]);
      sv.insert(g->pow(*sv.slot[i], m));
    }
    for (int i = 0; i < g->ngens(); ++i)
      for (int j = i + 1; j < g->ngens(); ++j)
        if (sv.slot[i] && sv.slot[j])
          sv.insert(g->comm(*sv.slot[j], *sv.slot[i]));
    if (!sv.changed) break;
  }
  Subgroup s;
  s.g = g;
  for (int i = 0; i < g->ngens(); ++i) {
    if (!sv.slot[i]) continue;
    s.igs.push_back(*sv.slot[i]);
    s.lead.push_back(i);
    i64 m = ipow(sv.pp[i], sv.kk[i] - sv.vexp[i]);
    s.rel.push_back(m);
    s.order *= m;
  }
  return s;
}

Subgroup whole_group(PcGroupPtr g) {
  std::vector<Elt> gens;
  for (int i = 0; i < g->ngens(); ++i) gens.push_back(g->gen(i));
  return igs_close(g, gens);
}

Subgroup trivial_subgroup(PcGroupPtr g) { return igs_close(g, {}); }

std::optional<Vec> strip(const Subgroup& s, const Elt& x0) {
  const PcGroup& g = *s.g;
  Elt x = x0;
  Vec out(s.igs.size(), 0);
  size_t t = 0;
  while (!g.is_id(x)) {
    int d = g.depth(x);
    while (t < s.igs.size() && s.lead[t] < d) ++t;
    if (t == s.igs.size() || s.lead[t] != d) return std::nullopt;
    i64 pv = s.igs[t].e[d];  // p^v by slot normalization
    if (x.e[d] % pv != 0) return std::nullopt;
    i64 c = x.e[d] / pv;
    out[t] = c;
    x = g.mul(g.pow(s.igs[t], -c), x);
  }
  return out;
}

bool contains(const Subgroup& s, const Elt& x) {
  return strip(s, x).has_value();
}

bool subgroup_le(const Subgroup& a, const Subgroup& b) {
  for (auto& x : a.igs)
    if (!contains(b, x)) return false;
  return true;
}

bool subgroup_eq(const Subgroup& a, const Subgroup& b) {
  return a.order == b.order && subgroup_le(a, b);
}

bool is_central(const Subgroup& s) {
  for (auto& x : s.igs)
    for (int i = 0; i < s.g->ngens(); ++i)
      if (!s.g->is_id(s.g->comm(x, s.g->gen(i)))) return false;
  return true;
}

bool is_normal(const Subgroup& s) {
  for (auto& x : s.igs)
    for (int i = 0; i < s.g->ngens(); ++i)
      if (!contains(s, s.g->conj(x, s.g->gen(i)))) return false;
  return true;
}

bool is_abelian(const Subgroup& s) {
  for (size_t a = 0; a < s.igs.size(); ++a)
    for (size_t b = a + 1; b < s.igs.size(); ++b)
      if (!s.g->is_id(s.g->comm(s.igs[a], s.igs[b]))) return false;
  return true;
}

std::vector<Elt> materialize(const Subgroup& s) {
  if (s.order > (1 << 20))
    throw std::runtime_error("materialize: subgroup too large");
  std::vector<Elt> out{s.g->id()};
  for (int t = (int)s.igs.size() - 1; t >= 0; --t) {
    std::vector<Elt> next;
    next.reserve((size_t)(out.size() * s.rel[t]));
    Elt acc = s.g->id();
    for (i64 c = 0; c < s.rel[t]; ++c) {
      for (auto& y : out) next.push_back(s.g->mul(acc, y));
      if (c + 1 < s.rel[t]) acc = s.g->mul(acc, s.igs[t]);
    }
    out = std::move(next);
  }
  if ((i64)out.size() != s.order)
    throw std::runtime_error("materialize: size mismatch");
  return out;
}

Subgroup normal_closure(PcGroupPtr g, const std::vector<Elt>& gens) {
  Subgroup s = igs_close(g, gens);
  for (;;) {
    std::vector<Elt> all = s.igs;
    for (auto& x : s.igs)
      for (int i = 0; i < g->ngens(); ++i)
        all.push_back(g->conj(x, g->gen(i)));
    Subgroup s2 = igs_close(g, all);
    if (s2.order == s.order) return s2;
    s = s2;
  }
}

Subgroup derived_subgroup(PcGroupPtr g) {
  std::vector<Elt> comms;
  for (int i = 0; i < g->ngens(); ++i)
    for (int j = i + 1; j < g->ngens(); ++j)
      comms.push_back(g->comm(g->gen(j), g->gen(i)));
  return normal_closure(g, comms);
}

Subgroup centralizer(PcGroupPtr g, const Elt& x) {
  auto os = orbit_stabilizer(whole_group(g), x, [&](const Elt& pt, const Elt& u) {
    return g->conj(pt, u);
  });
  return os.stab;
}

Subgroup center(PcGroupPtr g) {
  Subgroup s = whole_group(g);
  for (int i = 0; i < g->ngens(); ++i) {
    auto os = orbit_stabilizer(s, g->gen(i), [&](const Elt& pt, const Elt& u) {
      return g->conj(pt, u);
    });
    s = os.stab;
  }
  return s;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  const Subgroup& small = a.order <= b.order ? a : b;
  const Subgroup& big = a.order <= b.order ? b : a;
  std::vector<Elt> kept;
  for (auto& x : materialize(small))
    if (contains(big, x)) kept.push_back(x);
  return igs_close(a.g, kept);
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  std::vector<Elt> gens = a.igs;
  gens.insert(gens.end(), b.igs.begin(), b.igs.end());
  return igs_close(a.g, gens);
}

std::vector<Elt> conj_class(PcGroupPtr g, const Elt& x) {
  auto os = orbit_stabilizer(whole_group(g), x, [&](const Elt& pt, const Elt& u) {
    return g->conj(pt, u);
  });
  return os.orbit;
}

std::vector<std::pair<Elt, i64>> conjugacy_classes(PcGroupPtr g) {
  if (g->order() > (1 << 20))
    throw std::runtime_error("conjugacy_classes: group too large");
  std::vector<char> seen(g->order(), 0);
  std::vector<std::pair<Elt, i64>> out;
  Subgroup whole = whole_group(g);
  for (i64 idx = 0; idx < g->order(); ++idx) {
    if (seen[idx]) continue;
    Elt rep = g->from_index(idx);
    auto os = orbit_stabilizer(whole, rep, [&](const Elt& pt, const Elt& u) {
      return g->conj(pt, u);
    });
    for (auto& y : os.orbit) seen[g->index_of(y)] = 1;
    out.push_back({rep, (i64)os.orbit.size()});
  }
  return out;
}

// ------------------------------------------------------------ quotients ---

Elt CentralQuotient::canon(const Elt& x0) const {
  const PcGroup& g = *parent;
  Elt x = x0;
  for (size_t t = 0; t < kernel.igs.size(); ++t) {
    int i = kernel.lead[t];
    i64 pv = kernel.igs[t].e[i];
    i64 c = x.e[i] / pv;
    if (c != 0) x = g.mul(x, g.pow(kernel.igs[t], -c));
  }
  return x;
}

Elt CentralQuotient::proj(const Elt& x) const {
  Elt c = canon(x);
  std::vector<i64> exps(kept.size());
  for (size_t t = 0; t < kept.size(); ++t) exps[t] = c.e[kept[t]];
  return q->from_exps(exps);
}

Elt CentralQuotient::lift(const Elt& qx) const {
  std::vector<i64> exps(parent->ngens(), 0);
  for (size_t t = 0; t < kept.size(); ++t) exps[kept[t]] = qx.e[t];
  return parent->from_exps(exps);
}

CentralQuotient quotient_central(PcGroupPtr g, const Subgroup& k) {
  if (k.g.get() != g.get())
    throw std::invalid_argument("quotient_central: kernel of another group");
  if (!is_central(k))
    throw std::invalid_argument("quotient_central: kernel is not central");
  CentralQuotient cq;
  cq.parent = g;
  cq.kernel = k;
  int n = g->ngens();
  cq.new_r.resize(n);
  for (int i = 0; i < n; ++i) cq.new_r[i] = g->rel_order(i);
  for (size_t t = 0; t < k.igs.size(); ++t)
    cq.new_r[k.lead[t]] = k.igs[t].e[k.lead[t]];  // leading exponent p^v
  for (int i = 0; i < n; ++i)
    if (cq.new_r[i] >= 2) cq.kept.push_back(i);
  if (cq.kept.empty())
    throw std::invalid_argument("quotient_central: quotient is trivial");

  std::vector<int> pos(n, -1);
  for (size_t t = 0; t < cq.kept.size(); ++t) pos[cq.kept[t]] = (int)t;
  auto to_word = [&](const Elt& x) {
    Word w;
    for (int i = 0; i < n; ++i) {
      if (x.e[i] == 0) continue;
      if (pos[i] < 0)
        throw std::runtime_error("quotient_central: canonical rep hits pruned");
      w.push_back({pos[i], x.e[i]});
    }
    return w;
  };

  std::vector<i64> qr;
  for (int i : cq.kept) qr.push_back(cq.new_r[i]);
  PcGroupBuilder b(qr);
  for (size_t t = 0; t < cq.kept.size(); ++t)
    b.name((int)t, g->gen_name(cq.kept[t]));
  for (size_t t = 0; t < cq.kept.size(); ++t) {
    int i = cq.kept[t];
    Elt pw = cq.canon(g->pow(g->gen(i), cq.new_r[i]));
    if (!g->is_id(pw)) b.power((int)t, to_word(pw));
    for (size_t u = t + 1; u < cq.kept.size(); ++u) {
      int j = cq.kept[u];
      Elt cw = cq.canon(g->comm(g->gen(j), g->gen(i)));
      if (!g->is_id(cw)) b.comm((int)u, (int)t, to_word(cw));
    }
  }
  cq.q = b.build_derived();
  if (cq.q->order() * k.order != g->order())
    throw std::runtime_error("quotient_central: order mismatch");
  // The projection must be a homomorphism restricting to the identity on the
  // quotient generators; make_hom checks every relation of the parent.
  std::vector<Elt> img;
  for (int i = 0; i < n; ++i) img.push_back(cq.proj(g->gen(i)));
  make_hom(g, cq.q, img);
  return cq;
}

Subgroup second_center(PcGroupPtr g) {
  Subgroup z = center(g);
  if (z.order == g->order()) return z;
  auto cq = quotient_central(g, z);
  Subgroup zq = center(cq.q);
  std::vector<Elt> gens = z.igs;
  for (auto& s : zq.igs) gens.push_back(cq.lift(s));
  return igs_close(g, gens);
}

Subgroup noncentral_abelian_normal(PcGroupPtr g) {
  Subgroup z = center(g);
  if (z.order == g->order())
    throw std::invalid_argument("noncentral_abelian_normal: group is abelian");
  auto cq = quotient_central(g, z);
  Subgroup zq = center(cq.q);
  Elt x = cq.lift(zq.igs[0]);
  std::vector<Elt> gens = z.igs;
  gens.push_back(x);
  Subgroup nn = igs_close(g, gens);
  if (!is_abelian(nn) || !is_normal(nn) || nn.order <= z.order)
    throw std::runtime_error("noncentral_abelian_normal: invariant violated");
  return nn;
}

// ------------------------------------------------------- homomorphisms ---

Elt GroupHom::apply(const Elt& x) const {
  Elt z = dst->id();
  for (int i = 0; i < src->ngens(); ++i)
    if (x.e[i] != 0) z = dst->mul(z, dst->pow(img[i], x.e[i]));
  return z;
}

GroupHom make_hom(PcGroupPtr src, PcGroupPtr dst, std::vector<Elt> img) {
  if ((int)img.size() != src->ngens())
    throw std::invalid_argument("make_hom: image count");
  GroupHom h{std::move(src), std::move(dst), std::move(img)};
  for (int i = 0; i < h.src->ngens(); ++i) {
    Elt lhs = h.dst->pow(h.img[i], h.src->rel_order(i));
    if (!(lhs == h.apply(h.src->power_word(i))))
      throw std::runtime_error("make_hom: power relation violated at " +
                               h.src->gen_name(i));
  }
  for (int j = 0; j < h.src->ngens(); ++j)
    for (int i = 0; i < j; ++i) {
      Elt lhs = h.dst->comm(h.img[j], h.img[i]);
      if (!(lhs == h.apply(h.src->comm_word(j, i))))
        throw std::runtime_error("make_hom: commutator relation violated at [" +
                                 h.src->gen_name(j) + "," +
                                 h.src->gen_name(i) + "]");
    }
  return h;
}

bool is_isomorphism(const GroupHom& h) {
  if (h.src->order() != h.dst->order()) return false;
  return igs_close(h.dst, h.img).order == h.dst->order();
}

// --------------------------------------------- presentations of subgroups --

Elt InducedGroup::to_sub(const Elt& x) const {
  auto c = strip(sub, x);
  if (!c) throw std::invalid_argument("to_sub: element outside the subgroup");
  return q->from_exps(*c);
}

InducedGroup induced_presentation(const Subgroup& s) {
  if (s.igs.empty())
    throw std::invalid_argument("induced_presentation: trivial subgroup");
  int t = (int)s.igs.size();
  PcGroupBuilder b(s.rel);
  auto to_word = [&](const Vec& c, int low, const char* what) {
    Word w;
    for (int u = 0; u < t; ++u) {
      if (c[u] == 0) continue;
      if (u <= low) throw std::runtime_error(std::string(what) +
                                             ": chain coefficient too early");
      w.push_back({u, c[u]});
    }
    return w;
  };
  for (int i = 0; i < t; ++i) {
    auto pc = strip(s, s.g->pow(s.igs[i], s.rel[i]));
    if (!pc) throw std::runtime_error("induced_presentation: power escaped");
    Word w = to_word(*pc, i, "induced power");
    if (!w.empty()) b.power(i, w);
    for (int j = i + 1; j < t; ++j) {
      auto cc = strip(s, s.g->comm(s.igs[j], s.igs[i]));
      if (!cc) throw std::runtime_error("induced_presentation: comm escaped");
      Word w2 = to_word(*cc, i, "induced comm");
      if (!w2.empty()) b.comm(j, i, w2);
    }
  }
  InducedGroup ig;
  ig.q = b.build_derived();
  ig.sub = s;
  ig.embed = make_hom(ig.q, s.g, s.igs);
  return ig;
}

std::vector<i64> abelian_invariants(const Subgroup& s) {
  if (!is_abelian(s))
    throw std::invalid_argument("abelian_invariants: subgroup not abelian");
  if (s.igs.empty()) return {};
  int t = (int)s.igs.size();
  Mat rels;
  for (int i = 0; i < t; ++i) {
    auto pc = strip(s, s.g->pow(s.igs[i], s.rel[i]));
    if (!pc) throw std::runtime_error("abelian_invariants: power escaped");
    Vec row(t, 0);
    row[i] = s.rel[i];
    for (int u = 0; u < t; ++u) row[u] -= (*pc)[u];
    rels.push_back(row);
  }
  auto inv = snf_invariants(rels, t);
  for (i64 d : inv)
    if (d == 0) throw std::runtime_error("abelian_invariants: infinite part");
  return inv;
}

std::vector<i64> abelianization(const PcGroupPtr& g) {
  int n = g->ngens();
  Mat rels;
  for (int i = 0; i < n; ++i) {
    Vec row(n, 0);
    row[i] = g->rel_order(i);
    for (int t = 0; t < n; ++t) row[t] -= g->power_word(i).e[t];
    rels.push_back(row);
  }
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      Vec row(n, 0);
      for (int t = 0; t < n; ++t) row[t] = g->comm_word(j, i).e[t];
      rels.push_back(row);
    }
  auto inv = snf_invariants(rels, n);
  for (i64 d : inv)
    if (d == 0) throw std::runtime_error("abelianization: infinite part");
  return inv;
}

// ------------------------------------------------------------- products ---

ProductGroup direct_product(PcGroupPtr a, PcGroupPtr b) {
  int na = a->ngens(), nb = b->ngens();
  std::vector<i64> r;
  for (int i = 0; i < na; ++i) r.push_back(a->rel_order(i));
  for (int i = 0; i < nb; ++i) r.push_back(b->rel_order(i));
  PcGroupBuilder bl(r);
  for (int i = 0; i < na; ++i) bl.name(i, a->gen_name(i));
  for (int i = 0; i < nb; ++i) bl.name(na + i, b->gen_name(i) + "'");
  auto word_of = [](const PcGroup& g, const Elt& x, int shift) {
    Word w;
    for (int i = 0; i < g.ngens(); ++i)
      if (x.e[i] != 0) w.push_back({shift + i, x.e[i]});
    return w;
  };
  for (int i = 0; i < na; ++i) {
    Word w = word_of(*a, a->power_word(i), 0);
    if (!w.empty()) bl.power(i, w);
    for (int j = i + 1; j < na; ++j) {
      Word w2 = word_of(*a, a->comm_word(j, i), 0);
      if (!w2.empty()) bl.comm(j, i, w2);
    }
  }
  for (int i = 0; i < nb; ++i) {
    Word w = word_of(*b, b->power_word(i), na);
    if (!w.empty()) bl.power(na + i, w);
    for (int j = i + 1; j < nb; ++j) {
      Word w2 = word_of(*b, b->comm_word(j, i), na);
      if (!w2.empty()) bl.comm(na + j, na + i, w2);
    }
  }
  ProductGroup pg;
  pg.q = bl.build_derived();
  std::vector<Elt> ia, ib;
  for (int i = 0; i < na; ++i) ia.push_back(pg.q->gen(i));
  for (int i = 0; i < nb; ++i) ib.push_back(pg.q->gen(na + i));
  pg.embed_a = make_hom(a, pg.q, ia);
  pg.embed_b = make_hom(b, pg.q, ib);
  return pg;
}

ProductGroup central_product(PcGroupPtr a, PcGroupPtr b,
                             const std::vector<std::pair<Elt, Elt>>& ids) {
  ProductGroup d = direct_product(a, b);
  std::vector<Elt> kgens;
  for (auto& [x, y] : ids)
    kgens.push_back(
        d.q->mul(d.embed_a.apply(x), d.q->inv(d.embed_b.apply(y))));
  Subgroup k = igs_close(d.q, kgens);
  auto cq = quotient_central(d.q, k);
  ProductGroup pg;
  pg.q = cq.q;
  std::vector<Elt> ia, ib;
  for (int i = 0; i < a->ngens(); ++i)
    ia.push_back(cq.proj(d.embed_a.img[i]));
  for (int i = 0; i < b->ngens(); ++i)
    ib.push_back(cq.proj(d.embed_b.img[i]));
  pg.embed_a = make_hom(a, pg.q, ia);
  pg.embed_b = make_hom(b, pg.q, ib);
  return pg;
}

}  // namespace tgrip
