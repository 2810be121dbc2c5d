#include "cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace tgrip {

Cocycle zero_cocycle(PcGroupPtr q, i64 mod) {
  return Cocycle{std::move(q), mod,
                 [](const Elt&, const Elt&) -> i64 { return 0; }};
}

Cocycle cocycle_add(const Cocycle& a, const Cocycle& b) {
  if (a.q != b.q || a.mod != b.mod)
    throw std::invalid_argument("cocycle_add: mismatched base or modulus");
  i64 m = a.mod;
  auto fa = a.f, fb = b.f;
  return Cocycle{a.q, m, [fa, fb, m](const Elt& x, const Elt& y) {
                   return mod_norm(fa(x, y) + fb(x, y), m);
                 }};
}

Cocycle cocycle_sub(const Cocycle& a, const Cocycle& b) {
  if (a.q != b.q || a.mod != b.mod)
    throw std::invalid_argument("cocycle_sub: mismatched base or modulus");
  i64 m = a.mod;
  auto fa = a.f, fb = b.f;
  return Cocycle{a.q, m, [fa, fb, m](const Elt& x, const Elt& y) {
                   return mod_norm(fa(x, y) - fb(x, y), m);
                 }};
}

Cocycle rescale_cocycle(const Cocycle& a, i64 bigger) {
  if (bigger % a.mod != 0)
    throw std::invalid_argument("rescale_cocycle: modulus must divide");
  i64 s = bigger / a.mod;
  auto fa = a.f;
  return Cocycle{a.q, bigger, [fa, s](const Elt& x, const Elt& y) {
                   return fa(x, y) * s;
                 }};
}

Cocycle coboundary(PcGroupPtr q, i64 mod,
                   std::function<i64(const Elt&)> mu) {
  if (mu(q->id()) % mod != 0)
    throw std::invalid_argument("coboundary: mu(id) must vanish");
  auto qq = q;
  return Cocycle{q, mod, [qq, mod, mu](const Elt& x, const Elt& y) {
                   return mod_norm(mu(x) + mu(y) - mu(qq->mul(x, y)), mod);
                 }};
}

bool is_cocycle(const Cocycle& a, i64 max_order) {
  const auto& q = a.q;
  if (q->order() > max_order)
    throw std::invalid_argument("is_cocycle: group too large for full check");
  auto els = q->elements();
  for (auto& x : els) {
    if (a(q->id(), x) != 0 || a(x, q->id()) != 0) return false;
    for (auto& y : els) {
      Elt xy = q->mul(x, y);
      for (auto& z : els)
        if (mod_norm(a(x, y) + a(xy, z) - a(y, z) - a(x, q->mul(y, z)),
                     a.mod) != 0)
          return false;
    }
  }
  return true;
}

int ntails(const PcGroupPtr& q) {
  int n = q->ngens();
  return n + n * (n - 1) / 2;
}

int pow_slot(const PcGroupPtr& q, int i) {
  (void)q;
  return i;
}

int comm_slot(const PcGroupPtr& q, int j, int i) {
  // slots after the powers, ordered by i then j
  int n = q->ngens();
  int idx = n;
  for (int ii = 0; ii < i; ++ii) idx += n - 1 - ii;
  return idx + (j - i - 1);
}

namespace {

// Twisted pair arithmetic for a factor set: elements (q, a) multiply as
// (q1, a1)(q2, a2) = (q1 q2, a1 + a2 + f(q1, q2)).
struct Twisted {
  const Cocycle& c;
  using P = std::pair<Elt, i64>;
  P one() const { return {c.q->id(), 0}; }
  P of(const Elt& x) const { return {x, 0}; }
  P mul(const P& x, const P& y) const {
    return {c.q->mul(x.first, y.first),
            mod_norm(x.second + y.second + c(x.first, y.first), c.mod)};
  }
  P inv(const P& x) const {
    Elt qi = c.q->inv(x.first);
    return {qi, mod_norm(-x.second - c(x.first, qi), c.mod)};
  }
  // Section evaluation of a normal form: ascending generator powers.
  P of_normal_form(const Elt& w) const {
    P acc = one();
    for (int t = 0; t < c.q->ngens(); ++t)
      for (int32_t s = 0; s < w.e[t]; ++s) acc = mul(acc, of(c.q->gen(t)));
    return acc;
  }
};

}  // namespace

Vec tails_of_cocycle(const Cocycle& a) {
  const auto& q = a.q;
  Twisted tw{a};
  Vec t(ntails(q), 0);
  int n = q->ngens();
  for (int i = 0; i < n; ++i) {
    auto lhs = tw.one();
    for (i64 s = 0; s < q->rel_order(i); ++s) lhs = tw.mul(lhs, tw.of(q->gen(i)));
    auto rhs = tw.of_normal_form(q->power_word(i));
    if (!(lhs.first == rhs.first))
      throw std::logic_error("tails: power relation escaped its normal form");
    t[pow_slot(q, i)] = mod_norm(lhs.second - rhs.second, a.mod);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto x = tw.of(q->gen(j)), y = tw.of(q->gen(i));
      auto lhs = tw.mul(tw.mul(tw.inv(x), tw.inv(y)), tw.mul(x, y));
      auto rhs = tw.of_normal_form(q->comm_word(j, i));
      if (!(lhs.first == rhs.first))
        throw std::logic_error("tails: commutator escaped its normal form");
      t[comm_slot(q, j, i)] = mod_norm(lhs.second - rhs.second, a.mod);
    }
  return t;
}

namespace {

PcGroupPtr extension_group(const PcGroupPtr& q, i64 e, const Vec& tails,
                           bool certify) {
  int n = q->ngens();
  if ((int)tails.size() != ntails(q))
    throw std::invalid_argument("extension: tail vector length");
  std::vector<i64> r = q->rel_orders();
  r.push_back(e);
  PcGroupBuilder b(r);
  for (int i = 0; i < n; ++i) b.name(i, q->gen_name(i));
  b.name(n, "z");
  auto word_of = [&](const Elt& w, i64 tail) {
    Word out;
    for (int t = 0; t < n; ++t)
      if (w.e[t] != 0) out.push_back({t, w.e[t]});
    if (mod_norm(tail, e) != 0) out.push_back({n, mod_norm(tail, e)});
    return out;
  };
  for (int i = 0; i < n; ++i)
    b.power(i, word_of(q->power_word(i), tails[pow_slot(q, i)]));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      b.comm(j, i, word_of(q->comm_word(j, i), tails[comm_slot(q, j, i)]));
  return certify ? b.build_derived() : b.build(false);
}

}  // namespace

CentralExtension central_extension(PcGroupPtr q, i64 e, const Vec& tails) {
  if (e < 2) throw std::invalid_argument("central_extension: kernel order");
  CentralExtension out;
  out.base = q;
  out.mod = e;
  out.e = extension_group(q, e, tails, /*certify=*/true);
  int n = q->ngens();
  std::vector<Elt> img;
  for (int i = 0; i < n; ++i) img.push_back(q->gen(i));
  img.push_back(q->id());
  out.proj = make_hom(out.e, q, img);
  out.z = out.e->gen(n);
  auto eg = out.e;
  out.lift = [eg, n](const Elt& x) {
    std::vector<i64> exps(n + 1, 0);
    for (int t = 0; t < n; ++t) exps[t] = x.e[t];
    return eg->from_exps(exps);
  };
  return out;
}

TailSpace::TailSpace(PcGroupPtr q, i64 e) : q_(std::move(q)), e_(e) {
  m_ = ntails(q_);
  if (e_ < 0 || (e_ > 1 && !prime_power(e_, nullptr, nullptr)))
    throw std::invalid_argument("tail space: modulus must be a prime power");
  if (e_ <= 1) {
    e_ = 1;
    return;
  }
  // Overlap discrepancies are linear in the tails; read the columns off unit
  // tail vectors.  The zero extension is the direct product, so there is no
  // constant term.
  int n = q_->ngens();
  std::vector<std::vector<std::pair<Elt, Elt>>> unit_pairs;
  for (int j = 0; j < m_; ++j) {
    Vec t(m_, 0);
    t[j] = 1;
    unit_pairs.push_back(
        extension_group(q_, e_, t, /*certify=*/false)->overlap_pairs());
  }
  size_t npairs = unit_pairs[0].size();
  constraints_.assign(npairs, Vec(m_, 0));
  for (int j = 0; j < m_; ++j)
    for (size_t r = 0; r < npairs; ++r) {
      auto& [lhs, rhs] = unit_pairs[j][r];
      for (int t = 0; t < n; ++t)
        if (lhs.e[t] != rhs.e[t])
          throw std::logic_error("tail space: overlap left the kernel");
      constraints_[r][j] = mod_norm(lhs.e[n] - rhs.e[n], e_);
    }
  zgens_ = kernel_mod(constraints_, m_, e_);
  zsize_ = span_size_mod(zgens_, m_, e_);
  // Section changes: moving generator lifts by z^c turns into coboundaries of
  // the exponent functionals, so their tails span B.
  for (int i = 0; i < n; ++i) {
    auto mu = [i](const Elt& x) -> i64 { return x.e[i]; };
    bgens_.push_back(tails_of_cocycle(coboundary(q_, e_, mu)));
    if (!consistent(bgens_.back()))
      throw std::logic_error("tail space: coboundary tails inconsistent");
  }
  bsize_ = span_size_mod(bgens_, m_, e_);
}

bool TailSpace::consistent(const Vec& tails) const {
  if (e_ == 1) return true;
  for (auto& row : constraints_) {
    i64 s = 0;
    for (int j = 0; j < m_; ++j) s = mod_norm(s + row[j] * tails[j], e_);
    if (s != 0) return false;
  }
  return true;
}

bool TailSpace::trivial_class(const Vec& tails) const {
  if (e_ == 1) return true;
  return row_in_span_mod(tails, bgens_, m_, e_);
}

bool TailSpace::same_class(const Vec& s, const Vec& t) const {
  if (e_ == 1) return true;
  Vec d(m_);
  for (int j = 0; j < m_; ++j) d[j] = mod_norm(s[j] - t[j], e_);
  return trivial_class(d);
}

namespace {

// Invariant factors of an abelian p-group from its filtration sizes
// s_j = |p^j A|: the ratio s_j / s_{j+1} counts the factors of order > p^j,
// and conjugating that partition recovers the factor orders.
std::vector<i64> invariants_from_filtration(const std::vector<i64>& sizes,
                                            i64 p) {
  std::vector<int> counts;
  for (size_t j = 0; j + 1 < sizes.size(); ++j) {
    i64 ratio = sizes[j] / sizes[j + 1];
    int c = 0;
    while (ratio > 1) {
      if (ratio % p != 0)
        throw std::logic_error("invariants: filtration ratio not a p-power");
      ratio /= p;
      ++c;
    }
    counts.push_back(c);
  }
  std::vector<i64> out;
  if (!counts.empty())
    for (int t = 0; t < counts[0]; ++t) {
      i64 ord = 1;
      for (size_t j = 0; j < counts.size(); ++j)
        if (counts[j] > t) ord *= p;
      out.push_back(ord);
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<i64> TailSpace::h2_filtration() const {
  if (e_ == 1) return {1};
  i64 p;
  int k;
  prime_power(e_, &p, &k);
  std::vector<i64> sizes;
  i64 pj = 1;
  for (;;) {
    Mat rows = bgens_;
    for (auto r : zgens_) {
      for (auto& x : r) x = mod_norm(x * pj, e_);
      rows.push_back(r);
    }
    sizes.push_back(span_size_mod(rows, m_, e_) / bsize_);
    if (sizes.back() == 1) break;
    pj *= p;
  }
  return sizes;
}

std::vector<i64> TailSpace::h2_invariants() const {
  if (e_ == 1) return {};
  i64 p;
  prime_power(e_, &p, nullptr);
  return invariants_from_filtration(h2_filtration(), p);
}

std::vector<i64> h2_invariants(PcGroupPtr q, i64 e) {
  return TailSpace(std::move(q), e).h2_invariants();
}

namespace {

// Extension by several central coordinates at once: generator i of the kernel
// gets relative order dims[i], and relation slot s picks up the tail
// prod_i w_i^(tails[i][s]).  Each tail vector is consistent on its own and
// the coordinates never interact, so the joint presentation is consistent.
PcGroupPtr multi_extension_group(const PcGroupPtr& q,
                                 const std::vector<i64>& dims,
                                 const std::vector<Vec>& tails) {
  int n = q->ngens(), k = (int)dims.size();
  std::vector<i64> r = q->rel_orders();
  for (i64 d : dims) r.push_back(d);
  PcGroupBuilder b(r);
  for (int i = 0; i < n; ++i) b.name(i, q->gen_name(i));
  for (int i = 0; i < k; ++i) b.name(n + i, "w" + std::to_string(i + 1));
  auto word_of = [&](const Elt& w, int slot) {
    Word out;
    for (int t = 0; t < n; ++t)
      if (w.e[t] != 0) out.push_back({t, w.e[t]});
    for (int i = 0; i < k; ++i) {
      i64 v = mod_norm(tails[i][slot], dims[i]);
      if (v != 0) out.push_back({n + i, v});
    }
    return out;
  };
  for (int i = 0; i < n; ++i)
    b.power(i, word_of(q->power_word(i), pow_slot(q, i)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      b.comm(j, i, word_of(q->comm_word(j, i), comm_slot(q, j, i)));
  return b.build_derived();
}

}  // namespace

SchurCover schur_cover(PcGroupPtr q) {
  SchurCover out;
  out.base = q;
  auto m = schur_multiplier(q);
  int n = q->ngens();
  if (m.empty()) {
    out.e = q;
    out.z = trivial_subgroup(q);
    std::vector<Elt> img;
    for (int i = 0; i < n; ++i) img.push_back(q->gen(i));
    out.proj = make_hom(q, q, img);
    return out;
  }
  int k = (int)m.size();
  i64 e = m.back();
  i64 msize = 1;
  for (i64 d : m) msize *= d;
  TailSpace ts(q, e);
  int nt = ntails(q);
  // Classes generating H^2(Q, Z/e); subsets of them project onto generating
  // sets of the multiplier, which the verification below recognises.
  Mat reach = ts.b_gens();
  std::vector<Vec> cands;
  for (const auto& zv : ts.z_gens())
    if (!row_in_span_mod(zv, reach, nt, e)) {
      reach.push_back(zv);
      cands.push_back(zv);
    }
  auto attempt = [&](const std::vector<Vec>& pick) -> bool {
    auto eg = multi_extension_group(q, m, pick);
    std::vector<Elt> ws;
    for (int i = 0; i < k; ++i) ws.push_back(eg->gen(n + i));
    auto zz = igs_close(eg, ws);
    if (zz.order != msize || !is_central(zz)) return false;
    if (!subgroup_le(zz, derived_subgroup(eg))) return false;
    if (abelian_invariants(zz) != m) return false;
    std::vector<Elt> img;
    for (int i = 0; i < n; ++i) img.push_back(q->gen(i));
    for (int i = 0; i < k; ++i) img.push_back(q->id());
    out.e = eg;
    out.z = zz;
    out.proj = make_hom(eg, q, img);
    return true;
  };
  // k-subsets of the candidates, in lexicographic order; if none lands on a
  // complement of the Ext part, widen the pool by pairwise sums and retry.
  for (int round = 0; round < 2; ++round) {
    int c = (int)cands.size();
    std::vector<int> idx(k);
    std::function<bool(int, int)> rec = [&](int pos, int from) {
      if (pos == k) {
        std::vector<Vec> pick;
        for (int i : idx) pick.push_back(cands[i]);
        return attempt(pick);
      }
      for (int i = from; i < c; ++i) {
        idx[pos] = i;
        if (rec(pos + 1, i + 1)) return true;
      }
      return false;
    };
    if (c >= k && rec(0, 0)) return out;
    std::vector<Vec> wider = cands;
    for (size_t a = 0; a < cands.size(); ++a)
      for (size_t b2 = a + 1; b2 < cands.size(); ++b2) {
        Vec s(nt);
        for (int t = 0; t < nt; ++t)
          s[t] = mod_norm(cands[a][t] + cands[b2][t], e);
        wider.push_back(s);
      }
    cands = std::move(wider);
  }
  throw std::logic_error("schur_cover: no tail class combination works");
}

std::vector<i64> schur_multiplier(PcGroupPtr q) {
  i64 p;
  int k;
  if (!prime_power(q->order(), &p, &k)) {
    if (q->order() == 1) return {};
    throw std::invalid_argument("schur_multiplier: p-groups only");
  }
  auto qab = abelianization(q);
  std::vector<i64> prev;
  bool have_prev = false;
  for (i64 e = p;; e *= p) {
    TailSpace ts(q, e);
    // Universal coefficients split |p^j H2(Z/e)| into the Ext part of the
    // abelianisation times |p^j M|; dividing the filtrations leaves the
    // multiplier M.  Once e reaches exp(M) the reported group stops growing,
    // and two equal consecutive reads certify stabilisation.
    auto h2sizes = ts.h2_filtration();
    std::vector<i64> msizes;
    i64 pj = 1;
    for (auto h2j : h2sizes) {
      i64 extj = 1;
      for (i64 d : qab) {
        i64 g = gcd64(d, e);
        extj *= std::max<i64>(g / gcd64(pj, g), 1);
      }
      if (h2j % extj != 0)
        throw std::logic_error("schur_multiplier: Ext part does not divide");
      msizes.push_back(h2j / extj);
      pj *= p;
    }
    while (msizes.size() > 1 && msizes[msizes.size() - 2] == 1)
      msizes.pop_back();
    auto inv = invariants_from_filtration(msizes, p);
    if (have_prev && inv == prev) return inv;
    prev = std::move(inv);
    have_prev = true;
    if (e > q->order() * q->order())
      throw std::logic_error("schur_multiplier: failed to stabilise");
  }
}

Cocycle cocycle_from_tails(PcGroupPtr q, i64 e, const Vec& tails) {
  if (e == 1) return zero_cocycle(q, 1);
  auto ext = central_extension(q, e, tails);
  int n = q->ngens();
  auto eg = ext.e;
  auto lift = ext.lift;
  return Cocycle{q, e, [eg, lift, n](const Elt& x, const Elt& y) -> i64 {
                   return eg->mul(lift(x), lift(y)).e[n];
                 }};
}

Cocycle transgress(const Character& chi, const CentralQuotient& cq) {
  i64 e = chi.dual.exponent();
  auto c = chi;
  auto qu = cq;
  return Cocycle{cq.q, e, [qu, c](const Elt& x, const Elt& y) {
                   const auto& par = qu.parent;
                   Elt k = par->mul(par->mul(qu.lift(x), qu.lift(y)),
                                    par->inv(qu.lift(qu.q->mul(x, y))));
                   return c.eval(k);
                 }};
}

Cocycle inflate(const Cocycle& a, const CentralQuotient& cq) {
  if (a.q != cq.q)
    throw std::invalid_argument("inflate: cocycle not on the quotient");
  auto qu = cq;
  auto fa = a.f;
  return Cocycle{cq.parent, a.mod, [qu, fa](const Elt& x, const Elt& y) {
                   return fa(qu.proj(x), qu.proj(y));
                 }};
}

Cocycle pullback(const Cocycle& a, const GroupHom& phi) {
  if (phi.dst != a.q)
    throw std::invalid_argument("pullback: homomorphism target mismatch");
  auto fa = a.f;
  auto h = phi;
  return Cocycle{phi.src, a.mod, [fa, h](const Elt& x, const Elt& y) {
                   return fa(h.apply(x), h.apply(y));
                 }};
}

bool cohomologous(const Cocycle& a, const Cocycle& b) {
  if (a.q != b.q || a.mod != b.mod)
    throw std::invalid_argument("cohomologous: mismatched base or modulus");
  TailSpace ts(a.q, a.mod);
  return ts.same_class(tails_of_cocycle(a), tails_of_cocycle(b));
}

bool is_trivial_over_Cx(const Cocycle& a) {
  if (a.mod == 1) return true;
  auto ext = central_extension(a.q, a.mod, tails_of_cocycle(a));
  Subgroup kernel = igs_close(ext.e, {ext.z});
  Subgroup der = derived_subgroup(ext.e);
  return intersect(kernel, der).order == 1;
}

bool cohomologous_over_Cx(const Cocycle& a, const Cocycle& b) {
  return is_trivial_over_Cx(cocycle_sub(a, b));
}

}  // namespace tgrip
