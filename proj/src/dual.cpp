#include "dual.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tgrip {

AbelianDual::AbelianDual(const Subgroup& a) {
  if (!is_abelian(a)) throw std::invalid_argument("dual: subgroup not abelian");
  auto d = std::make_shared<Data>();
  d->a = a;
  int n = (int)a.igs.size();
  // Chain relation matrix: row t says rel[t]*s_t = coords of s_t^rel[t].
  Mat rels(n, Vec(n, 0));
  for (int t = 0; t < n; ++t) {
    Elt pw = a.g->pow(a.igs[t], a.rel[t]);
    auto c = strip(a, pw);
    if (!c) throw std::logic_error("dual: chain power escaped the subgroup");
    for (int u = 0; u < n; ++u) rels[t][u] = -(*c)[u];
    rels[t][t] += a.rel[t];
  }
  auto snf = snf_with_transform(rels, n);
  d->exponent = 1;
  d->size = 1;
  for (int i = 0; i < n; ++i) {
    i64 di = snf.diag[i];
    if (di == 0) throw std::logic_error("dual: infinite invariant");
    if (di == 1) continue;
    d->inv.push_back(di);
    d->cols.push_back(i);
    Elt b = a.g->id();
    for (int t = 0; t < n; ++t)
      b = a.g->mul(b, a.g->pow(a.igs[t], snf.vinv[i][t]));
    if (a.g->elt_order(b) != di)
      throw std::logic_error("dual: basis element has wrong order");
    d->basis.push_back(b);
    d->exponent = di;  // divisibility-ascending: last one is the exponent
    d->size *= di;
  }
  d->v = std::move(snf.v);
  if (d->size != a.order) throw std::logic_error("dual: size mismatch");
  d_ = std::move(d);
  // Round trip on the basis certifies coords() against from_coords().
  for (size_t i = 0; i < d_->basis.size(); ++i) {
    Vec e(d_->basis.size(), 0);
    e[i] = 1;
    if (coords(d_->basis[i]) != e)
      throw std::logic_error("dual: basis coordinates are off");
  }
}

Vec AbelianDual::coords(const Elt& x) const {
  auto c = strip(d_->a, x);
  if (!c) throw std::invalid_argument("dual: element not in the subgroup");
  int n = (int)d_->a.igs.size();
  Vec out(d_->inv.size(), 0);
  for (size_t j = 0; j < d_->inv.size(); ++j) {
    i64 y = 0;
    for (int t = 0; t < n; ++t) y += (*c)[t] * d_->v[t][d_->cols[j]];
    out[j] = mod_norm(y, d_->inv[j]);
  }
  return out;
}

Elt AbelianDual::from_coords(const Vec& t) const {
  if (t.size() != d_->basis.size())
    throw std::invalid_argument("dual: coordinate length mismatch");
  Elt x = d_->a.g->id();
  for (size_t i = 0; i < t.size(); ++i)
    x = d_->a.g->mul(x, d_->a.g->pow(d_->basis[i], t[i]));
  return x;
}

i64 Character::eval(const Elt& x) const {
  Vec c = dual.coords(x);
  i64 e = dual.exponent();
  i64 v = 0;
  for (size_t i = 0; i < c.size(); ++i)
    v = mod_norm(v + c[i] * (t[i] * (e / dual.invariants()[i]) % e), e);
  return v;
}

i64 Character::eval_mod(const Elt& x, i64 m) const {
  i64 e = dual.exponent();
  if (m % e != 0)
    throw std::invalid_argument("character: modulus not divisible by exponent");
  return eval(x) * (m / e);
}

i64 Character::order() const {
  i64 o = 1;
  for (size_t i = 0; i < t.size(); ++i) {
    i64 d = dual.invariants()[i];
    o = lcm64(o, d / gcd64(d, t[i]));
  }
  return o;
}

Character trivial_character(const AbelianDual& dual) {
  return Character{dual, Vec(dual.invariants().size(), 0)};
}

Character character_at(const AbelianDual& dual, i64 index) {
  if (index < 0 || index >= dual.size())
    throw std::invalid_argument("character_at: index out of range");
  Vec t(dual.invariants().size(), 0);
  for (size_t i = 0; i < t.size(); ++i) {
    t[i] = index % dual.invariants()[i];
    index /= dual.invariants()[i];
  }
  return Character{dual, std::move(t)};
}

i64 character_index(const Character& chi) {
  i64 idx = 0;
  for (size_t i = chi.t.size(); i-- > 0;)
    idx = idx * chi.dual.invariants()[i] + chi.t[i];
  return idx;
}

Character char_mul(const Character& x, const Character& y) {
  if (!x.dual.same_as(y.dual))
    throw std::invalid_argument("char_mul: characters of different groups");
  Character out = x;
  for (size_t i = 0; i < out.t.size(); ++i)
    out.t[i] = mod_norm(out.t[i] + y.t[i], x.dual.invariants()[i]);
  return out;
}

Character char_inv(const Character& x) {
  Character out = x;
  for (size_t i = 0; i < out.t.size(); ++i)
    out.t[i] = mod_norm(-out.t[i], x.dual.invariants()[i]);
  return out;
}

Character char_pow(const Character& x, i64 k) {
  Character out = x;
  for (size_t i = 0; i < out.t.size(); ++i)
    out.t[i] = mod_norm(out.t[i] * mod_norm(k, x.dual.invariants()[i]),
                        x.dual.invariants()[i]);
  return out;
}

Subgroup char_kernel(const Character& chi) {
  const auto& dual = chi.dual;
  i64 e = dual.exponent();
  if (e == 1) return dual.group();
  Vec vals(chi.t.size());
  for (size_t i = 0; i < chi.t.size(); ++i)
    vals[i] = chi.t[i] * (e / dual.invariants()[i]) % e;
  Mat gens = kernel_mod({vals}, (int)vals.size(), e);
  std::vector<Elt> elts;
  for (auto& row : gens) {
    Vec t(row.size());
    for (size_t i = 0; i < row.size(); ++i)
      t[i] = mod_norm(row[i], dual.invariants()[i]);
    elts.push_back(dual.from_coords(t));
  }
  Subgroup k = igs_close(dual.group().g, elts);
  if (k.order * chi.order() != dual.size())
    throw std::logic_error("char_kernel: order count is off");
  return k;
}

bool is_faithful(const Character& chi) { return char_kernel(chi).order == 1; }

Character restrict_character(const Character& chi, const AbelianDual& sub) {
  i64 eb = chi.dual.exponent();
  i64 es = sub.exponent();
  if (eb % es != 0)
    throw std::invalid_argument("restrict_character: incompatible exponents");
  Character out{sub, Vec(sub.invariants().size(), 0)};
  for (size_t j = 0; j < sub.basis().size(); ++j) {
    i64 v = chi.eval(sub.basis()[j]);  // also certifies sub <= chi's group
    i64 scale = eb / es;
    if (v % scale != 0)
      throw std::logic_error("restrict_character: value escapes the subgroup");
    i64 vs = v / scale;  // value in Z/es
    i64 step = es / sub.invariants()[j];
    if (vs % step != 0)
      throw std::logic_error("restrict_character: value has too large order");
    out.t[j] = vs / step;
  }
  return out;
}

std::vector<Character> extend_characters(const Character& chi,
                                         const AbelianDual& big) {
  i64 e = big.exponent();
  int n = (int)big.invariants().size();
  i64 ebs = chi.dual.exponent();
  if (ebs != 1 && e % ebs != 0)
    throw std::invalid_argument("extend_characters: incompatible exponents");
  // Unknowns w_i in Z/e with w_i a multiple of e/d_i; each basis element of
  // the small subgroup pins down one linear condition.
  Mat lhs;
  Vec rhs;
  for (int i = 0; i < n; ++i) {
    Vec row(n, 0);
    row[i] = big.invariants()[i];
    lhs.push_back(std::move(row));
    rhs.push_back(0);
  }
  for (size_t j = 0; j < chi.dual.basis().size(); ++j) {
    lhs.push_back(big.coords(chi.dual.basis()[j]));
    i64 vj = chi.t[j] * (ebs / chi.dual.invariants()[j]) % ebs;
    rhs.push_back(vj * (e / ebs));
  }
  // Trivial big group (then the small one is trivial too).
  if (e == 1) return {trivial_character(big)};
  auto part = solve_mod(lhs, rhs, n, e);
  if (!part)
    throw std::logic_error("extend_characters: no extension found");
  Mat hom = kernel_mod(lhs, n, e);
  auto to_t = [&](const Vec& w) {
    Vec t(n);
    for (int i = 0; i < n; ++i) {
      i64 wi = mod_norm(w[i], e);
      i64 step = e / big.invariants()[i];
      if (wi % step != 0)
        throw std::logic_error("extend_characters: torsion constraint broken");
      t[i] = wi / step;
    }
    return t;
  };
  std::set<Vec> seen;
  seen.insert(to_t(*part));
  for (;;) {
    std::set<Vec> next = seen;
    for (auto& t : seen)
      for (auto& h : hom) {
        Vec w(n);
        for (int i = 0; i < n; ++i)
          w[i] = t[i] * (e / big.invariants()[i]) + h[i];
        next.insert(to_t(w));
      }
    if (next.size() == seen.size()) break;
    seen = std::move(next);
  }
  i64 expect = big.size() / chi.dual.size();
  if ((i64)seen.size() != expect)
    throw std::logic_error("extend_characters: wrong number of extensions");
  std::vector<Character> out;
  for (auto& t : seen) out.push_back(Character{big, t});
  return out;
}

Character conj_character(const Character& chi, const Elt& g) {
  const auto& dual = chi.dual;
  const auto& gg = dual.group().g;
  i64 e = dual.exponent();
  Character out{dual, Vec(dual.invariants().size(), 0)};
  Elt gi = gg->inv(g);
  for (size_t i = 0; i < dual.basis().size(); ++i) {
    // conj(x, h) = h^-1 x h, so g b g^-1 = conj(b, g^-1).
    i64 v = chi.eval(gg->conj(dual.basis()[i], gi));
    i64 step = e / dual.invariants()[i];
    if (v % step != 0)
      throw std::logic_error("conj_character: conjugate has too large order");
    out.t[i] = v / step;
  }
  return out;
}

}  // namespace tgrip
