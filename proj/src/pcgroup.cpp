#include "pcgroup.hpp"

#include <algorithm>

namespace tgrip {

Elt PcGroup::id() const {
  Elt z;
  z.n = n_;
  return z;
}

Elt PcGroup::gen(int i) const {
  Elt z = id();
  z.e[i] = 1;
  return z;
}

int PcGroup::depth(const Elt& x) const {
  for (int i = 0; i < n_; ++i)
    if (x.e[i] != 0) return i;
  return n_;
}

Elt PcGroup::gen_pow(int i, i64 e) const {
  i64 s = mod_norm(e, r_[i]);
  i64 q = (e - s) / r_[i];
  Elt z = id();
  z.e[i] = (int32_t)s;
  if (q != 0) {
    // g_i^e = g_i^s (g_i^{r_i})^q; the power word lives in the tail subgroup,
    // so the two parts concatenate into a normal form directly.
    Elt w = pow(pow_word_[i], q);
    for (int j = i + 1; j < n_; ++j) z.e[j] = w.e[j];
  }
  return z;
}

Elt PcGroup::from_exps(const std::vector<i64>& exps) const {
  if ((int)exps.size() != n_) throw std::invalid_argument("from_exps: arity");
  Elt z = id();
  for (int i = 0; i < n_; ++i) z.e[i] = (int32_t)mod_norm(exps[i], r_[i]);
  return z;
}

const Elt& PcGroup::conj_gen_pow(int i, i64 e, int j) const {
  auto& rows = conj_cache_[i];
  while ((i64)rows.size() < e) {
    std::vector<Elt> row(n_ - i - 1);
    if (rows.empty()) {
      // e = 1: g_j^{g_i} = g_j [g_j, g_i], a product inside the tail.
      for (int t = i + 1; t < n_; ++t)
        row[t - i - 1] = mul(gen(t), comm_word_[t][i]);
    } else {
      // e from e-1 by one more conjugation, applied syllable by syllable.
      const auto& prev = rows.back();
      const auto& base = rows.front();
      for (int t = i + 1; t < n_; ++t) {
        Elt z = id();
        const Elt& src = prev[t - i - 1];
        for (int s = i + 1; s < n_; ++s)
          if (src.e[s] != 0) z = mul(z, pow(base[s - i - 1], src.e[s]));
        row[t - i - 1] = z;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows[e - 1][j - i - 1];
}

Elt PcGroup::mul_syl(const Elt& x, int i, i64 e) const {
  // x * g_i^e with 1 <= e < r_i: split x = u g_i^a t, conjugate the tail t
  // past g_i^e, then resolve the exponent carry with the power word.
  i64 a = x.e[i];
  Elt tail = id();
  bool have_tail = false;
  for (int j = i + 1; j < n_; ++j) {
    if (x.e[j] == 0) continue;
    Elt c = pow(conj_gen_pow(i, e, j), x.e[j]);
    tail = have_tail ? mul(tail, c) : c;
    have_tail = true;
  }
  i64 s = a + e;
  if (s >= r_[i]) {
    s -= r_[i];
    tail = have_tail ? mul(pow_word_[i], tail) : pow_word_[i];
  }
  Elt z = id();
  for (int j = 0; j < i; ++j) z.e[j] = x.e[j];
  z.e[i] = (int32_t)s;
  for (int j = i + 1; j < n_; ++j) z.e[j] = tail.e[j];
  return z;
}

Elt PcGroup::mul(const Elt& x, const Elt& y) const {
  Elt z = x;
  for (int i = 0; i < n_; ++i)
    if (y.e[i] != 0) z = mul_syl(z, i, y.e[i]);
  return z;
}

const Elt& PcGroup::pow_word_inv(int i) const {
  if (!pow_word_inv_set_[i]) {
    pow_word_inv_[i] = inv(pow_word_[i]);
    pow_word_inv_set_[i] = 1;
  }
  return pow_word_inv_[i];
}

Elt PcGroup::inv(const Elt& x) const {
  int i = depth(x);
  if (i == n_) return id();
  i64 a = x.e[i];
  Elt t = x;
  t.e[i] = 0;
  Elt ti = inv(t);
  // x^-1 = t^-1 g_i^{-a} with g_i^{-a} = g_i^{r_i - a} (g_i^{r_i})^{-1}.
  Elt z = mul_syl(ti, i, r_[i] - a);
  return mul(z, pow_word_inv(i));
}

Elt PcGroup::pow(const Elt& x, i64 e) const {
  if (e < 0) return pow(inv(x), -e);
  Elt acc = id();
  Elt base = x;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return acc;
}

Elt PcGroup::conj(const Elt& x, const Elt& g) const {
  return mul(mul(inv(g), x), g);
}

Elt PcGroup::comm(const Elt& x, const Elt& y) const {
  return mul(inv(mul(y, x)), mul(x, y));
}

i64 PcGroup::elt_order(const Elt& x) const {
  Elt y = x;
  i64 ord = 1;
  while (!is_id(y)) {
    y = mul(y, x);
    ++ord;
    if (ord > order_) throw std::runtime_error("elt_order: runaway");
  }
  return ord;
}

Elt PcGroup::eval_word(const Word& w) const {
  Elt z = id();
  for (auto& [g, e] : w) {
    if (g < 0 || g >= n_) throw std::invalid_argument("eval_word: bad index");
    z = mul(z, gen_pow(g, e));
  }
  return z;
}

i64 PcGroup::index_of(const Elt& x) const {
  i64 idx = 0;
  for (int i = 0; i < n_; ++i) idx = idx * r_[i] + x.e[i];
  return idx;
}

Elt PcGroup::from_index(i64 idx) const {
  Elt z = id();
  for (int i = n_ - 1; i >= 0; --i) {
    z.e[i] = (int32_t)(idx % r_[i]);
    idx /= r_[i];
  }
  return z;
}

std::vector<Elt> PcGroup::elements() const {
  if (order_ > (1 << 21))
    throw std::runtime_error("elements: group too large to enumerate");
  std::vector<Elt> out;
  out.reserve(order_);
  for (i64 idx = 0; idx < order_; ++idx) out.push_back(from_index(idx));
  return out;
}

std::string PcGroup::show(const Elt& x) const {
  std::string s;
  for (int i = 0; i < n_; ++i) {
    if (x.e[i] == 0) continue;
    if (!s.empty()) s += ' ';
    s += names_[i];
    if (x.e[i] != 1) s += '^' + std::to_string(x.e[i]);
  }
  return s.empty() ? "1" : s;
}

void PcGroup::check_gen_inverses() const {
  for (int i = 0; i < n_; ++i) {
    Elt v = inv(gen(i));
    if (!is_id(mul(gen(i), v)) || !is_id(mul(v, gen(i))))
      throw std::runtime_error("consistency: generator inverse failed at " +
                               names_[i]);
  }
}

std::vector<std::pair<Elt, Elt>> PcGroup::overlap_pairs() const {
  std::vector<std::pair<Elt, Elt>> out;
  for (int k = 2; k < n_; ++k)
    for (int j = 1; j < k; ++j)
      for (int i = 0; i < j; ++i)
        out.emplace_back(mul(gen(k), mul(gen(j), gen(i))),
                         mul(mul(gen(k), gen(j)), gen(i)));
  for (int j = 0; j < n_; ++j)
    for (int i = 0; i < j; ++i) {
      out.emplace_back(mul(pow_word_[j], gen(i)),
                       mul(gen_pow(j, r_[j] - 1), mul(gen(j), gen(i))));
      out.emplace_back(mul(gen(j), pow_word_[i]),
                       mul(mul(gen(j), gen(i)), gen_pow(i, r_[i] - 1)));
    }
  for (int i = 0; i < n_; ++i)
    out.emplace_back(mul(gen(i), pow_word_[i]), mul(pow_word_[i], gen(i)));
  return out;
}

void PcGroup::check_overlaps() const {
  for (auto& [lhs, rhs] : overlap_pairs())
    if (!(lhs == rhs))
      throw std::runtime_error("consistency: overlap failed");
}

std::string PcGroup::certify_consistency() const {
  check_overlaps();
  check_gen_inverses();
  if (order_ <= 1000) {
    // Exhaustive associativity through a full multiplication table.
    int nn = (int)order_;
    auto els = elements();
    std::vector<int32_t> t((size_t)nn * nn);
    for (int x = 0; x < nn; ++x)
      for (int y = 0; y < nn; ++y)
        t[(size_t)x * nn + y] = (int32_t)index_of(mul(els[x], els[y]));
    for (int x = 0; x < nn; ++x)
      for (int y = 0; y < nn; ++y) {
        int32_t xy = t[(size_t)x * nn + y];
        for (int z = 0; z < nn; ++z)
          if (t[(size_t)xy * nn + z] != t[(size_t)x * nn + t[(size_t)y * nn + z]])
            throw std::runtime_error("consistency: associativity failed");
      }
    return "triples";
  }
  return "overlap";
}

void PcGroup::verify_associativity() const {
  if (order_ > 10000)
    throw std::invalid_argument("verify_associativity: order above table bound");
  auto els = elements();
  int nn = (int)order_;
  std::vector<int32_t> t((size_t)nn * nn);
  for (int x = 0; x < nn; ++x)
    for (int y = 0; y < nn; ++y)
      t[(size_t)x * nn + y] = (int32_t)index_of(mul(els[x], els[y]));
  // Light's test through the table: associativity on a generating set
  // propagates to all triples because every element is a product of
  // generators.
  for (int s = 0; s < n_; ++s) {
    int si = (int)index_of(gen(s));
    for (int a = 0; a < nn; ++a) {
      int32_t as = t[(size_t)a * nn + si];
      for (int b = 0; b < nn; ++b)
        if (t[(size_t)as * nn + b] !=
            t[(size_t)a * nn + t[(size_t)si * nn + b]])
          throw std::runtime_error("associativity: Light's test failed at " +
                                   names_[s]);
    }
  }
}

// ---------------------------------------------------------------------------

PcGroupBuilder::PcGroupBuilder(std::vector<i64> rel_orders)
    : n_((int)rel_orders.size()), r_(std::move(rel_orders)) {
  if (n_ < 1 || n_ > kMaxGens)
    throw std::invalid_argument("pc presentation: generator count");
  for (i64 x : r_)
    if (x < 2) throw std::invalid_argument("pc presentation: rel order < 2");
  names_.resize(n_);
  for (int i = 0; i < n_; ++i) names_[i] = "g" + std::to_string(i + 1);
  raw_pow_.resize(n_);
  has_pow_.assign(n_, 0);
  raw_comm_.assign(n_, std::vector<RawComm>(n_));
}

PcGroupBuilder& PcGroupBuilder::name(int i, std::string nm) {
  names_.at(i) = std::move(nm);
  return *this;
}

PcGroupBuilder& PcGroupBuilder::power(int i, Word w) {
  if (i < 0 || i >= n_) throw std::invalid_argument("power: bad index");
  raw_pow_[i] = std::move(w);
  has_pow_[i] = 1;
  return *this;
}

PcGroupBuilder& PcGroupBuilder::comm(int a, int b, Word w) {
  if (a < 0 || a >= n_ || b < 0 || b >= n_ || a == b)
    throw std::invalid_argument("comm: bad indices");
  int j = std::max(a, b), i = std::min(a, b);
  auto& slot = raw_comm_[j][i];
  slot.w = std::move(w);
  slot.inverted = (a < b);  // given as [g_i, g_j]
  slot.set = true;
  return *this;
}

PcGroupPtr PcGroupBuilder::build(bool certify, std::string* tier) {
  auto g = std::shared_ptr<PcGroup>(new PcGroup());
  g->n_ = n_;
  g->r_ = r_;
  g->names_ = names_;
  g->order_ = 1;
  for (i64 x : r_) {
    if (g->order_ > (i64(1) << 60) / x)
      throw std::invalid_argument("pc presentation: order overflow");
    g->order_ *= x;
  }
  g->pow_word_.assign(n_, g->id());
  g->comm_word_.assign(n_, std::vector<Elt>(n_, g->id()));
  g->conj_cache_.assign(n_, {});
  g->pow_word_inv_.assign(n_, g->id());
  g->pow_word_inv_set_.assign(n_, 0);

  auto validate = [&](const Word& w, int low, const char* what) {
    for (auto& [gi, e] : w) {
      (void)e;
      if (gi <= low || gi >= n_)
        throw std::invalid_argument(std::string(what) +
                                    ": word index out of range");
    }
  };
  // Normalise bottom-up: relations at level i evaluate entirely inside the
  // already-finished tail subgroup on indices > i.
  for (int i = n_ - 1; i >= 0; --i) {
    if (has_pow_[i]) {
      validate(raw_pow_[i], i, "power relation");
      g->pow_word_[i] = g->eval_word(raw_pow_[i]);
    }
    for (int j = i + 1; j < n_; ++j) {
      auto& slot = raw_comm_[j][i];
      if (!slot.set) continue;
      validate(slot.w, i, "commutator relation");
      Elt w = g->eval_word(slot.w);
      if (slot.inverted) w = g->inv(w);
      g->comm_word_[j][i] = w;
    }
    // Conjugation rows at this level may now be built; clear anything stale.
    g->conj_cache_[i].clear();
    g->pow_word_inv_set_[i] = 0;
  }
  std::string t = certify ? g->certify_consistency() : "none";
  if (tier) *tier = t;
  return g;
}

PcGroupPtr PcGroupBuilder::build_derived() {
  PcGroupPtr g = build(false);
  g->check_overlaps();
  g->check_gen_inverses();
  return g;
}

}  // namespace tgrip
