#include "catalog.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "cohomology.hpp"

namespace tgrip {

extern const char* kCatalogRegistry;  // catalog_data.cpp

namespace {

[[noreturn]] void fail(const std::string& msg) { throw CatalogError(msg); }

i64 ipow_checked(i64 b, i64 e) {
  if (e < 0) fail("expression: negative power");
  i64 r = 1;
  while (e-- > 0) {
    if (r > (i64(1) << 56) / std::max<i64>(std::abs(b), 1))
      fail("expression: power overflow");
    r *= b;
  }
  return r;
}

// ------------------------------------------------------ expression parse ---
struct ExprScan {
  const std::string& s;
  size_t i = 0;

  void skip() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }

  ExprPtr atom() {
    skip();
    if (i >= s.size()) fail("expression: unexpected end in '" + s + "'");
    char c = s[i];
    if (c == '(') {
      ++i;
      auto e = sum();
      if (!eat(')')) fail("expression: missing ')' in '" + s + "'");
      return e;
    }
    if (c == '-') {
      ++i;
      auto inner = atom();
      auto e = std::make_shared<Expr>();
      e->op = '-';
      auto zero = std::make_shared<Expr>();
      zero->op = 'n';
      e->lhs = zero;
      e->rhs = inner;
      return e;
    }
    if (std::isdigit((unsigned char)c)) {
      i64 v = 0;
      while (i < s.size() && std::isdigit((unsigned char)s[i]))
        v = v * 10 + (s[i++] - '0');
      auto e = std::make_shared<Expr>();
      e->op = 'n';
      e->num = v;
      return e;
    }
    if (c == 'p' || c == 'r') {
      ++i;
      if (i < s.size() && std::isalnum((unsigned char)s[i]))
        fail("expression: bad symbol in '" + s + "'");
      auto e = std::make_shared<Expr>();
      e->op = c;
      return e;
    }
    fail("expression: unexpected '" + std::string(1, c) + "' in '" + s + "'");
  }

  ExprPtr power() {
    auto base = atom();
    if (eat('^')) {
      auto e = std::make_shared<Expr>();
      e->op = '^';
      e->lhs = base;
      e->rhs = power();  // right associative
      return e;
    }
    return base;
  }

  ExprPtr product() {
    auto e = power();
    while (eat('*')) {
      auto n = std::make_shared<Expr>();
      n->op = '*';
      n->lhs = e;
      n->rhs = power();
      e = n;
    }
    return e;
  }

  ExprPtr sum() {
    auto e = product();
    for (;;) {
      char c = peek();
      if (c != '+' && c != '-') return e;
      ++i;
      auto n = std::make_shared<Expr>();
      n->op = c;
      n->lhs = e;
      n->rhs = product();
      e = n;
    }
  }
};

// ------------------------------------------------------------- tokenising ---
std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace((unsigned char)s[a])) ++a;
  while (b > a && std::isspace((unsigned char)s[b - 1])) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// Splits on `sep` at paren/bracket depth zero only.
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::string> words_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

// One word template: whitespace-separated factors name or name^exp, where
// exp is an integer or a parenthesised/plain expression ("a^-1", "c^(p-1)").
WordT parse_word(const std::string& text) {
  WordT w;
  for (const auto& tok : words_of(text)) {
    if (tok == "1") continue;  // explicit identity
    auto caret = tok.find('^');
    FactorT f;
    if (caret == std::string::npos) {
      f.gen = tok;
      auto e = std::make_shared<Expr>();
      e->op = 'n';
      e->num = 1;
      f.exp = e;
    } else {
      f.gen = tok.substr(0, caret);
      f.exp = parse_expr(tok.substr(caret + 1));
    }
    if (f.gen.empty()) fail("word: empty generator name in '" + text + "'");
    w.push_back(std::move(f));
  }
  return w;
}

std::vector<WordT> parse_word_list(const std::string& text) {
  std::vector<WordT> out;
  for (const auto& part : split_top(text, ',')) {
    auto w = parse_word(part);
    if (!w.empty()) out.push_back(std::move(w));
  }
  return out;
}

std::vector<std::pair<std::string, WordT>> parse_maps(const std::string& text) {
  std::vector<std::pair<std::string, WordT>> out;
  for (const auto& part : split_top(text, ',')) {
    auto arrow = part.find("->");
    if (arrow == std::string::npos)
      fail("map: expected 'gen -> word' in '" + part + "'");
    auto lhs = trim(part.substr(0, arrow));
    if (lhs.empty() || lhs.find(' ') != std::string::npos)
      fail("map: bad generator name in '" + part + "'");
    out.emplace_back(lhs, parse_word(part.substr(arrow + 2)));
  }
  return out;
}

std::vector<ExprPtr> parse_expr_list(const std::string& text) {
  std::vector<ExprPtr> out;
  for (const auto& part : split_top(text, ','))
    if (!trim(part).empty()) out.push_back(parse_expr(part));
  return out;
}

// `gens: a(p^2) a1(p^2) a2(p)`
std::vector<GenT> parse_gens(const std::string& text) {
  std::vector<GenT> out;
  for (const auto& tok : words_of(text)) {
    auto open = tok.find('(');
    if (open == std::string::npos || tok.back() != ')')
      fail("gens: expected name(order), got '" + tok + "'");
    GenT g;
    g.name = tok.substr(0, open);
    g.relorder = parse_expr(tok.substr(open + 1, tok.size() - open - 2));
    if (g.name.empty()) fail("gens: empty name in '" + tok + "'");
    out.push_back(std::move(g));
  }
  return out;
}

// `<selector> = <mult> x [<deg>] + ...`
ExpectT parse_expect(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos) fail("expects: missing '=' in '" + text + "'");
  ExpectT ex;
  ex.selector = trim(text.substr(0, eq));
  for (auto& term : split_top(text.substr(eq + 1), '+')) {
    auto xpos = term.find(" x ");
    auto open = term.find('[');
    auto close = term.rfind(']');
    if (xpos == std::string::npos || open == std::string::npos ||
        close == std::string::npos || open < xpos)
      fail("expects: term must read 'mult x [deg]', got '" + term + "'");
    ex.terms.emplace_back(parse_expr(term.substr(0, xpos)),
                          parse_expr(term.substr(open + 1, close - open - 1)));
  }
  if (ex.selector.empty() || ex.terms.empty())
    fail("expects: malformed '" + text + "'");
  return ex;
}

// --------------------------------------------------------- registry parse ---
std::vector<std::string> statement_lines(const std::string& text) {
  std::string norm;
  norm.reserve(text.size());
  for (char c : text) norm += (c == ';') ? '\n' : c;
  std::vector<std::string> out;
  for (auto& raw : split(norm, '\n')) {
    auto hash = raw.find('#');
    auto line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

bool keyval(const std::string& line, const std::string& key,
            std::string* val) {
  if (line.size() <= key.size() + 1 || line.compare(0, key.size(), key) != 0 ||
      line[key.size()] != ':')
    return false;
  *val = trim(line.substr(key.size() + 1));
  return true;
}

void entry_line(EntryT* e, const std::string& line) {
  std::string v;
  if (keyval(line, "family", &v)) {
    e->family = v;
  } else if (keyval(line, "minp", &v)) {
    e->minp = std::stoll(v);
  } else if (keyval(line, "note", &v)) {
    e->note = e->note.empty() ? v : e->note + " " + v;
  } else if (keyval(line, "equiv", &v)) {
    e->equiv = v;
  } else if (keyval(line, "param", &v)) {
    if (v != "r") fail(e->name + ": unknown parameter '" + v + "'");
    e->uses_r = true;
  } else if (keyval(line, "external", &v)) {
    e->external = (v == "yes");
  } else if (keyval(line, "sflag", &v)) {
    e->sflag = (v == "yes");
  } else if (keyval(line, "builtin", &v)) {
    e->builtin = v;
  } else if (keyval(line, "h2", &v)) {
    e->h2 = parse_expr_list(v);
  } else if (keyval(line, "order", &v)) {
    e->order = parse_expr(v);
  } else if (keyval(line, "center", &v)) {
    e->center = parse_expr(v);
  } else if (keyval(line, "abelianization", &v)) {
    e->abelianization = parse_expr_list(v);
  } else if (keyval(line, "gens", &v)) {
    e->gens = parse_gens(v);
  } else if (keyval(line, "repgroup-of", &v)) {
    e->repgroup_of = v;
  } else if (keyval(line, "kernel", &v)) {
    e->kernel = parse_word_list(v);
  } else if (keyval(line, "corr", &v)) {
    e->corr = parse_maps(v);
  } else if (keyval(line, "shortcut", &v)) {
    e->shortcut = parse_word_list(v);
  } else if (keyval(line, "expects", &v)) {
    e->expects.push_back(parse_expect(v));
  } else if (line.rfind("pow ", 0) == 0 || line.rfind("comm ", 0) == 0) {
    auto eq = line.find('=');
    if (eq == std::string::npos) fail(e->name + ": relation needs '='");
    auto lhs = words_of(line.substr(0, eq));
    RelT rel;
    rel.is_pow = (lhs[0] == "pow");
    if (lhs.size() != (rel.is_pow ? 2u : 3u))
      fail(e->name + ": malformed relation '" + line + "'");
    rel.a = lhs[1];
    if (!rel.is_pow) rel.b = lhs[2];
    rel.rhs = parse_word(line.substr(eq + 1));
    e->rels.push_back(std::move(rel));
  } else {
    fail(e->name + ": cannot parse line '" + line + "'");
  }
}

void cert_line(CertT* c, const std::string& line) {
  std::string v;
  auto factor_lists = [](const std::string& text, std::vector<WordT>* out,
                         int* splitpos) {
    auto halves = split_top(text, '|');
    if (halves.size() != 2) fail("cert: factors need exactly one '|'");
    for (const auto& tok : words_of(halves[0])) out->push_back(parse_word(tok));
    *splitpos = (int)out->size();
    for (const auto& tok : words_of(halves[1])) out->push_back(parse_word(tok));
  };
  if (keyval(line, "z1", &v)) {
    c->z1 = parse_word_list(v);
  } else if (keyval(line, "z2", &v)) {
    c->z2 = parse_word_list(v);
  } else if (keyval(line, "i", &v)) {
    c->i_images = parse_word_list(v);
  } else if (keyval(line, "phi", &v)) {
    c->phi = parse_maps(v);
  } else if (keyval(line, "factors1", &v)) {
    factor_lists(v, &c->fac1, &c->fac1_split);
  } else if (keyval(line, "factors2", &v)) {
    factor_lists(v, &c->fac2, &c->fac2_split);
  } else {
    fail("cert " + c->g1 + "/" + c->g2 + ": cannot parse '" + line + "'");
  }
}

// -------------------------------------------------------- instantiation ---
Word eval_word_t(const WordT& w, const std::map<std::string, int>& idx, i64 p,
                 i64 r, const std::string& where) {
  Word out;
  for (const auto& f : w) {
    auto it = idx.find(f.gen);
    if (it == idx.end())
      fail(where + ": reference to undeclared generator '" + f.gen + "'");
    i64 e = f.exp->eval(p, r);
    if (e != 0) out.emplace_back(it->second, e);
  }
  return out;
}

std::map<std::string, int> name_index(const PcGroupPtr& g) {
  std::map<std::string, int> idx;
  for (int i = 0; i < g->ngens(); ++i) idx[g->gen_name(i)] = i;
  return idx;
}

Elt eval_elt(const PcGroupPtr& g, const WordT& w,
             const std::map<std::string, int>& idx, i64 p, i64 r,
             const std::string& where) {
  return g->eval_word(eval_word_t(w, idx, p, r, where));
}

std::vector<i64> eval_invariants(const std::vector<ExprPtr>& exprs, i64 p,
                                 i64 r) {
  std::vector<i64> out;
  for (const auto& e : exprs) {
    i64 v = e->eval(p, r);
    if (v < 1) fail("invariant factor evaluates below 1");
    if (v > 1) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string join_i64(const std::vector<i64>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

PcGroupPtr build_presented(const EntryT& t, i64 p, i64 r,
                           std::map<std::string, int>* idx_out) {
  if (t.gens.empty()) fail(t.name + ": no generators declared");
  std::vector<i64> ro;
  std::map<std::string, int> idx;
  for (const auto& gt : t.gens) {
    i64 o = gt.relorder->eval(p, r);
    i64 q;
    int k;
    if (!prime_power(o, &q, &k) || q != p)
      fail(t.name + ": relative order of '" + gt.name + "' is " +
           std::to_string(o) + ", not a power of p");
    if (idx.count(gt.name)) fail(t.name + ": duplicate generator " + gt.name);
    idx[gt.name] = (int)ro.size();
    ro.push_back(o);
  }
  PcGroupBuilder b(ro);
  for (const auto& gt : t.gens) b.name(idx[gt.name], gt.name);
  for (const auto& rel : t.rels) {
    auto need = [&](const std::string& n) {
      auto it = idx.find(n);
      if (it == idx.end())
        fail(t.name + ": relation uses undeclared generator '" + n + "'");
      return it->second;
    };
    Word rhs = eval_word_t(rel.rhs, idx, p, r, t.name);
    if (rel.is_pow)
      b.power(need(rel.a), rhs);
    else
      b.comm(need(rel.a), need(rel.b), rhs);
  }
  if (idx_out) *idx_out = idx;
  return b.build();
}

// Extraspecial families assembled as iterated central products of the two
// order-p^3 building blocks (exponent p, and exponent p^2 when `squared`).
void build_extraspecial(CatalogEntry* e, i64 p, i64 n, bool squared) {
  if (n < 1) fail(e->name + ": factor count r must be >= 1");
  if (2 * n + 1 > kMaxGens)
    fail(e->name + ": factor count r = " + std::to_string(n) +
         " exceeds the generator budget");
  auto block = [&](int which) {
    PcGroupBuilder b({p, p, p});
    b.name(0, "x" + std::to_string(which));
    b.name(1, "y" + std::to_string(which));
    b.name(2, "z");
    b.comm(0, 1, {{2, 1}});  // [x, y] = z
    if (squared) b.power(0, {{2, 1}});  // x^p = z
    return b.build();
  };
  PcGroupPtr acc = block(1);
  std::vector<std::vector<Elt> > facs{{acc->gen(0), acc->gen(1)}};
  Elt zc = acc->gen(2);
  for (i64 i = 2; i <= n; ++i) {
    auto next = block((int)i);
    auto pr = central_product(acc, next, {{zc, next->gen(2)}});
    for (auto& f : facs)
      for (auto& x : f) x = pr.embed_a.apply(x);
    facs.push_back(
        {pr.embed_b.apply(next->gen(0)), pr.embed_b.apply(next->gen(1))});
    zc = pr.embed_a.apply(zc);
    acc = pr.q;
  }
  for (auto& f : facs) f.push_back(zc);  // each factor contains the centre
  e->group = acc;
  e->cp_factors = std::move(facs);
  e->cp_z = zc;
}

}  // namespace

i64 Expr::eval(i64 p, i64 r) const {
  switch (op) {
    case 'n': return num;
    case 'p': return p;
    case 'r': return r;
    case '+': return lhs->eval(p, r) + rhs->eval(p, r);
    case '-': return lhs->eval(p, r) - rhs->eval(p, r);
    case '*': return lhs->eval(p, r) * rhs->eval(p, r);
    case '^': return ipow_checked(lhs->eval(p, r), rhs->eval(p, r));
  }
  fail("expression: corrupt node");
}

ExprPtr parse_expr(const std::string& text) {
  ExprScan sc{text};
  auto e = sc.sum();
  sc.skip();
  if (sc.i != text.size())
    fail("expression: trailing input in '" + text + "'");
  return e;
}

// ---------------------------------------------------------------- catalog ---
Catalog Catalog::from_text(const std::string& text) {
  Catalog c;
  EntryT* cur_entry = nullptr;
  CertT* cur_cert = nullptr;
  for (const auto& line : statement_lines(text)) {
    if (line == "end") {
      if (!cur_entry && !cur_cert) fail("registry: stray 'end'");
      cur_entry = nullptr;
      cur_cert = nullptr;
      continue;
    }
    if (line.rfind("group ", 0) == 0) {
      if (cur_entry || cur_cert) fail("registry: unterminated block");
      auto toks = words_of(line);
      if (toks.size() != 2) fail("registry: 'group' needs one name");
      if (c.entries_.count(toks[1]))
        fail("registry: duplicate entry " + toks[1]);
      EntryT t;
      t.name = toks[1];
      c.order_.push_back(t.name);
      cur_entry = &(c.entries_[t.name] = std::move(t));
      continue;
    }
    if (line.rfind("cert ", 0) == 0) {
      if (cur_entry || cur_cert) fail("registry: unterminated block");
      auto toks = words_of(line);
      if (toks.size() != 4) fail("registry: 'cert' needs kind and two names");
      CertT t;
      t.kind = toks[1];
      t.g1 = toks[2];
      t.g2 = toks[3];
      if (t.kind != "quotient" && t.kind != "centralproduct")
        fail("registry: unknown certificate kind " + t.kind);
      c.certs_.push_back(std::move(t));
      cur_cert = &c.certs_.back();
      continue;
    }
    if (cur_entry)
      entry_line(cur_entry, line);
    else if (cur_cert)
      cert_line(cur_cert, line);
    else
      fail("registry: statement outside any block: '" + line + "'");
  }
  if (cur_entry || cur_cert) fail("registry: unterminated final block");
  for (const auto& [name, t] : c.entries_) {
    if (t.repgroup_of.empty()) continue;
    if (!c.entries_.count(t.repgroup_of))
      fail(name + ": repgroup-of names unknown entry " + t.repgroup_of);
    if (!c.rep_of_.emplace(t.repgroup_of, name).second)
      fail(t.repgroup_of + ": two representation groups declared");
  }
  for (const auto& ct : c.certs_)
    for (const auto* nm : {&ct.g1, &ct.g2})
      if (!c.entries_.count(*nm))
        fail("cert: unknown entry " + *nm);
  return c;
}

const Catalog& Catalog::builtin() {
  static const Catalog c = Catalog::from_text(kCatalogRegistry);
  return c;
}

bool Catalog::has(const std::string& name) const {
  return entries_.count(name) != 0;
}

const EntryT& Catalog::entry_template(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) fail("catalog: unknown entry " + name);
  return it->second;
}

std::vector<std::string> Catalog::names() const { return order_; }

std::vector<std::string> Catalog::with_rep_group() const {
  std::vector<std::string> out;
  for (const auto& n : order_)
    if (rep_of_.count(n)) out.push_back(n);
  return out;
}

const CatalogEntry& Catalog::get(const std::string& name, i64 p, i64 r) const {
  return instantiate(name, p, r, true);
}

const CatalogEntry& Catalog::instantiate(const std::string& name, i64 p,
                                         i64 r, bool attach_rep) const {
  const EntryT& t = entry_template(name);  // throws on unknown name
  if (!is_prime(p) || p < 3) fail(name + ": p must be an odd prime");
  if (p < t.minp)
    fail(name + ": requires p >= " + std::to_string(t.minp));
  if (!t.uses_r) r = 1;
  if (t.uses_r && t.builtin.empty() && (r < 1 || r >= p))
    fail(name + ": parameter r must lie in 1..p-1");
  std::string key =
      name + "|" + std::to_string(p) + "|" + std::to_string(r);
  if (auto it = cache_.find(key); it != cache_.end()) return *it->second;

  auto ep = std::make_shared<CatalogEntry>();
  CatalogEntry& e = *ep;
  e.name = t.name;
  e.family = t.family;
  e.equiv = t.equiv;
  e.note = t.note;
  e.repgroup_of = t.repgroup_of;
  e.p = p;
  e.r = r;
  e.minp = t.minp;
  e.external = t.external;
  e.sflag = t.sflag;
  e.uses_r = t.uses_r;
  if (t.h2) {
    e.has_h2 = true;
    e.expected_h2 = eval_invariants(*t.h2, p, r);
  }
  for (const auto& ex : t.expects) {
    WedderburnType wt;
    for (const auto& [me, de] : ex.terms) {
      i64 m = me->eval(p, r), d = de->eval(p, r);
      if (m < 0 || d < 1) fail(name + ": expectation term out of range");
      if (m > 0) wt.blocks[d] += m;
    }
    if (!e.expects.emplace(ex.selector, std::move(wt)).second)
      fail(name + ": duplicate expectation selector " + ex.selector);
  }
  // Publish first so the reference stays valid across nested instantiation;
  // a structural error (CatalogError) evicts the half-built entry again.
  cache_.emplace(key, ep);
  try {
    finish(t, ep, p, r, attach_rep);
  } catch (const CatalogError&) {
    cache_.erase(key);
    throw;
  }
  return e;
}

void Catalog::finish(const EntryT& t, const std::shared_ptr<CatalogEntry>& ep,
                     i64 p, i64 r, bool attach_rep) const {
  CatalogEntry& e = *ep;
  const std::string& name = t.name;
  if (!t.external) {
    std::map<std::string, int> idx;
    try {
      if (t.builtin.empty()) {
        e.group = build_presented(t, p, r, &idx);
      } else if (t.builtin == "extraspecial p") {
        build_extraspecial(&e, p, r, false);
        idx = name_index(e.group);
      } else if (t.builtin == "extraspecial p^2") {
        build_extraspecial(&e, p, r, true);
        idx = name_index(e.group);
      } else {
        fail(name + ": unknown builtin '" + t.builtin + "'");
      }
    } catch (const CatalogError&) {
      throw;  // structural misuse, not a cross-check
    } catch (const std::exception& ex) {
      e.flags.push_back("build: " + std::string(ex.what()));
      e.group = nullptr;
      return;
    }

    if (t.order) {
      i64 want = t.order->eval(p, r);
      if (e.group->order() != want)
        e.flags.push_back("order: group has " +
                          std::to_string(e.group->order()) + ", declared " +
                          std::to_string(want));
    }
    if (t.abelianization) {
      auto got = abelianization(e.group);
      auto want = eval_invariants(*t.abelianization, p, r);
      if (got != want)
        e.flags.push_back("abelianization: computed " + join_i64(got) +
                          ", declared " + join_i64(want));
    }
    if (t.center) {
      i64 got = center(e.group).order;
      i64 want = t.center->eval(p, r);
      if (got != want)
        e.flags.push_back("center: computed order " + std::to_string(got) +
                          ", declared " + std::to_string(want));
    }
    if (e.has_h2) {
      auto got = schur_multiplier(e.group);
      if (got != e.expected_h2)
        e.flags.push_back("multiplier: computed " + join_i64(got) +
                          ", declared " + join_i64(e.expected_h2));
    }
    if (!t.shortcut.empty()) {
      std::vector<Elt> zs;
      for (const auto& w : t.shortcut)
        zs.push_back(eval_elt(e.group, w, idx, p, r, name + " shortcut"));
      e.shortcut_z = igs_close(e.group, zs);
      e.has_shortcut = true;
    }
  }

  // Attach and cross-check the declared representation group, if any.
  auto rit = rep_of_.find(name);
  if (attach_rep && rit != rep_of_.end() && e.group) {
    const CatalogEntry& rep = instantiate(rit->second, p, r, false);
    e.rep_name = rit->second;
    if (!rep.group) {
      e.flags.push_back("rep: " + rit->second + " failed to build");
      return;
    }
    e.rep_group = rep.group;
    const EntryT& rt = entry_template(rit->second);
    auto ridx = name_index(rep.group);
    std::vector<Elt> ker;
    for (const auto& w : rt.kernel)
      ker.push_back(eval_elt(rep.group, w, ridx, p, r, rit->second));
    e.rep_kernel = igs_close(rep.group, ker);
    if (!is_central(e.rep_kernel))
      e.flags.push_back("rep: declared kernel is not central");
    if (!subgroup_le(e.rep_kernel, derived_subgroup(rep.group)))
      e.flags.push_back("rep: declared kernel is not inside the derived "
                        "subgroup");
    if (e.has_h2) {
      auto kin = abelian_invariants(e.rep_kernel);
      if (kin != e.expected_h2)
        e.flags.push_back("rep: kernel invariants " + join_i64(kin) +
                          " != declared multiplier " +
                          join_i64(e.expected_h2));
    }
    if (rt.corr.empty()) {
      e.flags.push_back("rep: no generator correspondence declared");
      return;
    }
    try {
      auto cq = quotient_central(rep.group, e.rep_kernel);
      std::map<std::string, Elt> corr;
      for (const auto& [b, w] : rt.corr)
        corr[b] = eval_elt(rep.group, w, ridx, p, r, rit->second + " corr");
      std::vector<Elt> img;
      for (int i = 0; i < e.group->ngens(); ++i) {
        auto it = corr.find(e.group->gen_name(i));
        if (it == corr.end())
          fail(rit->second + ": corr misses base generator " +
               e.group->gen_name(i));
        e.corr_images.push_back(it->second);
        img.push_back(cq.proj(it->second));
      }
      auto h = make_hom(e.group, cq.q, img);
      if (!is_isomorphism(h))
        e.flags.push_back("rep: correspondence is a homomorphism but not an "
                          "isomorphism onto the central quotient");
    } catch (const CatalogError&) {
      throw;
    } catch (const std::exception& ex) {
      e.flags.push_back("rep: correspondence check failed: " +
                        std::string(ex.what()));
    }
  }
  return;
}

std::vector<CertInst> Catalog::certs_for(const std::string& g1,
                                         const std::string& g2, i64 p,
                                         i64 r) const {
  std::vector<CertInst> out;
  for (const auto& ct : certs_) {
    bool fwd = (ct.g1 == g1 && ct.g2 == g2);
    bool rev = (ct.g1 == g2 && ct.g2 == g1);
    if (!fwd && !rev) continue;
    CertInst ci;
    ci.kind = ct.kind;
    ci.g1 = ct.g1;
    ci.g2 = ct.g2;
    ci.e1 = &get(ct.g1, p, r);
    ci.e2 = &get(ct.g2, p, r);
    if (!ci.e1->group || !ci.e2->group)
      fail("cert " + ct.g1 + "/" + ct.g2 + ": missing presentation");
    auto i1 = name_index(ci.e1->group), i2 = name_index(ci.e2->group);
    auto evl = [&](const PcGroupPtr& g, const std::map<std::string, int>& ix,
                   const std::vector<WordT>& ws) {
      std::vector<Elt> v;
      for (const auto& w : ws)
        v.push_back(eval_elt(g, w, ix, p, r, "cert " + ct.g1 + "/" + ct.g2));
      return v;
    };
    ci.z1_gens = evl(ci.e1->group, i1, ct.z1);
    ci.z2_gens = evl(ci.e2->group, i2, ct.z2);
    ci.i_images = evl(ci.e1->group, i1, ct.i_images);
    if (ct.kind == "centralproduct") {
      auto f1 = evl(ci.e1->group, i1, ct.fac1);
      ci.fac1a.assign(f1.begin(), f1.begin() + ct.fac1_split);
      ci.fac1b.assign(f1.begin() + ct.fac1_split, f1.end());
      auto f2 = evl(ci.e2->group, i2, ct.fac2);
      ci.fac2a.assign(f2.begin(), f2.begin() + ct.fac2_split);
      ci.fac2b.assign(f2.begin() + ct.fac2_split, f2.end());
    }
    for (const auto& [gname, w] : ct.phi) {
      auto it = i2.find(gname);
      if (it == i2.end())
        fail("cert " + ct.g1 + "/" + ct.g2 + ": phi names unknown generator " +
             gname);
      ci.phi.emplace_back(
          it->second,
          eval_elt(ci.e1->group, w, i1, p, r, "cert phi"));
    }
    out.push_back(std::move(ci));
  }
  return out;
}

PcGroupPtr parse_presentation(const std::string& text, i64 p, i64 r) {
  EntryT t;
  t.name = "(inline)";
  for (const auto& line : statement_lines(text)) entry_line(&t, line);
  if (!is_prime(p) || p < 3) fail("presentation: p must be an odd prime");
  return build_presented(t, p, r, nullptr);
}

}  // namespace tgrip
