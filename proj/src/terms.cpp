#include "rw/terms.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace rw {

namespace {

constexpr long long kMaxEnumeration = 1'000'000;

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Signature::Signature(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  std::set<std::string> names;
  for (const Symbol& s : symbols_) {
    require(s.arity >= 0, "Signature: negative arity");
    require(!s.name.empty(), "Signature: empty symbol name");
    require(names.insert(s.name).second, "Signature: duplicate symbol name");
  }
}

std::optional<int> Signature::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (symbols_[i].name == name) return i;
  return std::nullopt;
}

Term Term::variable(int index) {
  require(index >= 0, "Term::variable: negative index");
  Term t;
  t.var_ = index;
  return t;
}

Term Term::apply(int symbol, std::vector<Term> children) {
  require(symbol >= 0, "Term::apply: negative symbol");
  Term t;
  t.sym_ = symbol;
  t.children_ = std::move(children);
  return t;
}

int Term::token_length() const {
  if (is_variable()) return 1;
  if (children_.empty()) return 1;
  int len = static_cast<int>(children_.size()) + 2;  // symbol, parens, commas
  for (const Term& c : children_) len += c.token_length();
  return len;
}

int Term::max_variable() const {
  if (is_variable()) return var_;
  int m = -1;
  for (const Term& c : children_) m = std::max(m, c.max_variable());
  return m;
}

bool Term::operator==(const Term& other) const {
  if (var_ != other.var_ || sym_ != other.sym_) return false;
  return children_ == other.children_;
}

Shape shape_of(const Term& t) {
  if (t.is_variable()) return Shape{Term::variable(0)};
  std::vector<Term> kids;
  kids.reserve(t.children().size());
  for (const Term& c : t.children()) kids.push_back(shape_of(c).term);
  return Shape{Term::apply(t.symbol(), std::move(kids))};
}

int shape_length(const Term& t) { return t.token_length(); }

namespace {

// Alphabet ranks: variables < symbols < "(" < "," < ")".
enum class TokKind : unsigned char { Var = 0, Sym = 1, Open = 2, Comma = 3, Close = 4 };

struct Tok {
  TokKind kind;
  int index = 0;  // variable index or symbol index
};

void tokens_of(const Term& t, std::vector<Tok>& out) {
  if (t.is_variable()) {
    out.push_back({TokKind::Var, t.variable_index()});
    return;
  }
  out.push_back({TokKind::Sym, t.symbol()});
  if (t.children().empty()) return;
  out.push_back({TokKind::Open, 0});
  for (size_t i = 0; i < t.children().size(); ++i) {
    if (i) out.push_back({TokKind::Comma, 0});
    tokens_of(t.children()[i], out);
  }
  out.push_back({TokKind::Close, 0});
}

// Lexicographic comparison of token streams; variables compare equal when
// vars_equal is set (shape strings) and by index otherwise.
int compare_token_streams(const std::vector<Tok>& a, const std::vector<Tok>& b,
                          bool vars_equal) {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    if (a[i].kind != b[i].kind)
      return a[i].kind < b[i].kind ? -1 : 1;
    if (a[i].kind == TokKind::Sym && a[i].index != b[i].index)
      return a[i].index < b[i].index ? -1 : 1;
    if (!vars_equal && a[i].kind == TokKind::Var && a[i].index != b[i].index)
      return a[i].index < b[i].index ? -1 : 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

void collect_variables(const Term& t, std::vector<int>& out) {
  if (t.is_variable()) {
    out.push_back(t.variable_index());
    return;
  }
  for (const Term& c : t.children()) collect_variables(c, out);
}

}  // namespace

std::string render(const Term& t, const Signature& sig) {
  if (t.is_variable()) return "x" + std::to_string(t.variable_index() + 1);
  require(t.symbol() < sig.size(), "render: symbol outside signature");
  const Symbol& s = sig.at(t.symbol());
  require(static_cast<int>(t.children().size()) == s.arity,
          "render: arity mismatch");
  if (t.children().empty()) return s.name;
  std::string out = s.name + "(";
  for (size_t i = 0; i < t.children().size(); ++i) {
    if (i) out += ",";
    out += render(t.children()[i], sig);
  }
  out += ")";
  return out;
}

std::string render(const Shape& s, const Signature& sig) {
  if (s.term.is_variable()) return "\xce\xbe";  // xi
  const Symbol& sym = sig.at(s.term.symbol());
  if (s.term.children().empty()) return sym.name;
  std::string out = sym.name + "(";
  for (size_t i = 0; i < s.term.children().size(); ++i) {
    if (i) out += ",";
    out += render(Shape{s.term.children()[i]}, sig);
  }
  out += ")";
  return out;
}

std::vector<int> variable_occurrences(const Term& t) {
  std::vector<int> out;
  collect_variables(t, out);
  return out;
}

int neat_compare(const Term& a, const Term& b) {
  int la = a.token_length();
  int lb = b.token_length();
  if (la != lb) return la < lb ? -1 : 1;
  std::vector<Tok> ta, tb;
  tokens_of(a, ta);
  tokens_of(b, tb);
  if (int c = compare_token_streams(ta, tb, /*vars_equal=*/true)) return c;
  std::vector<int> va = variable_occurrences(a);
  std::vector<int> vb = variable_occurrences(b);
  if (va != vb) return va < vb ? -1 : 1;
  return 0;
}

int shape_compare(const Shape& a, const Shape& b) {
  int la = a.term.token_length();
  int lb = b.term.token_length();
  if (la != lb) return la < lb ? -1 : 1;
  std::vector<Tok> ta, tb;
  tokens_of(a.term, ta);
  tokens_of(b.term, tb);
  return compare_token_streams(ta, tb, /*vars_equal=*/true);
}

namespace {

int count_xi(const Term& shape) {
  if (shape.is_variable()) return 1;
  int n = 0;
  for (const Term& c : shape.children()) n += count_xi(c);
  return n;
}

// Replaces xi occurrences left to right with the given variable indices.
Term instantiate(const Term& shape, const std::vector<int>& vars, int& pos) {
  if (shape.is_variable()) return Term::variable(vars[pos++]);
  std::vector<Term> kids;
  kids.reserve(shape.children().size());
  for (const Term& c : shape.children()) kids.push_back(instantiate(c, vars, pos));
  return Term::apply(shape.symbol(), std::move(kids));
}

}  // namespace

std::vector<Shape> enumerate_shapes(const Signature& sig, int max_len) {
  require(max_len >= 0, "enumerate_shapes: negative length bound");
  // by_len[l] lists shapes of token length exactly l, built bottom up.
  std::vector<std::vector<Term>> by_len(max_len + 1);
  if (max_len >= 1) {
    by_len[1].push_back(Term::variable(0));
    for (int s = 0; s < sig.size(); ++s)
      if (sig.arity(s) == 0) by_len[1].push_back(Term::apply(s));
  }
  for (int len = 2; len <= max_len; ++len) {
    for (int s = 0; s < sig.size(); ++s) {
      int m = sig.arity(s);
      if (m == 0) continue;
      int child_total = len - m - 2;
      if (child_total < m) continue;
      std::vector<Term> tuple(m);
      auto rec = [&](auto&& self, int j, int remaining) -> void {
        if (j == m) {
          if (remaining == 0) {
            std::vector<Term> kids = tuple;
            by_len[len].push_back(Term::apply(s, std::move(kids)));
          }
          return;
        }
        int reserve = m - j - 1;  // later children need one token each
        for (int l = 1; l <= remaining - reserve; ++l) {
          for (const Term& cand : by_len[l]) {
            tuple[j] = cand;
            self(self, j + 1, remaining - l);
          }
        }
      };
      rec(rec, 0, child_total);
    }
  }
  std::vector<Shape> out;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Term>& level = by_len[len];
    std::sort(level.begin(), level.end(), [](const Term& a, const Term& b) {
      return shape_compare(Shape{a}, Shape{b}) < 0;
    });
    for (Term& t : level) out.push_back(Shape{std::move(t)});
  }
  return out;
}

std::vector<Term> enumerate_neat(const Signature& sig, int n_vars, int max_len) {
  require(n_vars >= 0, "enumerate_neat: negative variable count");
  std::vector<Shape> shapes = enumerate_shapes(sig, max_len);
  long long total = 0;
  for (const Shape& s : shapes) {
    int v = count_xi(s.term);
    long long block = 1;
    for (int i = 0; i < v; ++i) {
      block *= n_vars;
      if (block > kMaxEnumeration) break;
    }
    total += block;
    require(total <= kMaxEnumeration, "enumerate_neat: truncation too large");
  }
  std::vector<Term> out;
  out.reserve(total);
  std::vector<int> vars;
  for (const Shape& s : shapes) {
    int v = count_xi(s.term);
    if (v == 0) {
      out.push_back(s.term);
      continue;
    }
    if (n_vars == 0) continue;
    vars.assign(v, 0);
    while (true) {
      int pos = 0;
      out.push_back(instantiate(s.term, vars, pos));
      int i = v - 1;
      while (i >= 0 && vars[i] == n_vars - 1) vars[i--] = 0;
      if (i < 0) break;
      ++vars[i];
    }
  }
  return out;
}

Term substitute(const ChainMap& f, const Term& t) {
  if (t.is_variable()) {
    require(t.variable_index() < f.domain,
            "substitute: variable outside map domain");
    return Term::variable(f.table[t.variable_index()]);
  }
  std::vector<Term> kids;
  kids.reserve(t.children().size());
  for (const Term& c : t.children()) kids.push_back(substitute(f, c));
  return Term::apply(t.symbol(), std::move(kids));
}

bool check_subst_rigid(const ChainMap& f, const Signature& sig, int max_len) {
  require(is_rigid_surjection(f), "check_subst_rigid: map is not rigid");
  std::vector<Term> dom_terms = enumerate_neat(sig, f.domain, max_len);
  std::vector<Term> cod_terms = enumerate_neat(sig, f.codomain, max_len);
  std::map<Term, int, NeatLess> index;
  for (int i = 0; i < static_cast<int>(cod_terms.size()); ++i)
    index.emplace(cod_terms[i], i);
  std::vector<int> table(dom_terms.size());
  for (size_t i = 0; i < dom_terms.size(); ++i) {
    auto it = index.find(substitute(f, dom_terms[i]));
    require(it != index.end(), "check_subst_rigid: image escaped truncation");
    table[i] = it->second;
  }
  return is_rigid_surjection(ChainMap(static_cast<int>(dom_terms.size()),
                                      static_cast<int>(cod_terms.size()),
                                      std::move(table)));
}

TermOverTerms wrap(const Term& t) { return TermOverTerms{Term::variable(0), {t}}; }

namespace {

Term flatten_rec(const Term& outer, const std::vector<Term>& pool) {
  if (outer.is_variable()) {
    require(outer.variable_index() < static_cast<int>(pool.size()),
            "flatten: variable outside pool");
    return pool[outer.variable_index()];
  }
  std::vector<Term> kids;
  kids.reserve(outer.children().size());
  for (const Term& c : outer.children()) kids.push_back(flatten_rec(c, pool));
  return Term::apply(outer.symbol(), std::move(kids));
}

int pool_index(std::vector<Term>& pool, const Term& t) {
  for (int i = 0; i < static_cast<int>(pool.size()); ++i)
    if (pool[i] == t) return i;
  pool.push_back(t);
  return static_cast<int>(pool.size()) - 1;
}

// Rebuilds outer against a merged pool.
Term remap(const Term& outer, const std::vector<Term>& old_pool,
           std::vector<Term>& new_pool) {
  if (outer.is_variable())
    return Term::variable(pool_index(new_pool, old_pool[outer.variable_index()]));
  std::vector<Term> kids;
  kids.reserve(outer.children().size());
  for (const Term& c : outer.children()) kids.push_back(remap(c, old_pool, new_pool));
  return Term::apply(outer.symbol(), std::move(kids));
}

}  // namespace

Term flatten(const TermOverTerms& u) { return flatten_rec(u.outer, u.pool); }

std::vector<TermOverTerms> flatten_preimages(const Term& t) {
  std::vector<TermOverTerms> out;
  out.push_back(wrap(t));  // cut at the root
  if (t.is_variable()) return out;
  if (t.children().empty()) {
    out.push_back(TermOverTerms{Term::apply(t.symbol()), {}});
    return out;
  }
  std::vector<std::vector<TermOverTerms>> per_child;
  per_child.reserve(t.children().size());
  for (const Term& c : t.children()) per_child.push_back(flatten_preimages(c));
  // Keep the root symbol and combine child preimages, merging pools.
  std::vector<int> pick(t.children().size(), 0);
  while (true) {
    std::vector<Term> pool;
    std::vector<Term> kids;
    kids.reserve(pick.size());
    for (size_t j = 0; j < pick.size(); ++j) {
      const TermOverTerms& part = per_child[j][pick[j]];
      kids.push_back(remap(part.outer, part.pool, pool));
    }
    out.push_back(TermOverTerms{Term::apply(t.symbol(), std::move(kids)),
                                std::move(pool)});
    int i = static_cast<int>(pick.size()) - 1;
    while (i >= 0 && pick[i] + 1 == static_cast<int>(per_child[i].size()))
      pick[i--] = 0;
    if (i < 0) break;
    ++pick[i];
  }
  return out;
}

int neat_compare_tt(const TermOverTerms& a, const TermOverTerms& b) {
  int la = a.outer.token_length();
  int lb = b.outer.token_length();
  if (la != lb) return la < lb ? -1 : 1;
  std::vector<Tok> ta, tb;
  tokens_of(a.outer, ta);
  tokens_of(b.outer, tb);
  if (int c = compare_token_streams(ta, tb, /*vars_equal=*/true)) return c;
  std::vector<int> va = variable_occurrences(a.outer);
  std::vector<int> vb = variable_occurrences(b.outer);
  // Same outer shape means the same occurrence count.
  for (size_t i = 0; i < va.size(); ++i)
    if (int c = neat_compare(a.pool[va[i]], b.pool[vb[i]])) return c;
  return 0;
}

bool check_mu_rigid(const Signature& sig, int n_vars, int max_len) {
  std::vector<Term> terms = enumerate_neat(sig, n_vars, max_len);
  // Wrapper order mirrors the inner neat order.
  for (size_t i = 0; i < terms.size(); ++i)
    for (size_t j = i + 1; j < terms.size(); ++j)
      if (neat_compare_tt(wrap(terms[i]), wrap(terms[j])) >= 0) return false;
  // The wrapper is the strictly least flatten preimage.
  for (const Term& t : terms) {
    TermOverTerms w = wrap(t);
    for (const TermOverTerms& pre : flatten_preimages(t)) {
      if (!(flatten(pre) == t)) return false;
      if (pre.outer.is_variable()) continue;  // the wrapper itself
      if (neat_compare_tt(w, pre) >= 0) return false;
    }
  }
  return true;
}

}  // namespace rw
