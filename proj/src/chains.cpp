#include "rw/chains.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rw {

namespace {

constexpr long long kMaxLexChain = 1'000'000;

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Chain::Chain(int size) : size_(size) {
  require(size >= 0, "Chain: negative size");
}

Chain::Chain(std::vector<std::string> labels)
    : size_(static_cast<int>(labels.size())), labels_(std::move(labels)) {
  std::set<std::string> seen(labels_.begin(), labels_.end());
  require(seen.size() == labels_.size(), "Chain: duplicate labels");
}

std::string Chain::label(int pos) const {
  require(pos >= 0 && pos < size_, "Chain::label: position out of range");
  if (labeled()) return labels_[pos];
  return std::to_string(pos);
}

ChainMap::ChainMap(int domain, int codomain, std::vector<int> table)
    : domain(domain), codomain(codomain), table(std::move(table)) {
  require(domain >= 0 && codomain >= 0, "ChainMap: negative size");
  require(static_cast<int>(this->table.size()) == domain,
          "ChainMap: table size does not match domain");
  for (int v : this->table)
    require(v >= 0 && v < codomain, "ChainMap: value outside codomain");
}

ChainMap identity_map(int n) {
  std::vector<int> t(n);
  for (int i = 0; i < n; ++i) t[i] = i;
  return ChainMap(n, n, std::move(t));
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  require(f.codomain == g.domain, "compose: codomain/domain mismatch");
  std::vector<int> t(f.domain);
  for (int i = 0; i < f.domain; ++i) t[i] = g.table[f.table[i]];
  return ChainMap(f.domain, g.codomain, std::move(t));
}

bool is_surjection(const ChainMap& f) {
  std::vector<char> hit(f.codomain, 0);
  int count = 0;
  for (int v : f.table)
    if (!hit[v]) {
      hit[v] = 1;
      ++count;
    }
  return count == f.codomain;
}

bool is_rigid_surjection(const ChainMap& f) {
  if (!is_surjection(f)) return false;
  std::vector<int> first(f.codomain, -1);
  for (int i = 0; i < f.domain; ++i)
    if (first[f.table[i]] < 0) first[f.table[i]] = i;
  for (int b = 1; b < f.codomain; ++b)
    if (first[b - 1] >= first[b]) return false;
  return true;
}

bool initial_segment_criterion(const ChainMap& f) {
  require(is_surjection(f), "initial_segment_criterion: map is not surjective");
  // Scan prefixes, tracking the image set; it must stay an initial segment.
  std::vector<char> seen(f.codomain, 0);
  int seen_count = 0;
  int max_seen = -1;
  for (int i = 0; i < f.domain; ++i) {
    int v = f.table[i];
    if (!seen[v]) {
      seen[v] = 1;
      ++seen_count;
      max_seen = std::max(max_seen, v);
    }
    if (seen_count != max_seen + 1) return false;
  }
  return true;
}

ChainMap dual_embedding(const ChainMap& f) {
  require(is_surjection(f), "dual_embedding: map is not surjective");
  std::vector<int> first(f.codomain, -1);
  for (int i = 0; i < f.domain; ++i)
    if (first[f.table[i]] < 0) first[f.table[i]] = i;
  return ChainMap(f.codomain, f.domain, std::move(first));
}

std::vector<int> induced_order(const ChainMap& f) {
  ChainMap dual = dual_embedding(f);
  std::vector<int> order(f.codomain);
  for (int b = 0; b < f.codomain; ++b) order[b] = b;
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return dual.table[x] < dual.table[y]; });
  return order;
}

std::vector<ChainMap> enumerate_rigid_surjections(int n, int k) {
  require(n >= 1 && k >= 1, "enumerate_rigid_surjections: sizes must be positive");
  std::vector<ChainMap> out;
  if (k > n) return out;
  // Rigid surjections are exactly the tables where each new value is one more
  // than the running maximum (restricted growth), ending with maximum k-1.
  std::vector<int> table(n);
  auto rec = [&](auto&& self, int pos, int max_used) -> void {
    if (pos == n) {
      if (max_used == k - 1) out.emplace_back(n, k, table);
      return;
    }
    // Values still missing must fit in the remaining positions.
    if ((k - 1 - max_used) > (n - pos)) return;
    int top = std::min(max_used + 1, k - 1);
    for (int v = 0; v <= top; ++v) {
      table[pos] = v;
      self(self, pos + 1, std::max(max_used, v));
    }
  };
  table[0] = 0;
  rec(rec, 1, 0);
  return out;
}

long long lex_index(const std::vector<int>& tuple, int base) {
  long long idx = 0;
  for (int c : tuple) {
    require(c >= 0 && c < base, "lex_index: coordinate out of range");
    idx = idx * base + c;
  }
  return idx;
}

std::vector<int> lex_tuple(long long index, int base, int width) {
  require(index >= 0, "lex_tuple: negative index");
  std::vector<int> tuple(width);
  for (int i = width - 1; i >= 0; --i) {
    tuple[i] = static_cast<int>(index % base);
    index /= base;
  }
  require(index == 0, "lex_tuple: index out of range");
  return tuple;
}

namespace {

long long checked_pow(int base, int width) {
  long long p = 1;
  for (int i = 0; i < width; ++i) {
    p *= base;
    require(p <= kMaxLexChain, "lex power chain too large");
  }
  return p;
}

}  // namespace

ChainMap lex_product_map(const ChainMap& f, int width) {
  require(width >= 1, "lex_product_map: width must be positive");
  require(is_rigid_surjection(f), "lex_product_map: map is not a rigid surjection");
  long long dn = checked_pow(f.domain, width);
  long long dk = checked_pow(f.codomain, width);
  std::vector<int> table(dn);
  for (long long idx = 0; idx < dn; ++idx) {
    std::vector<int> tuple = lex_tuple(idx, f.domain, width);
    for (int& c : tuple) c = f.table[c];
    table[idx] = static_cast<int>(lex_index(tuple, f.codomain));
  }
  return ChainMap(static_cast<int>(dn), static_cast<int>(dk), std::move(table));
}

Chain ordinal_sum(const std::vector<Chain>& parts) {
  bool all_labeled = !parts.empty();
  long long total = 0;
  for (const Chain& c : parts) {
    total += c.size();
    all_labeled = all_labeled && c.labeled();
  }
  require(total <= kMaxLexChain, "ordinal_sum: chain too large");
  if (!all_labeled) return Chain(static_cast<int>(total));
  std::vector<std::string> labels;
  labels.reserve(total);
  for (const Chain& c : parts)
    labels.insert(labels.end(), c.labels().begin(), c.labels().end());
  return Chain(std::move(labels));
}

Chain lex_power(const Chain& base, int width) {
  require(width >= 1, "lex_power: width must be positive");
  long long total = checked_pow(base.size(), width);
  if (!base.labeled()) return Chain(static_cast<int>(total));
  std::vector<std::string> labels;
  labels.reserve(total);
  for (long long idx = 0; idx < total; ++idx) {
    std::vector<int> tuple = lex_tuple(idx, base.size(), width);
    std::string s = "(";
    for (int i = 0; i < width; ++i) {
      if (i) s += ",";
      s += base.labels()[tuple[i]];
    }
    s += ")";
    labels.push_back(std::move(s));
  }
  return Chain(std::move(labels));
}

}  // namespace rw
