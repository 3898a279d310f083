#include "rw/algebras.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rw {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

long long power_checked(int base, int exp, long long limit) {
  long long p = 1;
  for (int i = 0; i < exp; ++i) {
    p *= base;
    require(p <= limit, "algebra table too large");
  }
  return p;
}

// Odometer over args in [0, size)^arity; returns false when exhausted.
bool next_tuple(std::vector<int>& args, int size) {
  int i = static_cast<int>(args.size()) - 1;
  while (i >= 0 && args[i] == size - 1) args[i--] = 0;
  if (i < 0) return false;
  ++args[i];
  return true;
}

}  // namespace

FiniteAlgebra::FiniteAlgebra(Signature sig, int size,
                             std::vector<std::vector<int>> tables)
    : sig_(std::move(sig)), size_(size), tables_(std::move(tables)) {
  require(size_ >= 1, "FiniteAlgebra: carrier must be nonempty");
  require(static_cast<int>(tables_.size()) == sig_.size(),
          "FiniteAlgebra: one table per symbol required");
  for (int s = 0; s < sig_.size(); ++s) {
    long long want = power_checked(size_, sig_.arity(s), 100'000'000);
    require(static_cast<long long>(tables_[s].size()) == want,
            "FiniteAlgebra: table size mismatch");
    for (int v : tables_[s])
      require(v >= 0 && v < size_, "FiniteAlgebra: table value out of range");
  }
}

int FiniteAlgebra::apply(int sym, const std::vector<int>& args) const {
  require(sym >= 0 && sym < sig_.size(), "apply: unknown symbol");
  require(static_cast<int>(args.size()) == sig_.arity(sym), "apply: arity mismatch");
  long long idx = 0;
  for (int a : args) {
    require(a >= 0 && a < size_, "apply: argument out of range");
    idx = idx * size_ + a;
  }
  return tables_[sym][idx];
}

int FiniteAlgebra::evaluate(const Term& t, const std::vector<int>& assignment) const {
  if (t.is_variable()) {
    require(t.variable_index() < static_cast<int>(assignment.size()),
            "evaluate: unassigned variable");
    return assignment[t.variable_index()];
  }
  std::vector<int> args;
  args.reserve(t.children().size());
  for (const Term& c : t.children()) args.push_back(evaluate(c, assignment));
  return apply(t.symbol(), args);
}

bool satisfies_identity(const FiniteAlgebra& a, const Term& lhs, const Term& rhs) {
  int n_vars = std::max(lhs.max_variable(), rhs.max_variable()) + 1;
  std::vector<int> assignment(std::max(n_vars, 1), 0);
  if (n_vars == 0) return a.evaluate(lhs, assignment) == a.evaluate(rhs, assignment);
  do {
    if (a.evaluate(lhs, assignment) != a.evaluate(rhs, assignment)) return false;
  } while (next_tuple(assignment, a.size()));
  return true;
}

bool is_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b,
                     const std::vector<int>& map) {
  if (!(a.signature() == b.signature())) return false;
  if (static_cast<int>(map.size()) != a.size()) return false;
  for (int v : map)
    if (v < 0 || v >= b.size()) return false;
  for (int s = 0; s < a.signature().size(); ++s) {
    int arity = a.signature().arity(s);
    std::vector<int> args(arity, 0);
    std::vector<int> mapped(arity, 0);
    while (true) {
      for (int i = 0; i < arity; ++i) mapped[i] = map[args[i]];
      if (map[a.apply(s, args)] != b.apply(s, mapped)) return false;
      if (arity == 0 || !next_tuple(args, a.size())) break;
    }
  }
  return true;
}

bool is_surjective_map(const std::vector<int>& map, int codomain_size) {
  std::vector<char> hit(codomain_size, 0);
  int count = 0;
  for (int v : map)
    if (v >= 0 && v < codomain_size && !hit[v]) {
      hit[v] = 1;
      ++count;
    }
  return count == codomain_size;
}

namespace {

// Backtracking over map values; checks every table constraint whose inputs
// and output are assigned and involve the newest element.
void hom_search(const FiniteAlgebra& a, const FiniteAlgebra& b,
                std::vector<int>& map, int next,
                std::vector<std::vector<int>>& out) {
  int n = a.size();
  if (next == n) {
    out.push_back(map);
    return;
  }
  for (int v = 0; v < b.size(); ++v) {
    map[next] = v;
    bool ok = true;
    for (int s = 0; ok && s < a.signature().size(); ++s) {
      int arity = a.signature().arity(s);
      std::vector<int> args(arity, 0);
      std::vector<int> mapped(arity, 0);
      while (ok) {
        bool involves_next = false;
        bool all_assigned = true;
        for (int i = 0; i < arity; ++i) {
          if (args[i] == next) involves_next = true;
          if (args[i] > next) all_assigned = false;
        }
        int result = a.apply(s, args);
        if (result == next) involves_next = true;
        if (result > next) all_assigned = false;
        if (all_assigned && involves_next) {
          for (int i = 0; i < arity; ++i) mapped[i] = map[args[i]];
          if (map[result] != b.apply(s, mapped)) ok = false;
        }
        if (arity == 0 || !next_tuple(args, next + 1)) break;
      }
    }
    if (ok) hom_search(a, b, map, next + 1, out);
  }
  map[next] = -1;
}

}  // namespace

std::vector<std::vector<int>> hom_set(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  require(a.signature() == b.signature(), "hom_set: signature mismatch");
  std::vector<std::vector<int>> out;
  std::vector<int> map(a.size(), -1);
  hom_search(a, b, map, 0, out);
  return out;
}

std::vector<std::vector<int>> epi_set(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  std::vector<std::vector<int>> out;
  for (std::vector<int>& h : hom_set(a, b))
    if (is_surjective_map(h, b.size())) out.push_back(std::move(h));
  return out;
}

FiniteAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  require(a.signature() == b.signature(), "product: signature mismatch");
  int n = a.size() * b.size();
  std::vector<std::vector<int>> tables(a.signature().size());
  for (int s = 0; s < a.signature().size(); ++s) {
    int arity = a.signature().arity(s);
    long long entries = power_checked(n, arity, 100'000'000);
    tables[s].resize(entries);
    std::vector<int> args(arity, 0);
    std::vector<int> left(arity, 0), right(arity, 0);
    long long idx = 0;
    while (true) {
      for (int i = 0; i < arity; ++i) {
        left[i] = args[i] / b.size();
        right[i] = args[i] % b.size();
      }
      tables[s][idx++] = a.apply(s, left) * b.size() + b.apply(s, right);
      if (arity == 0 || !next_tuple(args, n)) break;
    }
  }
  return FiniteAlgebra(a.signature(), n, std::move(tables));
}

Subalgebra generated_subalgebra(const FiniteAlgebra& a,
                                const std::vector<int>& generators) {
  std::vector<int> elems;
  std::vector<int> where(a.size(), -1);
  auto add = [&](int x) {
    require(x >= 0 && x < a.size(), "generated_subalgebra: element out of range");
    if (where[x] < 0) {
      where[x] = static_cast<int>(elems.size());
      elems.push_back(x);
    }
  };
  for (int g : generators) add(g);
  for (int s = 0; s < a.signature().size(); ++s)
    if (a.signature().arity(s) == 0) add(a.apply(s, {}));
  bool grew = true;
  while (grew) {
    grew = false;
    for (int s = 0; s < a.signature().size(); ++s) {
      int arity = a.signature().arity(s);
      if (arity == 0) continue;
      size_t sweep = elems.size();
      std::vector<int> pos(arity, 0);
      std::vector<int> args(arity, 0);
      while (true) {
        for (int i = 0; i < arity; ++i) args[i] = elems[pos[i]];
        size_t before = elems.size();
        add(a.apply(s, args));
        if (elems.size() != before) grew = true;
        if (!next_tuple(pos, static_cast<int>(sweep))) break;
      }
    }
  }
  require(!elems.empty(), "generated_subalgebra: empty carrier");
  int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> tables(a.signature().size());
  for (int s = 0; s < a.signature().size(); ++s) {
    int arity = a.signature().arity(s);
    tables[s].resize(power_checked(n, arity, 100'000'000));
    std::vector<int> pos(arity, 0);
    std::vector<int> args(arity, 0);
    long long idx = 0;
    while (true) {
      for (int i = 0; i < arity; ++i) args[i] = elems[pos[i]];
      int value = a.apply(s, args);
      require(where[value] >= 0, "generated_subalgebra: carrier not closed");
      tables[s][idx++] = where[value];
      if (arity == 0 || !next_tuple(pos, n)) break;
    }
  }
  return Subalgebra{FiniteAlgebra(a.signature(), n, std::move(tables)), elems};
}

bool is_nontrivial(const Variety& v) {
  for (const FiniteAlgebra& g : v.generators)
    if (g.size() >= 2) return true;
  return false;
}

int FreeAlgebra::element_of(const Term& t) const {
  require(t.max_variable() < n_, "element_of: variable outside generators");
  return algebra_.evaluate(t, gens_);
}

bool FreeAlgebra::equivalent(const Term& t1, const Term& t2) const {
  return element_of(t1) == element_of(t2);
}

FreeAlgebra free_algebra(const Variety& v, int n) {
  require(n >= 1, "free_algebra: need at least one generator");
  require(!v.generators.empty(), "free_algebra: variety has no generators");
  for (const FiniteAlgebra& g : v.generators)
    require(g.signature() == v.signature, "free_algebra: generator signature mismatch");
  const Signature& sig = v.signature;

  // Coordinates: one per (generator algebra, assignment of n variables).
  struct Coord {
    const FiniteAlgebra* alg;
    std::vector<int> assignment;
  };
  std::vector<Coord> coords;
  for (const FiniteAlgebra& g : v.generators) {
    std::vector<int> assignment(n, 0);
    long long count = power_checked(g.size(), n, 1'000'000);
    (void)count;
    do {
      coords.push_back(Coord{&g, assignment});
    } while (next_tuple(assignment, g.size()));
  }

  std::vector<std::vector<int>> elems;  // coordinate tuples
  std::vector<Term> reprs;
  std::map<std::vector<int>, int> index;
  auto add = [&](std::vector<int> tuple, Term repr) {
    auto [it, fresh] = index.emplace(std::move(tuple), static_cast<int>(elems.size()));
    if (fresh) {
      elems.push_back(it->first);
      reprs.push_back(std::move(repr));
    }
    return it->second;
  };

  std::vector<int> gens;
  for (int j = 0; j < n; ++j) {
    std::vector<int> tuple(coords.size());
    for (size_t c = 0; c < coords.size(); ++c) tuple[c] = coords[c].assignment[j];
    gens.push_back(add(std::move(tuple), Term::variable(j)));
  }
  for (int s = 0; s < sig.size(); ++s)
    if (sig.arity(s) == 0) {
      std::vector<int> tuple(coords.size());
      for (size_t c = 0; c < coords.size(); ++c) tuple[c] = coords[c].alg->apply(s, {});
      add(std::move(tuple), Term::apply(s));
    }

  bool grew = true;
  while (grew) {
    grew = false;
    for (int s = 0; s < sig.size(); ++s) {
      int arity = sig.arity(s);
      if (arity == 0) continue;
      int sweep = static_cast<int>(elems.size());
      std::vector<int> pos(arity, 0);
      while (true) {
        std::vector<int> tuple(coords.size());
        std::vector<int> args(arity);
        for (size_t c = 0; c < coords.size(); ++c) {
          for (int i = 0; i < arity; ++i) args[i] = elems[pos[i]][c];
          tuple[c] = coords[c].alg->apply(s, args);
        }
        if (index.find(tuple) == index.end()) {
          std::vector<Term> kids;
          for (int i = 0; i < arity; ++i) kids.push_back(reprs[pos[i]]);
          add(std::move(tuple), Term::apply(s, std::move(kids)));
          grew = true;
        }
        if (!next_tuple(pos, sweep)) break;
      }
    }
  }

  int m = static_cast<int>(elems.size());
  std::vector<std::vector<int>> tables(sig.size());
  for (int s = 0; s < sig.size(); ++s) {
    int arity = sig.arity(s);
    tables[s].resize(power_checked(m, arity, 100'000'000));
    std::vector<int> pos(arity, 0);
    long long idx = 0;
    while (true) {
      std::vector<int> tuple(coords.size());
      std::vector<int> args(arity);
      for (size_t c = 0; c < coords.size(); ++c) {
        for (int i = 0; i < arity; ++i) args[i] = elems[pos[i]][c];
        tuple[c] = coords[c].alg->apply(s, args);
      }
      auto it = index.find(tuple);
      require(it != index.end(), "free_algebra: carrier not closed");
      tables[s][idx++] = it->second;
      if (arity == 0 || !next_tuple(pos, m)) break;
    }
  }

  FreeAlgebra f;
  f.algebra_ = FiniteAlgebra(sig, m, std::move(tables));
  f.n_ = n;
  f.gens_ = std::move(gens);
  f.reprs_ = std::move(reprs);
  return f;
}

bool theta_equiv(const Variety& v, int n, const Term& t1, const Term& t2) {
  return free_algebra(v, n).equivalent(t1, t2);
}

bool variety_contains(const Variety& v, const FiniteAlgebra& a) {
  require(a.signature() == v.signature, "variety_contains: signature mismatch");
  // The canonical map from the free algebra on |a| generators, evaluated at
  // the carrier enumeration, commutes with all tables iff every identity of
  // the variety in |a| variables holds in a.
  FreeAlgebra f = free_algebra(v, a.size());
  std::vector<int> enumeration(a.size());
  for (int i = 0; i < a.size(); ++i) enumeration[i] = i;
  std::vector<int> map(f.algebra().size());
  for (int e = 0; e < f.algebra().size(); ++e)
    map[e] = a.evaluate(f.representative(e), enumeration);
  return is_homomorphism(f.algebra(), a, map);
}

}  // namespace rw
