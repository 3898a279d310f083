#include "rw/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rw/algebras.hpp"
#include "rw/chains.hpp"
#include "rw/ordered.hpp"
#include "rw/ramsey.hpp"
#include "rw/terms.hpp"

namespace rw {

namespace {

// Battery objects used across the checks.
Signature meet_signature() { return Signature({{"g", 2}}); }

Signature group_signature() {
  return Signature({{"mul", 2}, {"inv", 1}, {"e", 0}});
}

FiniteAlgebra make_sl2() {
  return FiniteAlgebra(meet_signature(), 2, {{0, 0, 0, 1}});
}

FiniteAlgebra make_sl3() {
  return FiniteAlgebra(meet_signature(), 3, {{0, 0, 0, 0, 1, 1, 0, 1, 2}});
}

FiniteAlgebra make_lz2() {
  return FiniteAlgebra(meet_signature(), 2, {{0, 0, 1, 1}});
}

FiniteAlgebra make_triv1() { return FiniteAlgebra(meet_signature(), 1, {{0}}); }

FiniteAlgebra make_z2() {
  return FiniteAlgebra(group_signature(), 2, {{0, 1, 1, 0}, {0, 1}, {0}});
}

Variety semilattice() { return Variety{"semilattice", meet_signature(), {make_sl2()}}; }

Variety boolean_group() { return Variety{"boolean-group", group_signature(), {make_z2()}}; }

OrderedAlgebra sl2_ordered() { return OrderedAlgebra(make_sl2(), {0, 1}, "sl2-ord"); }

OrderedAlgebra sl2_reversed() { return OrderedAlgebra(make_sl2(), {1, 0}, "sl2-rev"); }

OrderedAlgebra sl3_ordered() { return OrderedAlgebra(make_sl3(), {0, 1, 2}, "sl3-ord"); }

// Second-kind partition-number recurrence. The mutant flips the coefficient,
// which first diverges at n = 4, k = 2.
long long stirling_partition(int n, int k, bool mutant) {
  if (n == 0 && k == 0) return 1;
  if (n <= 0 || k <= 0 || k > n) return 0;
  long long coeff = mutant ? (n - 1) : k;
  return coeff * stirling_partition(n - 1, k, mutant) +
         stirling_partition(n - 1, k - 1, mutant);
}

// Visits every table of a map domain -> codomain.
template <typename Visit>
void for_each_table(int domain, int codomain, Visit visit) {
  std::vector<int> table(domain, 0);
  while (true) {
    visit(table);
    int i = domain - 1;
    while (i >= 0 && table[i] == codomain - 1) table[i--] = 0;
    if (i < 0) return;
    ++table[i];
  }
}

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(unsigned long long seed) : eng(seed) {}
  int below(int n) { return static_cast<int>(eng() % static_cast<unsigned long long>(n)); }
};

Term random_term(Rng& rng, const Signature& sig, int n_vars, int depth) {
  if (depth <= 0 || rng.below(3) == 0) {
    // Leaves are variables, or constants when the signature has them.
    std::vector<int> constants;
    for (int i = 0; i < sig.size(); ++i)
      if (sig.arity(i) == 0) constants.push_back(i);
    if (!constants.empty() && rng.below(4) == 0)
      return Term::apply(constants[rng.below(static_cast<int>(constants.size()))]);
    return Term::variable(rng.below(n_vars));
  }
  int sym = rng.below(sig.size());
  std::vector<Term> children;
  for (int i = 0; i < sig.arity(sym); ++i)
    children.push_back(random_term(rng, sig, n_vars, depth - 1));
  return Term::apply(sym, std::move(children));
}

std::string show_table(const std::vector<int>& t) {
  std::string out = "[";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(t[i]);
  }
  return out + "]";
}

struct Suite {
  const VerifyOptions& opts;
  std::vector<CheckResult> out;

  explicit Suite(const VerifyOptions& o) : opts(o) {}

  void add(const std::string& name, bool pass, std::string detail) {
    out.push_back({name, pass, std::move(detail)});
  }

  // ---- chains ----

  void initial_segment_equivalence() {
    long long cases = 0;
    std::string bad;
    for (int n = 1; n <= opts.chain_cap && bad.empty(); ++n)
      for (int k = 1; k <= n && bad.empty(); ++k)
        for_each_table(n, k, [&](const std::vector<int>& t) {
          ChainMap f(n, k, t);
          if (!is_surjection(f)) return;
          ++cases;
          if (is_rigid_surjection(f) != initial_segment_criterion(f))
            bad = "disagree at " + show_table(t);
        });
    add("initial-segment equivalence", bad.empty(),
        bad.empty() ? "surjections checked: " + std::to_string(cases) : bad);
  }

  void dual_embedding_characterization() {
    long long cases = 0;
    std::string bad;
    for (int n = 1; n <= opts.chain_cap && bad.empty(); ++n)
      for (int k = 1; k <= n && bad.empty(); ++k)
        for_each_table(n, k, [&](const std::vector<int>& t) {
          ChainMap f(n, k, t);
          if (!is_surjection(f)) return;
          ++cases;
          ChainMap d = dual_embedding(f);
          bool increasing = true;
          for (int b = 1; b < k; ++b)
            if (d(b - 1) >= d(b)) increasing = false;
          if (increasing != is_rigid_surjection(f))
            bad = "disagree at " + show_table(t);
        });
    add("dual-embedding characterization", bad.empty(),
        bad.empty() ? "surjections checked: " + std::to_string(cases) : bad);
  }

  void induced_order_uniqueness() {
    int cap = std::min(opts.chain_cap, 5);
    long long cases = 0;
    std::string bad;
    for (int n = 1; n <= cap && bad.empty(); ++n)
      for (int k = 1; k <= n && bad.empty(); ++k)
        for_each_table(n, k, [&](const std::vector<int>& t) {
          if (!bad.empty()) return;
          ChainMap f(n, k, t);
          if (!is_surjection(f)) return;
          ++cases;
          std::vector<int> ord(k);
          for (int i = 0; i < k; ++i) ord[i] = i;
          int rigid_count = 0;
          std::vector<int> winner;
          do {
            std::vector<int> pos(k);
            for (int p = 0; p < k; ++p) pos[ord[p]] = p;
            std::vector<int> table(n);
            for (int i = 0; i < n; ++i) table[i] = pos[t[i]];
            if (is_rigid_surjection(ChainMap(n, k, table))) {
              ++rigid_count;
              winner = ord;
            }
          } while (std::next_permutation(ord.begin(), ord.end()));
          if (rigid_count != 1 || winner != induced_order(f))
            bad = "not unique at " + show_table(t);
        });
    add("induced-order uniqueness", bad.empty(),
        bad.empty() ? "surjections checked: " + std::to_string(cases) : bad);
  }

  void rigid_surjection_counts() {
    std::string bad;
    for (int n = 1; n <= opts.chain_cap && bad.empty(); ++n)
      for (int k = 1; k <= n && bad.empty(); ++k) {
        long long expect = stirling_partition(n, k, opts.inject_mutant);
        long long got = static_cast<long long>(enumerate_rigid_surjections(n, k).size());
        if (expect != got)
          bad = "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": enumerated " +
                std::to_string(got) + ", recurrence " + std::to_string(expect);
      }
    add("rigid-surjection counts", bad.empty(),
        bad.empty() ? "all sizes up to " + std::to_string(opts.chain_cap) + " match" : bad);
  }

  void cancellation() {
    long long cases = 0;
    std::string bad;
    for (int a = 1; a <= opts.chain_cap && bad.empty(); ++a)
      for (int b = 1; b <= a && bad.empty(); ++b)
        for (const ChainMap& g : enumerate_rigid_surjections(a, b)) {
          for (int c = 1; c <= b; ++c)
            for_each_table(b, c, [&](const std::vector<int>& t) {
              ChainMap h(b, c, t);
              if (!is_rigid_surjection(compose(h, g))) return;
              ++cases;
              if (!is_rigid_surjection(h)) bad = "h not rigid at " + show_table(t);
            });
          if (!bad.empty()) break;
        }
    add("cancellation", bad.empty(),
        bad.empty() ? "rigid composites checked: " + std::to_string(cases) : bad);
  }

  void composition_closure() {
    long long cases = 0;
    std::string bad;
    for (int a = 1; a <= opts.chain_cap && bad.empty(); ++a)
      for (int b = 1; b <= a && bad.empty(); ++b)
        for (int c = 1; c <= b && bad.empty(); ++c)
          for (const ChainMap& f : enumerate_rigid_surjections(a, b)) {
            for (const ChainMap& g : enumerate_rigid_surjections(b, c)) {
              ++cases;
              if (!is_rigid_surjection(compose(g, f))) {
                bad = "composite not rigid at " + show_table(f.table) + " then " +
                      show_table(g.table);
                break;
              }
            }
            if (!bad.empty()) break;
          }
    add("composition closure", bad.empty(),
        bad.empty() ? "pairs checked: " + std::to_string(cases) : bad);
  }

  void rigid_bijections_are_identities() {
    std::string bad;
    for (int n = 1; n <= opts.chain_cap && bad.empty(); ++n) {
      std::vector<ChainMap> all = enumerate_rigid_surjections(n, n);
      if (all.size() != 1 || !(all[0] == identity_map(n)))
        bad = "n=" + std::to_string(n);
    }
    add("rigid bijections are identities", bad.empty(),
        bad.empty() ? "sizes up to " + std::to_string(opts.chain_cap) : bad);
  }

  void lex_power_rigidity() {
    long long cases = 0;
    std::string bad;
    for (int n = 1; n <= std::min(opts.chain_cap, 4) && bad.empty(); ++n)
      for (int k = 1; k <= n && bad.empty(); ++k)
        for (const ChainMap& f : enumerate_rigid_surjections(n, k)) {
          for (int w = 1; w <= 3; ++w) {
            ChainMap big = lex_product_map(f, w);
            ++cases;
            if (!is_rigid_surjection(big)) {
              bad = "power not rigid at " + show_table(f.table);
              break;
            }
            // Fiber minima factor through the coordinatewise dual embedding.
            ChainMap d = dual_embedding(f);
            ChainMap big_dual = dual_embedding(big);
            long long total = 1;
            for (int i = 0; i < w; ++i) total *= k;
            for (long long j = 0; j < total; ++j) {
              std::vector<int> tup = lex_tuple(j, k, w);
              for (int& x : tup) x = d(x);
              if (big_dual(static_cast<int>(j)) != lex_index(tup, n)) {
                bad = "dual mismatch at " + show_table(f.table);
                break;
              }
            }
            if (!bad.empty()) break;
          }
          if (!bad.empty()) break;
        }
    add("lex-power rigidity", bad.empty(),
        bad.empty() ? "powers checked: " + std::to_string(cases) : bad);
  }

  // ---- terms ----

  std::vector<std::pair<Signature, int>> term_battery() const {
    return {{meet_signature(), 3}, {group_signature(), 2},
            {Signature({{"u", 1}, {"c", 0}}), 2}};
  }

  void neat_order_totality() {
    std::string bad;
    long long pairs = 0;
    for (const auto& [sig, n_vars] : term_battery()) {
      std::vector<Term> terms = enumerate_neat(sig, n_vars, opts.max_len);
      for (size_t i = 0; i + 1 < terms.size(); ++i)
        if (neat_compare(terms[i], terms[i + 1]) >= 0) bad = "enumeration not increasing";
      for (size_t i = 0; i < terms.size() && bad.empty(); ++i)
        for (size_t j = 0; j < terms.size(); ++j) {
          ++pairs;
          int ab = neat_compare(terms[i], terms[j]);
          int ba = neat_compare(terms[j], terms[i]);
          if ((ab == 0) != (i == j) || (ab < 0) != (ba > 0)) {
            bad = "comparison not antisymmetric";
            break;
          }
        }
      if (!bad.empty()) break;
    }
    add("neat order totality", bad.empty(),
        bad.empty() ? "ordered pairs checked: " + std::to_string(pairs) : bad);
  }

  void neat_enumeration_completeness() {
    std::string bad;
    for (const auto& [sig, n_vars] : term_battery()) {
      // Independent recount: shapes times variable tuples per shape.
      long long expect = 0;
      for (const Shape& s : enumerate_shapes(sig, opts.max_len)) {
        long long tuples = 1;
        for (size_t i = 0; i < variable_occurrences(s.term).size(); ++i) tuples *= n_vars;
        expect += tuples;
      }
      std::vector<Term> terms = enumerate_neat(sig, n_vars, opts.max_len);
      if (static_cast<long long>(terms.size()) != expect) {
        bad = "count mismatch: enumerated " + std::to_string(terms.size()) +
              ", recounted " + std::to_string(expect);
        break;
      }
      for (const Term& t : terms)
        if (t.token_length() > opts.max_len) bad = "term beyond the truncation";
    }
    add("neat enumeration completeness", bad.empty(),
        bad.empty() ? "recount matches at length " + std::to_string(opts.max_len) : bad);
  }

  void substitution_functoriality() {
    Rng rng(opts.seed);
    std::string bad;
    for (int it = 0; it < opts.random_instances && bad.empty(); ++it) {
      const auto battery = term_battery();
      const auto& [sig, n_vars] = battery[rng.below(static_cast<int>(battery.size()))];
      int m = 1 + rng.below(3), n = 1 + rng.below(3), p = 1 + rng.below(3);
      std::vector<int> ft(m), gt(n);
      for (int& x : ft) x = rng.below(n);
      for (int& x : gt) x = rng.below(p);
      ChainMap f(m, n, ft), g(n, p, gt);
      Term t = random_term(rng, sig, m, 3);
      if (!(shape_of(substitute(f, t)) == shape_of(t))) bad = "shape not preserved";
      if (!(substitute(compose(g, f), t) == substitute(g, substitute(f, t))))
        bad = "composition law broken";
      (void)n_vars;
    }
    add("substitution functoriality", bad.empty(),
        bad.empty() ? "random instances: " + std::to_string(opts.random_instances) : bad);
  }

  void substitution_rigidity() {
    long long cases = 0;
    std::string bad;
    for (const auto& [sig, n_vars] : term_battery()) {
      (void)n_vars;
      for (int n = 1; n <= opts.subst_domain_cap && bad.empty(); ++n)
        for (int k = 1; k <= n; ++k)
          for (const ChainMap& f : enumerate_rigid_surjections(n, k)) {
            ++cases;
            if (!check_subst_rigid(f, sig, opts.max_len)) {
              bad = "induced map not rigid at " + show_table(f.table);
              break;
            }
          }
      if (!bad.empty()) break;
    }
    add("substitution rigidity", bad.empty(),
        bad.empty() ? "induced maps checked: " + std::to_string(cases) : bad);
  }

  void flatten_wrapper_minimality() {
    std::string bad;
    for (const auto& [sig, n_vars] : term_battery())
      if (!check_mu_rigid(sig, std::min(n_vars, 2), std::min(opts.max_len, 7))) {
        bad = "two-level comparison failed";
        break;
      }
    add("flatten wrapper minimality", bad.empty(),
        bad.empty() ? "battery signatures pass" : bad);
  }

  void flatten_sections() {
    Rng rng(opts.seed + 1);
    std::string bad;
    long long preimages = 0;
    for (int it = 0; it < opts.random_instances && bad.empty(); ++it) {
      const auto battery = term_battery();
      const auto& [sig, n_vars] = battery[rng.below(static_cast<int>(battery.size()))];
      Term t = random_term(rng, sig, n_vars, 2);
      if (!(flatten(wrap(t)) == t)) bad = "unit law broken";
      bool saw_wrap = false;
      for (const TermOverTerms& u : flatten_preimages(t)) {
        ++preimages;
        if (!(flatten(u) == t)) bad = "preimage does not flatten back";
        TermOverTerms w = wrap(t);
        if (u.outer == w.outer && u.pool == w.pool) saw_wrap = true;
      }
      if (!saw_wrap) bad = "wrapper missing from the preimages";
    }
    add("flatten sections", bad.empty(),
        bad.empty() ? "preimages checked: " + std::to_string(preimages) : bad);
  }

  // ---- algebras ----

  void evaluation_substitution_compatibility() {
    Rng rng(opts.seed + 2);
    std::vector<FiniteAlgebra> battery = {make_sl2(), make_sl3(), make_z2()};
    std::string bad;
    for (int it = 0; it < opts.random_instances && bad.empty(); ++it) {
      const FiniteAlgebra& a = battery[rng.below(static_cast<int>(battery.size()))];
      int m = 1 + rng.below(3), n = 1 + rng.below(3);
      std::vector<int> ft(m);
      for (int& x : ft) x = rng.below(n);
      ChainMap f(m, n, ft);
      Term t = random_term(rng, a.signature(), m, 3);
      std::vector<int> asg(n);
      for (int& x : asg) x = rng.below(a.size());
      std::vector<int> pulled(m);
      for (int i = 0; i < m; ++i) pulled[i] = asg[ft[i]];
      if (a.evaluate(substitute(f, t), asg) != a.evaluate(t, pulled))
        bad = "evaluation disagrees after substitution";
    }
    add("evaluation-substitution compatibility", bad.empty(),
        bad.empty() ? "random instances: " + std::to_string(opts.random_instances) : bad);
  }

  void free_algebra_sizes() {
    std::string bad;
    Variety sl = semilattice(), bg = boolean_group();
    for (int n = 1; n <= 3; ++n) {
      int got = free_algebra(sl, n).algebra().size();
      int expect = (1 << n) - 1;
      if (got != expect)
        bad = "semilattice n=" + std::to_string(n) + ": " + std::to_string(got);
    }
    for (int n = 1; n <= 2; ++n) {
      int got = free_algebra(bg, n).algebra().size();
      if (got != (1 << n))
        bad = "boolean group n=" + std::to_string(n) + ": " + std::to_string(got);
    }
    add("free-algebra sizes", bad.empty(),
        bad.empty() ? "semilattice 1,3,7 and boolean group 2,4" : bad);
  }

  void free_universal_property() {
    std::string bad;
    struct Case {
      Variety v;
      int n;
      FiniteAlgebra target;
    };
    std::vector<Case> cases = {{semilattice(), 2, make_sl2()},
                               {semilattice(), 2, make_sl3()},
                               {semilattice(), 3, make_sl2()},
                               {boolean_group(), 2, make_z2()}};
    for (const Case& c : cases) {
      FreeAlgebra f = free_algebra(c.v, c.n);
      std::vector<std::vector<int>> homs = hom_set(f.algebra(), c.target);
      long long expect = 1;
      for (int i = 0; i < c.n; ++i) expect *= c.target.size();
      if (static_cast<long long>(homs.size()) != expect) {
        bad = "hom count " + std::to_string(homs.size()) + ", expected " +
              std::to_string(expect);
        break;
      }
      std::set<std::vector<int>> images;
      for (const auto& h : homs) {
        std::vector<int> img;
        for (int g : f.generator_elements()) img.push_back(h[g]);
        images.insert(img);
      }
      if (static_cast<long long>(images.size()) != expect) {
        bad = "generator images collide";
        break;
      }
    }
    add("free-algebra universal property", bad.empty(),
        bad.empty() ? "every generator assignment extends uniquely" : bad);
  }

  void variety_membership() {
    Variety sl = semilattice();
    bool pass = variety_contains(sl, make_sl3()) && variety_contains(sl, make_sl2()) &&
                variety_contains(sl, make_triv1()) && !variety_contains(sl, make_lz2());
    add("variety membership", pass,
        pass ? "chain meets are members, the left-zero band is not"
             : "membership test disagrees");
  }

  void free_satisfies_identities() {
    FiniteAlgebra f3 = free_algebra(semilattice(), 3).algebra();
    Term x = Term::variable(0), y = Term::variable(1), z = Term::variable(2);
    auto g = [](Term a, Term b) { return Term::apply(0, {std::move(a), std::move(b)}); };
    bool pass = satisfies_identity(f3, g(x, y), g(y, x)) &&
                satisfies_identity(f3, g(g(x, y), z), g(x, g(y, z))) &&
                satisfies_identity(f3, g(x, x), x);
    FiniteAlgebra fz = free_algebra(boolean_group(), 2).algebra();
    Signature gs = group_signature();
    auto mul = [](Term a, Term b) { return Term::apply(0, {std::move(a), std::move(b)}); };
    Term e = Term::apply(2);
    pass = pass && satisfies_identity(fz, mul(x, x), e) &&
           satisfies_identity(fz, mul(x, e), x) &&
           satisfies_identity(fz, mul(mul(x, y), mul(x, y)), e) &&
           satisfies_identity(fz, mul(x, y), mul(y, x));
    (void)gs;
    add("free algebras satisfy the presenting identities", pass,
        pass ? "semilattice and boolean group laws hold" : "a presenting identity fails");
  }

  // ---- ordered ----

  void object_rigidity() {
    std::string bad;
    long long objects = 0;
    for (const FiniteAlgebra& base : {make_sl2(), make_sl3(), make_z2(), make_lz2()})
      for (const OrderedAlgebra& a : expansions(base)) {
        ++objects;
        std::vector<RigidEpimorphism> self = rigid_epi_set(a, a);
        bool ok = self.size() == 1;
        if (ok)
          for (int i = 0; i < a.size(); ++i)
            if (self[0](i) != i) ok = false;
        if (!ok) {
          bad = "self maps of expansion " + show_table(a.order());
          break;
        }
      }
    add("object rigidity", bad.empty(),
        bad.empty() ? "expansions checked: " + std::to_string(objects) : bad);
  }

  void evaluation_rigidity() {
    std::string bad;
    std::vector<OrderedAlgebra> battery = {sl2_ordered(), sl2_reversed(), sl3_ordered(),
                                           OrderedAlgebra(make_z2(), {1, 0}, "z2-ord"),
                                           OrderedAlgebra(make_lz2(), {0, 1}, "lz2-ord")};
    for (const OrderedAlgebra& a : battery)
      if (!check_eval_rigid(a, opts.max_len)) {
        bad = "evaluation not rigid for " + a.name();
        break;
      }
    add("evaluation rigidity", bad.empty(),
        bad.empty() ? "battery objects checked: " + std::to_string(5) : bad);
  }

  void ordered_free_structure() {
    std::string bad;
    Variety sl = semilattice();
    OrderedFreeAlgebra of2 = ordered_free(sl, 2);
    Signature sig = sl.signature;
    if (of2.size() != 3) bad = "rank 2 size " + std::to_string(of2.size());
    std::vector<std::string> expect = {"x1", "x2", "g(x1,x2)"};
    for (int p = 0; p < of2.size() && bad.empty(); ++p) {
      int e = of2.ordered().at_position(p);
      if (render(of2.min_term(e), sig) != expect[p])
        bad = "position " + std::to_string(p) + " is " + render(of2.min_term(e), sig);
    }
    OrderedFreeAlgebra of3 = ordered_free(sl, 3);
    if (of3.size() != 7) bad = "rank 3 size " + std::to_string(of3.size());
    for (int i = 0; i < 3 && bad.empty(); ++i)
      if (of3.ordered().at_position(i) != of3.free().generator_elements()[i])
        bad = "generators are not the leading block";
    int prev = 0;
    for (int p = 0; p < of3.size() && bad.empty(); ++p) {
      int len = of3.min_term(of3.ordered().at_position(p)).token_length();
      if (len < prev) bad = "minimal terms not nondecreasing";
      prev = len;
    }
    add("ordered free structure", bad.empty(),
        bad.empty() ? "rank 2 and 3 carriers match the neat enumeration" : bad);
  }

  void substitution_rigidity_on_free() {
    std::string bad;
    Variety sl = semilattice();
    long long cases = 0;
    for (int m = 1; m <= 3 && bad.empty(); ++m) {
      ChainMap id = identity_map(m);
      std::vector<int> ht = hat_t_v(sl, id).map();
      for (size_t i = 0; i < ht.size(); ++i)
        if (ht[i] != static_cast<int>(i)) bad = "identity does not lift to identity";
      for (int n = 1; n <= m && bad.empty(); ++n)
        for (const ChainMap& f : enumerate_rigid_surjections(m, n)) {
          RigidEpimorphism hf = hat_t_v(sl, f);
          for (int p = 1; p <= n && bad.empty(); ++p)
            for (const ChainMap& g : enumerate_rigid_surjections(n, p)) {
              ++cases;
              RigidEpimorphism hg = hat_t_v(sl, g);
              std::vector<int> composite = hat_t_v(sl, compose(g, f)).map();
              for (size_t x = 0; x < composite.size(); ++x)
                if (composite[x] != hg.map()[hf.map()[x]]) {
                  bad = "lift is not functorial at " + show_table(f.table) + " then " +
                        show_table(g.table);
                  break;
                }
            }
        }
    }
    add("substitution rigidity on free algebras", bad.empty(),
        bad.empty() ? "lifted pairs checked: " + std::to_string(cases) : bad);
  }

  void reflection_factoring() {
    std::string bad;
    Variety sl = semilattice();
    long long successes = 0, rejections = 0;
    struct Case {
      OrderedAlgebra a;
      int n;
    };
    std::vector<Case> cases = {{sl2_ordered(), 2}, {sl2_ordered(), 3},
                               {sl2_reversed(), 3}, {sl3_ordered(), 3}};
    for (const Case& c : cases) {
      OrderedFreeAlgebra of = ordered_free(sl, c.n);
      long long expect_rigid =
          static_cast<long long>(rigid_epi_set(of.ordered(), c.a).size());
      long long got_rigid = 0;
      std::vector<int> images(c.n, 0);
      bool done = false;
      while (!done && bad.empty()) {
        bool generates =
            generated_subalgebra(c.a.algebra(), images).algebra.size() == c.a.size();
        // Brute extension by evaluating minimal terms at the images.
        std::vector<int> h(of.size());
        for (int e = 0; e < of.size(); ++e)
          h[e] = c.a.algebra().evaluate(of.min_term(e), images);
        bool expect_ok = generates && is_rigid_epi(of.ordered(), c.a, h);
        try {
          RigidEpimorphism r = factor_reflection(sl, c.n, c.a, images);
          ++got_rigid;
          ++successes;
          if (!expect_ok || !(r.map() == h)) {
            bad = "factoring disagrees at images " + show_table(images);
            break;
          }
        } catch (const std::invalid_argument&) {
          ++rejections;
          if (expect_ok) {
            bad = "factoring rejected a valid tuple " + show_table(images);
            break;
          }
        }
        int i = c.n - 1;
        while (i >= 0 && images[i] == c.a.size() - 1) images[i--] = 0;
        if (i < 0)
          done = true;
        else
          ++images[i];
      }
      if (bad.empty() && got_rigid != expect_rigid) {
        bad = "factoring found " + std::to_string(got_rigid) + " epis, enumeration " +
              std::to_string(expect_rigid);
      }
      if (!bad.empty()) break;
    }
    // A carrier outside the variety must be flagged as such.
    bool domain_flagged = false;
    try {
      factor_reflection(sl, 2, OrderedAlgebra(make_lz2(), {0, 1}), {0, 1});
    } catch (const std::domain_error&) {
      domain_flagged = true;
    }
    if (bad.empty() && !domain_flagged) bad = "membership failure was not flagged";
    add("reflection factoring", bad.empty(),
        bad.empty() ? "tuples factored: " + std::to_string(successes) + ", rejected: " +
                          std::to_string(rejections)
                    : bad);
  }

  void joint_factoring() {
    std::string bad;
    Variety sl = semilattice();
    OrderedFreeAlgebra of3 = ordered_free(sl, 3);
    std::vector<RigidEpimorphism> epis = rigid_epi_set(of3.ordered(), sl2_ordered());
    long long pairs = 0;
    for (const RigidEpimorphism& f : epis)
      for (const RigidEpimorphism& g : epis) {
        ++pairs;
        JointFactorization jf = joint_factor(f, g);
        for (int x = 0; x < of3.size() && bad.empty(); ++x) {
          if (jf.onto_first(jf.pairing(x)) != f(x)) bad = "first leg disagrees";
          if (jf.onto_second(jf.pairing(x)) != g(x)) bad = "second leg disagrees";
        }
        if (jf.image.size() > f.codomain().size() * g.codomain().size())
          bad = "image exceeds the product";
        if (!bad.empty()) break;
      }
    add("joint factoring", bad.empty(),
        bad.empty() ? "pairs factored: " + std::to_string(pairs) : bad);
  }

  void expansion_restriction_uniqueness() {
    std::string bad;
    FiniteAlgebra b = make_sl3(), a = make_sl2();
    long long cases = 0;
    for (const std::vector<int>& e : epi_set(b, a))
      for (const OrderedAlgebra& bo : expansions(b)) {
        ++cases;
        int rigid_count = 0;
        std::vector<int> winner;
        for (const OrderedAlgebra& ao : expansions(a))
          if (is_rigid_epi(bo, ao, e)) {
            ++rigid_count;
            winner = ao.order();
          }
        if (rigid_count != 1 || winner != unique_restriction(bo, e, a.size())) {
          bad = "restriction not unique for map " + show_table(e) + " order " +
                show_table(bo.order());
          break;
        }
      }
    add("expansion restriction uniqueness", bad.empty(),
        bad.empty() ? "cases checked: " + std::to_string(cases) : bad);
  }

  void weak_left_square() {
    std::string bad;
    for (const FiniteAlgebra& a : {make_sl2(), make_sl3(), make_z2(), make_lz2()})
      if (!weak_left_square_holds(a, std::min(opts.max_len, 6))) {
        bad = "two-level evaluation disagrees";
        break;
      }
    add("weak left square", bad.empty(),
        bad.empty() ? "battery algebras checked: 4" : bad);
  }

  // ---- ramsey ----

  void arrow_engine_oracle() {
    Rng rng(opts.seed + 3);
    std::string bad;
    long long agreed = 0;
    for (int it = 0; it < opts.random_instances && bad.empty(); ++it) {
      int c = 1 + rng.below(4);
      int b = 1 + rng.below(c);
      int a = 1 + rng.below(b);
      int k = 1 + rng.below(3);
      int t = 1 + rng.below(k);
      ArrowInstance inst = chains_instance(c, b, a).inst;
      ArrowOptions ao;
      ao.seed = opts.seed;
      ArrowCertificate cert = check_arrow_instance(inst, k, t, ao);
      Verdict naive = naive_arrow_decision(inst, k, t);
      if (cert.verdict != naive) {
        bad = "disagreement at c=" + std::to_string(c) + " b=" + std::to_string(b) +
              " a=" + std::to_string(a) + " k=" + std::to_string(k) +
              " t=" + std::to_string(t);
        break;
      }
      if (!revalidate_certificate(inst, cert, k, t)) {
        bad = "certificate failed revalidation";
        break;
      }
      ++agreed;
    }
    add("arrow engine matches the independent oracle", bad.empty(),
        bad.empty() ? "instances agreed: " + std::to_string(agreed) : bad);
  }

  void known_chain_verdicts() {
    struct Case {
      int c, b, a, k, t;
      Verdict expect;
    };
    std::vector<Case> cases = {{2, 2, 2, 2, 1, Verdict::holds},
                               {3, 3, 2, 2, 1, Verdict::fails},
                               {4, 3, 2, 2, 1, Verdict::fails},
                               {5, 3, 2, 2, 1, Verdict::fails},
                               {4, 3, 2, 2, 2, Verdict::holds},
                               {4, 2, 2, 3, 1, Verdict::holds}};
    std::string bad;
    for (const Case& c : cases) {
      ArrowOptions ao;
      ao.seed = opts.seed;
      ArrowCertificate cert = check_arrow_chains(c.c, c.b, c.a, c.k, c.t, ao);
      if (cert.verdict != c.expect) {
        bad = "c=" + std::to_string(c.c) + " b=" + std::to_string(c.b) + " a=" +
              std::to_string(c.a) + " k=" + std::to_string(c.k) + " t=" +
              std::to_string(c.t) + " got " + verdict_name(cert.verdict);
        break;
      }
      if (!revalidate_certificate(chains_instance(c.c, c.b, c.a).inst, cert, c.k, c.t)) {
        bad = "certificate failed revalidation";
        break;
      }
    }
    add("known chain verdicts", bad.empty(),
        bad.empty() ? "fixed instances checked: 6" : bad);
  }

  void going_up() {
    std::string bad;
    ArrowOptions ao;
    ao.seed = opts.seed;
    GoingUpReport r1 = going_up_check(chains_instance(2, 2, 2), chains_instance(3, 2, 2),
                                      {0, 0, 1}, 2, 1, ao);
    if (r1.at_c != Verdict::holds || !r1.transported_ok) bad = "small step failed";
    GoingUpReport r2 = going_up_check(chains_instance(4, 3, 2), chains_instance(5, 3, 2),
                                      {0, 1, 2, 3, 3}, 2, 2, ao);
    if (bad.empty() && (r2.at_c != Verdict::holds || !r2.transported_ok))
      bad = "larger step failed";
    add("going up", bad.empty(),
        bad.empty() ? "colorings replayed: " +
                          std::to_string(r1.colorings_checked + r2.colorings_checked)
                    : bad);
  }

  void pre_adjunction_law() {
    std::string bad;
    long long cases = 0;
    std::vector<RigidEpimorphism> fs = rigid_epi_set(sl3_ordered(), sl2_ordered());
    if (fs.size() != 2) bad = "expected two epimorphisms between the chain meets";
    for (int m = 3; m <= 4 && bad.empty(); ++m)
      for (const ChainMap& u : enumerate_rigid_surjections(m, 3))
        for (const RigidEpimorphism& f : fs) {
          ++cases;
          if (!check_pa_instance(sl3_ordered(), sl2_ordered(), u, f, 11)) {
            bad = "law fails at u=" + show_table(u.table);
            break;
          }
        }
    add("pre-adjunction law", bad.empty(),
        bad.empty() ? "instances checked: " + std::to_string(cases) : bad);
  }

  void coloring_transport() {
    std::string bad;
    Variety sl = semilattice();
    ArrowOptions ao;
    ao.seed = opts.seed;
    TransportCertificate tc = transport_arrow(sl, 3, sl2_ordered(), sl3_ordered(), 2, 2, ao);
    if (tc.cert.verdict != Verdict::holds || !tc.transported_all)
      bad = "transport at rank 3 failed";
    // Without the chain-level arrow the pipeline must refuse to run.
    bool refused = false;
    try {
      transport_arrow(sl, 3, sl2_ordered(), sl3_ordered(), 2, 1, ao);
    } catch (const std::invalid_argument&) {
      refused = true;
    }
    if (bad.empty() && !refused) bad = "missing chain arrow was not refused";
    add("coloring transport", bad.empty(),
        bad.empty() ? "rank 3 transport validated, unsupported instance refused" : bad);
  }

  void segment_induction_check() {
    std::string bad;
    Variety sl = semilattice();
    ArrowOptions ao;
    ao.seed = opts.seed;
    std::vector<std::vector<int>> colorings = {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}};
    for (const std::vector<int>& chi : colorings) {
      SegmentCertificate sc = segment_induction(sl, sl2_ordered(), 2, chi, 3, ao);
      if (sc.verdict != Verdict::holds || sc.colors_used > sc.bound ||
          sc.steps.size() != 2) {
        bad = "replay failed at coloring " + show_table(chi);
        break;
      }
    }
    SegmentCertificate vac = segment_induction(sl, sl3_ordered(), 2, {}, 2, ao);
    if (bad.empty() && (!vac.vacuous || vac.verdict != Verdict::holds))
      bad = "vacuous case not recognized";
    add("segment induction", bad.empty(),
        bad.empty() ? "four colorings certified, vacuous case recognized" : bad);
  }

  void degree_bounds() {
    std::string bad;
    ArrowOptions ao;
    ao.seed = opts.seed;
    DegreeBounds chains = small_degree_bounds_chains(2, {2, 3, 4}, 2, 3, ao);
    if (chains.lower != 2 || !chains.upper || *chains.upper != 2)
      bad = "chain bounds lower=" + std::to_string(chains.lower);
    DegreeBounds ord = small_degree_bounds_ordered(
        sl2_ordered(), {sl2_ordered(), sl3_ordered()}, 2, 3, ao);
    if (bad.empty() && (ord.lower != 2 || !ord.upper || *ord.upper != 2))
      bad = "ordered bounds lower=" + std::to_string(ord.lower);
    add("degree bounds", bad.empty(),
        bad.empty() ? "both catalogs pin the degree at 2" : bad);
  }

  void expansion_sum() {
    std::string bad;
    std::map<std::vector<int>, int> degrees;
    for (const OrderedAlgebra& e : expansions(make_sl2())) degrees[e.order()] = 1;
    if (expansion_sum_bound(make_sl2(), degrees) != 2) bad = "two expansions should sum to 2";
    degrees.clear();
    for (const OrderedAlgebra& e : expansions(make_sl3())) degrees[e.order()] = 1;
    if (bad.empty() && expansion_sum_bound(make_sl3(), degrees) != 6)
      bad = "six expansions should sum to 6";
    add("expansion sum bound", bad.empty(),
        bad.empty() ? "unordered bound matches the expansion count" : bad);
  }

  void run_chains() {
    initial_segment_equivalence();
    dual_embedding_characterization();
    induced_order_uniqueness();
    rigid_surjection_counts();
    cancellation();
    composition_closure();
    rigid_bijections_are_identities();
    lex_power_rigidity();
  }

  void run_terms() {
    neat_order_totality();
    neat_enumeration_completeness();
    substitution_functoriality();
    substitution_rigidity();
    flatten_wrapper_minimality();
    flatten_sections();
  }

  void run_algebras() {
    evaluation_substitution_compatibility();
    free_algebra_sizes();
    free_universal_property();
    variety_membership();
    free_satisfies_identities();
  }

  void run_ordered() {
    object_rigidity();
    evaluation_rigidity();
    ordered_free_structure();
    substitution_rigidity_on_free();
    reflection_factoring();
    joint_factoring();
    expansion_restriction_uniqueness();
    weak_left_square();
  }

  void run_ramsey() {
    arrow_engine_oracle();
    known_chain_verdicts();
    going_up();
    pre_adjunction_law();
    coloring_transport();
    segment_induction_check();
    degree_bounds();
    expansion_sum();
  }
};

}  // namespace

std::vector<CheckResult> run_verify_suite(const std::string& scope,
                                          const VerifyOptions& opts) {
  Suite suite(opts);
  if (scope == "chains")
    suite.run_chains();
  else if (scope == "terms")
    suite.run_terms();
  else if (scope == "algebras")
    suite.run_algebras();
  else if (scope == "ordered")
    suite.run_ordered();
  else if (scope == "ramsey")
    suite.run_ramsey();
  else if (scope == "all") {
    suite.run_chains();
    suite.run_terms();
    suite.run_algebras();
    suite.run_ordered();
    suite.run_ramsey();
  } else {
    throw std::invalid_argument("run_verify_suite: unknown scope " + scope);
  }
  return suite.out;
}

}  // namespace rw
