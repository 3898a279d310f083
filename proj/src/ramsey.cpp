#include "rw/ramsey.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>

namespace rw {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

std::vector<int> compose_tables(const std::vector<int>& g, const std::vector<int>& f) {
  std::vector<int> out(f.size());
  for (size_t i = 0; i < f.size(); ++i) out[i] = g.at(f[i]);
  return out;
}

int distinct_colors(const std::vector<int>& coloring, const std::vector<int>& members) {
  std::set<int> seen;
  for (int f : members) seen.insert(coloring.at(f));
  return static_cast<int>(seen.size());
}

// Canonical k-colorings of m slots: restricted growth strings, one per color
// class up to permuting colors. The visitor returns false to stop early; the
// function reports whether the sweep completed.
bool for_each_canonical_coloring(int m, int k,
                                 const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> colors(m, 0);
  if (m == 0) return visit(colors);
  std::function<bool(int, int)> rec = [&](int pos, int used) -> bool {
    if (pos == m) return visit(colors);
    int top = std::min(used, k - 1);
    for (int c = 0; c <= top; ++c) {
      colors[pos] = c;
      if (!rec(pos + 1, std::max(used, c + 1))) return false;
    }
    return true;
  };
  return rec(0, 0);
}

std::string ints(const std::vector<int>& v) {
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + "]";
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds: return "HOLDS";
    case Verdict::fails: return "FAILS";
    case Verdict::unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

ArrowCertificate check_arrow_instance(const ArrowInstance& inst, int k, int t,
                                      const ArrowOptions& opts) {
  require(k >= 1 && t >= 1, "check_arrow_instance: k and t must be positive");
  ArrowCertificate cert;
  cert.query.k = k;
  cert.query.t = t;
  cert.hom_ca = inst.hom_ca;
  cert.hom_cb = static_cast<int>(inst.witness_comp.size());
  cert.hom_ba = inst.hom_ba;
  cert.stats.budget = opts.budget;
  cert.stats.seed = opts.seed;

  if (inst.witness_comp.empty()) {
    cert.verdict = Verdict::fails;
    cert.refuting_coloring.assign(inst.hom_ca, 0);
    cert.note = "no witness morphism exists";
    return cert;
  }
  for (size_t w = 0; w < inst.witness_comp.size(); ++w) {
    if (static_cast<int>(inst.witness_comp[w].size()) <= t) {
      cert.verdict = Verdict::holds;
      cert.universal_witness = static_cast<int>(w);
      cert.note = "universal witness: at most t distinct compositions";
      return cert;
    }
  }

  // Only morphisms inside some composition set constrain any witness.
  std::vector<int> slot(inst.hom_ca, -1);
  std::vector<int> members;
  for (const auto& comp : inst.witness_comp)
    for (int f : comp)
      if (slot.at(f) == -1) {
        slot[f] = 0;
        members.push_back(f);
      }
  std::sort(members.begin(), members.end());
  for (size_t i = 0; i < members.size(); ++i) slot[members[i]] = static_cast<int>(i);
  int m = static_cast<int>(members.size());
  std::vector<std::vector<int>> wslots(inst.witness_comp.size());
  for (size_t w = 0; w < inst.witness_comp.size(); ++w)
    for (int f : inst.witness_comp[w]) wslots[w].push_back(slot[f]);

  auto expand = [&](const std::vector<int>& colors) {
    std::vector<int> full(inst.hom_ca, 0);
    for (int i = 0; i < m; ++i) full[members[i]] = std::max(colors[i], 0);
    return full;
  };

  if (inst.hom_ca <= opts.exhaustive_limit && m < 64) {
    // Refutation search over canonical colorings: a coloring refutes only if
    // it splits every composition set into more than t colors, so prune as
    // soon as one witness can no longer be split.
    std::vector<int> colors(m, -1);
    bool over_budget = false;
    std::function<bool(int, int)> dfs = [&](int pos, int used) -> bool {
      if (++cert.stats.nodes > opts.budget) {
        over_budget = true;
        return false;
      }
      bool all_exceed = true;
      for (const auto& ws : wslots) {
        std::uint64_t mask = 0;
        int unassigned = 0;
        for (int s : ws) {
          int c = colors[s];
          if (c < 0)
            ++unassigned;
          else
            mask |= std::uint64_t{1} << c;
        }
        int d = std::popcount(mask);
        if (d + unassigned <= t) return false;  // witness survives any extension
        if (d <= t) all_exceed = false;
      }
      if (all_exceed) return true;  // refuted however the rest is filled
      if (pos == m) return false;
      int top = std::min(used, k - 1);
      for (int c = 0; c <= top; ++c) {
        colors[pos] = c;
        if (dfs(pos + 1, std::max(used, c + 1))) return true;
        if (over_budget) return false;
      }
      colors[pos] = -1;
      return false;
    };
    bool refuted = dfs(0, 0);
    if (over_budget) {
      cert.verdict = Verdict::unknown;
      cert.stats.exhaustive = false;
      cert.note = "search-node budget exhausted";
      return cert;
    }
    if (refuted) {
      cert.verdict = Verdict::fails;
      cert.refuting_coloring = expand(colors);
      return cert;
    }
    cert.verdict = Verdict::holds;
    cert.note = "exhaustive: every coloring admits a witness";
    return cert;
  }

  // Too many morphisms for the exhaustive decision: randomized refutation.
  cert.stats.exhaustive = false;
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> pick(0, k - 1);
  std::vector<int> colors(m);
  for (int trial = 0; trial < opts.random_trials; ++trial) {
    ++cert.stats.trials;
    for (int& c : colors) c = pick(rng);
    bool refutes = true;
    for (const auto& ws : wslots) {
      std::set<int> seen;
      for (int s : ws) seen.insert(colors[s]);
      if (static_cast<int>(seen.size()) <= t) {
        refutes = false;
        break;
      }
    }
    if (refutes) {
      cert.verdict = Verdict::fails;
      cert.refuting_coloring = expand(colors);
      cert.note = "randomized refutation";
      return cert;
    }
  }
  cert.verdict = Verdict::unknown;
  cert.note = "instance exceeds the exhaustive limit and randomized search "
              "found no refutation";
  return cert;
}

Verdict naive_arrow_decision(const ArrowInstance& inst, int k, int t) {
  require(k >= 1 && t >= 1, "naive_arrow_decision: k and t must be positive");
  require(inst.hom_ca * std::log2(std::max(2, k)) <= 24.0,
          "naive_arrow_decision: instance too large");
  if (inst.witness_comp.empty()) return Verdict::fails;
  std::vector<int> coloring(inst.hom_ca, 0);
  while (true) {
    bool admits = false;
    for (const auto& comp : inst.witness_comp)
      if (distinct_colors(coloring, comp) <= t) {
        admits = true;
        break;
      }
    if (!admits) return Verdict::fails;
    int i = inst.hom_ca - 1;
    while (i >= 0 && coloring[i] == k - 1) coloring[i--] = 0;
    if (i < 0) break;
    ++coloring[i];
  }
  return Verdict::holds;
}

bool coloring_refutes(const ArrowInstance& inst, const std::vector<int>& coloring, int t) {
  require(static_cast<int>(coloring.size()) == inst.hom_ca,
          "coloring_refutes: coloring length mismatch");
  for (const auto& comp : inst.witness_comp)
    if (distinct_colors(coloring, comp) <= t) return false;
  return true;
}

bool revalidate_certificate(const ArrowInstance& inst, const ArrowCertificate& cert,
                            int k, int t) {
  switch (cert.verdict) {
    case Verdict::holds:
      if (cert.universal_witness >= 0)
        return static_cast<int>(inst.witness_comp.at(cert.universal_witness).size()) <= t;
      return naive_arrow_decision(inst, k, t) == Verdict::holds;
    case Verdict::fails: {
      if (static_cast<int>(cert.refuting_coloring.size()) != inst.hom_ca) return false;
      for (int c : cert.refuting_coloring)
        if (c < 0 || c >= k) return false;
      return coloring_refutes(inst, cert.refuting_coloring, t);
    }
    case Verdict::unknown:
      return true;
  }
  return false;
}

namespace {

CategoryInstance build_instance(std::vector<std::vector<int>> ca,
                                std::vector<std::vector<int>> cb,
                                std::vector<std::vector<int>> ba) {
  CategoryInstance out;
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < ca.size(); ++i) index.emplace(ca[i], static_cast<int>(i));
  out.inst.hom_ca = static_cast<int>(ca.size());
  out.inst.hom_ba = static_cast<int>(ba.size());
  out.inst.witness_comp.resize(cb.size());
  for (size_t w = 0; w < cb.size(); ++w) {
    std::vector<int>& comp = out.inst.witness_comp[w];
    for (const auto& f : ba) comp.push_back(index.at(compose_tables(f, cb[w])));
    std::sort(comp.begin(), comp.end());
    comp.erase(std::unique(comp.begin(), comp.end()), comp.end());
  }
  out.hom_ca_tables = std::move(ca);
  out.hom_cb_tables = std::move(cb);
  out.hom_ba_tables = std::move(ba);
  return out;
}

std::vector<std::vector<int>> chain_tables(int n, int k) {
  std::vector<std::vector<int>> out;
  for (const ChainMap& f : enumerate_rigid_surjections(n, k)) out.push_back(f.table);
  return out;
}

std::vector<std::vector<int>> epi_tables(const std::vector<RigidEpimorphism>& epis) {
  std::vector<std::vector<int>> out;
  out.reserve(epis.size());
  for (const RigidEpimorphism& e : epis) out.push_back(e.map());
  return out;
}

std::string object_name(const OrderedAlgebra& x) {
  if (!x.name().empty()) return x.name();
  return "ordered<" + std::to_string(x.size()) + ">";
}

}  // namespace

CategoryInstance chains_instance(int c, int b, int a) {
  return build_instance(chain_tables(c, a), chain_tables(c, b), chain_tables(b, a));
}

CategoryInstance ordered_instance(const OrderedAlgebra& c, const OrderedAlgebra& b,
                                  const OrderedAlgebra& a) {
  return build_instance(epi_tables(rigid_epi_set(c, a)), epi_tables(rigid_epi_set(c, b)),
                        epi_tables(rigid_epi_set(b, a)));
}

CategoryInstance algebras_instance(const FiniteAlgebra& c, const FiniteAlgebra& b,
                                   const FiniteAlgebra& a) {
  return build_instance(epi_set(c, a), epi_set(c, b), epi_set(b, a));
}

ArrowCertificate check_arrow_chains(int c, int b, int a, int k, int t,
                                    const ArrowOptions& opts) {
  require(c >= 1 && b >= 1 && a >= 1, "check_arrow_chains: sizes must be positive");
  CategoryInstance ci = chains_instance(c, b, a);
  ArrowCertificate cert = check_arrow_instance(ci.inst, k, t, opts);
  cert.query.category = "chains-rs";
  cert.query.c = std::to_string(c);
  cert.query.b = std::to_string(b);
  cert.query.a = std::to_string(a);
  if (cert.universal_witness >= 0)
    cert.witness_table = ci.hom_cb_tables[cert.universal_witness];
  return cert;
}

ArrowCertificate check_arrow_ordered(const OrderedAlgebra& c, const OrderedAlgebra& b,
                                     const OrderedAlgebra& a, int k, int t,
                                     const ArrowOptions& opts) {
  CategoryInstance ci = ordered_instance(c, b, a);
  ArrowCertificate cert = check_arrow_instance(ci.inst, k, t, opts);
  cert.query.category = "ordered-algebras-re";
  cert.query.c = object_name(c);
  cert.query.b = object_name(b);
  cert.query.a = object_name(a);
  if (cert.universal_witness >= 0)
    cert.witness_table = ci.hom_cb_tables[cert.universal_witness];
  return cert;
}

ArrowCertificate check_arrow_algebras(const FiniteAlgebra& c, const FiniteAlgebra& b,
                                      const FiniteAlgebra& a, int k, int t,
                                      const ArrowOptions& opts) {
  CategoryInstance ci = algebras_instance(c, b, a);
  ArrowCertificate cert = check_arrow_instance(ci.inst, k, t, opts);
  cert.query.category = "algebras-epi";
  cert.query.c = "algebra<" + std::to_string(c.size()) + ">";
  cert.query.b = "algebra<" + std::to_string(b.size()) + ">";
  cert.query.a = "algebra<" + std::to_string(a.size()) + ">";
  if (cert.universal_witness >= 0)
    cert.witness_table = ci.hom_cb_tables[cert.universal_witness];
  return cert;
}

std::optional<std::pair<int, ArrowCertificate>> gr_witness_search(
    int a, int b, int k, int max_n, const ArrowOptions& opts) {
  require(a >= 1 && b >= a && k >= 1, "gr_witness_search: need 1 <= a <= b, k >= 1");
  for (int n = b; n <= max_n; ++n) {
    ArrowCertificate cert = check_arrow_chains(n, b, a, k, 1, opts);
    if (cert.verdict == Verdict::holds) return std::make_pair(n, cert);
  }
  return std::nullopt;
}

GoingUpReport going_up_check(const CategoryInstance& c_inst, const CategoryInstance& d_inst,
                             const std::vector<int>& e_table, int k, int t,
                             const ArrowOptions& opts) {
  GoingUpReport rep;
  rep.at_c = check_arrow_instance(c_inst.inst, k, t, opts).verdict;
  rep.at_d = check_arrow_instance(d_inst.inst, k, t, opts).verdict;

  std::map<std::vector<int>, int> d_ca, d_cb;
  for (size_t i = 0; i < d_inst.hom_ca_tables.size(); ++i)
    d_ca.emplace(d_inst.hom_ca_tables[i], static_cast<int>(i));
  for (size_t i = 0; i < d_inst.hom_cb_tables.size(); ++i)
    d_cb.emplace(d_inst.hom_cb_tables[i], static_cast<int>(i));

  // Precompose with e: D -> C to pull hom(C,-) into hom(D,-).
  std::vector<int> pulled(c_inst.hom_ca_tables.size());
  for (size_t i = 0; i < c_inst.hom_ca_tables.size(); ++i)
    pulled[i] = d_ca.at(compose_tables(c_inst.hom_ca_tables[i], e_table));
  std::vector<int> pushed(c_inst.hom_cb_tables.size());
  for (size_t w = 0; w < c_inst.hom_cb_tables.size(); ++w)
    pushed[w] = d_cb.at(compose_tables(c_inst.hom_cb_tables[w], e_table));

  int m = d_inst.inst.hom_ca;
  if (m > 20) return rep;  // transported replay only at desk scale
  std::vector<int> chi_c(c_inst.inst.hom_ca);
  rep.transported_ok =
      for_each_canonical_coloring(m, k, [&](const std::vector<int>& chi_d) {
        ++rep.colorings_checked;
        for (size_t i = 0; i < chi_c.size(); ++i) chi_c[i] = chi_d[pulled[i]];
        int found = -1;
        for (size_t w = 0; w < c_inst.inst.witness_comp.size(); ++w)
          if (distinct_colors(chi_c, c_inst.inst.witness_comp[w]) <= t) {
            found = static_cast<int>(w);
            break;
          }
        if (found < 0) return false;
        return distinct_colors(chi_d, d_inst.inst.witness_comp.at(pushed[found])) <= t;
      });
  return rep;
}

int transport_phi(const OrderedAlgebra& b, const ChainMap& u, const Term& t) {
  require(u.codomain == b.size(), "transport_phi: map must land on b's chain");
  std::vector<int> assignment(b.size());
  for (int p = 0; p < b.size(); ++p) assignment[p] = b.at_position(p);
  return b.algebra().evaluate(substitute(u, t), assignment);
}

bool check_pa_instance(const OrderedAlgebra& b, const OrderedAlgebra& a,
                       const ChainMap& u, const RigidEpimorphism& f, int max_len) {
  require(is_rigid_surjection(u) && u.codomain == b.size(),
          "check_pa_instance: u must be rigid onto b's chain");
  require(f.domain().same_structure(b) && f.codomain().same_structure(a),
          "check_pa_instance: f must map b onto a");
  ChainMap fu = compose(f.chain_map(), u);
  for (const Term& t : enumerate_neat(b.algebra().signature(), u.domain, max_len))
    if (f(transport_phi(b, u, t)) != transport_phi(a, fu, t)) return false;
  return true;
}

TransportCertificate transport_arrow(const Variety& v, int n, const OrderedAlgebra& a,
                                     const OrderedAlgebra& b, int k, int t,
                                     const ArrowOptions& opts) {
  require(n >= 1 && k >= 1 && t >= 1, "transport_arrow: bad parameters");
  if (!variety_contains(v, a.algebra()) || !variety_contains(v, b.algebra()))
    throw std::domain_error("transport_arrow: objects must lie in the variety");

  TransportCertificate out;
  ArrowCertificate chain_cert = check_arrow_chains(n, b.size(), a.size(), k, t, opts);
  if (chain_cert.verdict != Verdict::holds)
    throw std::invalid_argument("transport_arrow: chain-level arrow not established");
  out.trace.push_back("chain-level arrow holds: " + std::to_string(n) + " <- (" +
                      std::to_string(b.size()) + ")^" + std::to_string(a.size()) +
                      ", k=" + std::to_string(k) + ", t=" + std::to_string(t));

  OrderedFreeAlgebra of = ordered_free(v, n);
  std::vector<RigidEpimorphism> r = rigid_epi_set(of.ordered(), a);
  std::vector<RigidEpimorphism> full_cb = rigid_epi_set(of.ordered(), b);
  std::vector<RigidEpimorphism> re_ba = rigid_epi_set(b, a);

  ArrowCertificate& cert = out.cert;
  cert.query.category = "ordered-algebras-re";
  cert.query.c = "F(" + v.name + "," + std::to_string(n) + ")";
  cert.query.b = object_name(b);
  cert.query.a = object_name(a);
  cert.query.k = k;
  cert.query.t = t;
  cert.hom_ca = static_cast<int>(r.size());
  cert.hom_cb = static_cast<int>(full_cb.size());
  cert.hom_ba = static_cast<int>(re_ba.size());
  cert.stats.budget = opts.budget;
  cert.stats.seed = opts.seed;

  std::map<std::vector<int>, int> r_index;
  for (size_t i = 0; i < r.size(); ++i) r_index.emplace(r[i].map(), static_cast<int>(i));

  // Reflection of a chain map through the free algebra: evaluate minimal
  // terms at the generator images read off the target's order.
  auto reflect = [&](const OrderedAlgebra& target, const std::vector<int>& u_table) {
    std::vector<int> images(n);
    for (int i = 0; i < n; ++i) images[i] = target.at_position(u_table[i]);
    std::vector<int> g(of.size());
    for (int e = 0; e < of.size(); ++e)
      g[e] = target.algebra().evaluate(of.min_term(e), images);
    require(is_rigid_epi(of.ordered(), target, g),
            "transport_arrow: reflected map failed validation");
    return g;
  };

  std::vector<std::vector<int>> rs_na = chain_tables(n, a.size());
  std::vector<std::vector<int>> rs_nb = chain_tables(n, b.size());
  std::vector<std::vector<int>> rs_ba = chain_tables(b.size(), a.size());
  std::map<std::vector<int>, int> rs_na_index;
  for (size_t i = 0; i < rs_na.size(); ++i) rs_na_index.emplace(rs_na[i], static_cast<int>(i));

  std::vector<int> reflect_a(rs_na.size());
  for (size_t i = 0; i < rs_na.size(); ++i) reflect_a[i] = r_index.at(reflect(a, rs_na[i]));
  std::vector<std::vector<int>> reflect_b(rs_nb.size());
  for (size_t i = 0; i < rs_nb.size(); ++i) reflect_b[i] = reflect(b, rs_nb[i]);

  // Chain-level composition sets and, for validation, algebra-level ones.
  std::vector<std::vector<int>> chain_comp(rs_nb.size());
  for (size_t w = 0; w < rs_nb.size(); ++w)
    for (const auto& f : rs_ba)
      chain_comp[w].push_back(rs_na_index.at(compose_tables(f, rs_nb[w])));
  std::vector<std::vector<int>> alg_comp(rs_nb.size());
  for (size_t w = 0; w < rs_nb.size(); ++w) {
    for (const RigidEpimorphism& h : re_ba)
      alg_comp[w].push_back(r_index.at(compose_tables(h.map(), reflect_b[w])));
    std::sort(alg_comp[w].begin(), alg_comp[w].end());
    alg_comp[w].erase(std::unique(alg_comp[w].begin(), alg_comp[w].end()),
                      alg_comp[w].end());
  }

  int m = static_cast<int>(r.size());
  if (m > opts.exhaustive_limit) {
    cert.verdict = Verdict::unknown;
    cert.note = "free-level hom set exceeds the exhaustive limit";
    return out;
  }

  std::vector<int> chi_chain(rs_na.size());
  std::string failure;
  bool completed = for_each_canonical_coloring(m, k, [&](const std::vector<int>& chi) {
    ++cert.stats.nodes;
    for (size_t i = 0; i < rs_na.size(); ++i) chi_chain[i] = chi[reflect_a[i]];
    int found = -1;
    for (size_t w = 0; w < rs_nb.size(); ++w)
      if (distinct_colors(chi_chain, chain_comp[w]) <= t) {
        found = static_cast<int>(w);
        break;
      }
    if (found < 0) {
      failure = "no chain witness for pulled-back coloring " + ints(chi);
      return false;
    }
    if (distinct_colors(chi, alg_comp[found]) > t) {
      failure = "transported witness failed direct validation on coloring " + ints(chi);
      return false;
    }
    if (cert.stats.nodes <= 4) {
      out.trace.push_back("coloring " + ints(chi) + ": pulled back to chains as " +
                          ints(chi_chain) + "; chain witness " + ints(rs_nb[found]) +
                          "; pushed witness map " + ints(reflect_b[found]) +
                          "; validated with <= " + std::to_string(t) + " colors");
    }
    return true;
  });

  if (!completed) {
    cert.verdict = Verdict::unknown;
    cert.note = failure;
    return out;
  }
  out.transported_all = true;
  cert.verdict = Verdict::holds;
  cert.note = "every canonical coloring transported and validated";
  out.trace.push_back(std::to_string(cert.stats.nodes) +
                      " canonical colorings transported");

  // A transported witness with at most t compositions works universally.
  std::map<std::vector<int>, int> cb_index;
  for (size_t i = 0; i < full_cb.size(); ++i)
    cb_index.emplace(full_cb[i].map(), static_cast<int>(i));
  for (size_t w = 0; w < rs_nb.size(); ++w)
    if (static_cast<int>(alg_comp[w].size()) <= t) {
      cert.universal_witness = cb_index.at(reflect_b[w]);
      cert.witness_table = reflect_b[w];
      break;
    }
  return out;
}

SegmentCertificate segment_induction(const Variety& v, const OrderedAlgebra& a, int k,
                                     const std::vector<int>& chi, int n_free,
                                     const ArrowOptions& opts) {
  require(k >= 1 && n_free >= 1, "segment_induction: bad parameters");
  SegmentCertificate cert;
  cert.n_free = n_free;
  int s = a.size();
  cert.bound = s;

  OrderedFreeAlgebra of = ordered_free(v, n_free);
  std::vector<RigidEpimorphism> r = rigid_epi_set(of.ordered(), a);
  require(chi.size() == r.size(), "segment_induction: coloring must cover the rigid epis");
  for (int c : chi) require(c >= 0 && c < k, "segment_induction: color out of range");

  // The generator restriction of a rigid epi lands on an initial segment of
  // a's order (every fiber minimum sits in the leading generator block), and
  // it determines the epi, so chi pulls back to partial colorings gamma_i of
  // the rigid surjections n_free -> i; unconstrained entries read as 0.
  const std::vector<int>& gens = of.free().generator_elements();
  std::vector<std::map<std::vector<int>, int>> gamma(s + 1);
  for (size_t h = 0; h < r.size(); ++h) {
    std::vector<int> pi(n_free);
    int top = -1;
    for (int i = 0; i < n_free; ++i) {
      pi[i] = a.position_of(r[h](gens[i]));
      top = std::max(top, pi[i]);
    }
    int level = top + 1;
    std::vector<char> hit(level, 0);
    for (int p : pi) hit.at(p) = 1;
    for (char c : hit)
      require(c, "segment_induction: generator image is not an initial segment");
    gamma.at(level).emplace(pi, chi[h]);
  }
  auto gamma_value = [&](int level, const std::vector<int>& table) {
    auto it = gamma[level].find(table);
    return it == gamma[level].end() ? 0 : it->second;
  };

  // Walk the segment levels downward, keeping the restriction as large as
  // possible; level i is settled once the pulled-back color no longer
  // depends on the remaining choice of a map onto the segment.
  ChainMap sigma = identity_map(n_free);
  for (int i = s; i >= 1; --i) {
    bool placed = false;
    for (int c = sigma.codomain; c >= 1 && !placed; --c) {
      for (const ChainMap& w : enumerate_rigid_surjections(sigma.codomain, c)) {
        if (++cert.nodes > opts.budget) {
          cert.verdict = Verdict::unknown;
          cert.note = "budget exhausted at segment level " + std::to_string(i);
          return cert;
        }
        ChainMap candidate = compose(w, sigma);
        std::set<int> vals;
        for (const ChainMap& f : enumerate_rigid_surjections(c, i))
          vals.insert(gamma_value(i, compose(f, candidate).table));
        if (static_cast<int>(vals.size()) <= 1) {
          SegmentStep step;
          step.level = i;
          step.chosen_size = c;
          step.w_table = w.table;
          step.constant_color = vals.empty() ? -1 : *vals.begin();
          cert.steps.push_back(std::move(step));
          sigma = candidate;
          placed = true;
          break;
        }
      }
    }
    require(placed, "segment_induction: no admissible restriction at a level");
  }
  cert.c1 = sigma.codomain;
  cert.u_table = sigma.table;

  OrderedFreeAlgebra of1 = ordered_free(v, cert.c1);
  std::vector<RigidEpimorphism> r1 = rigid_epi_set(of1.ordered(), a);
  if (r1.empty()) {
    cert.vacuous = true;
    cert.colors_used = 0;
    cert.verdict = Verdict::holds;
    cert.note = "no rigid epimorphism leaves the restricted free algebra; "
                "the bound is vacuous";
    return cert;
  }
  RigidEpimorphism hat = hat_t_v(v, sigma);
  std::map<std::vector<int>, int> r_index;
  for (size_t i = 0; i < r.size(); ++i) r_index.emplace(r[i].map(), static_cast<int>(i));
  std::set<int> used;
  for (const RigidEpimorphism& h : r1)
    used.insert(chi.at(r_index.at(compose_tables(h.map(), hat.map()))));
  cert.colors_used = static_cast<int>(used.size());
  cert.verdict = cert.colors_used <= s ? Verdict::holds : Verdict::fails;
  if (cert.verdict == Verdict::fails) cert.note = "color bound violated";
  return cert;
}

namespace {

DegreeBounds degree_bounds_impl(
    int count_c, int count_b,
    const std::function<Verdict(int, int, int, int)>& check, int k_max, int t_max) {
  DegreeBounds out;
  for (int t = 2; t <= t_max; ++t) {
    bool refuted = false;
    for (int k = 2; k <= k_max && !refuted; ++k)
      for (int bi = 0; bi < count_b && !refuted; ++bi) {
        bool all_fail = count_c > 0;
        for (int ci = 0; ci < count_c; ++ci)
          if (check(ci, bi, k, t - 1) != Verdict::fails) {
            all_fail = false;
            break;
          }
        if (all_fail) refuted = true;
      }
    if (refuted)
      out.lower = t;
    else
      break;
  }
  for (int t = 1; t <= t_max; ++t) {
    bool covered = true;
    for (int k = 2; k <= k_max && covered; ++k)
      for (int bi = 0; bi < count_b && covered; ++bi) {
        bool found = false;
        for (int ci = 0; ci < count_c; ++ci)
          if (check(ci, bi, k, t) == Verdict::holds) {
            found = true;
            break;
          }
        covered = found;
      }
    if (covered) {
      out.upper = t;
      break;
    }
  }
  return out;
}

}  // namespace

DegreeBounds small_degree_bounds_chains(int a, const std::vector<int>& catalog_sizes,
                                        int k_max, int t_max, const ArrowOptions& opts) {
  require(a >= 1 && k_max >= 2 && t_max >= 1, "small_degree_bounds_chains: bad parameters");
  int count = static_cast<int>(catalog_sizes.size());
  return degree_bounds_impl(
      count, count,
      [&](int ci, int bi, int k, int t) {
        return check_arrow_chains(catalog_sizes[ci], catalog_sizes[bi], a, k, t, opts)
            .verdict;
      },
      k_max, t_max);
}

DegreeBounds small_degree_bounds_ordered(const OrderedAlgebra& a,
                                         const std::vector<OrderedAlgebra>& catalog,
                                         int k_max, int t_max, const ArrowOptions& opts) {
  require(k_max >= 2 && t_max >= 1, "small_degree_bounds_ordered: bad parameters");
  int count = static_cast<int>(catalog.size());
  return degree_bounds_impl(
      count, count,
      [&](int ci, int bi, int k, int t) {
        return check_arrow_ordered(catalog[ci], catalog[bi], a, k, t, opts).verdict;
      },
      k_max, t_max);
}

int expansion_sum_bound(const FiniteAlgebra& a,
                        const std::map<std::vector<int>, int>& per_expansion_degree) {
  require(a.size() >= 1 && a.size() <= 8, "expansion_sum_bound: carrier too large");
  std::vector<int> order(a.size());
  for (int i = 0; i < a.size(); ++i) order[i] = i;
  int sum = 0;
  do {
    auto it = per_expansion_degree.find(order);
    require(it != per_expansion_degree.end(),
            "expansion_sum_bound: missing expansion degree");
    sum += it->second;
  } while (std::next_permutation(order.begin(), order.end()));
  return sum;
}

}  // namespace rw
