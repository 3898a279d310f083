#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rw/algebras.hpp"
#include "rw/chains.hpp"
#include "rw/ordered.hpp"

namespace rw {

// Dual partition arrows C <- (B)^A_{k,t}: colorings live on hom(C,A),
// witnesses are morphisms w in hom(C,B), and a witness works for a coloring
// chi when the compositions {f.w : f in hom(B,A)} use at most t colors.

enum class Verdict { holds, fails, unknown };

std::string verdict_name(Verdict v);

struct Coloring {
  int k = 0;
  std::vector<int> table;  // color per morphism index of the colored hom-set
};

// Category-agnostic arrow data: morphisms are reduced to indices into
// hom(C,A), and each witness carries its sorted set of composition indices.
struct ArrowInstance {
  int hom_ca = 0;
  int hom_ba = 0;
  std::vector<std::vector<int>> witness_comp;  // per hom(C,B) morphism
};

struct ArrowQuery {
  std::string category;  // "chains-rs", "ordered-algebras-re", "algebras-epi"
  std::string c, b, a;
  int k = 2;
  int t = 1;
};

struct SearchStats {
  bool exhaustive = true;
  long long nodes = 0;   // constraint-search nodes visited
  long long trials = 0;  // randomized colorings tried
  long long budget = 0;
  unsigned long long seed = 0;
};

struct ArrowCertificate {
  ArrowQuery query;
  Verdict verdict = Verdict::unknown;
  // A universal witness has at most t distinct compositions, so it works for
  // every coloring; index/table refer to hom(C,B). -1 / empty when absent.
  int universal_witness = -1;
  std::vector<int> witness_table;
  std::vector<int> refuting_coloring;  // FAILS: color per hom(C,A) index
  int hom_ca = 0;
  int hom_cb = 0;
  int hom_ba = 0;
  SearchStats stats;
  std::string note;
};

struct ArrowOptions {
  int exhaustive_limit = 22;    // max |hom(C,A)| for the exhaustive decision
  long long budget = 2000000;  // search-node budget
  int random_trials = 4000;    // refutation attempts above the limit
  unsigned long long seed = 1;
};

// Core decision procedure on reduced instances.
ArrowCertificate check_arrow_instance(const ArrowInstance& inst, int k, int t,
                                      const ArrowOptions& opts = {});

// Independent oracle: iterate all k^|hom(C,A)| colorings. Only for tiny
// instances; throws when the iteration space is too large.
Verdict naive_arrow_decision(const ArrowInstance& inst, int k, int t);

bool coloring_refutes(const ArrowInstance& inst, const std::vector<int>& coloring, int t);

// Re-check a certificate against its instance without trusting the search.
bool revalidate_certificate(const ArrowInstance& inst, const ArrowCertificate& cert,
                            int k, int t);

// Concrete categories. Morphisms are tables (position maps for chains,
// carrier maps for algebras); composition is table chasing in all three.
struct CategoryInstance {
  ArrowInstance inst;
  std::vector<std::vector<int>> hom_ca_tables;
  std::vector<std::vector<int>> hom_cb_tables;
  std::vector<std::vector<int>> hom_ba_tables;
};

CategoryInstance chains_instance(int c, int b, int a);
CategoryInstance ordered_instance(const OrderedAlgebra& c, const OrderedAlgebra& b,
                                  const OrderedAlgebra& a);
CategoryInstance algebras_instance(const FiniteAlgebra& c, const FiniteAlgebra& b,
                                   const FiniteAlgebra& a);

ArrowCertificate check_arrow_chains(int c, int b, int a, int k, int t,
                                    const ArrowOptions& opts = {});
ArrowCertificate check_arrow_ordered(const OrderedAlgebra& c, const OrderedAlgebra& b,
                                     const OrderedAlgebra& a, int k, int t,
                                     const ArrowOptions& opts = {});
ArrowCertificate check_arrow_algebras(const FiniteAlgebra& c, const FiniteAlgebra& b,
                                      const FiniteAlgebra& a, int k, int t,
                                      const ArrowOptions& opts = {});

// Smallest n <= max_n with n <- (b)^a_{k,1} on chains, with its certificate.
std::optional<std::pair<int, ArrowCertificate>> gr_witness_search(
    int a, int b, int k, int max_n, const ArrowOptions& opts = {});

// Monotonicity replay: given instances at C and at D plus a connecting
// morphism e: D -> C, re-derive the arrow at D coloring by coloring from the
// witnesses at C, and validate each transported witness directly.
struct GoingUpReport {
  Verdict at_c = Verdict::unknown;
  Verdict at_d = Verdict::unknown;
  bool transported_ok = false;
  long long colorings_checked = 0;
};

GoingUpReport going_up_check(const CategoryInstance& c_inst, const CategoryInstance& d_inst,
                             const std::vector<int>& e_table, int k, int t,
                             const ArrowOptions& opts = {});

// Pre-adjunction action: Phi(u) sends a term over u's domain variables to an
// element of b by substituting u and evaluating positions along b's order.
int transport_phi(const OrderedAlgebra& b, const ChainMap& u, const Term& t);

// Pre-adjunction law f . Phi_B(u) = Phi_A(f_pos . u) on all terms of shape
// length <= max_len.
bool check_pa_instance(const OrderedAlgebra& b, const OrderedAlgebra& a,
                       const ChainMap& u, const RigidEpimorphism& f, int max_len);

// Full coloring transport at a fixed free algebra: for every canonical
// k-coloring of the rigid epis ordered_free(v,n) -> a, pull back along the
// reflection, find a chain witness, push it forward, and validate the color
// bound directly on the algebra side.
struct TransportCertificate {
  ArrowCertificate cert;
  std::vector<std::string> trace;
  bool transported_all = false;
};

TransportCertificate transport_arrow(const Variety& v, int n, const OrderedAlgebra& a,
                                     const OrderedAlgebra& b, int k, int t,
                                     const ArrowOptions& opts = {});

// Finite replay of the segment induction: restrict each rigid epi
// ordered_free(v,n_free) -> a to the generator chain, partition by the image
// initial segment, and walk i = |a| .. 1 choosing per-step chain witnesses
// w_i so that the pulled-back color depends only on the segment level. The
// certificate composes u = w_1 . ... . w_s and counts the colors actually
// used by chi on { h . hat_t_v(u) }.
struct SegmentStep {
  int level = 0;        // segment size i
  int chosen_size = 0;  // c_i
  std::vector<int> w_table;
  int constant_color = -1;
};

struct SegmentCertificate {
  Verdict verdict = Verdict::unknown;
  int n_free = 0;
  int c1 = 0;
  std::vector<int> u_table;
  int colors_used = 0;
  int bound = 0;  // |a|
  bool vacuous = false;
  std::vector<SegmentStep> steps;
  std::string note;
  long long nodes = 0;
};

SegmentCertificate segment_induction(const Variety& v, const OrderedAlgebra& a, int k,
                                     const std::vector<int>& chi, int n_free,
                                     const ArrowOptions& opts = {});

// Catalog-relative degree bounds. lower = largest t such that some (k, B)
// refutes every catalog C at t-1; upper = least t at which every (k, B) is
// covered by some catalog C, when that happens within t_max.
struct DegreeBounds {
  int lower = 1;
  std::optional<int> upper;
  bool catalog_relative = true;
};

DegreeBounds small_degree_bounds_chains(int a, const std::vector<int>& catalog_sizes,
                                        int k_max, int t_max,
                                        const ArrowOptions& opts = {});
DegreeBounds small_degree_bounds_ordered(const OrderedAlgebra& a,
                                         const std::vector<OrderedAlgebra>& catalog,
                                         int k_max, int t_max,
                                         const ArrowOptions& opts = {});

// Sum of per-expansion degrees over all |a|! order expansions.
int expansion_sum_bound(const FiniteAlgebra& a,
                        const std::map<std::vector<int>, int>& per_expansion_degree);

}  // namespace rw
