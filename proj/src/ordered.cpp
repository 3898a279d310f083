#include "rw/ordered.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rw {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

std::vector<int> invert_order(const std::vector<int>& order, int size) {
  require(static_cast<int>(order.size()) == size,
          "OrderedAlgebra: order length must match carrier");
  std::vector<int> position(size, -1);
  for (int p = 0; p < size; ++p) {
    int e = order[p];
    require(e >= 0 && e < size, "OrderedAlgebra: order entry out of range");
    require(position[e] < 0, "OrderedAlgebra: order entry repeated");
    position[e] = p;
  }
  return position;
}

}  // namespace

OrderedAlgebra::OrderedAlgebra(FiniteAlgebra algebra, std::vector<int> order,
                               std::string name)
    : algebra_(std::move(algebra)),
      order_(std::move(order)),
      position_(invert_order(order_, algebra_.size())),
      name_(std::move(name)) {}

ChainMap position_map(const OrderedAlgebra& a, const OrderedAlgebra& b,
                      const std::vector<int>& carrier_map) {
  require(static_cast<int>(carrier_map.size()) == a.size(),
          "position_map: map length must match carrier");
  std::vector<int> table(a.size());
  for (int p = 0; p < a.size(); ++p)
    table[p] = b.position_of(carrier_map.at(a.at_position(p)));
  return ChainMap(a.size(), b.size(), std::move(table));
}

EpiChecks check_rigid_epi(const OrderedAlgebra& a, const OrderedAlgebra& b,
                          const std::vector<int>& carrier_map) {
  EpiChecks c;
  c.homomorphism = is_homomorphism(a.algebra(), b.algebra(), carrier_map);
  c.surjective = static_cast<int>(carrier_map.size()) == a.size() &&
                 is_surjective_map(carrier_map, b.size());
  c.order_rigid = c.surjective &&
                  is_rigid_surjection(position_map(a, b, carrier_map));
  return c;
}

bool is_rigid_epi(const OrderedAlgebra& a, const OrderedAlgebra& b,
                  const std::vector<int>& carrier_map) {
  return check_rigid_epi(a, b, carrier_map).ok();
}

RigidEpimorphism::RigidEpimorphism(OrderedAlgebra domain, OrderedAlgebra codomain,
                                   std::vector<int> carrier_map)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      map_(std::move(carrier_map)),
      checks_(check_rigid_epi(domain_, codomain_, map_)) {
  if (!checks_.ok()) {
    std::string msg = "RigidEpimorphism:";
    if (!checks_.homomorphism) msg += " not a homomorphism;";
    if (!checks_.surjective) msg += " not surjective;";
    if (!checks_.order_rigid) msg += " position map not rigid;";
    throw std::invalid_argument(msg);
  }
}

RigidEpimorphism compose(const RigidEpimorphism& g, const RigidEpimorphism& f) {
  require(f.codomain().same_structure(g.domain()),
          "compose: codomain/domain mismatch");
  std::vector<int> m(f.domain().size());
  for (int x = 0; x < f.domain().size(); ++x) m[x] = g(f(x));
  return RigidEpimorphism(f.domain(), g.codomain(), std::move(m));
}

std::vector<RigidEpimorphism> rigid_epi_set(const OrderedAlgebra& a,
                                            const OrderedAlgebra& b) {
  std::vector<RigidEpimorphism> out;
  for (const std::vector<int>& h : epi_set(a.algebra(), b.algebra()))
    if (is_rigid_surjection(position_map(a, b, h)))
      out.emplace_back(a, b, h);
  return out;
}

OrderedFreeAlgebra ordered_free(const Variety& v, int n) {
  require(is_nontrivial(v), "ordered_free: trivial variety");
  FreeAlgebra f = free_algebra(v, n);
  int m = f.algebra().size();

  int bound = 1;
  for (int e = 0; e < m; ++e)
    bound = std::max(bound, f.representative(e).token_length());
  std::vector<Term> terms = enumerate_neat(v.signature, n, bound);

  std::vector<int> order;
  std::vector<Term> min_terms(m, Term::variable(0));
  std::vector<char> seen(m, 0);
  int cover = 0;
  for (const Term& t : terms) {
    int e = f.element_of(t);
    if (!seen[e]) {
      seen[e] = 1;
      order.push_back(e);
      min_terms[e] = t;
      cover = std::max(cover, t.token_length());
      if (static_cast<int>(order.size()) == m) break;
    }
  }
  require(static_cast<int>(order.size()) == m,
          "ordered_free: enumeration did not cover the carrier");

  OrderedFreeAlgebra out;
  out.ordered_ = OrderedAlgebra(f.algebra(), std::move(order),
                                "F(" + v.name + "," + std::to_string(n) + ")");
  out.free_ = std::move(f);
  out.min_terms_ = std::move(min_terms);
  out.cover_length_ = cover;
  return out;
}

RigidEpimorphism hat_t_v(const Variety& v, const ChainMap& f) {
  require(is_rigid_surjection(f), "hat_t_v: chain map is not rigid");
  OrderedFreeAlgebra dom = ordered_free(v, f.domain);
  OrderedFreeAlgebra cod = ordered_free(v, f.codomain);
  std::vector<int> m(dom.size());
  for (int e = 0; e < dom.size(); ++e)
    m[e] = cod.nu(substitute(f, dom.min_term(e)));
  return RigidEpimorphism(dom.ordered(), cod.ordered(), std::move(m));
}

RigidEpimorphism factor_reflection(const Variety& v, int n, const OrderedAlgebra& a,
                                   const std::vector<int>& generator_images) {
  require(static_cast<int>(generator_images.size()) == n,
          "factor_reflection: one image per generator required");
  for (int x : generator_images)
    require(x >= 0 && x < a.size(), "factor_reflection: image out of range");
  OrderedFreeAlgebra of = ordered_free(v, n);
  std::vector<int> g(of.size());
  for (int e = 0; e < of.size(); ++e)
    g[e] = a.algebra().evaluate(of.min_term(e), generator_images);
  if (!is_homomorphism(of.ordered().algebra(), a.algebra(), g))
    throw std::domain_error(
        "factor_reflection: extension is not constant on congruence classes "
        "(codomain lies outside the variety)");
  require(is_surjective_map(g, a.size()),
          "factor_reflection: generator images do not generate the codomain");
  require(is_rigid_surjection(position_map(of.ordered(), a, g)),
          "factor_reflection: extension is not order rigid");
  return RigidEpimorphism(of.ordered(), a, std::move(g));
}

JointFactorization joint_factor(const RigidEpimorphism& f, const RigidEpimorphism& g) {
  require(f.domain().same_structure(g.domain()),
          "joint_factor: maps must share a domain");
  const OrderedAlgebra& dom = f.domain();
  const FiniteAlgebra& alg_a = f.codomain().algebra();
  const FiniteAlgebra& alg_b = g.codomain().algebra();

  // Joint image, indexed by first appearance along the domain order so the
  // pairing's position map is rigid by construction.
  std::vector<std::pair<int, int>> pairs;
  std::map<std::pair<int, int>, int> index;
  std::vector<int> h(dom.size());
  for (int p = 0; p < dom.size(); ++p) {
    int x = dom.at_position(p);
    std::pair<int, int> pr{f(x), g(x)};
    auto [it, fresh] = index.emplace(pr, static_cast<int>(pairs.size()));
    if (fresh) pairs.push_back(pr);
    h[x] = it->second;
  }

  int m = static_cast<int>(pairs.size());
  const Signature& sig = alg_a.signature();
  std::vector<std::vector<int>> tables(sig.size());
  for (int s = 0; s < sig.size(); ++s) {
    int arity = sig.arity(s);
    long long entries = 1;
    for (int i = 0; i < arity; ++i) entries *= m;
    tables[s].resize(entries);
    std::vector<int> pos(arity, 0);
    std::vector<int> left(arity), right(arity);
    long long idx = 0;
    while (true) {
      for (int i = 0; i < arity; ++i) {
        left[i] = pairs[pos[i]].first;
        right[i] = pairs[pos[i]].second;
      }
      auto it = index.find({alg_a.apply(s, left), alg_b.apply(s, right)});
      require(it != index.end(), "joint_factor: image not closed");
      tables[s][idx++] = it->second;
      if (arity == 0) break;
      int i = arity - 1;
      while (i >= 0 && pos[i] == m - 1) pos[i--] = 0;
      if (i < 0) break;
      ++pos[i];
    }
  }

  std::vector<int> ramp(m);
  for (int i = 0; i < m; ++i) ramp[i] = i;
  OrderedAlgebra image(FiniteAlgebra(sig, m, std::move(tables)), ramp,
                       "im(" + f.codomain().name() + "," + g.codomain().name() + ")");

  std::vector<int> p1(m), p2(m);
  for (int i = 0; i < m; ++i) {
    p1[i] = pairs[i].first;
    p2[i] = pairs[i].second;
  }
  JointFactorization out{image,
                         RigidEpimorphism(dom, image, h),
                         RigidEpimorphism(image, f.codomain(), std::move(p1)),
                         RigidEpimorphism(image, g.codomain(), std::move(p2))};
  for (int x = 0; x < dom.size(); ++x) {
    require(out.onto_first(out.pairing(x)) == f(x), "joint_factor: first leg mismatch");
    require(out.onto_second(out.pairing(x)) == g(x), "joint_factor: second leg mismatch");
  }
  return out;
}

std::optional<RigidEpimorphism> exists_rigid_epi_from_free(
    const Variety& v, int n, const OrderedAlgebra& a, bool exhaustive) {
  if (n < a.size()) return std::nullopt;
  if (!variety_contains(v, a.algebra()))
    throw std::domain_error("exists_rigid_epi_from_free: codomain outside the variety");
  if (!exhaustive) {
    // Ramp the generator chain onto a's order; the generator block leads the
    // free order, so generator-level rigidity is enough.
    std::vector<int> images(n);
    for (int i = 0; i < n; ++i) images[i] = a.at_position(std::min(i, a.size() - 1));
    return factor_reflection(v, n, a, images);
  }
  OrderedFreeAlgebra of = ordered_free(v, n);
  std::vector<int> images(n, 0);
  while (true) {
    std::vector<int> g(of.size());
    for (int e = 0; e < of.size(); ++e)
      g[e] = a.algebra().evaluate(of.min_term(e), images);
    if (is_rigid_epi(of.ordered(), a, g))
      return RigidEpimorphism(of.ordered(), a, std::move(g));
    int i = n - 1;
    while (i >= 0 && images[i] == a.size() - 1) images[i--] = 0;
    if (i < 0) break;
    ++images[i];
  }
  return std::nullopt;
}

std::vector<OrderedAlgebra> expansions(const FiniteAlgebra& a) {
  std::vector<int> order(a.size());
  for (int i = 0; i < a.size(); ++i) order[i] = i;
  std::vector<OrderedAlgebra> out;
  do {
    out.emplace_back(a, order);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

std::vector<int> unique_restriction(const OrderedAlgebra& domain,
                                    const std::vector<int>& map, int codomain_size) {
  require(static_cast<int>(map.size()) == domain.size(),
          "unique_restriction: map length must match carrier");
  std::vector<int> first(codomain_size, -1);
  for (int p = 0; p < domain.size(); ++p) {
    int v = map.at(domain.at_position(p));
    require(v >= 0 && v < codomain_size, "unique_restriction: value out of range");
    if (first[v] < 0) first[v] = p;
  }
  for (int v = 0; v < codomain_size; ++v)
    require(first[v] >= 0, "unique_restriction: map is not surjective");
  std::vector<int> order(codomain_size);
  for (int v = 0; v < codomain_size; ++v) order[v] = v;
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return first[x] < first[y]; });
  return order;
}

bool check_eval_rigid(const OrderedAlgebra& a, int max_len) {
  std::vector<Term> terms = enumerate_neat(a.algebra().signature(), a.size(), max_len);
  // Variable i stands for the element at position i of the order.
  std::vector<int> assignment(a.size());
  for (int i = 0; i < a.size(); ++i) assignment[i] = a.at_position(i);
  std::vector<int> table(terms.size());
  for (size_t i = 0; i < terms.size(); ++i)
    table[i] = a.position_of(a.algebra().evaluate(terms[i], assignment));
  return is_rigid_surjection(
      ChainMap(static_cast<int>(terms.size()), a.size(), std::move(table)));
}

bool weak_left_square_holds(const FiniteAlgebra& a, int max_len) {
  std::vector<int> identity(a.size());
  for (int i = 0; i < a.size(); ++i) identity[i] = i;
  for (const Term& t : enumerate_neat(a.signature(), a.size(), max_len)) {
    int direct = a.evaluate(t, identity);
    for (const TermOverTerms& u : flatten_preimages(t)) {
      std::vector<int> inner_values;
      inner_values.reserve(u.pool.size());
      for (const Term& s : u.pool) inner_values.push_back(a.evaluate(s, identity));
      if (a.evaluate(u.outer, inner_values) != direct) return false;
    }
  }
  return true;
}

}  // namespace rw
