#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rw/algebras.hpp"
#include "rw/chains.hpp"

namespace rw {

// Finite algebra together with a linear order on the carrier.
// order[p] = carrier element at position p; position is the inverse.
class OrderedAlgebra {
 public:
  OrderedAlgebra() = default;
  OrderedAlgebra(FiniteAlgebra algebra, std::vector<int> order, std::string name = "");

  const FiniteAlgebra& algebra() const { return algebra_; }
  int size() const { return algebra_.size(); }
  const std::vector<int>& order() const { return order_; }
  int at_position(int p) const { return order_.at(p); }
  int position_of(int element) const { return position_.at(element); }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  bool same_structure(const OrderedAlgebra& other) const {
    return algebra_ == other.algebra_ && order_ == other.order_;
  }

 private:
  FiniteAlgebra algebra_;
  std::vector<int> order_;
  std::vector<int> position_;
  std::string name_;
};

struct EpiChecks {
  bool homomorphism = false;
  bool surjective = false;
  bool order_rigid = false;
  bool ok() const { return homomorphism && surjective && order_rigid; }
};

// The carrier map rewritten on order positions.
ChainMap position_map(const OrderedAlgebra& a, const OrderedAlgebra& b,
                      const std::vector<int>& carrier_map);

EpiChecks check_rigid_epi(const OrderedAlgebra& a, const OrderedAlgebra& b,
                          const std::vector<int>& carrier_map);
bool is_rigid_epi(const OrderedAlgebra& a, const OrderedAlgebra& b,
                  const std::vector<int>& carrier_map);

// Surjective homomorphism whose position map is a rigid surjection.
// The constructor validates all three checks and throws on failure.
class RigidEpimorphism {
 public:
  RigidEpimorphism(OrderedAlgebra domain, OrderedAlgebra codomain,
                   std::vector<int> carrier_map);

  const OrderedAlgebra& domain() const { return domain_; }
  const OrderedAlgebra& codomain() const { return codomain_; }
  const std::vector<int>& map() const { return map_; }
  int operator()(int element) const { return map_.at(element); }
  ChainMap chain_map() const { return position_map(domain_, codomain_, map_); }
  EpiChecks checks() const { return checks_; }

 private:
  OrderedAlgebra domain_;
  OrderedAlgebra codomain_;
  std::vector<int> map_;
  EpiChecks checks_;
};

RigidEpimorphism compose(const RigidEpimorphism& g, const RigidEpimorphism& f);

// All rigid epimorphisms a -> b in lexicographic carrier-map order.
std::vector<RigidEpimorphism> rigid_epi_set(const OrderedAlgebra& a,
                                            const OrderedAlgebra& b);

// Free algebra ordered by first appearance along the neat term enumeration;
// the generators occupy the first positions.
class OrderedFreeAlgebra {
 public:
  const FreeAlgebra& free() const { return free_; }
  const OrderedAlgebra& ordered() const { return ordered_; }
  int size() const { return ordered_.size(); }
  int generator_count() const { return free_.generator_count(); }
  // Least term (in neat order) evaluating to the element.
  const Term& min_term(int element) const { return min_terms_.at(element); }
  // Truncation length that witnessed every element.
  int cover_length() const { return cover_length_; }
  int nu(const Term& t) const { return free_.element_of(t); }

 private:
  friend OrderedFreeAlgebra ordered_free(const Variety& v, int n);
  FreeAlgebra free_;
  OrderedAlgebra ordered_;
  std::vector<Term> min_terms_;
  int cover_length_ = 0;
};

// Throws std::invalid_argument for a trivial variety (generators collapse).
OrderedFreeAlgebra ordered_free(const Variety& v, int n);

// Functorial action on a rigid chain map f: substitution into minimal terms,
// from ordered_free(v, f.domain) onto ordered_free(v, f.codomain).
RigidEpimorphism hat_t_v(const Variety& v, const ChainMap& f);

// Unique factoring of a term-level map through the canonical quotient: the
// input is the homomorphic extension of generator images in a, the output is
// the induced rigid epimorphism from ordered_free(v, n) onto a. Throws
// std::domain_error when the extension is not constant on congruence classes
// (which signals that a lies outside the variety) and std::invalid_argument
// when the generator images do not generate all of a.
RigidEpimorphism factor_reflection(const Variety& v, int n, const OrderedAlgebra& a,
                                   const std::vector<int>& generator_images);

struct JointFactorization {
  OrderedAlgebra image;     // subalgebra of the product carrying the induced order
  RigidEpimorphism pairing;  // common domain onto the image
  RigidEpimorphism onto_first;
  RigidEpimorphism onto_second;
};

// Factors two rigid epis with a common domain through their joint image in
// the product, ordered so the pairing is rigid; both projections are rigid.
JointFactorization joint_factor(const RigidEpimorphism& f, const RigidEpimorphism& g);

// Witness construction: when n >= |a| the generator block of the free order
// maps through any rigid surjection of chains onto a's order and extends to a
// rigid epimorphism. Returns std::nullopt when n < |a|. With exhaustive set,
// searches every generator image tuple instead of the canonical ramp.
// Throws std::domain_error when a is not in the variety.
std::optional<RigidEpimorphism> exists_rigid_epi_from_free(
    const Variety& v, int n, const OrderedAlgebra& a, bool exhaustive = false);

// All |carrier|! linear orders on the algebra.
std::vector<OrderedAlgebra> expansions(const FiniteAlgebra& a);

// The unique codomain order making a surjective map from an ordered domain
// rigid: codomain elements sorted by minimal preimage position.
std::vector<int> unique_restriction(const OrderedAlgebra& domain,
                                    const std::vector<int>& map, int codomain_size);

// Evaluation from the neat term enumeration over the carrier chain onto the
// algebra is a rigid surjection at every truncation that covers the carrier.
bool check_eval_rigid(const OrderedAlgebra& a, int max_len);

// Two-level evaluation agreement: evaluating an outer term of evaluated
// inner terms matches evaluating the flattened term. Checked over every
// two-level term whose flattening has shape length <= max_len.
bool weak_left_square_holds(const FiniteAlgebra& a, int max_len);

}  // namespace rw
