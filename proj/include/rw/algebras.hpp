#pragma once

#include <string>
#include <vector>

#include "rw/terms.hpp"

namespace rw {

// Total finite algebra: one operation table per signature symbol, row major
// with the first argument most significant.
class FiniteAlgebra {
 public:
  FiniteAlgebra() = default;
  FiniteAlgebra(Signature sig, int size, std::vector<std::vector<int>> tables);

  const Signature& signature() const { return sig_; }
  int size() const { return size_; }
  const std::vector<int>& table(int sym) const { return tables_.at(sym); }

  int apply(int sym, const std::vector<int>& args) const;
  int evaluate(const Term& t, const std::vector<int>& assignment) const;

  bool operator==(const FiniteAlgebra& other) const = default;

 private:
  Signature sig_;
  int size_ = 0;
  std::vector<std::vector<int>> tables_;
};

// Exhaustive over all assignments of the variables occurring in either side.
bool satisfies_identity(const FiniteAlgebra& a, const Term& lhs, const Term& rhs);

bool is_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b,
                     const std::vector<int>& map);
bool is_surjective_map(const std::vector<int>& map, int codomain_size);

// All homomorphisms / surjective homomorphisms a -> b, by backtracking,
// in lexicographic map order.
std::vector<std::vector<int>> hom_set(const FiniteAlgebra& a, const FiniteAlgebra& b);
std::vector<std::vector<int>> epi_set(const FiniteAlgebra& a, const FiniteAlgebra& b);

// Componentwise product; element (x, y) has index x * |b| + y.
FiniteAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b);

struct Subalgebra {
  FiniteAlgebra algebra;
  std::vector<int> inclusion;  // subalgebra element -> ambient element
};

// Closure of the generators (plus constants) under all operations; carrier
// indexed in first-discovery order.
Subalgebra generated_subalgebra(const FiniteAlgebra& a, const std::vector<int>& generators);

// A variety presented by finitely many finite generating algebras; its
// identities are exactly those holding in every generator.
struct Variety {
  std::string name;
  Signature signature;
  std::vector<FiniteAlgebra> generators;
};

// False exactly when every generator is a one-element algebra.
bool is_nontrivial(const Variety& v);

// Free algebra on n generators, realized inside the product of all generator
// algebras raised to all n-variable assignments and cut down to the closure
// of the projection tuples.
class FreeAlgebra {
 public:
  const FiniteAlgebra& algebra() const { return algebra_; }
  int generator_count() const { return n_; }
  const std::vector<int>& generator_elements() const { return gens_; }
  // A term evaluating to the element (recorded during closure).
  const Term& representative(int element) const { return reprs_.at(element); }

  // The canonical map from terms: evaluate at the generator elements.
  int element_of(const Term& t) const;
  bool equivalent(const Term& t1, const Term& t2) const;

 private:
  friend FreeAlgebra free_algebra(const Variety& v, int n);
  FiniteAlgebra algebra_;
  int n_ = 0;
  std::vector<int> gens_;
  std::vector<Term> reprs_;
};

FreeAlgebra free_algebra(const Variety& v, int n);

// Identity holds in the variety iff it holds in the free algebra on the
// occurring variables. Builds the free algebra; prefer FreeAlgebra::equivalent
// when asking repeatedly.
bool theta_equiv(const Variety& v, int n, const Term& t1, const Term& t2);

// Membership in the variety generated by v's generators.
bool variety_contains(const Variety& v, const FiniteAlgebra& a);

}  // namespace rw
