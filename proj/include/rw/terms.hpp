#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rw/chains.hpp"

namespace rw {

struct Symbol {
  std::string name;
  int arity = 0;
  bool operator==(const Symbol& other) const = default;
};

// Ordered operation alphabet. The listing order is the symbol order used by
// the term comparators; constants are the arity-0 entries.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<Symbol> symbols);

  int size() const { return static_cast<int>(symbols_.size()); }
  const Symbol& at(int i) const { return symbols_.at(i); }
  int arity(int i) const { return symbols_.at(i).arity; }
  const std::vector<Symbol>& symbols() const { return symbols_; }
  std::optional<int> index_of(const std::string& name) const;

  bool operator==(const Signature& other) const = default;

 private:
  std::vector<Symbol> symbols_;
};

// Term over numbered variables: either a variable node or a symbol node with
// as many children as the symbol's arity (checked against a Signature when
// rendering or evaluating, not at construction).
class Term {
 public:
  static Term variable(int index);
  static Term apply(int symbol, std::vector<Term> children = {});

  bool is_variable() const { return sym_ < 0; }
  int variable_index() const { return var_; }
  int symbol() const { return sym_; }
  const std::vector<Term>& children() const { return children_; }

  // Number of rendered symbols: every variable is a single symbol, an
  // application contributes the symbol plus parentheses and commas.
  int token_length() const;
  int max_variable() const;  // -1 when no variable occurs

  bool operator==(const Term& other) const;

 private:
  int var_ = -1;
  int sym_ = -1;
  std::vector<Term> children_;
};

// Term with every variable replaced by the least variable xi.
struct Shape {
  Term term;  // all variable nodes have index 0 and stand for xi
  bool operator==(const Shape& other) const = default;
};

Shape shape_of(const Term& t);
int shape_length(const Term& t);  // == t.token_length()

// Renders with variables printed x1, x2, ... (index 0 is x1).
std::string render(const Term& t, const Signature& sig);
// Renders with every variable printed as xi.
std::string render(const Shape& s, const Signature& sig);

// In-order variable occurrence list.
std::vector<int> variable_occurrences(const Term& t);

// Three-way neat order comparison: shape length, then shape string in the
// alphabet xi < symbols (signature order) < "(" < "," < ")", then the
// variable occurrence tuple lexicographically.
int neat_compare(const Term& a, const Term& b);
int shape_compare(const Shape& a, const Shape& b);

struct NeatLess {
  bool operator()(const Term& a, const Term& b) const {
    return neat_compare(a, b) < 0;
  }
};

// All shapes with token length <= max_len, in neat (length, lex) order.
std::vector<Shape> enumerate_shapes(const Signature& sig, int max_len);

// Initial segment of the neat order: every term over n_vars variables whose
// shape length is <= max_len, sorted.
std::vector<Term> enumerate_neat(const Signature& sig, int n_vars, int max_len);

// Variable substitution along a chain map; variable i becomes f(i).
// Throws std::invalid_argument if a variable index is outside f's domain.
Term substitute(const ChainMap& f, const Term& t);

// The induced map between neat enumerations at a fixed truncation is a rigid
// surjection. Throws std::invalid_argument when f is not rigid.
bool check_subst_rigid(const ChainMap& f, const Signature& sig, int max_len);

// Two-level term: outer term whose variables are the pooled inner terms.
// Pool entries may repeat in the outer term but are stored deduplicated.
struct TermOverTerms {
  Term outer;
  std::vector<Term> pool;
};

// One-level wrapper of t (the unit at the outer level).
TermOverTerms wrap(const Term& t);

// Substitutes the pooled terms for the outer variables.
Term flatten(const TermOverTerms& u);

// Every two-level term flattening to t, generated by cutting subtrees.
// Variable leaves must be cut; constants may be cut or kept structural.
std::vector<TermOverTerms> flatten_preimages(const Term& t);

// Neat comparison of two-level terms, inner terms compared by neat_compare.
int neat_compare_tt(const TermOverTerms& a, const TermOverTerms& b);

// Flatten is order-rigid at the truncation: wrappers are the minimal flatten
// preimages and wrapper order mirrors the inner neat order. Checked with the
// two-level comparator and per-term preimage cuts, without enumerating the
// two-level term algebra.
bool check_mu_rigid(const Signature& sig, int n_vars, int max_len);

}  // namespace rw
