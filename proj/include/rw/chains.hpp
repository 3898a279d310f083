#pragma once

#include <string>
#include <vector>

namespace rw {

// Finite chain 0 < 1 < ... < size-1 with optional element labels.
class Chain {
 public:
  Chain() = default;
  explicit Chain(int size);
  explicit Chain(std::vector<std::string> labels);

  int size() const { return size_; }
  bool labeled() const { return !labels_.empty(); }
  // Label of the element at position pos; synthesizes "0","1",... when unlabeled.
  std::string label(int pos) const;
  const std::vector<std::string>& labels() const { return labels_; }

  bool operator==(const Chain& other) const = default;

 private:
  int size_ = 0;
  std::vector<std::string> labels_;
};

// Map between chains, table[i] = image of element i. Need not be surjective;
// predicates report false rather than erroring on non-surjective maps.
struct ChainMap {
  int domain = 0;
  int codomain = 0;
  std::vector<int> table;

  ChainMap() = default;
  ChainMap(int domain, int codomain, std::vector<int> table);

  int operator()(int x) const { return table[x]; }
  bool operator==(const ChainMap& other) const = default;
};

ChainMap identity_map(int n);

// g after f; requires f.codomain == g.domain.
ChainMap compose(const ChainMap& g, const ChainMap& f);

bool is_surjection(const ChainMap& f);

// Surjective and fiber minima strictly increase with the codomain order.
bool is_rigid_surjection(const ChainMap& f);

// Every initial segment of the domain maps onto an initial segment of the
// codomain. Equivalent to is_rigid_surjection; kept as an independent route.
// Throws std::invalid_argument when f is not surjective.
bool initial_segment_criterion(const ChainMap& f);

// b -> min preimage of b. Strictly increasing iff f is rigid.
// Throws std::invalid_argument when f is not surjective.
ChainMap dual_embedding(const ChainMap& f);

// For a surjection onto an unordered codomain: the unique codomain order
// making f rigid. Returns codomain values sorted by minimal preimage.
// Throws std::invalid_argument when f is not surjective.
std::vector<int> induced_order(const ChainMap& f);

// All rigid surjections n -> k in lexicographic table order.
// Count equals the Stirling partition number S(n, k).
std::vector<ChainMap> enumerate_rigid_surjections(int n, int k);

// Tuple <-> index for the lexicographic power chain, first coordinate most
// significant (odometer convention).
long long lex_index(const std::vector<int>& tuple, int base);
std::vector<int> lex_tuple(long long index, int base, int width);

// Coordinatewise power of a rigid f on lex-ordered tuple chains.
// Throws std::invalid_argument when f is not a rigid surjection.
ChainMap lex_product_map(const ChainMap& f, int width);

Chain ordinal_sum(const std::vector<Chain>& parts);
Chain lex_power(const Chain& base, int width);

}  // namespace rw
