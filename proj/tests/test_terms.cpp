#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "rw/terms.hpp"

using namespace rw;

namespace {

// Omega = {c, f ternary, g binary} in that symbol order.
Signature cfg_sig() { return Signature({{"c", 0}, {"f", 3}, {"g", 2}}); }

Term cfg_example() {
  // f(g(x2,x1),c,x1)
  return Term::apply(1, {Term::apply(2, {Term::variable(1), Term::variable(0)}),
                         Term::apply(0), Term::variable(0)});
}

}  // namespace

TEST_CASE("rendering and token length") {
  Signature sig = cfg_sig();
  Term t = cfg_example();
  CHECK(render(t, sig) == "f(g(x2,x1),c,x1)");
  // Tokens: f ( g ( x2 , x1 ) , c , x1 ) = 13 rendered symbols.
  CHECK(t.token_length() == 13);
  CHECK(shape_length(t) == 13);
  CHECK(render(shape_of(t), sig) == "f(g(\xce\xbe,\xce\xbe),c,\xce\xbe)");
  CHECK(t.max_variable() == 1);
  CHECK(variable_occurrences(t) == std::vector<int>{1, 0, 0});
}

TEST_CASE("shape comparison orders by length then alphabet") {
  Signature sig = oracles::meet_sig();
  Term x = Term::variable(0);
  Term gxx = Term::apply(0, {x, x});
  // Shorter shapes come first.
  CHECK(neat_compare(x, gxx) < 0);
  // The variable placeholder precedes every signature symbol.
  Signature uc = Signature({{"u", 1}, {"c", 0}});
  Term c = Term::apply(1);
  CHECK(neat_compare(x, c) < 0);
  // Nesting in the first argument weighs by the shape alphabet: the
  // placeholder is smaller than the symbol, so g(x,g(x,x)) < g(g(x,x),x).
  Term left = Term::apply(0, {x, gxx});
  Term right = Term::apply(0, {gxx, x});
  CHECK(neat_compare(left, right) < 0);
  CHECK(shape_compare(shape_of(left), shape_of(right)) < 0);
}

TEST_CASE("variable tuples break ties within a shape") {
  Term x1 = Term::variable(0), x2 = Term::variable(1);
  Term a = Term::apply(0, {x1, x2});
  Term b = Term::apply(0, {x2, x1});
  CHECK(neat_compare(a, b) < 0);
  CHECK(neat_compare(a, a) == 0);
  CHECK(neat_compare(b, a) > 0);
}

TEST_CASE("neat enumeration is sorted and complete") {
  Signature sig = oracles::meet_sig();
  std::vector<Term> terms = enumerate_neat(sig, 2, 6);
  REQUIRE(terms.size() == 6);
  CHECK(render(terms[0], sig) == "x1");
  CHECK(render(terms[1], sig) == "x2");
  CHECK(render(terms[2], sig) == "g(x1,x1)");
  CHECK(render(terms[3], sig) == "g(x1,x2)");
  CHECK(render(terms[4], sig) == "g(x2,x1)");
  CHECK(render(terms[5], sig) == "g(x2,x2)");
  for (size_t i = 0; i + 1 < terms.size(); ++i) CHECK(neat_compare(terms[i], terms[i + 1]) < 0);
  // Recount through shapes: each shape contributes one term per variable tuple.
  std::vector<Shape> shapes = enumerate_shapes(sig, 6);
  REQUIRE(shapes.size() == 2);
  long long expected = 2 + 4;
  CHECK(static_cast<long long>(terms.size()) == expected);
}

TEST_CASE("variables precede constants precede compounds") {
  Signature sig = cfg_sig();
  std::vector<Term> terms = enumerate_neat(sig, 2, 8);
  REQUIRE(terms.size() >= 4);
  CHECK(render(terms[0], sig) == "x1");
  CHECK(render(terms[1], sig) == "x2");
  CHECK(render(terms[2], sig) == "c");
  for (size_t i = 3; i < terms.size(); ++i) CHECK(!terms[i].is_variable());
}

TEST_CASE("substitution renames variables and preserves shapes") {
  Signature sig = oracles::meet_sig();
  Term t = Term::apply(0, {Term::variable(0), Term::variable(2)});
  ChainMap f(3, 2, {0, 0, 1});
  CHECK(render(substitute(f, t), sig) == "g(x1,x2)");
  CHECK(shape_of(substitute(f, t)) == shape_of(t));
  CHECK_THROWS_AS(substitute(ChainMap(1, 1, {0}), t), std::invalid_argument);

  std::mt19937 rng(23);
  for (int it = 0; it < 200; ++it) {
    int m = 1 + rng() % 3, n = 1 + rng() % 3, p = 1 + rng() % 3;
    std::vector<int> ft(m), gt(n);
    for (int& x : ft) x = rng() % n;
    for (int& x : gt) x = rng() % p;
    ChainMap fr(m, n, ft), gr(n, p, gt);
    Term s = oracles::random_term(rng, sig, m, 3);
    CHECK(substitute(compose(gr, fr), s) == substitute(gr, substitute(fr, s)));
  }
}

TEST_CASE("induced substitution maps between truncations are rigid") {
  for (const Signature& sig : {oracles::meet_sig(), oracles::group_sig(),
                               Signature({{"u", 1}, {"c", 0}})})
    for (int n = 1; n <= 4; ++n)
      for (int k = 1; k <= n; ++k)
        for (const ChainMap& f : enumerate_rigid_surjections(n, k))
          CHECK(check_subst_rigid(f, sig, 8));
  CHECK_THROWS_AS(check_subst_rigid(ChainMap(2, 2, {1, 0}), oracles::meet_sig(), 6),
                  std::invalid_argument);
}

TEST_CASE("wrap and flatten are inverse on one level") {
  Signature sig = oracles::meet_sig();
  std::mt19937 rng(29);
  for (int it = 0; it < 100; ++it) {
    Term t = oracles::random_term(rng, sig, 3, 3);
    TermOverTerms u = wrap(t);
    CHECK(flatten(u) == t);
    CHECK(u.outer.is_variable());
  }
}

TEST_CASE("flatten preimages cut the tree and flatten back") {
  Signature sig = Signature({{"g", 2}, {"c", 0}});
  // g(x1,c): the variable leaf must be cut, the constant may be cut or kept.
  Term t = Term::apply(0, {Term::variable(0), Term::apply(1)});
  std::vector<TermOverTerms> pre = flatten_preimages(t);
  // Cuts: whole term as one inner; split at the root with constant cut;
  // split at the root with constant structural.
  CHECK(pre.size() == 3);
  bool saw_wrap = false;
  for (const TermOverTerms& u : pre) {
    CHECK(flatten(u) == t);
    TermOverTerms w = wrap(t);
    if (u.outer == w.outer && u.pool == w.pool) saw_wrap = true;
  }
  CHECK(saw_wrap);
}

TEST_CASE("two-level comparator mirrors the flattened order on wrappers") {
  Signature sig = oracles::meet_sig();
  std::vector<Term> terms = enumerate_neat(sig, 2, 6);
  for (size_t i = 0; i < terms.size(); ++i)
    for (size_t j = 0; j < terms.size(); ++j) {
      int inner = neat_compare(terms[i], terms[j]);
      int outer = neat_compare_tt(wrap(terms[i]), wrap(terms[j]));
      CHECK((inner < 0) == (outer < 0));
      CHECK((inner == 0) == (outer == 0));
    }
}

TEST_CASE("flatten is order rigid at small truncations") {
  CHECK(check_mu_rigid(oracles::meet_sig(), 2, 7));
  CHECK(check_mu_rigid(Signature({{"u", 1}, {"c", 0}}), 2, 7));
  CHECK(check_mu_rigid(oracles::group_sig(), 2, 7));
}

TEST_CASE("shape enumeration respects the truncation") {
  Signature sig = oracles::meet_sig();
  for (const Shape& s : enumerate_shapes(sig, 11)) CHECK(shape_length(s.term) <= 11);
  // Lengths 1, 6, 11 for the meet signature.
  CHECK(enumerate_shapes(sig, 5).size() == 1);
  CHECK(enumerate_shapes(sig, 6).size() == 2);
  CHECK(enumerate_shapes(sig, 11).size() == 4);
}
