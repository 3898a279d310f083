#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "rw/algebras.hpp"

using namespace rw;

TEST_CASE("finite algebra evaluation") {
  FiniteAlgebra a = oracles::sl3();
  CHECK(a.apply(0, {2, 1}) == 1);
  Term t = Term::apply(0, {Term::variable(0), Term::apply(0, {Term::variable(1), Term::variable(0)})});
  CHECK(a.evaluate(t, {2, 1}) == 1);
  CHECK_THROWS_AS(FiniteAlgebra(oracles::meet_sig(), 2, {{0, 0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteAlgebra(oracles::meet_sig(), 2, {{0, 0, 0, 2}}), std::invalid_argument);
}

TEST_CASE("identities hold or fail as expected") {
  Term x = Term::variable(0), y = Term::variable(1);
  Term gxy = Term::apply(0, {x, y}), gyx = Term::apply(0, {y, x});
  CHECK(satisfies_identity(oracles::sl2(), gxy, gyx));
  CHECK(satisfies_identity(oracles::sl3(), gxy, gyx));
  CHECK(!satisfies_identity(oracles::lz2(), gxy, gyx));
  CHECK(satisfies_identity(oracles::lz2(), gxy, x));
}

TEST_CASE("hom and epi sets by backtracking") {
  FiniteAlgebra s = oracles::sl2();
  std::vector<std::vector<int>> homs = hom_set(s, s);
  // Meet maps 2 -> 2: identity and both constants.
  REQUIRE(homs.size() == 3);
  for (const auto& h : homs) CHECK(is_homomorphism(s, s, h));
  std::vector<std::vector<int>> epis = epi_set(s, s);
  REQUIRE(epis.size() == 1);
  CHECK(epis[0] == std::vector<int>{0, 1});
  // Meet surjections from the 3-chain onto the 2-chain are the monotone cuts.
  CHECK(epi_set(oracles::sl3(), oracles::sl2()).size() == 2);
  // Maps out of z2 must preserve the group structure.
  CHECK(hom_set(oracles::z2(), oracles::z2()).size() == 2);
}

TEST_CASE("products and generated subalgebras") {
  FiniteAlgebra p = product(oracles::sl2(), oracles::sl3());
  CHECK(p.size() == 6);
  CHECK(p.apply(0, {1 * 3 + 2, 0 * 3 + 1}) == 0 * 3 + 1);
  Subalgebra sub = generated_subalgebra(oracles::sl3(), {0, 2});
  CHECK(sub.algebra.size() == 2);
  Subalgebra all = generated_subalgebra(oracles::sl3(), {1, 2});
  CHECK(all.algebra.size() == 2);  // meet of a chain stays within {1, 2}
  Subalgebra full = generated_subalgebra(oracles::sl3(), {0, 1, 2});
  CHECK(full.algebra.size() == 3);
  for (size_t i = 0; i < sub.inclusion.size(); ++i)
    CHECK((sub.inclusion[i] == 0 || sub.inclusion[i] == 2));
}

TEST_CASE("free semilattices count nonempty subsets") {
  Variety v = oracles::semilattice();
  CHECK(is_nontrivial(v));
  for (int n = 1; n <= 4; ++n)
    CHECK(free_algebra(v, n).algebra().size() == (1 << n) - 1);
}

TEST_CASE("free exponent-two groups count subsets") {
  Variety v = oracles::boolean_group();
  for (int n = 1; n <= 3; ++n) CHECK(free_algebra(v, n).algebra().size() == (1 << n));
}

TEST_CASE("free algebra representatives evaluate to their elements") {
  FreeAlgebra f = free_algebra(oracles::semilattice(), 3);
  for (int e = 0; e < f.algebra().size(); ++e) CHECK(f.element_of(f.representative(e)) == e);
  // Generators are distinct elements in order.
  std::set<int> gens(f.generator_elements().begin(), f.generator_elements().end());
  CHECK(gens.size() == 3);
}

TEST_CASE("free algebra universal property") {
  Variety v = oracles::semilattice();
  FreeAlgebra f = free_algebra(v, 2);
  for (const FiniteAlgebra& target : {oracles::sl2(), oracles::sl3()}) {
    std::vector<std::vector<int>> homs = hom_set(f.algebra(), target);
    CHECK(static_cast<int>(homs.size()) == target.size() * target.size());
    std::set<std::vector<int>> images;
    for (const auto& h : homs)
      images.insert({h[f.generator_elements()[0]], h[f.generator_elements()[1]]});
    CHECK(images.size() == homs.size());
  }
}

TEST_CASE("theta equivalence matches the free algebra quotient") {
  Variety v = oracles::semilattice();
  Term x = Term::variable(0), y = Term::variable(1);
  Term gxy = Term::apply(0, {x, y}), gyx = Term::apply(0, {y, x});
  CHECK(theta_equiv(v, 2, gxy, gyx));
  CHECK(theta_equiv(v, 2, Term::apply(0, {x, x}), x));
  CHECK(!theta_equiv(v, 2, x, y));
  Variety bg = oracles::boolean_group();
  Term mulxx = Term::apply(0, {x, x});
  CHECK(theta_equiv(bg, 1, mulxx, Term::apply(2)));
}

TEST_CASE("variety membership via the canonical quotient") {
  Variety v = oracles::semilattice();
  CHECK(variety_contains(v, oracles::sl2()));
  CHECK(variety_contains(v, oracles::sl3()));
  CHECK(variety_contains(v, oracles::triv1()));
  CHECK(!variety_contains(v, oracles::lz2()));
  CHECK(variety_contains(oracles::boolean_group(), oracles::z2()));
}

TEST_CASE("trivial variety detection") {
  Variety t{"trivial", oracles::meet_sig(), {oracles::triv1()}};
  CHECK(!is_nontrivial(t));
}

TEST_CASE("random identities transfer from generators to the variety") {
  // An identity holds in the free algebra iff it holds in every generator.
  std::mt19937 rng(31);
  Variety v = oracles::semilattice();
  for (int it = 0; it < 60; ++it) {
    Term lhs = oracles::random_term(rng, v.signature, 2, 3);
    Term rhs = oracles::random_term(rng, v.signature, 2, 3);
    bool in_gen = satisfies_identity(oracles::sl2(), lhs, rhs);
    CHECK(theta_equiv(v, 2, lhs, rhs) == in_gen);
  }
}
