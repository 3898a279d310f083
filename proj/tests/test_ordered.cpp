#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "rw/ordered.hpp"

using namespace rw;

TEST_CASE("ordered algebra positions invert the order") {
  OrderedAlgebra a = oracles::sl3_ord();
  for (int p = 0; p < a.size(); ++p) CHECK(a.position_of(a.at_position(p)) == p);
  CHECK_THROWS_AS(OrderedAlgebra(oracles::sl2(), {0}), std::invalid_argument);
  CHECK_THROWS_AS(OrderedAlgebra(oracles::sl2(), {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(OrderedAlgebra(oracles::sl2(), {0, 2}), std::invalid_argument);
}

TEST_CASE("rigid epimorphism constructor rejects each defect") {
  // Constant map: homomorphism but not surjective.
  CHECK_THROWS_AS(RigidEpimorphism(oracles::sl3_ord(), oracles::sl2_ord(), {0, 0, 0}),
                  std::invalid_argument);
  // Surjective but not a homomorphism.
  CHECK_THROWS_AS(RigidEpimorphism(oracles::sl3_ord(), oracles::sl2_ord(), {1, 0, 0}),
                  std::invalid_argument);
  // Identity carrier, reversed codomain order: position map is the swap.
  CHECK_THROWS_AS(RigidEpimorphism(oracles::sl2_ord(), oracles::sl2_rev(), {0, 1}),
                  std::invalid_argument);
  EpiChecks c = check_rigid_epi(oracles::sl2_ord(), oracles::sl2_rev(), {0, 1});
  CHECK(c.homomorphism);
  CHECK(c.surjective);
  CHECK(!c.order_rigid);
}

TEST_CASE("rigid epi sets on the worked chains") {
  std::vector<RigidEpimorphism> down = rigid_epi_set(oracles::sl3_ord(), oracles::sl2_ord());
  REQUIRE(down.size() == 2);
  CHECK(down[0].map() == std::vector<int>{0, 0, 1});
  CHECK(down[1].map() == std::vector<int>{0, 1, 1});
  for (const auto& e : down) CHECK(is_rigid_surjection(e.chain_map()));
  // The only rigid epi of an ordered algebra onto itself is the identity.
  for (const OrderedAlgebra& a : {oracles::sl2_ord(), oracles::sl2_rev(), oracles::sl3_ord()}) {
    std::vector<RigidEpimorphism> autos = rigid_epi_set(a, a);
    REQUIRE(autos.size() == 1);
    for (int e = 0; e < a.size(); ++e) CHECK(autos[0](e) == e);
  }
  CHECK(rigid_epi_set(oracles::sl2_ord(), oracles::sl3_ord()).empty());
}

TEST_CASE("composition of rigid epis is rigid") {
  OrderedFreeAlgebra f3 = ordered_free(oracles::semilattice(), 3);
  std::vector<RigidEpimorphism> top = rigid_epi_set(f3.ordered(), oracles::sl3_ord());
  REQUIRE(top.size() == 1);
  CHECK(top[0].map() == std::vector<int>{0, 1, 2, 0, 0, 1, 0});
  std::vector<RigidEpimorphism> down = rigid_epi_set(oracles::sl3_ord(), oracles::sl2_ord());
  for (const auto& d : down) {
    RigidEpimorphism comp = compose(d, top[0]);
    CHECK(comp.checks().ok());
    for (int e = 0; e < f3.size(); ++e) CHECK(comp(e) == d(top[0](e)));
  }
}

TEST_CASE("ordered free structure for small semilattices") {
  Variety v = oracles::semilattice();
  OrderedFreeAlgebra f2 = ordered_free(v, 2);
  REQUIRE(f2.size() == 3);
  CHECK(f2.cover_length() == 6);
  CHECK(render(f2.min_term(f2.ordered().at_position(0)), v.signature) == "x1");
  CHECK(render(f2.min_term(f2.ordered().at_position(1)), v.signature) == "x2");
  CHECK(render(f2.min_term(f2.ordered().at_position(2)), v.signature) == "g(x1,x2)");

  OrderedFreeAlgebra f3 = ordered_free(v, 3);
  REQUIRE(f3.size() == 7);
  CHECK(f3.cover_length() == 11);
  CHECK(render(f3.min_term(f3.ordered().at_position(6)), v.signature) == "g(x1,g(x2,x3))");
  // Generators occupy the first positions in index order.
  for (int i = 0; i < 3; ++i)
    CHECK(f3.ordered().at_position(i) == f3.free().generator_elements()[i]);
  // nu agrees with the underlying quotient map.
  for (int e = 0; e < f3.size(); ++e) CHECK(f3.nu(f3.min_term(e)) == e);

  CHECK_THROWS_AS(ordered_free(Variety{"trivial", oracles::meet_sig(), {oracles::triv1()}}, 2),
                  std::invalid_argument);
}

TEST_CASE("hat functor on rigid chain maps") {
  Variety v = oracles::semilattice();
  ChainMap f(3, 2, {0, 0, 1});
  RigidEpimorphism hf = hat_t_v(v, f);
  CHECK(hf.map() == std::vector<int>{0, 0, 1, 0, 2, 2, 2});
  CHECK(hf.domain().size() == 7);
  CHECK(hf.codomain().size() == 3);

  ChainMap g(2, 1, {0, 0});
  RigidEpimorphism hg = hat_t_v(v, g);
  RigidEpimorphism composed = compose(hg, hf);
  RigidEpimorphism direct = hat_t_v(v, rw::compose(g, f));
  CHECK(composed.map() == direct.map());

  CHECK_THROWS_AS(hat_t_v(v, ChainMap(2, 2, {1, 0})), std::invalid_argument);
}

TEST_CASE("reflection factoring and its failure modes") {
  Variety v = oracles::semilattice();
  RigidEpimorphism r = factor_reflection(v, 2, oracles::sl2_ord(), {0, 1});
  CHECK(r.map() == std::vector<int>{0, 1, 0});
  // Images that do not generate the codomain.
  CHECK_THROWS_AS(factor_reflection(v, 2, oracles::sl2_ord(), {0, 0}), std::invalid_argument);
  // Generating images whose extension is not order rigid.
  CHECK_THROWS_AS(factor_reflection(v, 2, oracles::sl2_ord(), {1, 0}), std::invalid_argument);
  // Codomain outside the variety.
  OrderedAlgebra lz(oracles::lz2(), {0, 1}, "lz2-ord");
  CHECK_THROWS_AS(factor_reflection(v, 2, lz, {0, 1}), std::domain_error);
  CHECK_THROWS_AS(factor_reflection(v, 1, oracles::sl2_ord(), {0, 1}), std::invalid_argument);
}

TEST_CASE("joint factoring through the product image") {
  Variety v = oracles::semilattice();
  OrderedFreeAlgebra f3 = ordered_free(v, 3);
  std::vector<RigidEpimorphism> homs = rigid_epi_set(f3.ordered(), oracles::sl2_ord());
  REQUIRE(homs.size() == 3);
  JointFactorization jf = joint_factor(homs[0], homs[1]);
  CHECK(jf.pairing.checks().ok());
  CHECK(jf.onto_first.checks().ok());
  CHECK(jf.onto_second.checks().ok());
  for (int e = 0; e < f3.size(); ++e) {
    CHECK(jf.onto_first(jf.pairing(e)) == homs[0](e));
    CHECK(jf.onto_second(jf.pairing(e)) == homs[1](e));
  }
  CHECK(jf.image.size() <= 4);
}

TEST_CASE("witness epis from free algebras") {
  Variety v = oracles::semilattice();
  CHECK(!exists_rigid_epi_from_free(v, 1, oracles::sl2_ord()).has_value());
  std::optional<RigidEpimorphism> w = exists_rigid_epi_from_free(v, 2, oracles::sl2_ord());
  REQUIRE(w.has_value());
  CHECK(w->checks().ok());
  std::optional<RigidEpimorphism> ex = exists_rigid_epi_from_free(v, 3, oracles::sl3_ord(), true);
  REQUIRE(ex.has_value());
  CHECK(ex->map() == std::vector<int>{0, 1, 2, 0, 0, 1, 0});
  OrderedAlgebra lz(oracles::lz2(), {0, 1}, "lz2-ord");
  CHECK_THROWS_AS(exists_rigid_epi_from_free(v, 2, lz), std::domain_error);
}

TEST_CASE("expansions enumerate all linear orders") {
  std::vector<OrderedAlgebra> exp = expansions(oracles::sl3());
  CHECK(exp.size() == 6);
  std::set<std::vector<int>> orders;
  for (const auto& a : exp) orders.insert(a.order());
  CHECK(orders.size() == 6);
}

TEST_CASE("unique restriction recovers the rigid codomain order") {
  OrderedAlgebra d = oracles::sl3_ord();
  CHECK(unique_restriction(d, {0, 0, 1}, 2) == std::vector<int>{0, 1});
  CHECK(unique_restriction(d, {1, 1, 0}, 2) == std::vector<int>{1, 0});
  // Rebuilding the codomain with that order makes the position map rigid.
  std::vector<int> ord = unique_restriction(d, {1, 1, 0}, 2);
  OrderedAlgebra cod(oracles::sl2(), ord);
  CHECK(is_rigid_surjection(position_map(d, cod, {1, 1, 0})));
}

TEST_CASE("evaluation from the neat enumeration is rigid") {
  for (const OrderedAlgebra& a : {oracles::sl2_ord(), oracles::sl2_rev(), oracles::sl3_ord()})
    CHECK(check_eval_rigid(a, 8));
}

TEST_CASE("two-level evaluation agrees with flattening") {
  CHECK(weak_left_square_holds(oracles::sl2(), 8));
  CHECK(weak_left_square_holds(oracles::lz2(), 8));
  CHECK(weak_left_square_holds(oracles::z2(), 6));
}
