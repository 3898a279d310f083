#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "oracles.hpp"
#include "rw/catalog.hpp"
#include "rw/json_io.hpp"

using namespace rw;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& tag) {
  fs::path dir = fs::temp_directory_path() / ("rw-json-" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void put(const fs::path& dir, const std::string& name, const json& j) {
  std::ofstream out(dir / name);
  out << j.dump(2) << "\n";
}

}  // namespace

TEST_CASE("chain map json roundtrip") {
  ChainMap f(4, 2, {0, 0, 1, 1});
  ChainMap g = chain_map_from_json(to_json(f));
  CHECK(g.domain == 4);
  CHECK(g.codomain == 2);
  CHECK(g.table == f.table);
  CHECK_THROWS(chain_map_from_json(json{{"n", 2}, {"k", 2}, {"table", {0, 5}}}));
}

TEST_CASE("signature and term json roundtrip") {
  Signature sig({{"c", 0}, {"f", 3}, {"g", 2}});
  Signature sig2 = signature_from_json(to_json(sig));
  CHECK(sig2 == sig);
  Term t = Term::apply(1, {Term::apply(2, {Term::variable(1), Term::variable(0)}),
                           Term::apply(0), Term::variable(0)});
  Term back = term_from_json(to_json(t), sig);
  CHECK(back == t);
  // Unknown operation name and arity mismatch both fail.
  CHECK_THROWS(term_from_json(json{{"op", "h"}, {"args", json::array()}}, sig));
  CHECK_THROWS(term_from_json(json{{"op", "g"}, {"args", {json{{"var", 0}}}}}, sig));
}

TEST_CASE("algebra json uses nested tables") {
  FiniteAlgebra z2 = oracles::z2();
  json j = to_json(z2);
  CHECK(j["size"] == 2);
  CHECK(j["tables"]["mul"][1][0] == 1);
  FiniteAlgebra back = algebra_from_json(j);
  CHECK(back == z2);

  OrderedAlgebra oa = oracles::sl3_ord();
  OrderedAlgebra ob = ordered_from_json(to_json(oa));
  CHECK(ob.same_structure(oa));
  CHECK(ob.name() == oa.name());
}

TEST_CASE("coloring and certificate json roundtrip") {
  Coloring c{3, {0, 1, 2, 0}};
  Coloring c2 = coloring_from_json(to_json(c));
  CHECK(c2.k == 3);
  CHECK(c2.table == c.table);

  ArrowCertificate cert = check_arrow_chains(3, 3, 2, 2, 1);
  ArrowCertificate back = arrow_certificate_from_json(to_json(cert));
  CHECK(back.verdict == cert.verdict);
  CHECK(back.refuting_coloring == cert.refuting_coloring);
  CHECK(back.query.category == cert.query.category);
  CHECK(back.stats.nodes == cert.stats.nodes);
}

TEST_CASE("loading a synthetic catalog resolves references") {
  fs::path dir = fresh_dir("ok");
  put(dir, "sig.json", json{{"kind", "signature"}, {"name", "meet"},
                            {"symbols", {json{{"name", "g"}, {"arity", 2}}}}});
  put(dir, "two.json", json{{"kind", "algebra"}, {"name", "two"}, {"signature", "meet"},
                            {"size", 2}, {"tables", {{"g", {{0, 0}, {0, 1}}}}}});
  put(dir, "two_ord.json", json{{"kind", "ordered_algebra"}, {"algebra", "two"},
                                {"order", {0, 1}}});
  put(dir, "sl.json", json{{"kind", "variety"}, {"name", "sl"}, {"signature", "meet"},
                           {"generators", {"two"}}});
  Catalog cat = load_catalog(dir.string());
  CHECK(cat.signatures.count("meet") == 1);
  CHECK(cat.algebras.at("two").size() == 2);
  CHECK(cat.ordered.count("two_ord") == 1);
  CHECK(cat.varieties.at("sl").generators.size() == 1);

  // Dangling algebra reference surfaces the filename.
  fs::path bad = fresh_dir("bad");
  put(bad, "dangling.json", json{{"kind", "ordered_algebra"}, {"algebra", "nope"},
                                 {"order", {0, 1}}});
  try {
    load_catalog(bad.string());
    CHECK(false);
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("dangling") != std::string::npos);
  }
}

TEST_CASE("the shipped catalog loads with the expected names") {
  const char* env = std::getenv("RW_CATALOG");
  REQUIRE(env != nullptr);
  Catalog cat = load_catalog(env);
  CHECK(cat.varieties.count("semilattice") == 1);
  CHECK(cat.varieties.count("boolean_group") == 1);
  CHECK(cat.ordered.count("sl2_ord") == 1);
  CHECK(cat.ordered.count("sl3_ord") == 1);
  CHECK(cat.algebras.count("z2") == 1);
  CHECK(cat.ordered.at("sl3_ord").size() == 3);
  CHECK(variety_contains(cat.varieties.at("semilattice"),
                         cat.ordered.at("sl3_ord").algebra()));
}

TEST_CASE("digests are deterministic and content sensitive") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") != fnv1a_hex("b"));
  fs::path dir = fresh_dir("digest");
  put(dir, "x.json", json{{"k", 1}});
  std::string d1 = digest_directory(dir.string());
  CHECK(d1 == digest_directory(dir.string()));
  put(dir, "x.json", json{{"k", 2}});
  CHECK(d1 != digest_directory(dir.string()));
}

TEST_CASE("run reports carry commands and counters") {
  RunReport r;
  r.command = {"ramsey-workbench", "degree"};
  r.inputs_digest = "00";
  r.seed = 7;
  r.results = json{{"lower", 2}};
  r.timings = json{{"nodes", 10}};
  json j = to_json(r);
  CHECK(j["command"].size() == 2);
  CHECK(j["seed"] == 7);
  CHECK(j["results"]["lower"] == 2);
  CHECK(j["timings"]["nodes"] == 10);
}
