#include "rw/json_io.hpp"

#include <functional>
#include <stdexcept>

namespace rw {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

json nested_table(const std::vector<int>& flat, int arity, int size) {
  long long total = 1;
  for (int i = 0; i < arity; ++i) total *= size;
  std::function<json(int, long long, long long)> rec =
      [&](int depth, long long offset, long long stride) -> json {
    if (depth == arity) return flat.at(offset);
    json arr = json::array();
    long long child = stride / size;
    for (int i = 0; i < size; ++i) arr.push_back(rec(depth + 1, offset + i * child, child));
    return arr;
  };
  return rec(0, 0, total);
}

void flatten_table(const json& j, int depth, int arity, int size, std::vector<int>& out) {
  if (depth == arity) {
    require(j.is_number_integer(), "table leaf must be an integer");
    out.push_back(j.get<int>());
    return;
  }
  require(j.is_array() && static_cast<int>(j.size()) == size,
          "table level must be an array of carrier size");
  for (const json& c : j) flatten_table(c, depth + 1, arity, size, out);
}

}  // namespace

json to_json(const ChainMap& f) {
  return json{{"n", f.domain}, {"k", f.codomain}, {"table", f.table}};
}

ChainMap chain_map_from_json(const json& j) {
  return ChainMap(j.at("n").get<int>(), j.at("k").get<int>(),
                  j.at("table").get<std::vector<int>>());
}

json to_json(const Signature& sig) {
  json symbols = json::array();
  for (const Symbol& s : sig.symbols())
    symbols.push_back(json{{"name", s.name}, {"arity", s.arity}});
  return json{{"symbols", symbols}};
}

Signature signature_from_json(const json& j) {
  std::vector<Symbol> symbols;
  for (const json& s : j.at("symbols"))
    symbols.push_back({s.at("name").get<std::string>(), s.at("arity").get<int>()});
  return Signature(std::move(symbols));
}

json to_json(const Term& t) {
  if (t.is_variable()) return json{{"var", t.variable_index()}};
  json args = json::array();
  for (const Term& c : t.children()) args.push_back(to_json(c));
  return json{{"op", t.symbol()}, {"args", args}};
}

Term term_from_json(const json& j, const Signature& sig) {
  if (j.contains("var")) return Term::variable(j.at("var").get<int>());
  int sym;
  const json& op = j.at("op");
  if (op.is_string()) {
    auto idx = sig.index_of(op.get<std::string>());
    require(idx.has_value(), "unknown operation symbol: " + op.get<std::string>());
    sym = *idx;
  } else {
    sym = op.get<int>();
    require(sym >= 0 && sym < sig.size(), "operation symbol index out of range");
  }
  std::vector<Term> children;
  if (j.contains("args"))
    for (const json& c : j.at("args")) children.push_back(term_from_json(c, sig));
  require(static_cast<int>(children.size()) == sig.arity(sym),
          "argument count does not match the symbol arity");
  return Term::apply(sym, std::move(children));
}

json to_json(const FiniteAlgebra& a) {
  json tables = json::object();
  for (int s = 0; s < a.signature().size(); ++s)
    tables[a.signature().at(s).name] = nested_table(a.table(s), a.signature().arity(s), a.size());
  return json{{"signature", to_json(a.signature())}, {"size", a.size()}, {"tables", tables}};
}

FiniteAlgebra algebra_from_json(const json& j) {
  Signature sig = signature_from_json(j.at("signature"));
  int size = j.at("size").get<int>();
  const json& tables = j.at("tables");
  std::vector<std::vector<int>> flat(sig.size());
  for (int s = 0; s < sig.size(); ++s) {
    const std::string& name = sig.at(s).name;
    require(tables.contains(name), "missing table for symbol: " + name);
    flatten_table(tables.at(name), 0, sig.arity(s), size, flat[s]);
  }
  return FiniteAlgebra(std::move(sig), size, std::move(flat));
}

json to_json(const OrderedAlgebra& a) {
  json j = to_json(a.algebra());
  j["order"] = a.order();
  if (!a.name().empty()) j["name"] = a.name();
  return j;
}

OrderedAlgebra ordered_from_json(const json& j) {
  return OrderedAlgebra(algebra_from_json(j), j.at("order").get<std::vector<int>>(),
                        j.value("name", ""));
}

json to_json(const Coloring& c) {
  return json{{"k", c.k}, {"table", c.table}};
}

Coloring coloring_from_json(const json& j) {
  return Coloring{j.at("k").get<int>(), j.at("table").get<std::vector<int>>()};
}

json rigid_epi_to_json(const RigidEpimorphism& e) {
  EpiChecks c = e.checks();
  return json{{"map", e.map()},
              {"domain_size", e.domain().size()},
              {"codomain_size", e.codomain().size()},
              {"checks",
               json{{"homomorphism", c.homomorphism},
                    {"surjective", c.surjective},
                    {"order_rigid", c.order_rigid}}}};
}

json to_json(const ArrowCertificate& cert) {
  json j;
  j["query"] = json{{"category", cert.query.category}, {"c", cert.query.c},
                    {"b", cert.query.b},               {"a", cert.query.a},
                    {"k", cert.query.k},               {"t", cert.query.t}};
  j["verdict"] = verdict_name(cert.verdict);
  if (cert.universal_witness >= 0) {
    j["universal_witness"] = cert.universal_witness;
    j["witness_table"] = cert.witness_table;
  } else {
    j["universal_witness"] = nullptr;
    j["witness_table"] = nullptr;
  }
  if (cert.verdict == Verdict::fails)
    j["refuting_coloring"] = cert.refuting_coloring;
  else
    j["refuting_coloring"] = nullptr;
  j["hom_sizes"] = json{{"ca", cert.hom_ca}, {"cb", cert.hom_cb}, {"ba", cert.hom_ba}};
  j["stats"] = json{{"exhaustive", cert.stats.exhaustive},
                    {"nodes", cert.stats.nodes},
                    {"trials", cert.stats.trials},
                    {"budget", cert.stats.budget},
                    {"seed", cert.stats.seed}};
  j["note"] = cert.note;
  return j;
}

ArrowCertificate arrow_certificate_from_json(const json& j) {
  ArrowCertificate cert;
  const json& q = j.at("query");
  cert.query = {q.at("category").get<std::string>(), q.at("c").get<std::string>(),
                q.at("b").get<std::string>(),        q.at("a").get<std::string>(),
                q.at("k").get<int>(),                q.at("t").get<int>()};
  std::string v = j.at("verdict").get<std::string>();
  cert.verdict = v == "HOLDS"   ? Verdict::holds
                 : v == "FAILS" ? Verdict::fails
                                : Verdict::unknown;
  if (!j.at("universal_witness").is_null()) {
    cert.universal_witness = j.at("universal_witness").get<int>();
    cert.witness_table = j.at("witness_table").get<std::vector<int>>();
  }
  if (!j.at("refuting_coloring").is_null())
    cert.refuting_coloring = j.at("refuting_coloring").get<std::vector<int>>();
  const json& h = j.at("hom_sizes");
  cert.hom_ca = h.at("ca").get<int>();
  cert.hom_cb = h.at("cb").get<int>();
  cert.hom_ba = h.at("ba").get<int>();
  const json& s = j.at("stats");
  cert.stats.exhaustive = s.at("exhaustive").get<bool>();
  cert.stats.nodes = s.at("nodes").get<long long>();
  cert.stats.trials = s.at("trials").get<long long>();
  cert.stats.budget = s.at("budget").get<long long>();
  cert.stats.seed = s.at("seed").get<unsigned long long>();
  cert.note = j.at("note").get<std::string>();
  return cert;
}

json to_json(const SegmentCertificate& cert) {
  json steps = json::array();
  for (const SegmentStep& s : cert.steps)
    steps.push_back(json{{"level", s.level},
                         {"chosen_size", s.chosen_size},
                         {"w_table", s.w_table},
                         {"constant_color", s.constant_color}});
  return json{{"verdict", verdict_name(cert.verdict)},
              {"n_free", cert.n_free},
              {"c1", cert.c1},
              {"u_table", cert.u_table},
              {"colors_used", cert.colors_used},
              {"bound", cert.bound},
              {"vacuous", cert.vacuous},
              {"steps", steps},
              {"note", cert.note},
              {"nodes", cert.nodes}};
}

json to_json(const TransportCertificate& cert) {
  return json{{"certificate", to_json(cert.cert)},
              {"trace", cert.trace},
              {"transported_all", cert.transported_all}};
}

}  // namespace rw
