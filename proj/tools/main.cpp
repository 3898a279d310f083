#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rw/catalog.hpp"
#include "rw/json_io.hpp"
#include "rw/ramsey.hpp"
#include "rw/verify.hpp"

namespace {

struct Ctx {
  std::string catalog_dir = "./catalog";
  bool json_mode = false;
  unsigned long long seed = 1;
  long long budget = 2000000;
  std::optional<rw::Catalog> cat;
  bool catalog_used = false;

  rw::Catalog& catalog() {
    if (!cat) {
      cat = rw::load_catalog(catalog_dir);
      catalog_used = true;
    }
    return *cat;
  }

  rw::ArrowOptions arrow_options() const {
    rw::ArrowOptions o;
    o.seed = seed;
    o.budget = budget;
    return o;
  }
};

const rw::Signature& find_signature(Ctx& ctx, const std::string& name) {
  auto& m = ctx.catalog().signatures;
  auto it = m.find(name);
  if (it == m.end()) throw std::runtime_error("no signature named " + name + " in the catalog");
  return it->second;
}

const rw::FiniteAlgebra& find_algebra(Ctx& ctx, const std::string& name) {
  auto& m = ctx.catalog().algebras;
  auto it = m.find(name);
  if (it == m.end()) throw std::runtime_error("no algebra named " + name + " in the catalog");
  return it->second;
}

const rw::OrderedAlgebra& find_ordered(Ctx& ctx, const std::string& name) {
  auto& m = ctx.catalog().ordered;
  auto it = m.find(name);
  if (it == m.end())
    throw std::runtime_error("no ordered algebra named " + name + " in the catalog");
  return it->second;
}

const rw::Variety& find_variety(Ctx& ctx, const std::string& name) {
  auto& m = ctx.catalog().varieties;
  auto it = m.find(name);
  if (it == m.end()) throw std::runtime_error("no variety named " + name + " in the catalog");
  return it->second;
}

int parse_size(const std::string& s, const std::string& what) {
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size() || v < 0) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error(what + " must be a nonnegative integer, got " + s);
  }
}

std::string show_table(const std::vector<int>& t) {
  std::string out = "[";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(t[i]);
  }
  return out + "]";
}

std::vector<int> parse_csv(const std::string& s) {
  std::vector<int> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(parse_size(cur, "coloring entry"));
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(parse_size(cur, "coloring entry"));
  return out;
}

// Restricted growth strings over at most k colors: each canonical coloring
// appears once per color-renaming class.
void each_canonical_coloring(int m, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> col(m, 0);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == m) {
      fn(col);
      return;
    }
    int top = std::min(k - 1, used);
    for (int c = 0; c <= top; ++c) {
      col[i] = c;
      rec(i + 1, std::max(used, c + 1));
    }
  };
  if (m == 0)
    fn(col);
  else
    rec(0, 0);
}

int verdict_exit(rw::Verdict v) {
  if (v == rw::Verdict::holds) return 0;
  if (v == rw::Verdict::fails) return 1;
  return 2;
}

void emit_report(Ctx& ctx, const std::vector<std::string>& argv_words, const rw::json& results,
                 const rw::json& timings) {
  if (!ctx.json_mode) return;
  rw::RunReport report;
  report.command = argv_words;
  report.inputs_digest = ctx.catalog_used ? rw::digest_directory(ctx.catalog_dir) : "";
  report.seed = ctx.seed;
  report.results = results;
  report.timings = timings;
  std::cout << rw::to_json(report).dump(2) << "\n";
}

void write_out(const std::string& path, const rw::json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for rigid surjections, ordered free algebras, and dual partition arrows"};
  app.require_subcommand(1);

  Ctx ctx;
  app.add_option("--catalog", ctx.catalog_dir, "directory of named objects")
      ->envname("RAMSEY_WORKBENCH_CATALOG");
  app.add_flag("--json", ctx.json_mode, "emit a machine-readable run report on stdout");
  app.add_option("--seed", ctx.seed, "seed for randomized refutation search");
  app.add_option("--budget", ctx.budget, "search-node budget");

  std::vector<std::string> argv_words(argv, argv + argc);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "list morphisms or terms");
  enumerate->fallthrough();
  std::string en_kind, en_sig, en_from, en_to;
  int en_n = 0, en_k = 0, en_vars = 1, en_len = 8;
  enumerate->add_option("--kind", en_kind, "rigid-surjections, terms, homs, epis, rigid-epis")
      ->required();
  enumerate->add_option("--n", en_n, "domain size (rigid-surjections)");
  enumerate->add_option("--k", en_k, "codomain size (rigid-surjections)");
  enumerate->add_option("--signature", en_sig, "signature name (terms)");
  enumerate->add_option("--vars", en_vars, "variable count (terms)");
  enumerate->add_option("--max-len", en_len, "shape length truncation (terms)");
  enumerate->add_option("--from", en_from, "domain object name (homs, epis, rigid-epis)");
  enumerate->add_option("--to", en_to, "codomain object name (homs, epis, rigid-epis)");

  // free
  auto* free_cmd = app.add_subcommand("free", "build a finitely generated free algebra");
  free_cmd->fallthrough();
  std::string fr_variety, fr_out;
  int fr_n = 1;
  bool fr_ordered = false;
  free_cmd->add_option("--variety", fr_variety, "variety name")->required();
  free_cmd->add_option("--n", fr_n, "generator count")->required();
  free_cmd->add_flag("--ordered", fr_ordered, "order the carrier by the neat enumeration");
  free_cmd->add_option("--out", fr_out, "write the algebra as JSON to this file");

  // check-arrow
  auto* arrow = app.add_subcommand("check-arrow", "decide a dual partition arrow");
  arrow->fallthrough();
  std::string ar_category = "chains", ar_c, ar_b, ar_a, ar_out;
  int ar_k = 2, ar_t = 1;
  arrow->add_option("--category", ar_category, "chains, ordered, or algebras");
  arrow->add_option("--c", ar_c, "ambient object (size or name)")->required();
  arrow->add_option("--b", ar_b, "middle object (size or name)")->required();
  arrow->add_option("--a", ar_a, "colored object (size or name)")->required();
  arrow->add_option("--k", ar_k, "number of colors");
  arrow->add_option("--t", ar_t, "color bound on the compositions");
  arrow->add_option("--out", ar_out, "write the certificate JSON to this file");

  // gr-search
  auto* gr = app.add_subcommand("gr-search", "least chain size carrying the arrow at t=1");
  gr->fallthrough();
  int gr_a = 2, gr_b = 2, gr_k = 2, gr_max = 6;
  gr->add_option("--a", gr_a, "colored chain size")->required();
  gr->add_option("--b", gr_b, "middle chain size")->required();
  gr->add_option("--k", gr_k, "number of colors")->required();
  gr->add_option("--max-n", gr_max, "largest ambient size tried");

  // degree
  auto* degree = app.add_subcommand("degree", "catalog-relative degree bounds");
  degree->fallthrough();
  std::string dg_category = "chains", dg_a;
  std::vector<std::string> dg_pool;
  int dg_kmax = 2, dg_tmax = 3;
  degree->add_option("--category", dg_category, "chains or ordered");
  degree->add_option("--a", dg_a, "target object (size or name)")->required();
  degree->add_option("--pool", dg_pool, "catalog objects measured against")
      ->required()
      ->delimiter(',');
  degree->add_option("--k-max", dg_kmax, "largest color count");
  degree->add_option("--t-max", dg_tmax, "largest bound tried");

  // transport
  auto* transport = app.add_subcommand("transport", "carry a chain arrow to ordered algebras");
  transport->fallthrough();
  std::string tr_variety, tr_a, tr_b;
  int tr_n = 2, tr_k = 2, tr_t = 1;
  transport->add_option("--variety", tr_variety, "variety name")->required();
  transport->add_option("--n", tr_n, "free generator count")->required();
  transport->add_option("--a", tr_a, "colored ordered algebra")->required();
  transport->add_option("--b", tr_b, "middle ordered algebra")->required();
  transport->add_option("--k", tr_k, "number of colors");
  transport->add_option("--t", tr_t, "color bound on the compositions");

  // segment-induction
  auto* segment = app.add_subcommand("segment-induction", "replay the downward induction");
  segment->fallthrough();
  std::string sg_variety, sg_a, sg_coloring;
  int sg_n = 2, sg_k = 2;
  segment->add_option("--variety", sg_variety, "variety name")->required();
  segment->add_option("--a", sg_a, "target ordered algebra")->required();
  segment->add_option("--n-free", sg_n, "free generator count")->required();
  segment->add_option("--k", sg_k, "number of colors");
  segment->add_option("--coloring", sg_coloring,
                      "comma-separated colors per rigid epimorphism; sweeps all canonical "
                      "colorings when omitted");

  // verify-suite
  auto* verify = app.add_subcommand("verify-suite", "replay the structural laws");
  verify->fallthrough();
  std::string vf_scope = "all";
  bool vf_mutant = false;
  verify->add_option("--scope", vf_scope, "chains, terms, algebras, ordered, ramsey, or all");
  verify->add_flag("--inject-mutant", vf_mutant,
                   "deliberately break one oracle to prove failures are caught");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*enumerate) {
      rw::json results;
      long long count = 0;
      if (en_kind == "rigid-surjections") {
        if (en_n < 1 || en_k < 1 || en_n > 10)
          throw std::runtime_error("need 1 <= k and 1 <= n <= 10");
        std::vector<rw::ChainMap> maps = rw::enumerate_rigid_surjections(en_n, en_k);
        count = static_cast<long long>(maps.size());
        rw::json items = rw::json::array();
        for (const rw::ChainMap& f : maps) {
          items.push_back(rw::to_json(f));
          if (!ctx.json_mode) std::cout << show_table(f.table) << "\n";
        }
        results = {{"kind", en_kind}, {"n", en_n}, {"k", en_k}, {"count", count},
                   {"items", items}};
      } else if (en_kind == "terms") {
        if (en_sig.empty()) throw std::runtime_error("terms need --signature");
        const rw::Signature& sig = find_signature(ctx, en_sig);
        std::vector<rw::Term> terms = rw::enumerate_neat(sig, en_vars, en_len);
        count = static_cast<long long>(terms.size());
        rw::json items = rw::json::array();
        for (const rw::Term& t : terms) {
          items.push_back(rw::render(t, sig));
          if (!ctx.json_mode) std::cout << rw::render(t, sig) << "\n";
        }
        results = {{"kind", en_kind}, {"signature", en_sig}, {"vars", en_vars},
                   {"max_len", en_len}, {"count", count}, {"items", items}};
      } else if (en_kind == "homs" || en_kind == "epis") {
        if (en_from.empty() || en_to.empty()) throw std::runtime_error("need --from and --to");
        const rw::FiniteAlgebra& from = find_algebra(ctx, en_from);
        const rw::FiniteAlgebra& to = find_algebra(ctx, en_to);
        std::vector<std::vector<int>> maps =
            en_kind == "homs" ? rw::hom_set(from, to) : rw::epi_set(from, to);
        count = static_cast<long long>(maps.size());
        rw::json items = rw::json::array();
        for (const std::vector<int>& m : maps) {
          items.push_back(m);
          if (!ctx.json_mode) std::cout << show_table(m) << "\n";
        }
        results = {{"kind", en_kind}, {"from", en_from}, {"to", en_to}, {"count", count},
                   {"items", items}};
      } else if (en_kind == "rigid-epis") {
        if (en_from.empty() || en_to.empty()) throw std::runtime_error("need --from and --to");
        const rw::OrderedAlgebra& from = find_ordered(ctx, en_from);
        const rw::OrderedAlgebra& to = find_ordered(ctx, en_to);
        std::vector<rw::RigidEpimorphism> epis = rw::rigid_epi_set(from, to);
        count = static_cast<long long>(epis.size());
        rw::json items = rw::json::array();
        for (const rw::RigidEpimorphism& e : epis) {
          items.push_back(rw::rigid_epi_to_json(e));
          if (!ctx.json_mode)
            std::cout << show_table(e.map()) << " positions "
                      << show_table(e.chain_map().table) << "\n";
        }
        results = {{"kind", en_kind}, {"from", en_from}, {"to", en_to}, {"count", count},
                   {"items", items}};
      } else {
        throw std::runtime_error("unknown kind " + en_kind);
      }
      if (!ctx.json_mode) std::cout << "count: " << count << "\n";
      emit_report(ctx, argv_words, results, {{"items", count}});
      return 0;
    }

    if (*free_cmd) {
      const rw::Variety& v = find_variety(ctx, fr_variety);
      rw::json results;
      if (fr_ordered) {
        rw::OrderedFreeAlgebra of = rw::ordered_free(v, fr_n);
        rw::json order = rw::json::array();
        for (int p = 0; p < of.size(); ++p) {
          int e = of.ordered().at_position(p);
          order.push_back({{"position", p}, {"element", e},
                           {"min_term", rw::render(of.min_term(e), v.signature)}});
          if (!ctx.json_mode)
            std::cout << p << ": " << rw::render(of.min_term(e), v.signature) << "\n";
        }
        results = {{"variety", fr_variety}, {"n", fr_n}, {"size", of.size()},
                   {"cover_length", of.cover_length()}, {"order", order}};
        if (!ctx.json_mode)
          std::cout << "size: " << of.size() << " cover length: " << of.cover_length() << "\n";
        if (!fr_out.empty()) write_out(fr_out, rw::to_json(of.ordered()));
      } else {
        rw::FreeAlgebra f = rw::free_algebra(v, fr_n);
        results = {{"variety", fr_variety}, {"n", fr_n}, {"size", f.algebra().size()},
                   {"generators", f.generator_elements()}};
        if (!ctx.json_mode)
          std::cout << "size: " << f.algebra().size() << " generators "
                    << show_table(f.generator_elements()) << "\n";
        if (!fr_out.empty()) write_out(fr_out, rw::to_json(f.algebra()));
      }
      emit_report(ctx, argv_words, results,
                  {{"size", results.at("size").get<int>()}});
      return 0;
    }

    if (*arrow) {
      rw::ArrowCertificate cert;
      if (ar_category == "chains") {
        cert = rw::check_arrow_chains(parse_size(ar_c, "--c"), parse_size(ar_b, "--b"),
                                      parse_size(ar_a, "--a"), ar_k, ar_t,
                                      ctx.arrow_options());
      } else if (ar_category == "ordered") {
        cert = rw::check_arrow_ordered(find_ordered(ctx, ar_c), find_ordered(ctx, ar_b),
                                       find_ordered(ctx, ar_a), ar_k, ar_t,
                                       ctx.arrow_options());
      } else if (ar_category == "algebras") {
        cert = rw::check_arrow_algebras(find_algebra(ctx, ar_c), find_algebra(ctx, ar_b),
                                        find_algebra(ctx, ar_a), ar_k, ar_t,
                                        ctx.arrow_options());
      } else {
        throw std::runtime_error("unknown category " + ar_category);
      }
      if (!ctx.json_mode) {
        std::cout << "verdict: " << rw::verdict_name(cert.verdict) << "\n";
        if (cert.universal_witness >= 0)
          std::cout << "universal witness " << show_table(cert.witness_table) << "\n";
        if (!cert.refuting_coloring.empty())
          std::cout << "refuting coloring " << show_table(cert.refuting_coloring) << "\n";
        if (!cert.note.empty()) std::cout << cert.note << "\n";
        std::cout << "hom sizes: ca=" << cert.hom_ca << " cb=" << cert.hom_cb
                  << " ba=" << cert.hom_ba << "\n";
      }
      if (!ar_out.empty()) write_out(ar_out, rw::to_json(cert));
      emit_report(ctx, argv_words, rw::to_json(cert),
                  {{"nodes", cert.stats.nodes}, {"trials", cert.stats.trials}});
      return verdict_exit(cert.verdict);
    }

    if (*gr) {
      auto found = rw::gr_witness_search(gr_a, gr_b, gr_k, gr_max, ctx.arrow_options());
      rw::json results;
      int code = 0;
      if (found) {
        results = {{"found", true}, {"n", found->first},
                   {"certificate", rw::to_json(found->second)}};
        if (!ctx.json_mode) std::cout << "n = " << found->first << "\n";
      } else {
        results = {{"found", false}, {"max_n", gr_max}};
        if (!ctx.json_mode)
          std::cout << "no ambient size up to " << gr_max << " was established\n";
        code = 2;
      }
      emit_report(ctx, argv_words, results,
                  {{"nodes", found ? found->second.stats.nodes : 0}});
      return code;
    }

    if (*degree) {
      rw::DegreeBounds bounds;
      if (dg_category == "chains") {
        std::vector<int> sizes;
        for (const std::string& s : dg_pool) sizes.push_back(parse_size(s, "--pool"));
        bounds = rw::small_degree_bounds_chains(parse_size(dg_a, "--a"), sizes, dg_kmax,
                                                dg_tmax, ctx.arrow_options());
      } else if (dg_category == "ordered") {
        std::vector<rw::OrderedAlgebra> pool;
        for (const std::string& s : dg_pool) pool.push_back(find_ordered(ctx, s));
        bounds = rw::small_degree_bounds_ordered(find_ordered(ctx, dg_a), pool, dg_kmax,
                                                 dg_tmax, ctx.arrow_options());
      } else {
        throw std::runtime_error("unknown category " + dg_category);
      }
      rw::json results = {{"lower", bounds.lower},
                          {"upper", bounds.upper ? rw::json(*bounds.upper) : rw::json()},
                          {"catalog_relative", bounds.catalog_relative}};
      if (!ctx.json_mode) {
        std::cout << "lower: " << bounds.lower << "\n";
        if (bounds.upper)
          std::cout << "upper: " << *bounds.upper << "\n";
        else
          std::cout << "upper: not reached within t-max " << dg_tmax << "\n";
      }
      emit_report(ctx, argv_words, results, {{"pool", static_cast<int>(dg_pool.size())}});
      return 0;
    }

    if (*transport) {
      rw::TransportCertificate tc =
          rw::transport_arrow(find_variety(ctx, tr_variety), tr_n, find_ordered(ctx, tr_a),
                              find_ordered(ctx, tr_b), tr_k, tr_t, ctx.arrow_options());
      if (!ctx.json_mode) {
        for (const std::string& line : tc.trace) std::cout << line << "\n";
        std::cout << "verdict: " << rw::verdict_name(tc.cert.verdict) << "\n";
        std::cout << "transported all colorings: " << (tc.transported_all ? "yes" : "no")
                  << "\n";
        if (!tc.cert.note.empty()) std::cout << tc.cert.note << "\n";
      }
      emit_report(ctx, argv_words, rw::to_json(tc), {{"nodes", tc.cert.stats.nodes}});
      return verdict_exit(tc.cert.verdict);
    }

    if (*segment) {
      const rw::Variety& v = find_variety(ctx, sg_variety);
      const rw::OrderedAlgebra& a = find_ordered(ctx, sg_a);
      auto print_cert = [&](const rw::SegmentCertificate& sc) {
        if (ctx.json_mode) return;
        for (const rw::SegmentStep& st : sc.steps)
          std::cout << "level " << st.level << ": size " << st.chosen_size << ", witness "
                    << show_table(st.w_table) << ", color " << st.constant_color << "\n";
        std::cout << "verdict: " << rw::verdict_name(sc.verdict) << "\n";
        std::cout << "colors used: " << sc.colors_used << " bound: " << sc.bound << "\n";
        if (!sc.note.empty()) std::cout << sc.note << "\n";
      };
      if (!sg_coloring.empty()) {
        rw::SegmentCertificate sc =
            rw::segment_induction(v, a, sg_k, parse_csv(sg_coloring), sg_n,
                                  ctx.arrow_options());
        print_cert(sc);
        emit_report(ctx, argv_words, rw::to_json(sc), {{"nodes", sc.nodes}});
        return verdict_exit(sc.verdict);
      }
      // Sweep every canonical coloring of the rigid epimorphisms.
      int m = static_cast<int>(
          rw::rigid_epi_set(rw::ordered_free(v, sg_n).ordered(), a).size());
      long long swept = 0;
      int worst_colors = 0;
      long long nodes = 0;
      rw::Verdict verdict = rw::Verdict::holds;
      std::string failing;
      each_canonical_coloring(m, sg_k, [&](const std::vector<int>& chi) {
        if (verdict != rw::Verdict::holds) return;
        if (swept >= 100000)
          throw std::runtime_error("coloring sweep too large, pass --coloring");
        ++swept;
        rw::SegmentCertificate sc = rw::segment_induction(v, a, sg_k, chi, sg_n,
                                                          ctx.arrow_options());
        nodes += sc.nodes;
        worst_colors = std::max(worst_colors, sc.colors_used);
        if (sc.verdict != rw::Verdict::holds) {
          verdict = sc.verdict;
          failing = sc.note.empty() ? ("coloring " + show_table(chi)) : sc.note;
        }
      });
      rw::json results = {{"colorings", swept}, {"max_colors_used", worst_colors},
                          {"bound", a.size()}, {"verdict", rw::verdict_name(verdict)}};
      if (!failing.empty()) results["failing"] = failing;
      if (!ctx.json_mode) {
        std::cout << "colorings swept: " << swept << "\n";
        std::cout << "max colors used: " << worst_colors << " bound: " << a.size() << "\n";
        std::cout << "verdict: " << rw::verdict_name(verdict) << "\n";
        if (!failing.empty()) std::cout << failing << "\n";
      }
      emit_report(ctx, argv_words, results, {{"nodes", nodes}});
      return verdict_exit(verdict);
    }

    if (*verify) {
      rw::VerifyOptions vo;
      vo.seed = ctx.seed;
      vo.inject_mutant = vf_mutant;
      std::vector<rw::CheckResult> checks = rw::run_verify_suite(vf_scope, vo);
      int failed = 0;
      rw::json items = rw::json::array();
      for (const rw::CheckResult& r : checks) {
        if (!r.pass) ++failed;
        items.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        if (!ctx.json_mode)
          std::cout << (r.pass ? "ok   " : "FAIL ") << r.name << " (" << r.detail << ")\n";
      }
      if (!ctx.json_mode)
        std::cout << "checks: " << checks.size() << " failed: " << failed << "\n";
      emit_report(ctx, argv_words,
                  {{"scope", vf_scope}, {"failed", failed}, {"checks", items}},
                  {{"checks", static_cast<long long>(checks.size())}});
      return failed ? 1 : 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
