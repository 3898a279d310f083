#include "rw/catalog.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rw {

namespace {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

[[noreturn]] void fail(const std::string& file, const std::string& what) {
  throw std::runtime_error("catalog entry " + file + ": " + what);
}

}  // namespace

Catalog load_catalog(const std::string& dir) {
  if (!fs::is_directory(dir))
    throw std::runtime_error("catalog directory not found: " + dir);

  struct Entry {
    std::string file;
    std::string name;
    json body;
  };
  std::vector<Entry> entries;
  std::vector<fs::path> paths;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json")
      paths.push_back(e.path());
  std::sort(paths.begin(), paths.end());
  for (const fs::path& p : paths) {
    json body;
    try {
      body = json::parse(read_file(p));
    } catch (const std::exception& ex) {
      fail(p.filename().string(), ex.what());
    }
    entries.push_back({p.filename().string(), body.value("name", p.stem().string()),
                       std::move(body)});
  }

  Catalog cat;
  auto resolve_signature = [&](const Entry& e, const json& field) -> json {
    if (field.is_string()) {
      auto it = cat.signatures.find(field.get<std::string>());
      if (it == cat.signatures.end())
        fail(e.file, "unknown signature reference " + field.get<std::string>());
      return to_json(it->second);
    }
    return field;
  };

  // Signatures first, then algebras, then the entries referencing them.
  for (const Entry& e : entries) {
    if (e.body.value("kind", "") != "signature") continue;
    try {
      cat.signatures.emplace(e.name, signature_from_json(e.body));
    } catch (const std::exception& ex) {
      fail(e.file, ex.what());
    }
  }
  for (const Entry& e : entries) {
    if (e.body.value("kind", "") != "algebra") continue;
    try {
      json body = e.body;
      body["signature"] = resolve_signature(e, e.body.at("signature"));
      cat.algebras.emplace(e.name, algebra_from_json(body));
    } catch (const std::exception& ex) {
      fail(e.file, ex.what());
    }
  }
  for (const Entry& e : entries) {
    if (e.body.value("kind", "") != "ordered_algebra") continue;
    try {
      const json& base = e.body.at("algebra");
      FiniteAlgebra algebra;
      if (base.is_string()) {
        auto it = cat.algebras.find(base.get<std::string>());
        if (it == cat.algebras.end())
          fail(e.file, "unknown algebra reference " + base.get<std::string>());
        algebra = it->second;
      } else {
        json body = base;
        body["signature"] = resolve_signature(e, base.at("signature"));
        algebra = algebra_from_json(body);
      }
      cat.ordered.emplace(
          e.name, OrderedAlgebra(std::move(algebra),
                                 e.body.at("order").get<std::vector<int>>(), e.name));
    } catch (const std::exception& ex) {
      fail(e.file, ex.what());
    }
  }
  for (const Entry& e : entries) {
    if (e.body.value("kind", "") != "variety") continue;
    try {
      Variety v;
      v.name = e.name;
      v.signature = signature_from_json(resolve_signature(e, e.body.at("signature")));
      for (const json& g : e.body.at("generators")) {
        auto it = cat.algebras.find(g.get<std::string>());
        if (it == cat.algebras.end())
          fail(e.file, "unknown generator reference " + g.get<std::string>());
        if (!(it->second.signature() == v.signature))
          fail(e.file, "generator signature mismatch: " + g.get<std::string>());
        v.generators.push_back(it->second);
      }
      if (v.generators.empty()) fail(e.file, "variety needs at least one generator");
      cat.varieties.emplace(e.name, std::move(v));
    } catch (const std::exception& ex) {
      fail(e.file, ex.what());
    }
  }
  return cat;
}

unsigned long long fnv1a(const std::string& bytes, unsigned long long h) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string fnv1a_hex(const std::string& bytes) {
  unsigned long long h = fnv1a(bytes);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", h);
  return buf;
}

std::string digest_directory(const std::string& dir) {
  if (!fs::is_directory(dir)) return fnv1a_hex("");
  std::vector<fs::path> paths;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file()) paths.push_back(e.path());
  std::sort(paths.begin(), paths.end());
  unsigned long long h = 14695981039346656037ULL;
  for (const fs::path& p : paths) {
    h = fnv1a(p.filename().string(), h);
    h = fnv1a(read_file(p), h);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", h);
  return buf;
}

json to_json(const RunReport& r) {
  return json{{"command", r.command},
              {"inputs_digest", r.inputs_digest},
              {"seed", r.seed},
              {"results", r.results},
              {"timings", r.timings}};
}

}  // namespace rw
