#pragma once

#include <map>
#include <string>
#include <vector>

#include "rw/json_io.hpp"

namespace rw {

// Named objects loaded from a directory of JSON files. Every file carries a
// "kind" field (signature, algebra, ordered_algebra, variety) and optionally
// a "name"; the filename stem is the fallback name. Algebra references
// inside ordered algebras and varieties are names of other entries.
struct Catalog {
  std::map<std::string, Signature> signatures;
  std::map<std::string, FiniteAlgebra> algebras;
  std::map<std::string, OrderedAlgebra> ordered;
  std::map<std::string, Variety> varieties;
};

// Throws std::runtime_error with the offending filename on any malformed
// entry or dangling reference.
Catalog load_catalog(const std::string& dir);

// FNV-1a 64-bit, for reproducible input digests.
unsigned long long fnv1a(const std::string& bytes, unsigned long long h = 14695981039346656037ULL);
std::string fnv1a_hex(const std::string& bytes);
// Digest of every regular file in the directory, walked in name order.
std::string digest_directory(const std::string& dir);

// Reproducible run summary: the timings object holds deterministic work
// counters (search nodes, enumerated objects), not wall-clock readings, so
// reports are byte-identical across runs with a fixed seed.
struct RunReport {
  std::vector<std::string> command;
  std::string inputs_digest;
  unsigned long long seed = 0;
  json results;
  json timings;
};

json to_json(const RunReport& r);

}  // namespace rw
