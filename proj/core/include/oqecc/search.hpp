#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "oqecc/code_params.hpp"

namespace oqecc {

struct SearchOptions {
  unsigned p = 2;
  unsigned m = 1;
  std::size_t n = 1;
  std::uint64_t count = 1;
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

// One evaluated sample. `timestamp` is the sample index within the run, a
// logical clock that keeps logs byte-reproducible.
struct SearchRecord {
  std::uint64_t timestamp = 0;
  std::uint64_t seed = 0;
  AdditiveCode code;
  SubsystemParams params;
  DistanceMethod method = DistanceMethod::BasisEnumeration;

  std::string to_json_line() const;
};

struct ParetoCell {
  Rational k;
  Rational r;
  Distance best;
  std::uint64_t timestamp = 0;  // first record reaching `best`
  std::uint64_t hits = 0;
};

struct SearchResult {
  std::vector<SearchRecord> records;
  std::uint64_t samples = 0;
  std::uint64_t duplicates = 0;  // including zero-code draws
  std::vector<ParetoCell> pareto;  // sorted by (k, r)

  std::string pareto_table() const;
};

// Random F_p generator matrix for sample `index`: a rank target drawn
// uniformly from 1..2nm-1, then that many uniform rows. Depends only on
// (seed, index).
FpMatrix sample_generators(const GfContextPtr& ctx, std::size_t n, std::uint64_t seed, std::uint64_t index);

// Samples, evaluates and deduplicates codes. Throws CapExceeded when
// p^{2nm} exceeds the distance enumeration cap.
SearchResult run_search(const SearchOptions& opts);

// run_search, appending one JSON line per record to `out_path`.
SearchResult run_search_to_file(const SearchOptions& opts, const std::filesystem::path& out_path);

// Recomputes the parameters of a logged record from its generators and
// compares them with the stored values. Returns an empty string on success
// and a description of the first difference otherwise.
std::string replay_record(const std::string& json_line);

}  // namespace oqecc
