#include "oqecc/search.hpp"

#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "oqecc/code_io.hpp"
#include "oqecc/error.hpp"
#include "oqecc/parallel.hpp"

namespace oqecc {

namespace {

using nlohmann::json;

// Unbiased draw from [0, bound) by rejection; independent of the standard
// library's distribution implementations.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

json generators_json(const AdditiveCode& x) {
  json rows = json::array();
  for (const auto& g : x.generators()) rows.push_back(g.coords());
  return rows;
}

json distance_json(const Distance& d) { return d.d ? json(*d.d) : json(nullptr); }

json params_json(const SubsystemParams& p) {
  json j;
  j["n"] = p.n;
  j["k"] = p.k.str();
  j["r"] = p.r.str();
  j["d"] = distance_json(p.distance);
  j["q"] = p.q;
  j["x"] = p.x();
  j["y"] = p.y();
  j["dimA"] = p.dim_a();
  j["dimB"] = p.dim_b();
  return j;
}

// (n - r, k, d): the stabilizer-code parameters a subsystem code competes with.
json comparison_json(const SubsystemParams& p) {
  const Rational n_minus_r = Rational::make(static_cast<std::int64_t>(p.n) * p.r.den - p.r.num, p.r.den);
  json j;
  j["n_minus_r"] = n_minus_r.str();
  j["k"] = p.k.str();
  j["d"] = distance_json(p.distance);
  return j;
}

std::string canonical_key(const AdditiveCode& x) {
  std::string key;
  for (const auto& row : x.basis().rows()) {
    key.append(row.begin(), row.end());
    key.push_back('\xff');
  }
  return key;
}

bool better(const Distance& a, const Distance& b) {
  if (a.unbounded()) return !b.unbounded();
  return !b.unbounded() && *a.d > *b.d;
}

}  // namespace

std::string SearchRecord::to_json_line() const {
  json j;
  j["timestamp"] = timestamp;
  j["seed"] = seed;
  j["p"] = code.ctx()->p();
  j["m"] = code.ctx()->m();
  j["n"] = code.n();
  j["layout"] = to_string(code.layout());
  j["generators"] = generators_json(code);
  j["params"] = params_json(params);
  j["compare"] = comparison_json(params);
  j["method"] = to_string(method);
  return j.dump();
}

FpMatrix sample_generators(const GfContextPtr& ctx, std::size_t n, std::uint64_t seed, std::uint64_t index) {
  const std::size_t cols = 2 * n * ctx->m();
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  const std::size_t target = 1 + static_cast<std::size_t>(bounded(rng, cols - 1));
  FpMatrix rows(ctx->p(), cols);
  for (std::size_t r = 0; r < target; ++r) {
    FpRow row(cols);
    for (auto& d : row) d = static_cast<std::uint8_t>(bounded(rng, ctx->p()));
    rows.add_row(std::move(row));
  }
  return rows;
}

SearchResult run_search(const SearchOptions& opts) {
  if (opts.count == 0) throw Error(ErrorCode::DimensionMismatch, "count must be at least 1");
  if (opts.n == 0) throw Error(ErrorCode::DimensionMismatch, "n must be positive");
  const auto ctx = GfContext::make(opts.p, opts.m);
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < 2 * opts.n * opts.m; ++i) {
    space *= opts.p;
    if (space > kMaxEnumeration) throw Error(ErrorCode::CapExceeded, "p^{2nm} exceeds the search cap");
  }

  // Evaluate every sample independently, then deduplicate in index order.
  struct Evaluated {
    std::optional<AdditiveCode> code;
    std::optional<SubsystemParams> params;
  };
  std::vector<Evaluated> evaluated(opts.count);
  const std::size_t chunks = static_cast<std::size_t>(std::min<std::uint64_t>(opts.count, 256));
  parallel_chunks(opts.count, chunks, opts.threads, [&](std::size_t, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      AdditiveCode code = AdditiveCode::from_rows(ctx, opts.n, Layout::Symplectic,
                                                  sample_generators(ctx, opts.n, opts.seed, i));
      if (!code.is_zero()) evaluated[i].params = subsystem_params(code, DistanceMethod::BasisEnumeration, 1);
      evaluated[i].code = std::move(code);
    }
  });

  SearchResult result;
  result.samples = opts.count;
  std::set<std::string> seen;
  std::map<std::pair<Rational, Rational>, ParetoCell> cells;
  for (std::uint64_t i = 0; i < opts.count; ++i) {
    auto& ev = evaluated[i];
    if (!ev.params || !seen.insert(canonical_key(*ev.code)).second) {
      ++result.duplicates;
      continue;
    }
    SearchRecord rec{i, opts.seed, std::move(*ev.code), std::move(*ev.params), DistanceMethod::BasisEnumeration};
    auto [it, inserted] = cells.try_emplace({rec.params.k, rec.params.r});
    ParetoCell& cell = it->second;
    if (inserted) {
      cell = ParetoCell{rec.params.k, rec.params.r, rec.params.distance, i, 0};
    } else if (better(rec.params.distance, cell.best)) {
      cell.best = rec.params.distance;
      cell.timestamp = i;
    }
    ++cell.hits;
    result.records.push_back(std::move(rec));
  }
  for (auto& [key, cell] : cells) result.pareto.push_back(std::move(cell));
  return result;
}

SearchResult run_search_to_file(const SearchOptions& opts, const std::filesystem::path& out_path) {
  SearchResult result = run_search(opts);
  std::ofstream out(out_path, std::ios::app);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + out_path.string());
  for (const auto& rec : result.records) out << rec.to_json_line() << '\n';
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + out_path.string());
  return result;
}

std::string SearchResult::pareto_table() const {
  std::ostringstream out;
  out << std::left << std::setw(8) << "k" << std::setw(8) << "r" << std::setw(6) << "d" << std::setw(8) << "codes"
      << "first sample\n";
  for (const auto& cell : pareto) {
    out << std::setw(8) << cell.k.str() << std::setw(8) << cell.r.str() << std::setw(6) << cell.best.str()
        << std::setw(8) << cell.hits << cell.timestamp << '\n';
  }
  return out.str();
}

std::string replay_record(const std::string& json_line) {
  json rec;
  try {
    rec = json::parse(json_line);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  json code_doc;
  for (const char* key : {"p", "m", "n", "layout", "generators"}) code_doc[key] = rec.at(key);
  const AdditiveCode code = parse_code_json(code_doc.dump());
  const DistanceMethod method =
      rec.at("method") == "exhaustive" ? DistanceMethod::Exhaustive : DistanceMethod::BasisEnumeration;
  const SubsystemParams params = subsystem_params(code, method);
  if (generators_json(code) != rec.at("generators")) return "stored generators are not canonical";
  if (params_json(params) != rec.at("params")) {
    return "params differ: stored " + rec.at("params").dump() + ", recomputed " + params_json(params).dump();
  }
  if (comparison_json(params) != rec.at("compare")) return "comparison key differs";
  return {};
}

}  // namespace oqecc
