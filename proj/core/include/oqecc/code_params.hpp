#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "oqecc/additive_code.hpp"

namespace oqecc {

// Number of positions i with (a_i, b_i) != (0, 0).
std::size_t swt(const CodeVector& c);

// Number of nonzero coordinates of a hermitian-layout vector.
std::size_t hamming_wt(const CodeVector& v);

// Weight appropriate to the vector's layout.
std::size_t layout_weight(const CodeVector& v);

// Nonnegative rational in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  std::string str() const;
  bool operator==(const Rational&) const = default;
  auto operator<=>(const Rational& o) const { return num * o.den <=> o.num * den; }
};

enum class DistanceMethod { Exhaustive, BasisEnumeration };

const char* to_string(DistanceMethod method);

// Minimum weight over dual(hull(X)) - X. An empty difference means the
// distance is unbounded; `witness` is then empty.
struct Distance {
  std::optional<std::size_t> d;
  std::optional<CodeVector> witness;

  bool unbounded() const { return !d.has_value(); }
  std::string str() const;  // "inf" when unbounded
};

// Enumeration caps: p^{2nm} for Exhaustive, |Y^perp| for BasisEnumeration.
inline constexpr std::uint64_t kMaxEnumeration = std::uint64_t{1} << 24;

// Throws ZeroCode for X = {0} and CapExceeded past kMaxEnumeration.
// `threads` = 0 picks the hardware concurrency; the result is independent of it.
Distance min_distance(const AdditiveCode& x, DistanceMethod method, unsigned threads = 0);

struct SubsystemParams {
  std::size_t n = 0;
  unsigned q = 0;
  unsigned p = 0;
  std::size_t log_p_x = 0;  // x = p^log_p_x
  std::size_t log_p_y = 0;
  std::size_t log_p_dim_a = 0;
  std::size_t log_p_dim_b = 0;
  Rational k;  // log_q dim A
  Rational r;  // log_q dim B
  Distance distance;

  // Exact integers; throw CapExceeded when they do not fit in 64 bits.
  std::uint64_t x() const;
  std::uint64_t y() const;
  std::uint64_t dim_a() const;
  std::uint64_t dim_b() const;
  std::uint64_t dim_c() const;

  // "[[n,k,r,d]]_q", with k and r as reduced rationals and d as "inf" when
  // unbounded.
  std::string bracket() const;
};

// Parameters of the subsystem code attached to X (either layout). Throws
// ZeroCode for X = {0}; a non-integral dimension is reported as RankMismatch
// since it can only arise from a broken hull computation.
SubsystemParams subsystem_params(const AdditiveCode& x, DistanceMethod method = DistanceMethod::BasisEnumeration,
                                 unsigned threads = 0);

}  // namespace oqecc
