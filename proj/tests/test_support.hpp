#pragma once

// Brute-force oracles shared by the unit and acceptance suites. Nothing here
// goes through row reduction, parity checks or the monomial operator
// representation used by the library.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "oqecc/additive_code.hpp"
#include "oqecc/code_params.hpp"

namespace oqecc::testing {

using Coords = std::vector<Elem>;
using CoordSet = std::set<Coords>;

inline std::size_t coordinate_count(std::size_t n, Layout layout) {
  return layout == Layout::Symplectic ? 2 * n : n;
}

inline unsigned coordinate_bound(const GfContext& ctx, Layout layout) {
  return layout == Layout::Symplectic ? ctx.q() : ctx.q() * ctx.q();
}

// Every vector of the ambient space, in increasing index order where the
// first coordinate varies fastest.
inline std::vector<CodeVector> all_vectors(const GfContextPtr& ctx, std::size_t n, Layout layout) {
  const std::size_t len = coordinate_count(n, layout);
  const unsigned bound = coordinate_bound(*ctx, layout);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < len; ++i) total *= bound;
  std::vector<CodeVector> out;
  out.reserve(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Coords c(len);
    std::uint64_t v = idx;
    for (auto& x : c) {
      x = static_cast<Elem>(v % bound);
      v /= bound;
    }
    out.emplace_back(ctx, layout, std::move(c));
  }
  return out;
}

inline Coords add_coords(const GfContext& ctx, Layout layout, const Coords& u, const Coords& v) {
  const FiniteField& f = layout == Layout::Symplectic ? ctx.base() : ctx.ext();
  Coords out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = f.add(u[i], v[i]);
  return out;
}

// Closure of the generators under addition.
inline CoordSet span_closure(const GfContextPtr& ctx, std::size_t n, Layout layout,
                             const std::vector<CodeVector>& gens) {
  CoordSet set{Coords(coordinate_count(n, layout), 0)};
  std::vector<Coords> frontier(set.begin(), set.end());
  while (!frontier.empty()) {
    std::vector<Coords> next;
    for (const auto& v : frontier) {
      for (const auto& g : gens) {
        Coords w = add_coords(*ctx, layout, v, g.coords());
        if (set.insert(w).second) next.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
  }
  return set;
}

inline CoordSet code_set(const AdditiveCode& x) { return span_closure(x.ctx(), x.n(), x.layout(), x.generators()); }

// Every vector pairing to zero with all generators under the layout's form.
inline CoordSet dual_by_pairing(const GfContextPtr& ctx, std::size_t n, Layout layout,
                                const std::vector<CodeVector>& gens) {
  CoordSet out;
  for (const auto& v : all_vectors(ctx, n, layout)) {
    bool orth = true;
    for (const auto& g : gens) orth = orth && layout_form(v, g) == 0;
    if (orth) out.insert(v.coords());
  }
  return out;
}

inline CoordSet set_intersection(const CoordSet& a, const CoordSet& b) {
  CoordSet out;
  for (const auto& v : a) {
    if (b.count(v)) out.insert(v);
  }
  return out;
}

inline std::size_t weight_of(const Coords& c, Layout layout) {
  std::size_t w = 0;
  if (layout == Layout::Symplectic) {
    const std::size_t n = c.size() / 2;
    for (std::size_t i = 0; i < n; ++i) w += (c[i] != 0 || c[n + i] != 0);
  } else {
    for (auto x : c) w += x != 0;
  }
  return w;
}

struct BruteDistance {
  std::optional<std::size_t> d;
  std::size_t hull_size = 0;
};

// Minimum weight over hull^perp - X from explicit sets.
inline BruteDistance brute_distance(const AdditiveCode& x) {
  const auto gens = x.generators();
  const CoordSet xs = span_closure(x.ctx(), x.n(), x.layout(), gens);
  const CoordSet xd = dual_by_pairing(x.ctx(), x.n(), x.layout(), gens);
  const CoordSet hull_set = set_intersection(xs, xd);
  std::vector<CodeVector> hull_vectors;
  for (const auto& c : hull_set) hull_vectors.emplace_back(x.ctx(), x.layout(), c);
  const CoordSet y_perp = dual_by_pairing(x.ctx(), x.n(), x.layout(), hull_vectors);
  BruteDistance out;
  out.hull_size = hull_set.size();
  for (const auto& v : y_perp) {
    if (xs.count(v)) continue;
    const std::size_t w = weight_of(v, x.layout());
    if (!out.d || w < *out.d) out.d = w;
  }
  return out;
}

// Dense single-qudit X and Z for a prime field, built from their definition.
inline Eigen::MatrixXcd prime_shift(unsigned p, unsigned a) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(p, p);
  for (unsigned x = 0; x < p; ++x) m((x + a) % p, x) = 1;
  return m;
}

inline Eigen::MatrixXcd prime_clock(unsigned p, unsigned b) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(p, p);
  for (unsigned x = 0; x < p; ++x) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>((b * x) % p) / p;
    m(x, x) = std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return m;
}

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

// X(a)Z(b) for q = p prime, first factor most significant.
inline Eigen::MatrixXcd prime_pauli(unsigned p, const Coords& a, const Coords& b) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (std::size_t i = 0; i < a.size(); ++i) out = kron(out, prime_shift(p, a[i]) * prime_clock(p, b[i]));
  return out;
}

inline AdditiveCode symplectic_code(const GfContextPtr& ctx, std::size_t n, const std::vector<Coords>& gens) {
  std::vector<CodeVector> vs;
  for (const auto& g : gens) vs.emplace_back(ctx, Layout::Symplectic, g);
  return AdditiveCode::from_generators(ctx, n, Layout::Symplectic, vs);
}

// Random code with a rank target in 1..2nm-1 (may come out smaller).
inline AdditiveCode random_code(const GfContextPtr& ctx, std::size_t n, Layout layout, std::mt19937_64& rng) {
  const std::size_t cols = 2 * n * ctx->m();
  std::uniform_int_distribution<std::size_t> rank_dist(1, cols - 1);
  std::uniform_int_distribution<unsigned> digit(0, ctx->p() - 1);
  FpMatrix rows(ctx->p(), cols);
  const std::size_t target = rank_dist(rng);
  for (std::size_t r = 0; r < target; ++r) {
    FpRow row(cols);
    for (auto& d : row) d = static_cast<std::uint8_t>(digit(rng));
    rows.add_row(std::move(row));
  }
  return AdditiveCode::from_rows(ctx, n, layout, std::move(rows));
}

inline CodeVector random_vector(const GfContextPtr& ctx, std::size_t n, Layout layout, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> coord(0, coordinate_bound(*ctx, layout) - 1);
  Coords c(coordinate_count(n, layout));
  for (auto& x : c) x = coord(rng);
  return CodeVector(ctx, layout, std::move(c));
}

// All distinct subspaces of F_2^4 as symplectic codes with n = 2.
inline std::vector<AdditiveCode> all_codes_q2_n2() {
  const auto ctx = GfContext::make(2, 1);
  const auto vectors = all_vectors(ctx, 2, Layout::Symplectic);
  std::vector<AdditiveCode> out;
  std::set<std::vector<FpRow>> seen;
  // Every subspace of a 4-dimensional space is spanned by at most 4 vectors.
  const std::size_t v = vectors.size();
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = i; j < v; ++j) {
      for (std::size_t k = j; k < v; ++k) {
        for (std::size_t l = k; l < v; ++l) {
          const std::vector<CodeVector> gens{vectors[i], vectors[j], vectors[k], vectors[l]};
          AdditiveCode code = AdditiveCode::from_generators(ctx, 2, Layout::Symplectic, gens);
          if (seen.insert(code.basis().rows()).second) out.push_back(std::move(code));
        }
      }
    }
  }
  return out;
}

}  // namespace oqecc::testing
