#include "oqecc/galois.hpp"

#include <cassert>
#include <string>

#include "oqecc/error.hpp"

namespace oqecc {

namespace {

using Poly = std::vector<unsigned>;

// Remainder of a modulo b over F_p; b must have a nonzero leading coefficient.
Poly poly_mod(Poly a, const Poly& b, unsigned p) {
  const std::size_t db = b.size() - 1;
  unsigned lead_inv = 1;
  while ((lead_inv * b[db]) % p != 1) ++lead_inv;
  while (a.size() > db) {
    const unsigned c = (a.back() * lead_inv) % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = (a[shift + i] + p - (c * b[i]) % p) % p;
    }
    a.pop_back();
    while (!a.empty() && a.back() == 0 && a.size() > db) a.pop_back();
  }
  return a;
}

bool is_zero(const Poly& a) {
  for (unsigned c : a) {
    if (c != 0) return false;
  }
  return true;
}

}  // namespace

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(unsigned p, const Poly& poly) {
  const std::size_t deg = poly.size() - 1;
  if (deg == 0) return false;
  if (deg == 1) return true;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    // Every monic divisor candidate of degree d.
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly divisor(d + 1);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        divisor[i] = static_cast<unsigned>(c % p);
        c /= p;
      }
      divisor[d] = 1;
      if (is_zero(poly_mod(poly, divisor, p))) return false;
    }
  }
  return true;
}

Poly least_irreducible(unsigned p, unsigned degree) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < degree; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly poly(degree + 1);
    std::uint64_t c = code;
    for (unsigned i = 0; i < degree; ++i) {
      poly[i] = static_cast<unsigned>(c % p);
      c /= p;
    }
    poly[degree] = 1;
    if (is_irreducible(p, poly)) return poly;
  }
  assert(false && "irreducible polynomials exist in every degree");
  return {};
}

FiniteField::FiniteField(unsigned p, unsigned degree) : p_(p), degree_(degree), size_(1) {
  for (unsigned i = 0; i < degree; ++i) size_ *= p;
  modulus_ = least_irreducible(p, degree);

  digits_.resize(static_cast<std::size_t>(size_) * degree_);
  for (Elem x = 0; x < size_; ++x) {
    Elem v = x;
    for (unsigned i = 0; i < degree_; ++i) {
      digits_[x * degree_ + i] = static_cast<std::uint8_t>(v % p_);
      v /= p_;
    }
  }

  const unsigned order = size_ - 1;
  for (Elem g = 1; g < size_; ++g) {
    std::vector<std::uint16_t> powers;
    powers.reserve(order);
    Elem acc = 1;
    do {
      powers.push_back(static_cast<std::uint16_t>(acc));
      acc = slow_mul(acc, g);
    } while (acc != 1);
    if (powers.size() == order) {
      primitive_ = g;
      exp_.resize(2 * static_cast<std::size_t>(order));
      log_.assign(size_, 0);
      for (unsigned i = 0; i < order; ++i) {
        exp_[i] = powers[i];
        exp_[i + order] = powers[i];
        log_[powers[i]] = static_cast<std::uint16_t>(i);
      }
      return;
    }
  }
  assert(false && "multiplicative group of a finite field is cyclic");
}

Elem FiniteField::from_digits(const unsigned* d) const {
  Elem x = 0;
  for (unsigned i = degree_; i-- > 0;) x = x * p_ + d[i];
  return x;
}

Elem FiniteField::slow_mul(Elem x, Elem y) const {
  Poly prod(2 * degree_, 0);
  Elem vx = x;
  for (unsigned i = 0; i < degree_; ++i, vx /= p_) {
    const unsigned xi = vx % p_;
    if (xi == 0) continue;
    Elem vy = y;
    for (unsigned j = 0; j < degree_; ++j, vy /= p_) {
      prod[i + j] = (prod[i + j] + xi * (vy % p_)) % p_;
    }
  }
  Poly r = poly_mod(prod, modulus_, p_);
  r.resize(degree_, 0);
  return from_digits(r.data());
}

Elem FiniteField::add(Elem x, Elem y) const {
  if (p_ == 2) return x ^ y;
  Elem r = 0;
  for (unsigned i = degree_; i-- > 0;) {
    r = r * p_ + (digit(x, i) + digit(y, i)) % p_;
  }
  return r;
}

Elem FiniteField::neg(Elem x) const {
  if (p_ == 2) return x;
  Elem r = 0;
  for (unsigned i = degree_; i-- > 0;) {
    r = r * p_ + (p_ - digit(x, i)) % p_;
  }
  return r;
}

Elem FiniteField::sub(Elem x, Elem y) const { return add(x, neg(y)); }

Elem FiniteField::mul(Elem x, Elem y) const {
  if (x == 0 || y == 0) return 0;
  return exp_[log_[x] + log_[y]];
}

Elem FiniteField::inv(Elem x) const {
  assert(x != 0);
  const unsigned order = size_ - 1;
  return exp_[(order - log_[x]) % order];
}

Elem FiniteField::pow(Elem x, std::uint64_t e) const {
  if (e == 0) return 1;
  if (x == 0) return 0;
  const std::uint64_t order = size_ - 1;
  return exp_[(static_cast<std::uint64_t>(log_[x]) * (e % order)) % order];
}

Elem FiniteField::scale(Elem x, unsigned c) const {
  c %= p_;
  if (c == 0) return 0;
  Elem r = 0;
  for (unsigned i = degree_; i-- > 0;) r = r * p_ + (digit(x, i) * c) % p_;
  return r;
}

GfContext::GfContext(unsigned p, unsigned m) : p_(p), m_(m), base_(p, m), ext_(p, 2 * m) {
  const unsigned q = base_.size();

  // Least root of the base modulus inside GF(q^2); its powers realize the
  // polynomial basis of GF(q) there.
  const auto& mod = base_.modulus();
  bool found = false;
  for (Elem r = 0; r < ext_.size() && !found; ++r) {
    Elem acc = 0;
    for (std::size_t i = mod.size(); i-- > 0;) acc = ext_.add(ext_.mul(acc, r), mod[i]);
    if (acc == 0) {
      root_ = r;
      found = true;
    }
  }
  assert(found);

  embed_.resize(q);
  pull_back_.assign(ext_.size(), -1);
  for (Elem x = 0; x < q; ++x) {
    Elem acc = 0;
    Elem power = 1;
    for (unsigned i = 0; i < m_; ++i) {
      acc = ext_.add(acc, ext_.scale(power, base_.digit(x, i)));
      power = ext_.mul(power, root_);
    }
    embed_[x] = acc;
    pull_back_[acc] = static_cast<std::int32_t>(x);
  }

  trace_.resize(q);
  for (Elem x = 0; x < q; ++x) {
    Elem acc = 0;
    Elem frob = x;
    for (unsigned i = 0; i < m_; ++i) {
      acc = base_.add(acc, frob);
      frob = base_.pow(frob, p_);
    }
    assert(acc < p_);
    trace_[x] = acc;
  }

  beta_ = find_normal_beta(*this);
  beta_q_ = ext_.pow(beta_, q);
}

std::shared_ptr<const GfContext> GfContext::make(unsigned p, unsigned m) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (m == 0) throw Error(ErrorCode::FieldTooLarge, "extension degree must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxFieldSize) {
      throw Error(ErrorCode::FieldTooLarge, "p^m exceeds " + std::to_string(kMaxFieldSize));
    }
  }
  return std::shared_ptr<const GfContext>(new GfContext(p, m));
}

Elem GfContext::mul(Elem x, Elem y) const {
  if (x >= q() || y >= q()) throw Error(ErrorCode::OutOfRange, "element encoding >= q");
  return base_.mul(x, y);
}

Elem GfContext::add(Elem x, Elem y) const {
  if (x >= q() || y >= q()) throw Error(ErrorCode::OutOfRange, "element encoding >= q");
  return base_.add(x, y);
}

Elem GfContext::trace(Elem x) const {
  if (x >= q()) throw Error(ErrorCode::OutOfRange, "element encoding >= q");
  return trace_[x];
}

Elem GfContext::embed(Elem x) const {
  if (x >= q()) throw Error(ErrorCode::OutOfRange, "element encoding >= q");
  return embed_[x];
}

std::optional<Elem> GfContext::pull_back(Elem x) const {
  if (x >= ext_.size()) throw Error(ErrorCode::OutOfRange, "element encoding >= q^2");
  if (pull_back_[x] < 0) return std::nullopt;
  return static_cast<Elem>(pull_back_[x]);
}

Elem GfContext::ext_trace_to_base(Elem x) const {
  const auto base = pull_back(x);
  if (!base) {
    throw Error(ErrorCode::NotInSubfield,
                "element " + std::to_string(x) + " of GF(q^2) is outside GF(q)");
  }
  return trace_[*base];
}

Elem find_normal_beta(const GfContext& ctx) {
  const FiniteField& ext = ctx.ext();
  const unsigned q = ctx.q();
  for (Elem beta = 1; beta < ext.size(); ++beta) {
    const Elem beta_q = ext.pow(beta, q);
    bool independent = true;
    for (Elem c1 = 0; c1 < q && independent; ++c1) {
      for (Elem c2 = 0; c2 < q; ++c2) {
        if (c1 == 0 && c2 == 0) continue;
        const Elem combo = ext.add(ext.mul(ctx.embed_[c1], beta), ext.mul(ctx.embed_[c2], beta_q));
        if (combo == 0) {
          independent = false;
          break;
        }
      }
    }
    if (independent) return beta;
  }
  assert(false && "a normal basis always exists");
  return 0;
}

}  // namespace oqecc
