#include "oqecc/code_params.hpp"

#include <numeric>
#include <string>

#include "oqecc/error.hpp"
#include "oqecc/parallel.hpp"

namespace oqecc {

namespace {

// Weight of a digit row in the given layout.
class WeightFunction {
 public:
  WeightFunction(const GfContext& ctx, std::size_t n, Layout layout)
      : n_(n), per_(digits_per_coordinate(ctx, layout)), symplectic_(layout == Layout::Symplectic) {}

  std::size_t operator()(const FpRow& v) const {
    std::size_t w = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (nonzero(v, i) || (symplectic_ && nonzero(v, n_ + i))) ++w;
    }
    return w;
  }

 private:
  bool nonzero(const FpRow& v, std::size_t coord) const {
    for (unsigned d = 0; d < per_; ++d) {
      if (v[coord * per_ + d] != 0) return true;
    }
    return false;
  }

  std::size_t n_;
  unsigned per_;
  bool symplectic_;
};

// Lexicographic order of the coordinate encodings. Within a coordinate the
// most significant digit decides first.
bool encoded_less(const FpRow& u, const FpRow& v, unsigned per) {
  for (std::size_t base = 0; base < u.size(); base += per) {
    for (unsigned d = per; d-- > 0;) {
      if (u[base + d] != v[base + d]) return u[base + d] < v[base + d];
    }
  }
  return false;
}

// Membership test through a dot-product parity check.
class MembershipTest {
 public:
  explicit MembershipTest(const AdditiveCode& code) : checks_(code.basis().nullspace()) {}

  bool operator()(const FpRow& v) const {
    for (const auto& h : checks_.rows()) {
      if (fp_dot(h, v, checks_.p()) != 0) return false;
    }
    return true;
  }

 private:
  FpMatrix checks_;
};

struct Candidate {
  std::size_t weight = 0;
  FpRow word;
  bool found = false;
};

void offer(Candidate& best, std::size_t weight, const FpRow& word, unsigned per) {
  if (!best.found || weight < best.weight || (weight == best.weight && encoded_less(word, best.word, per))) {
    best.found = true;
    best.weight = weight;
    best.word = word;
  }
}

std::uint64_t checked_power(unsigned p, std::size_t e, std::uint64_t cap, const char* what) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < e; ++i) {
    v *= p;
    if (v > cap) throw Error(ErrorCode::CapExceeded, std::string(what) + " exceeds the enumeration cap");
  }
  return v;
}

void set_digits(FpRow& digits, std::uint64_t index, unsigned p) {
  for (auto& d : digits) {
    d = static_cast<std::uint8_t>(index % p);
    index /= p;
  }
}

constexpr std::size_t kChunks = 64;

}  // namespace

std::size_t swt(const CodeVector& c) {
  if (c.layout() != Layout::Symplectic) throw Error(ErrorCode::LayoutMismatch, "swt needs symplectic layout");
  const auto a = c.a(), b = c.b();
  std::size_t w = 0;
  for (std::size_t i = 0; i < c.n(); ++i) {
    if (a[i] != 0 || b[i] != 0) ++w;
  }
  return w;
}

std::size_t hamming_wt(const CodeVector& v) {
  if (v.layout() != Layout::Hermitian) throw Error(ErrorCode::LayoutMismatch, "wt needs hermitian layout");
  std::size_t w = 0;
  for (Elem c : v.coords()) w += c != 0;
  return w;
}

std::size_t layout_weight(const CodeVector& v) {
  return v.layout() == Layout::Symplectic ? swt(v) : hamming_wt(v);
}

Rational Rational::make(std::int64_t num, std::int64_t den) {
  const std::int64_t g = std::gcd(num, den);
  return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

std::string Rational::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

const char* to_string(DistanceMethod method) {
  return method == DistanceMethod::Exhaustive ? "exhaustive" : "basis";
}

std::string Distance::str() const { return d ? std::to_string(*d) : "inf"; }

Distance min_distance(const AdditiveCode& x, DistanceMethod method, unsigned threads) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroCode, "minimum distance needs X != {0}");
  const unsigned p = x.ctx()->p();
  const std::size_t cols = x.columns();
  const unsigned per = digits_per_coordinate(*x.ctx(), x.layout());

  const AdditiveCode x_dual = dual(x);
  const AdditiveCode y_perp = dual(intersect(x, x_dual));
  if (!(code_sum(x, x_dual) == y_perp)) {
    throw Error(ErrorCode::InvariantViolation, "X + X^perp differs from hull(X)^perp");
  }

  const MembershipTest in_x(x);
  const WeightFunction weight(*x.ctx(), x.n(), x.layout());
  std::vector<Candidate> best(kChunks);

  if (method == DistanceMethod::Exhaustive) {
    const std::uint64_t total = checked_power(p, cols, kMaxEnumeration, "p^{2nm}");
    const MembershipTest in_sum(code_sum(x, x_dual));
    parallel_chunks(total, kChunks, threads, [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
      FpRow v(cols);
      set_digits(v, begin, p);
      for (std::uint64_t idx = begin; idx < end; ++idx) {
        if (in_sum(v) && !in_x(v)) offer(best[chunk], weight(v), v, per);
        for (auto& d : v) {  // base-p increment
          if (++d < p) break;
          d = 0;
        }
      }
    });
  } else {
    const std::uint64_t total = checked_power(p, y_perp.rank(), kMaxEnumeration, "|Y^perp|");
    const auto& rows = y_perp.basis().rows();
    parallel_chunks(total, kChunks, threads, [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
      std::vector<unsigned> coeff(rows.size());
      FpRow v(cols, 0);
      std::uint64_t index = begin;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        coeff[i] = static_cast<unsigned>(index % p);
        index /= p;
        fp_axpy(v, coeff[i], rows[i], p);
      }
      for (std::uint64_t idx = begin; idx < end; ++idx) {
        if (!in_x(v)) offer(best[chunk], weight(v), v, per);
        for (std::size_t i = 0; i < rows.size(); ++i) {
          fp_axpy(v, 1, rows[i], p);
          if (++coeff[i] < p) break;
          coeff[i] = 0;
        }
      }
    });
  }

  Candidate overall;
  for (const auto& c : best) {
    if (c.found) offer(overall, c.weight, c.word, per);
  }
  Distance out;
  if (overall.found) {
    out.d = overall.weight;
    out.witness = CodeVector::from_digits(x.ctx(), x.layout(), x.n(), overall.word);
  }
  return out;
}

namespace {

std::uint64_t power_u64(unsigned p, std::size_t e) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (v > UINT64_MAX / p) throw Error(ErrorCode::CapExceeded, "value overflows 64 bits");
    v *= p;
  }
  return v;
}

}  // namespace

std::uint64_t SubsystemParams::x() const { return power_u64(p, log_p_x); }
std::uint64_t SubsystemParams::y() const { return power_u64(p, log_p_y); }
std::uint64_t SubsystemParams::dim_a() const { return power_u64(p, log_p_dim_a); }
std::uint64_t SubsystemParams::dim_b() const { return power_u64(p, log_p_dim_b); }
std::uint64_t SubsystemParams::dim_c() const { return power_u64(p, log_p_dim_a + log_p_dim_b); }

std::string SubsystemParams::bracket() const {
  return "[[" + std::to_string(n) + "," + k.str() + "," + r.str() + "," + distance.str() + "]]_" +
         std::to_string(q);
}

SubsystemParams subsystem_params(const AdditiveCode& x, DistanceMethod method, unsigned threads) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroCode, "subsystem parameters need X != {0}");
  const GfContext& ctx = *x.ctx();
  const std::size_t nm = x.n() * ctx.m();
  const std::size_t ex = x.rank();
  const std::size_t ey = hull(x).rank();

  if ((ex + ey) % 2 != 0 || ex + ey > 2 * nm || ey > ex) {
    throw Error(ErrorCode::RankMismatch, "x*y is not an even power of p below q^{2n}");
  }
  SubsystemParams out;
  out.n = x.n();
  out.q = ctx.q();
  out.p = ctx.p();
  out.log_p_x = ex;
  out.log_p_y = ey;
  out.log_p_dim_a = nm - (ex + ey) / 2;
  out.log_p_dim_b = (ex - ey) / 2;
  if (out.log_p_dim_a + out.log_p_dim_b != nm - ey) {
    throw Error(ErrorCode::RankMismatch, "dim A * dim B != q^n / y");
  }
  const auto m = static_cast<std::int64_t>(ctx.m());
  out.k = Rational::make(static_cast<std::int64_t>(out.log_p_dim_a), m);
  out.r = Rational::make(static_cast<std::int64_t>(out.log_p_dim_b), m);
  out.distance = min_distance(x, method, threads);
  return out;
}

}  // namespace oqecc
