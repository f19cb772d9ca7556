#include "oqecc/additive_code.hpp"

#include <algorithm>
#include <string>

#include "oqecc/error.hpp"

namespace oqecc {

namespace {

void require_same_space(const AdditiveCode& x, const AdditiveCode& z) {
  if (x.layout() != z.layout()) throw Error(ErrorCode::LayoutMismatch, "codes use different layouts");
  if (x.n() != z.n() || x.ctx()->p() != z.ctx()->p() || x.ctx()->m() != z.ctx()->m()) {
    throw Error(ErrorCode::DimensionMismatch, "codes live in different spaces");
  }
}

void require_same_space(const CodeVector& u, const CodeVector& v) {
  if (u.layout() != v.layout()) throw Error(ErrorCode::LayoutMismatch, "vectors use different layouts");
  if (u.n() != v.n() || u.ctx()->p() != v.ctx()->p() || u.ctx()->m() != v.ctx()->m()) {
    throw Error(ErrorCode::DimensionMismatch, "vectors live in different spaces");
  }
}

const FiniteField& coordinate_field(const GfContext& ctx, Layout layout) {
  return layout == Layout::Symplectic ? ctx.base() : ctx.ext();
}

}  // namespace

const char* to_string(Layout layout) {
  return layout == Layout::Symplectic ? "symplectic" : "hermitian";
}

unsigned digits_per_coordinate(const GfContext& ctx, Layout layout) {
  return layout == Layout::Symplectic ? ctx.m() : 2 * ctx.m();
}

CodeVector::CodeVector(GfContextPtr ctx, Layout layout, std::vector<Elem> coords)
    : ctx_(std::move(ctx)), layout_(layout), coords_(std::move(coords)) {
  if (layout_ == Layout::Symplectic && coords_.size() % 2 != 0) {
    throw Error(ErrorCode::DimensionMismatch, "symplectic vectors have even length");
  }
  const unsigned bound = coordinate_field(*ctx_, layout_).size();
  for (Elem c : coords_) {
    if (c >= bound) {
      throw Error(ErrorCode::OutOfRange,
                  "coordinate " + std::to_string(c) + " not below " + std::to_string(bound));
    }
  }
}

CodeVector CodeVector::symplectic(GfContextPtr ctx, std::span<const Elem> a, std::span<const Elem> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "a and b differ in length");
  std::vector<Elem> coords(a.begin(), a.end());
  coords.insert(coords.end(), b.begin(), b.end());
  return CodeVector(std::move(ctx), Layout::Symplectic, std::move(coords));
}

CodeVector CodeVector::zero(GfContextPtr ctx, Layout layout, std::size_t n) {
  const std::size_t len = layout == Layout::Symplectic ? 2 * n : n;
  return CodeVector(std::move(ctx), layout, std::vector<Elem>(len, 0));
}

CodeVector CodeVector::from_digits(GfContextPtr ctx, Layout layout, std::size_t n, const FpRow& digits) {
  const unsigned per = digits_per_coordinate(*ctx, layout);
  const std::size_t len = layout == Layout::Symplectic ? 2 * n : n;
  if (digits.size() != len * per) throw Error(ErrorCode::DimensionMismatch, "digit row has wrong length");
  const FiniteField& field = coordinate_field(*ctx, layout);
  std::vector<Elem> coords(len);
  std::vector<unsigned> buf(per);
  for (std::size_t i = 0; i < len; ++i) {
    for (unsigned d = 0; d < per; ++d) buf[d] = digits[i * per + d];
    coords[i] = field.from_digits(buf.data());
  }
  return CodeVector(std::move(ctx), layout, std::move(coords));
}

std::span<const Elem> CodeVector::a() const {
  if (layout_ != Layout::Symplectic) throw Error(ErrorCode::LayoutMismatch, "a() needs symplectic layout");
  return std::span<const Elem>(coords_).first(n());
}

std::span<const Elem> CodeVector::b() const {
  if (layout_ != Layout::Symplectic) throw Error(ErrorCode::LayoutMismatch, "b() needs symplectic layout");
  return std::span<const Elem>(coords_).last(n());
}

FpRow CodeVector::digits() const {
  const unsigned per = digits_per_coordinate(*ctx_, layout_);
  const FiniteField& field = coordinate_field(*ctx_, layout_);
  FpRow out(coords_.size() * per);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    for (unsigned d = 0; d < per; ++d) out[i * per + d] = static_cast<std::uint8_t>(field.digit(coords_[i], d));
  }
  return out;
}

bool CodeVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Elem c) { return c == 0; });
}

AdditiveCode::AdditiveCode(GfContextPtr ctx, std::size_t n, Layout layout, FpMatrix basis)
    : ctx_(std::move(ctx)), n_(n), layout_(layout), basis_(std::move(basis)) {
  basis_.reduce();
}

AdditiveCode AdditiveCode::from_generators(GfContextPtr ctx, std::size_t n, Layout layout,
                                           std::span<const CodeVector> gens) {
  FpMatrix rows(ctx->p(), 2 * n * ctx->m());
  for (const auto& g : gens) {
    if (g.layout() != layout) throw Error(ErrorCode::DimensionMismatch, "generator layout differs");
    if (g.n() != n || g.ctx()->p() != ctx->p() || g.ctx()->m() != ctx->m()) {
      throw Error(ErrorCode::DimensionMismatch, "generator length differs from n");
    }
    rows.add_row(g.digits());
  }
  return AdditiveCode(std::move(ctx), n, layout, std::move(rows));
}

AdditiveCode AdditiveCode::from_rows(GfContextPtr ctx, std::size_t n, Layout layout, FpMatrix rows) {
  if (rows.cols() != 2 * n * ctx->m() || rows.p() != ctx->p()) {
    throw Error(ErrorCode::DimensionMismatch, "row matrix does not match the code space");
  }
  return AdditiveCode(std::move(ctx), n, layout, std::move(rows));
}

AdditiveCode AdditiveCode::zero(GfContextPtr ctx, std::size_t n, Layout layout) {
  FpMatrix rows(ctx->p(), 2 * n * ctx->m());
  return AdditiveCode(std::move(ctx), n, layout, std::move(rows));
}

AdditiveCode AdditiveCode::whole(GfContextPtr ctx, std::size_t n, Layout layout) {
  const std::size_t cols = 2 * n * ctx->m();
  FpMatrix rows(ctx->p(), cols);
  for (std::size_t i = 0; i < cols; ++i) {
    FpRow r(cols, 0);
    r[i] = 1;
    rows.add_row(std::move(r));
  }
  return AdditiveCode(std::move(ctx), n, layout, std::move(rows));
}

std::uint64_t AdditiveCode::size() const {
  std::uint64_t s = 1;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (s > UINT64_MAX / ctx_->p()) throw Error(ErrorCode::CapExceeded, "code size overflows 64 bits");
    s *= ctx_->p();
  }
  return s;
}

std::vector<CodeVector> AdditiveCode::generators() const {
  std::vector<CodeVector> out;
  out.reserve(rank());
  for (const auto& row : basis_.rows()) out.push_back(CodeVector::from_digits(ctx_, layout_, n_, row));
  return out;
}

void AdditiveCode::for_each_codeword(const std::function<void(const FpRow&)>& fn) const {
  const unsigned p = ctx_->p();
  const std::size_t k = rank();
  std::vector<unsigned> coeff(k, 0);
  FpRow word(columns(), 0);
  while (true) {
    fn(word);
    // Increment the base-p counter and patch `word` incrementally.
    std::size_t i = 0;
    while (i < k) {
      fp_axpy(word, 1, basis_.row(i), p);
      if (++coeff[i] < p) break;
      coeff[i] = 0;
      ++i;
    }
    if (i == k) return;
  }
}

bool AdditiveCode::operator==(const AdditiveCode& other) const {
  return layout_ == other.layout_ && n_ == other.n_ && ctx_->p() == other.ctx_->p() &&
         ctx_->m() == other.ctx_->m() && basis_ == other.basis_;
}

Elem symplectic_form(const CodeVector& u, const CodeVector& v) {
  require_same_space(u, v);
  if (u.layout() != Layout::Symplectic) throw Error(ErrorCode::LayoutMismatch, "symplectic form needs (a|b)");
  const FiniteField& f = u.ctx()->base();
  const auto a = u.a(), b = u.b(), a2 = v.a(), b2 = v.b();
  Elem acc = 0;
  for (std::size_t i = 0; i < u.n(); ++i) {
    acc = f.add(acc, f.sub(f.mul(b[i], a2[i]), f.mul(a[i], b2[i])));
  }
  return u.ctx()->trace(acc);
}

Elem trace_alternating_form(const CodeVector& v, const CodeVector& w) {
  require_same_space(v, w);
  if (v.layout() != Layout::Hermitian) throw Error(ErrorCode::LayoutMismatch, "trace-alternating form needs F_{q^2}^n");
  const GfContext& ctx = *v.ctx();
  const FiniteField& f = ctx.ext();
  const unsigned q = ctx.q();
  Elem num = 0;
  for (std::size_t i = 0; i < v.n(); ++i) {
    const Elem vi = v.coords()[i], wi = w.coords()[i];
    num = f.add(num, f.sub(f.mul(vi, f.pow(wi, q)), f.mul(f.pow(vi, q), wi)));
  }
  const Elem den = f.sub(f.pow(ctx.beta_q(), 2), f.pow(ctx.beta(), 2));
  return ctx.ext_trace_to_base(f.mul(num, f.inv(den)));
}

Elem layout_form(const CodeVector& u, const CodeVector& v) {
  require_same_space(u, v);
  return u.layout() == Layout::Symplectic ? symplectic_form(u, v) : trace_alternating_form(u, v);
}

FpMatrix gram_matrix(const GfContextPtr& ctx, std::size_t n, Layout layout) {
  const std::size_t cols = 2 * n * ctx->m();
  std::vector<CodeVector> units;
  units.reserve(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    FpRow e(cols, 0);
    e[j] = 1;
    units.push_back(CodeVector::from_digits(ctx, layout, n, e));
  }
  FpMatrix gram(ctx->p(), cols);
  for (std::size_t j = 0; j < cols; ++j) {
    FpRow row(cols, 0);
    for (std::size_t k = 0; k < cols; ++k) row[k] = static_cast<std::uint8_t>(layout_form(units[j], units[k]));
    gram.add_row(std::move(row));
  }
  return gram;
}

AdditiveCode dual(const AdditiveCode& x) {
  const unsigned p = x.ctx()->p();
  const FpMatrix gram = gram_matrix(x.ctx(), x.n(), x.layout());
  FpMatrix constraints(p, x.columns());
  for (const auto& row : x.basis().rows()) {
    FpRow c(x.columns(), 0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] != 0) fp_axpy(c, row[j], gram.row(j), p);
    }
    constraints.add_row(std::move(c));
  }
  return AdditiveCode::from_rows(x.ctx(), x.n(), x.layout(), constraints.nullspace());
}

AdditiveCode intersect(const AdditiveCode& x, const AdditiveCode& z) {
  require_same_space(x, z);
  // Intersection is the annihilator of the sum of the annihilators under the
  // plain dot product, independent of any symplectic structure.
  FpMatrix ann = x.basis().nullspace();
  ann.append(z.basis().nullspace());
  return AdditiveCode::from_rows(x.ctx(), x.n(), x.layout(), ann.nullspace());
}

AdditiveCode code_sum(const AdditiveCode& x, const AdditiveCode& z) {
  require_same_space(x, z);
  FpMatrix rows = x.basis();
  rows.append(z.basis());
  return AdditiveCode::from_rows(x.ctx(), x.n(), x.layout(), std::move(rows));
}

bool contains(const AdditiveCode& x, const CodeVector& v) {
  if (v.layout() != x.layout()) throw Error(ErrorCode::DimensionMismatch, "vector layout differs from code");
  if (v.n() != x.n() || v.ctx()->p() != x.ctx()->p() || v.ctx()->m() != x.ctx()->m()) {
    throw Error(ErrorCode::DimensionMismatch, "vector length differs from code");
  }
  return x.basis().in_row_space(v.digits());
}

AdditiveCode hull(const AdditiveCode& x) { return intersect(x, dual(x)); }

CodeVector phi_map(const CodeVector& c) {
  if (c.layout() != Layout::Symplectic) throw Error(ErrorCode::LayoutMismatch, "phi maps symplectic vectors");
  const GfContext& ctx = *c.ctx();
  const FiniteField& f = ctx.ext();
  const auto a = c.a(), b = c.b();
  std::vector<Elem> out(c.n());
  for (std::size_t i = 0; i < c.n(); ++i) {
    out[i] = f.add(f.mul(ctx.beta(), ctx.embed(a[i])), f.mul(ctx.beta_q(), ctx.embed(b[i])));
  }
  return CodeVector(c.ctx(), Layout::Hermitian, std::move(out));
}

CodeVector phi_inverse(const CodeVector& v) {
  if (v.layout() != Layout::Hermitian) throw Error(ErrorCode::LayoutMismatch, "phi^-1 maps hermitian vectors");
  const GfContext& ctx = *v.ctx();
  const FiniteField& f = ctx.ext();
  const unsigned q = ctx.q();
  // beta a + beta^q b = v with a, b in GF(q). Applying Frobenius gives
  // beta^q a + beta b = v^q, and the 2x2 system has determinant
  // beta^2 - beta^{2q} != 0 for a normal element.
  const Elem det_inv = f.inv(f.sub(f.pow(ctx.beta(), 2), f.pow(ctx.beta_q(), 2)));
  std::vector<Elem> a(v.n()), b(v.n());
  for (std::size_t i = 0; i < v.n(); ++i) {
    const Elem x = v.coords()[i];
    const Elem xq = f.pow(x, q);
    const Elem ea = f.mul(f.sub(f.mul(x, ctx.beta()), f.mul(xq, ctx.beta_q())), det_inv);
    const Elem eb = f.mul(f.sub(f.mul(xq, ctx.beta()), f.mul(x, ctx.beta_q())), det_inv);
    const auto pa = ctx.pull_back(ea);
    const auto pb = ctx.pull_back(eb);
    if (!pa || !pb) throw Error(ErrorCode::NotInSubfield, "phi^-1 produced a coordinate outside GF(q)");
    a[i] = *pa;
    b[i] = *pb;
  }
  return CodeVector::symplectic(v.ctx(), a, b);
}

AdditiveCode phi_map(const AdditiveCode& x) {
  if (x.layout() != Layout::Symplectic) throw Error(ErrorCode::LayoutMismatch, "phi maps symplectic codes");
  std::vector<CodeVector> gens;
  for (const auto& g : x.generators()) gens.push_back(phi_map(g));
  return AdditiveCode::from_generators(x.ctx(), x.n(), Layout::Hermitian, gens);
}

AdditiveCode phi_inverse(const AdditiveCode& x) {
  if (x.layout() != Layout::Hermitian) throw Error(ErrorCode::LayoutMismatch, "phi^-1 maps hermitian codes");
  std::vector<CodeVector> gens;
  for (const auto& g : x.generators()) gens.push_back(phi_inverse(g));
  return AdditiveCode::from_generators(x.ctx(), x.n(), Layout::Symplectic, gens);
}

AdditiveCode as_symplectic(const AdditiveCode& x) {
  return x.layout() == Layout::Symplectic ? x : phi_inverse(x);
}

}  // namespace oqecc
