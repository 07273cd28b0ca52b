#include "walg/matrix.hpp"

#include <string>

namespace walg {

Matrix::Matrix(Kind k, std::size_t rows, std::size_t cols)
    : kind_(k), rows_(rows), cols_(cols), data_(rows * cols, zero(k)) {}

Matrix Matrix::identity(Kind k, std::size_t n) {
  Matrix m(k, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one(k);
  return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw dimension_error("block out of range");
  Matrix b(kind_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b.at(i, j) = at(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw dimension_error("block out of range");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) at(r0 + i, c0 + j) = b.at(i, j);
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw dimension_error("mat_add: dimension mismatch");
  Matrix r(a.kind(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = add(a.at(i, j), b.at(i, j));
  return r;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw dimension_error("mat_mul: dimension mismatch");
  Matrix r(a.kind(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Value& x = a.at(i, k);
      if (is_zero(x)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, j) = add(r.at(i, j), mul(x, b.at(k, j)));
    }
  return r;
}

OmegaVector mat_vec_mul(const Matrix& a, const OmegaVector& v) {
  if (a.cols() != v.size()) throw dimension_error("mat_vec_mul: dimension mismatch");
  OmegaVector r(a.rows(), zero(a.kind()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r[i] = add(r[i], mul(a.at(i, j), v[j]));
  return r;
}

OmegaVector vec_add(const OmegaVector& a, const OmegaVector& b) {
  if (a.size() != b.size()) throw dimension_error("vec_add: dimension mismatch");
  OmegaVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = add(a[i], b[i]);
  return r;
}

Matrix column(const OmegaVector& v, Kind k) {
  Matrix c(k, v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) c.at(i, 0) = v[i];
  return c;
}

namespace {

void require_square(const Matrix& m, const char* what) {
  if (!m.square()) throw dimension_error(std::string(what) + ": matrix not square");
}

}  // namespace

// The recursion M* = f(a, b, c, d*) with a the first row/column is unrolled
// bottom-up: S holds the star of the trailing block m[k+1.., k+1..], W its omega.
// One pass computes both so the cost stays cubic.
namespace {

void star_and_omega(const Matrix& m, Matrix* star_out, OmegaVector* omega_out) {
  const Kind kd = m.kind();
  const std::size_t n = m.rows();
  Matrix s(kd, 0, 0);
  OmegaVector w;
  for (std::size_t k = n; k-- > 0;) {
    const std::size_t r = n - k - 1;
    std::vector<Value> bd(r, zero(kd)), dc(r, zero(kd));
    for (std::size_t i = 0; i < r; ++i) {
      const Value& b = m.at(k, k + 1 + i);
      const Value& c = m.at(k + 1 + i, k);
      for (std::size_t j = 0; j < r; ++j) {
        if (!is_zero(b)) bd[j] = add(bd[j], mul(b, s.at(i, j)));
        if (!is_zero(c)) dc[j] = add(dc[j], mul(s.at(j, i), c));
      }
    }
    Value x = m.at(k, k);
    for (std::size_t i = 0; i < r; ++i) x = add(x, mul(bd[i], m.at(k + 1 + i, k)));
    const Value xs = star(x);

    if (omega_out) {
      Value bw = zero(kd);
      for (std::size_t i = 0; i < r; ++i) bw = add(bw, mul(m.at(k, k + 1 + i), w[i]));
      const Value head = add(omega(x), mul(xs, bw));
      OmegaVector nw(r + 1);
      nw[0] = head;
      for (std::size_t i = 0; i < r; ++i) nw[i + 1] = add(w[i], mul(dc[i], head));
      w = std::move(nw);
    }

    Matrix ns(kd, r + 1, r + 1);
    ns.at(0, 0) = xs;
    for (std::size_t j = 0; j < r; ++j) {
      ns.at(0, j + 1) = mul(xs, bd[j]);
      ns.at(j + 1, 0) = mul(dc[j], xs);
    }
    for (std::size_t i = 0; i < r; ++i) {
      const Value dcs = mul(dc[i], xs);
      for (std::size_t j = 0; j < r; ++j) ns.at(i + 1, j + 1) = add(s.at(i, j), mul(dcs, bd[j]));
    }
    s = std::move(ns);
  }
  if (star_out) *star_out = std::move(s);
  if (omega_out) *omega_out = std::move(w);
}

}  // namespace

Matrix mat_star(const Matrix& m) {
  require_square(m, "mat_star");
  Matrix s;
  star_and_omega(m, &s, nullptr);
  if (m.rows() == 0) return Matrix(m.kind(), 0, 0);
  return s;
}

OmegaVector mat_omega(const Matrix& m) {
  require_square(m, "mat_omega");
  OmegaVector w;
  star_and_omega(m, nullptr, &w);
  return w;
}

OmegaVector mat_omega_t(const Matrix& m, std::size_t t) {
  require_square(m, "mat_omega_t");
  const std::size_t n = m.rows();
  if (t > n) throw dimension_error("mat_omega_t: t out of range");
  if (t == 0) return OmegaVector(n, zero(m.kind()));
  if (t == n) return mat_omega(m);
  const Matrix a = m.block(0, 0, t, t), b = m.block(0, t, t, n - t);
  const Matrix c = m.block(t, 0, n - t, t), d = m.block(t, t, n - t, n - t);
  const Matrix ds = mat_star(d);
  const Matrix dsc = mat_mul(ds, c);
  const OmegaVector top = mat_omega(mat_add(a, mat_mul(b, dsc)));
  OmegaVector out = top;
  const OmegaVector bottom = mat_vec_mul(dsc, top);
  out.insert(out.end(), bottom.begin(), bottom.end());
  return out;
}

OmegaVector mat_omega_t_alt(const Matrix& m, std::size_t t, std::size_t k) {
  require_square(m, "mat_omega_t_alt");
  const std::size_t n = m.rows();
  if (t > k || k > n) throw dimension_error("mat_omega_t_alt: need t <= k <= n");
  if (k == n) return mat_omega_t(m, t);
  if (k == 0) return OmegaVector(n, zero(m.kind()));
  const Matrix a = m.block(0, 0, k, k), b = m.block(0, k, k, n - k);
  const Matrix c = m.block(k, 0, n - k, k), d = m.block(k, k, n - k, n - k);
  const Matrix dsc = mat_mul(mat_star(d), c);
  const OmegaVector top = mat_omega_t(mat_add(a, mat_mul(b, dsc)), t);
  OmegaVector out = top;
  const OmegaVector bottom = mat_vec_mul(dsc, top);
  out.insert(out.end(), bottom.begin(), bottom.end());
  return out;
}

Matrix mat_star_split(const Matrix& m, std::size_t n1, StarForm form) {
  require_square(m, "mat_star_split");
  const std::size_t n = m.rows();
  if (n1 == 0 || n1 >= n) throw dimension_error("mat_star_split: need 0 < n1 < n");
  const std::size_t n2 = n - n1;
  const Matrix a = m.block(0, 0, n1, n1), b = m.block(0, n1, n1, n2);
  const Matrix c = m.block(n1, 0, n2, n1), d = m.block(n1, n1, n2, n2);
  const Matrix as = mat_star(a), ds = mat_star(d);
  const Matrix top = mat_star(mat_add(a, mat_mul(mat_mul(b, ds), c)));
  const Matrix bot = mat_star(mat_add(d, mat_mul(mat_mul(c, as), b)));
  Matrix r(m.kind(), n, n);
  r.set_block(0, 0, top);
  r.set_block(n1, n1, bot);
  if (form == StarForm::first) {
    r.set_block(0, n1, mat_mul(mat_mul(top, b), ds));
    r.set_block(n1, 0, mat_mul(mat_mul(bot, c), as));
  } else {
    r.set_block(0, n1, mat_mul(mat_mul(as, b), bot));
    r.set_block(n1, 0, mat_mul(mat_mul(ds, c), top));
  }
  return r;
}

OmegaVector mat_omega_split(const Matrix& m, std::size_t n1) {
  require_square(m, "mat_omega_split");
  const std::size_t n = m.rows();
  if (n1 == 0 || n1 >= n) throw dimension_error("mat_omega_split: need 0 < n1 < n");
  const std::size_t n2 = n - n1;
  const Matrix a = m.block(0, 0, n1, n1), b = m.block(0, n1, n1, n2);
  const Matrix c = m.block(n1, 0, n2, n1), d = m.block(n1, n1, n2, n2);
  const Matrix x = mat_add(a, mat_mul(mat_mul(b, mat_star(d)), c));
  const Matrix y = mat_add(d, mat_mul(mat_mul(c, mat_star(a)), b));
  OmegaVector top = vec_add(mat_omega(x), mat_vec_mul(mat_mul(mat_star(x), b), mat_omega(d)));
  const OmegaVector bot =
      vec_add(mat_omega(y), mat_vec_mul(mat_mul(mat_star(y), c), mat_omega(a)));
  top.insert(top.end(), bot.begin(), bot.end());
  return top;
}

Matrix permute(const Matrix& m, const std::vector<std::size_t>& perm) {
  require_square(m, "permute");
  if (perm.size() != m.rows()) throw dimension_error("permute: size mismatch");
  Matrix r(m.kind(), m.rows(), m.cols());
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = 0; j < perm.size(); ++j) r.at(i, j) = m.at(perm[i], perm[j]);
  return r;
}

}  // namespace walg
