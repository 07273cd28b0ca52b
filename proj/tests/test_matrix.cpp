#include "doctest.h"

#include <string>

#include "gen.hpp"
#include "walg/buchi.hpp"
#include "walg/matrix.hpp"

using namespace walg;
using walg::testing::Rng;

namespace {

Matrix mat(Kind k, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const std::size_t n = rows.size();
  Matrix m(k, n, rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (std::int64_t v : r) m.at(i, j++) = Value{k, v};
    ++i;
  }
  return m;
}

constexpr std::int64_t INF = Value::kInf;
constexpr std::int64_t NEG = Value::kNegInf;

// Walk sums of bounded length, S <- I + M S.  Entries still moving between
// 2n+2 and 4n+4 rounds sit on a walk through a growing cycle and are top.
Matrix star_oracle(const Matrix& m) {
  const std::size_t n = m.rows();
  const Kind k = m.kind();
  auto step = [&](const Matrix& s) {
    Matrix r = Matrix::identity(k, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) r.at(i, j) = add(r.at(i, j), mul(m.at(i, l), s.at(l, j)));
    return r;
  };
  Matrix s = Matrix::identity(k, n);
  for (std::size_t t = 0; t < 2 * n + 2; ++t) s = step(s);
  Matrix late = s;
  for (std::size_t t = 0; t < 2 * n + 2; ++t) late = step(late);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (late.at(i, j) != s.at(i, j)) late.at(i, j) = top(k);
  return late;
}

}  // namespace

TEST_CASE("star of small matrices") {
  const Matrix b = mat(Kind::boolean, {{0, 1}, {1, 0}});
  CHECK(mat_star(b) == mat(Kind::boolean, {{1, 1}, {1, 1}}));

  // shortest paths, unreachable pairs stay inf
  const Matrix t = mat(Kind::tropical, {{INF, 2, INF}, {INF, INF, 3}, {INF, INF, INF}});
  CHECK(mat_star(t) == mat(Kind::tropical, {{0, 2, 5}, {INF, 0, 3}, {INF, INF, 0}}));

  const Matrix a = mat(Kind::arctic, {{0, 1}, {NEG, 0}});
  CHECK(mat_star(a) == mat(Kind::arctic, {{0, 1}, {NEG, 0}}));
  const Matrix ac = mat(Kind::arctic, {{1, NEG}, {2, NEG}});
  CHECK(mat_star(ac) == mat(Kind::arctic, {{INF, NEG}, {INF, 0}}));

  const Matrix c = mat(Kind::counting, {{0, 2}, {0, 0}});
  CHECK(mat_star(c) == mat(Kind::counting, {{1, 2}, {0, 1}}));
}

TEST_CASE("star agrees with bounded walk sums") {
  Rng r(11);
  const Kind kinds[] = {Kind::boolean, Kind::tropical, Kind::arctic, Kind::counting};
  for (int c = 0; c < 400; ++c) {
    const Matrix m = r.matrix(kinds[c % 4], 1 + r.below(4));
    CAPTURE(c);
    CHECK(mat_star(m) == star_oracle(m));
  }
}

TEST_CASE("omega vectors of small matrices") {
  // node 1 reaches the zero loop at node 2 with weight 2
  const Matrix t = mat(Kind::tropical, {{1, 2}, {INF, 0}});
  CHECK(mat_omega(t) == OmegaVector{Value{Kind::tropical, 2}, Value{Kind::tropical, 0}});
  CHECK(mat_omega_t(t, 1) == OmegaVector{zero(Kind::tropical), zero(Kind::tropical)});
  CHECK(mat_omega_t(t, 0) == OmegaVector{zero(Kind::tropical), zero(Kind::tropical)});

  const Matrix b = mat(Kind::boolean, {{0, 1}, {0, 1}});
  CHECK(mat_omega_t(b, 1) == OmegaVector{zero(Kind::boolean), zero(Kind::boolean)});
  CHECK(mat_omega_t(b, 2) == OmegaVector{one(Kind::boolean), one(Kind::boolean)});

  const Matrix c = mat(Kind::counting, {{1, 1}, {0, 1}});
  CHECK(mat_omega(c) == OmegaVector{Value{Kind::counting, INF}, one(Kind::counting)});
}

TEST_CASE("omega_t matches the Büchi graph on idempotent instances") {
  Rng r(5);
  const Kind kinds[] = {Kind::boolean, Kind::tropical, Kind::arctic};
  for (int c = 0; c < 300; ++c) {
    const Matrix m = r.matrix(kinds[c % 3], 1 + r.below(4));
    for (std::size_t t = 0; t <= m.rows(); ++t) {
      CAPTURE(c);
      CAPTURE(t);
      CHECK(mat_omega_t(m, t) == buchi_values(graph_of(m, t)));
    }
  }
}

TEST_CASE("block operations") {
  const Matrix m = mat(Kind::counting, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  CHECK(m.block(1, 1, 2, 2) == mat(Kind::counting, {{5, 6}, {8, 9}}));
  Matrix z(Kind::counting, 3, 3);
  z.set_block(0, 1, mat(Kind::counting, {{1, 1}}));
  CHECK(z.at(0, 2) == one(Kind::counting));
  CHECK(permute(m, {2, 0, 1}).at(0, 0) == Value{Kind::counting, 9});
  CHECK(mat_mul(Matrix::identity(Kind::counting, 3), m) == m);
}

TEST_CASE("dimension errors") {
  const Matrix r(Kind::boolean, 2, 3);
  CHECK_THROWS_AS(mat_star(r), dimension_error);
  CHECK_THROWS_AS(mat_mul(r, r), dimension_error);
  const Matrix s(Kind::boolean, 3, 3);
  CHECK_THROWS_AS(mat_omega_t(s, 4), dimension_error);
  CHECK_THROWS_AS(mat_omega_t_alt(s, 2, 1), dimension_error);
  CHECK_THROWS_AS(mat_star_split(s, 0, StarForm::first), dimension_error);
}
