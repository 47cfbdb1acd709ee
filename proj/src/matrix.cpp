#include "casimir/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace casimir::exact {

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  RationalMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

bool RationalMatrix::is_zero() const {
  for (const Rational& e : entries_)
    if (e != 0) return false;
  return true;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix product shape mismatch");
  RationalMatrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < other.cols_; ++j) {
        const Rational& b = other.at(k, j);
        if (b != 0) out.at(i, j) += a * b;
      }
    }
  }
  return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix sum shape mismatch");
  RationalMatrix out = *this;
  for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += other.entries_[i];
  return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix difference shape mismatch");
  RationalMatrix out = *this;
  for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] -= other.entries_[i];
  return out;
}

Rational RationalMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
  Rational t = 0;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("matrix-vector shape mismatch");
  std::vector<Rational> out(rows_, Rational(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) out[i] += at(i, j) * v[j];
  return out;
}

namespace {

// One-step Bareiss elimination over any integral domain with exact division.
// Returns the rank; `grid` is consumed.
template <typename T, typename DivideExact>
int bareiss_rank(std::vector<std::vector<T>>& grid, const T& zero, const T& one,
                 DivideExact divide) {
  int rows = static_cast<int>(grid.size());
  int cols = rows == 0 ? 0 : static_cast<int>(grid[0].size());
  T prev_pivot = one;
  int rk = 0;
  for (int c = 0; c < cols && rk < rows; ++c) {
    int pivot = -1;
    for (int r = rk; r < rows; ++r) {
      if (!(grid[r][c] == zero)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(grid[rk], grid[pivot]);
    for (int r = rk + 1; r < rows; ++r) {
      for (int j = c + 1; j < cols; ++j) {
        T t = grid[rk][c] * grid[r][j] - grid[r][c] * grid[rk][j];
        grid[r][j] = divide(t, prev_pivot);
      }
      grid[r][c] = zero;
    }
    prev_pivot = grid[rk][c];
    ++rk;
  }
  return rk;
}

std::vector<std::vector<Rational>> to_grid(const RationalMatrix& m) {
  std::vector<std::vector<Rational>> grid(m.rows(), std::vector<Rational>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) grid[i][j] = m.at(i, j);
  return grid;
}

}  // namespace

int rank(const RationalMatrix& m) {
  auto grid = to_grid(m);
  return bareiss_rank(grid, Rational(0), Rational(1),
                      [](const Rational& a, const Rational& b) { return a / b; });
}

Rational det(const RationalMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  int n = m.rows();
  if (n == 0) return 1;
  auto grid = to_grid(m);
  Rational prev_pivot = 1;
  int sign = 1;
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r) {
      if (grid[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != c) {
      std::swap(grid[c], grid[pivot]);
      sign = -sign;
    }
    for (int r = c + 1; r < n; ++r) {
      for (int j = c + 1; j < n; ++j)
        grid[r][j] = (grid[c][c] * grid[r][j] - grid[r][c] * grid[c][j]) / prev_pivot;
      grid[r][c] = 0;
    }
    prev_pivot = grid[c][c];
  }
  return sign > 0 ? grid[n - 1][n - 1] : -grid[n - 1][n - 1];
}

Echelon reduced_row_echelon(const RationalMatrix& m) {
  Echelon e{m, {}};
  int rows = m.rows(), cols = m.cols();
  int rk = 0;
  for (int c = 0; c < cols && rk < rows; ++c) {
    int pivot = -1;
    for (int r = rk; r < rows; ++r) {
      if (e.mat.at(r, c) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rk)
      for (int j = 0; j < cols; ++j) std::swap(e.mat.at(rk, j), e.mat.at(pivot, j));
    Rational inv = Rational(1) / e.mat.at(rk, c);
    for (int j = c; j < cols; ++j) e.mat.at(rk, j) *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rk) continue;
      Rational f = e.mat.at(r, c);
      if (f == 0) continue;
      for (int j = c; j < cols; ++j) e.mat.at(r, j) -= f * e.mat.at(rk, j);
    }
    e.pivot_cols.push_back(c);
    ++rk;
  }
  return e;
}

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
  Echelon e = reduced_row_echelon(m);
  int cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int c : e.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[f] = 1;
    for (size_t p = 0; p < e.pivot_cols.size(); ++p)
      v[e.pivot_cols[p]] = -e.mat.at(static_cast<int>(p), f);
    // Scale so the first nonzero entry is 1.
    for (const Rational& x : v) {
      if (x != 0) {
        if (x != 1) {
          Rational inv = Rational(1) / x;
          for (Rational& y : v) y *= inv;
        }
        break;
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& a,
                                           const std::vector<Rational>& b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw std::invalid_argument("solve shape mismatch");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  Echelon e = reduced_row_echelon(aug);
  for (int c : e.pivot_cols)
    if (c == a.cols()) return std::nullopt;
  std::vector<Rational> x(a.cols(), Rational(0));
  for (size_t p = 0; p < e.pivot_cols.size(); ++p)
    x[e.pivot_cols[p]] = e.mat.at(static_cast<int>(p), a.cols());
  return x;
}

std::vector<Rational> char_poly(const RationalMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("char_poly of non-square matrix");
  int n = m.rows();
  if (n == 0) return {Rational(1)};

  // Clear denominators: work on the integer matrix N = L*M.
  Int lcm = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Int d = den(m.at(i, j));
      lcm = boost::multiprecision::lcm(lcm, d);
    }
  std::vector<std::vector<Int>> mat(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational scaled = m.at(i, j) * Rational(lcm);
      mat[i][j] = num(scaled);
    }

  // Faddeev-LeVerrier; every division below is exact for integer input.
  std::vector<Int> c(n + 1, Int(0));
  c[n] = 1;
  std::vector<std::vector<Int>> acc = mat;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      // acc = mat * (acc + c[n-k+1] * I)
      std::vector<std::vector<Int>> shifted = acc;
      for (int i = 0; i < n; ++i) shifted[i][i] += c[n - k + 1];
      std::vector<std::vector<Int>> next(n, std::vector<Int>(n, Int(0)));
      for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l) {
          if (mat[i][l] == 0) continue;
          for (int j = 0; j < n; ++j)
            if (shifted[l][j] != 0) next[i][j] += mat[i][l] * shifted[l][j];
        }
      acc = std::move(next);
    }
    Int tr = 0;
    for (int i = 0; i < n; ++i) tr += acc[i][i];
    if (tr % k != 0) throw std::logic_error("Faddeev-LeVerrier inexact division");
    c[n - k] = -tr / k;
  }

  // det(tI - M) = det(L t I - N) / L^n: coefficient of t^k is c[k] L^k / L^n.
  std::vector<Rational> coeffs(n + 1);
  Rational power(1);
  std::vector<Rational> lpow(n + 1);
  for (int k = 0; k <= n; ++k) {
    lpow[k] = power;
    power *= Rational(lcm);
  }
  for (int k = 0; k <= n; ++k) coeffs[k] = Rational(c[k]) * lpow[k] / lpow[n];
  return coeffs;
}

RationalMatrix PolyMatrix::eval(const std::vector<Rational>& point) const {
  RationalMatrix out(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j).eval(point);
  return out;
}

int rank(const PolyMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  int vars = m.at(0, 0).dimension();
  std::vector<std::vector<Polynomial>> grid(
      m.rows(), std::vector<Polynomial>(m.cols(), Polynomial(vars)));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) grid[i][j] = m.at(i, j);
  return bareiss_rank(grid, Polynomial(vars), Polynomial::constant(vars, 1),
                      [](const Polynomial& a, const Polynomial& b) {
                        return a.divide_exact(b);
                      });
}

}  // namespace casimir::exact
