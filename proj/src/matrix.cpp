#include "acsa/matrix.hpp"

#include <utility>

#include "acsa/errors.hpp"

namespace acsa
{

Mat::Mat(int rows, int cols) : rows_(rows), cols_(cols)
{
  if (rows < 0 || cols < 0)
    throw precondition_error("matrix dimensions must be nonnegative");
  e_.assign(static_cast<std::size_t>(rows) * cols, ExtScalar(0));
}

Mat::Mat(std::vector<std::vector<ExtScalar>> rows)
{
  rows_ = static_cast<int>(rows.size());
  cols_ = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  e_.reserve(static_cast<std::size_t>(rows_) * cols_);
  for (auto& r : rows)
  {
    if (static_cast<int>(r.size()) != cols_)
      throw precondition_error("matrix rows have unequal lengths");
    for (auto& v : r)
      e_.push_back(std::move(v));
  }
}

Mat Mat::identity(int n)
{
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    m(i, i) = ExtScalar(1);
  return m;
}

bool Mat::is_zero() const
{
  for (const auto& v : e_)
    if (!v.is_zero())
      return false;
  return true;
}

Mat Mat::transpose() const
{
  Mat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

ExtScalar Mat::trace() const
{
  if (!is_square())
    throw precondition_error("trace requires a square matrix");
  ExtScalar t(0);
  for (int i = 0; i < rows_; ++i)
    t += (*this)(i, i);
  return t;
}

namespace
{

void check_same_shape(const Mat& a, const Mat& b)
{
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw precondition_error("matrix shapes not conformable");
}

} // namespace

Mat operator+(const Mat& a, const Mat& b)
{
  check_same_shape(a, b);
  Mat r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      r(i, j) = a(i, j) + b(i, j);
  return r;
}

Mat operator-(const Mat& a, const Mat& b)
{
  check_same_shape(a, b);
  Mat r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      r(i, j) = a(i, j) - b(i, j);
  return r;
}

Mat operator-(const Mat& a)
{
  Mat r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      r(i, j) = -a(i, j);
  return r;
}

Mat operator*(const Mat& a, const Mat& b)
{
  if (a.cols() != b.rows())
    throw precondition_error("matrix shapes not conformable");
  Mat r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k)
    {
      if (a(i, k).is_zero())
        continue;
      for (int j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero())
          r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

Mat operator*(const ExtScalar& c, const Mat& a)
{
  Mat r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      r(i, j) = c * a(i, j);
  return r;
}

bool operator==(const Mat& a, const Mat& b)
{
  if (a.rows() != b.rows() || a.cols() != b.cols())
    return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j))
        return false;
  return true;
}

bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

Mat anticommutator(const Mat& a, const Mat& b) { return a * b + b * a; }

namespace
{

// Reduce m to reduced row echelon form; returns the pivot columns. The same
// row operations are applied to *transform when given, so starting it at the
// identity collects a matrix L with L * m_original = rref.
std::vector<int> row_reduce(Mat& m, Mat* transform)
{
  std::vector<int> pivots;
  int r = 0;
  for (int col = 0; col < m.cols() && r < m.rows(); ++col)
  {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m(i, col).is_zero())
      {
        p = i;
        break;
      }
    if (p < 0)
      continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j)
        std::swap(m(r, j), m(p, j));
    if (transform && p != r)
      for (int j = 0; j < transform->cols(); ++j)
        std::swap((*transform)(r, j), (*transform)(p, j));
    const ExtScalar piv = inverse(m(r, col));
    for (int j = 0; j < m.cols(); ++j)
      m(r, j) = piv * m(r, j);
    if (transform)
      for (int j = 0; j < transform->cols(); ++j)
        (*transform)(r, j) = piv * (*transform)(r, j);
    for (int i = 0; i < m.rows(); ++i)
    {
      if (i == r || m(i, col).is_zero())
        continue;
      const ExtScalar f = m(i, col);
      for (int j = 0; j < m.cols(); ++j)
        m(i, j) -= f * m(r, j);
      if (transform)
        for (int j = 0; j < transform->cols(); ++j)
          (*transform)(i, j) -= f * (*transform)(r, j);
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

} // namespace

std::vector<ExtScalar> matvec(const Mat& m, const std::vector<ExtScalar>& v)
{
  if (m.cols() != static_cast<int>(v.size()))
    throw precondition_error("matrix shapes not conformable");
  std::vector<ExtScalar> out(m.rows(), ExtScalar(0));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero())
        out[i] += m(i, j) * v[j];
  return out;
}

Mat rref(Mat m)
{
  row_reduce(m, nullptr);
  return m;
}

int rank(Mat m)
{
  return static_cast<int>(row_reduce(m, nullptr).size());
}

Mat inverse(Mat m)
{
  if (!m.is_square())
    throw precondition_error("inverse requires a square matrix");
  Mat t = Mat::identity(m.rows());
  const auto pivots = row_reduce(m, &t);
  if (static_cast<int>(pivots.size()) != m.rows())
    throw precondition_error("matrix is singular");
  return t;
}

std::vector<std::vector<ExtScalar>> nullspace(Mat m)
{
  const int n = m.cols();
  const auto pivots = row_reduce(m, nullptr);
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots)
    is_pivot[c] = true;
  std::vector<std::vector<ExtScalar>> basis;
  for (int f = 0; f < n; ++f)
  {
    if (is_pivot[f])
      continue;
    std::vector<ExtScalar> v(n, ExtScalar(0));
    v[f] = ExtScalar(1);
    for (int r = 0; r < static_cast<int>(pivots.size()); ++r)
      v[pivots[r]] = -m(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

LinearSolve solve_linear(Mat a, std::vector<ExtScalar> b)
{
  if (static_cast<int>(b.size()) != a.rows())
    throw precondition_error("matrix shapes not conformable");
  Mat t = Mat::identity(a.rows());
  const auto pivots = row_reduce(a, &t);
  const int rk = static_cast<int>(pivots.size());
  LinearSolve out;
  // y = L b; echelon rows past the rank have zero coefficient part, so a
  // nonzero y entry there certifies inconsistency with witness row L_i.
  for (int i = rk; i < a.rows(); ++i)
  {
    ExtScalar yi(0);
    for (int j = 0; j < a.rows(); ++j)
      yi += t(i, j) * b[j];
    if (!yi.is_zero())
    {
      out.consistent = false;
      out.witness.resize(a.rows());
      for (int j = 0; j < a.rows(); ++j)
        out.witness[j] = t(i, j);
      return out;
    }
  }
  out.consistent = true;
  out.solution.assign(a.cols(), ExtScalar(0));
  for (int r = 0; r < rk; ++r)
  {
    ExtScalar yr(0);
    for (int j = 0; j < a.rows(); ++j)
      yr += t(r, j) * b[j];
    out.solution[pivots[r]] = yr;
  }
  return out;
}

} // namespace acsa
