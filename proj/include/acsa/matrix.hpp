#pragma once

#include <vector>

#include "acsa/ext_scalar.hpp"

namespace acsa
{

// Dense exact matrix. Rectangular in general; operations that need a square
// matrix check for one. Rows and columns are indexed from 0.
class Mat
{
public:
  Mat() = default;
  Mat(int rows, int cols);
  explicit Mat(std::vector<std::vector<ExtScalar>> rows);
  static Mat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  ExtScalar& operator()(int i, int j)
  {
    return e_[static_cast<std::size_t>(i) * cols_ + j];
  }
  const ExtScalar& operator()(int i, int j) const
  {
    return e_[static_cast<std::size_t>(i) * cols_ + j];
  }

  bool is_zero() const;
  Mat transpose() const;
  ExtScalar trace() const;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<ExtScalar> e_;
};

Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat operator-(const Mat& a);
Mat operator*(const Mat& a, const Mat& b);
Mat operator*(const ExtScalar& c, const Mat& a);
bool operator==(const Mat& a, const Mat& b);
bool operator!=(const Mat& a, const Mat& b);

// a b + b a
Mat anticommutator(const Mat& a, const Mat& b);

// m v as a column vector.
std::vector<ExtScalar> matvec(const Mat& m, const std::vector<ExtScalar>& v);

// Reduced row echelon form.
Mat rref(Mat m);

int rank(Mat m);

// Throws precondition_error when m is singular or not square.
Mat inverse(Mat m);

// Basis of the right kernel; each vector has m.cols() entries.
std::vector<std::vector<ExtScalar>> nullspace(Mat m);

struct LinearSolve
{
  bool consistent = false;
  // One solution of A x = b when consistent.
  std::vector<ExtScalar> solution;
  // Otherwise a row w with w A = 0 and w b != 0.
  std::vector<ExtScalar> witness;
};

LinearSolve solve_linear(Mat a, std::vector<ExtScalar> b);

} // namespace acsa
