#ifndef CRNKIT_MATRIX_HPP
#define CRNKIT_MATRIX_HPP

#include <string>
#include <vector>

#include "crnkit/rational.hpp"

namespace crn {

// Dense matrix of exact rationals (row-major).
class RatMatrix {
public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Rat(0)) {}

  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  RatMatrix transposed() const;
  RatMatrix operator*(const RatMatrix& other) const;
  bool operator==(const RatMatrix& other) const;

  std::vector<Rat> row(int i) const;
  std::vector<double> row_doubles(int i) const;
  void set_row(int i, const std::vector<Rat>& v);

  // Matrix-vector product.
  std::vector<Rat> apply(const std::vector<Rat>& x) const;

  std::string to_string() const;  // debugging aid

private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

// In-place Gauss-Jordan to reduced row echelon form. Returns the rank; fills
// `pivot_cols` (one entry per pivot row) when given.
int rref_in_place(RatMatrix& m, std::vector<int>* pivot_cols = nullptr);

int rank_of(RatMatrix m);

// Basis of { x : A x = 0 } as matrix rows, canonicalized by a final RREF pass
// so output is deterministic (pivot-first ordering, pivots normalized to 1).
RatMatrix nullspace(const RatMatrix& a);

// Basis of { w : w^T A = 0 } as matrix rows; same canonical form.
RatMatrix left_nullspace(const RatMatrix& a);

// Canonical basis (rows) for the row space of A: nonzero rows of RREF(A).
RatMatrix row_space(const RatMatrix& a);

// Canonical basis (rows) for the column space of A, i.e. row_space(A^T).
RatMatrix column_space(const RatMatrix& a);

std::vector<Rat> rat_vector(std::initializer_list<long> xs);

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b);

}  // namespace crn

#endif
