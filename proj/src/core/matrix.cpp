#include "crnkit/matrix.hpp"

#include <sstream>

#include "crnkit/error.hpp"

namespace crn {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
  if (cols_ != other.rows_) fail(ErrKind::Internal, "matrix dimension mismatch in product");
  RatMatrix p(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < other.cols_; ++j) {
        if (other.at(k, j) == 0) continue;
        p.at(i, j) += aik * other.at(k, j);
      }
    }
  return p;
}

bool RatMatrix::operator==(const RatMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return false;
  return a_ == other.a_;
}

std::vector<Rat> RatMatrix::row(int i) const {
  std::vector<Rat> v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

std::vector<double> RatMatrix::row_doubles(int i) const {
  std::vector<double> v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = rat_to_double(at(i, j));
  return v;
}

void RatMatrix::set_row(int i, const std::vector<Rat>& v) {
  if (int(v.size()) != cols_) fail(ErrKind::Internal, "set_row length mismatch");
  for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
}

std::vector<Rat> RatMatrix::apply(const std::vector<Rat>& x) const {
  if (int(x.size()) != cols_) fail(ErrKind::Internal, "apply length mismatch");
  std::vector<Rat> y(rows_, Rat(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0) y[i] += at(i, j) * x[j];
  return y;
}

std::string RatMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << rat_to_string(at(i, j));
    os << "\n";
  }
  return os.str();
}

int rref_in_place(RatMatrix& m, std::vector<int>* pivot_cols) {
  if (pivot_cols) pivot_cols->clear();
  int pr = 0;
  for (int c = 0; c < m.cols() && pr < m.rows(); ++c) {
    int piv = -1;
    for (int i = pr; i < m.rows(); ++i)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != pr)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(pr, j));
    Rat inv = 1 / m.at(pr, c);
    for (int j = 0; j < m.cols(); ++j) m.at(pr, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == pr || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(pr, j);
    }
    if (pivot_cols) pivot_cols->push_back(c);
    ++pr;
  }
  return pr;
}

int rank_of(RatMatrix m) { return rref_in_place(m); }

RatMatrix nullspace(const RatMatrix& a) {
  RatMatrix r = a;
  std::vector<int> piv;
  int rank = rref_in_place(r, &piv);
  int n = a.cols();
  std::vector<bool> is_piv(n, false);
  for (int c : piv) is_piv[c] = true;

  RatMatrix basis(n - rank, n);
  int k = 0;
  for (int f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    basis.at(k, f) = 1;
    for (int i = 0; i < rank; ++i) basis.at(k, piv[i]) = -r.at(i, f);
    ++k;
  }
  rref_in_place(basis);
  return basis;
}

RatMatrix left_nullspace(const RatMatrix& a) { return nullspace(a.transposed()); }

RatMatrix row_space(const RatMatrix& a) {
  RatMatrix r = a;
  int rank = rref_in_place(r);
  RatMatrix basis(rank, a.cols());
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < a.cols(); ++j) basis.at(i, j) = r.at(i, j);
  return basis;
}

RatMatrix column_space(const RatMatrix& a) { return row_space(a.transposed()); }

std::vector<Rat> rat_vector(std::initializer_list<long> xs) {
  std::vector<Rat> v;
  v.reserve(xs.size());
  for (long x : xs) v.emplace_back(x);
  return v;
}

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.size() != b.size()) fail(ErrKind::Internal, "dot length mismatch");
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace crn
