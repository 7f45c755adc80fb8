#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include <boost/rational.hpp>

#include "kgck/error.hpp"

namespace kgck {

using Rational = boost::rational<std::int64_t>;
using Complex = std::complex<double>;

template <typename T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr double tolerance = 0.0;
  static Rational conj(const Rational& x) { return x; }
  static double abs(const Rational& x) {
    return std::abs(static_cast<double>(x.numerator()) / static_cast<double>(x.denominator()));
  }
  static Complex to_complex(const Rational& x) {
    return {static_cast<double>(x.numerator()) / static_cast<double>(x.denominator()), 0.0};
  }
  // rational == int recurses under C++20 rewritten comparisons
  static bool is_zero(const Rational& x) { return x.numerator() == 0; }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;
  static constexpr double tolerance = 1e-12;
  static Complex conj(const Complex& x) { return std::conj(x); }
  static double abs(const Complex& x) { return std::abs(x); }
  static Complex to_complex(const Complex& x) { return x; }
  static bool is_zero(const Complex& x) { return x == Complex{}; }
};

/// Row-major dictionary-of-keys matrix. Zero entries are never stored.
template <typename T>
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows) {}

  static SparseMatrix identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, T(1));
    return m;
  }

  std::size_t rows() const noexcept { return data_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  const std::map<std::size_t, T>& row(std::size_t i) const { return data_[i]; }

  T get(std::size_t i, std::size_t j) const {
    const auto& r = data_.at(i);
    auto it = r.find(j);
    return it == r.end() ? T(0) : it->second;
  }

  void set(std::size_t i, std::size_t j, const T& value) {
    check_index(i, j);
    if (ScalarTraits<T>::is_zero(value)) {
      data_[i].erase(j);
    } else {
      data_[i][j] = value;
    }
  }

  void add(std::size_t i, std::size_t j, const T& value) {
    check_index(i, j);
    auto& r = data_[i];
    auto [it, inserted] = r.try_emplace(j, value);
    if (!inserted) it->second += value;
    if (ScalarTraits<T>::is_zero(it->second)) r.erase(it);
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
  }
  bool is_zero() const { return nonzeros() == 0; }

  SparseMatrix adjoint() const {
    SparseMatrix out(cols_, rows());
    for (std::size_t i = 0; i < rows(); ++i) {
      for (const auto& [j, v] : data_[i]) out.set(j, i, ScalarTraits<T>::conj(v));
    }
    return out;
  }

  SparseMatrix& operator+=(const SparseMatrix& other) {
    check_shape(other);
    for (std::size_t i = 0; i < rows(); ++i) {
      for (const auto& [j, v] : other.data_[i]) add(i, j, v);
    }
    return *this;
  }
  SparseMatrix& operator-=(const SparseMatrix& other) {
    check_shape(other);
    for (std::size_t i = 0; i < rows(); ++i) {
      for (const auto& [j, v] : other.data_[i]) add(i, j, -v);
    }
    return *this;
  }
  SparseMatrix& operator*=(const T& scalar) {
    if (ScalarTraits<T>::is_zero(scalar)) {
      for (auto& r : data_) r.clear();
      return *this;
    }
    for (auto& r : data_) {
      for (auto& [j, v] : r) v *= scalar;
    }
    return *this;
  }

  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }
  friend SparseMatrix operator*(SparseMatrix a, const T& s) { return a *= s; }
  friend SparseMatrix operator*(const T& s, SparseMatrix a) { return a *= s; }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows()) {
      throw Error(ErrorCode::DomainError, "matrix product shape mismatch");
    }
    SparseMatrix out(a.rows(), b.cols_);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      std::map<std::size_t, T> acc;
      for (const auto& [k, x] : a.data_[i]) {
        for (const auto& [j, y] : b.data_[k]) acc[j] += x * y;
      }
      for (const auto& [j, v] : acc) {
        if (!ScalarTraits<T>::is_zero(v)) out.data_[i].emplace(j, v);
      }
    }
    return out;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  double frobenius_norm() const {
    double sum = 0.0;
    for (const auto& r : data_) {
      for (const auto& [j, v] : r) {
        const double a = ScalarTraits<T>::abs(v);
        sum += a * a;
      }
    }
    return std::sqrt(sum);
  }

 private:
  void check_index(std::size_t i, std::size_t j) const {
    if (i >= rows() || j >= cols_) throw Error(ErrorCode::DomainError, "matrix index out of range");
  }
  void check_shape(const SparseMatrix& other) const {
    if (rows() != other.rows() || cols_ != other.cols_) {
      throw Error(ErrorCode::DomainError, "matrix shape mismatch");
    }
  }

  std::size_t cols_ = 0;
  std::vector<std::map<std::size_t, T>> data_;
};

/// ‖a − b‖ in the Frobenius norm; exactly 0 iff a == b.
template <typename T>
double deviation(const SparseMatrix<T>& a, const SparseMatrix<T>& b) {
  return (a - b).frobenius_norm();
}

template <typename T>
SparseMatrix<Complex> to_complex(const SparseMatrix<T>& m) {
  SparseMatrix<Complex> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& [j, v] : m.row(i)) out.set(i, j, ScalarTraits<T>::to_complex(v));
  }
  return out;
}

/// Largest singular value.
double operator_norm(const SparseMatrix<Complex>& m);

}  // namespace kgck
