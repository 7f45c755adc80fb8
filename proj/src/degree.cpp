#include "kgck/degree.hpp"

#include <algorithm>
#include <numeric>

#include "kgck/error.hpp"

namespace kgck {

DegreeVector DegreeVector::unit(std::size_t rank, std::size_t color) {
  DegreeVector d(rank);
  d.coords_.at(color) = 1;
  return d;
}

std::uint64_t DegreeVector::total() const noexcept {
  return std::accumulate(coords_.begin(), coords_.end(), std::uint64_t{0});
}

bool DegreeVector::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c == 0; });
}

DegreeVector& DegreeVector::operator+=(const DegreeVector& other) {
  if (other.rank() != rank()) {
    throw Error(ErrorCode::DomainError, "rank mismatch in degree addition");
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

DegreeVector& DegreeVector::operator-=(const DegreeVector& other) {
  if (!leq(other, *this)) {
    throw Error(ErrorCode::DegreeOutOfRange,
                other.to_string() + " is not below " + to_string());
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

std::strong_ordering operator<=>(const DegreeVector& a, const DegreeVector& b) {
  if (auto c = a.total() <=> b.total(); c != 0) return c;
  return a.coords_ <=> b.coords_;
}

std::string DegreeVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coords_[i]);
  }
  return out + ")";
}

bool leq(const DegreeVector& a, const DegreeVector& b) {
  if (a.rank() != b.rank()) return false;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

DegreeVector join(const DegreeVector& a, const DegreeVector& b) {
  DegreeVector out(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

DegreeVector meet(const DegreeVector& a, const DegreeVector& b) {
  DegreeVector out(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

std::vector<DegreeVector> lattice_below(const DegreeVector& bound) {
  std::vector<DegreeVector> out;
  DegreeVector cur(bound.rank());
  while (true) {
    out.push_back(cur);
    std::size_t i = 0;
    while (i < bound.rank() && cur[i] == bound[i]) {
      cur[i] = 0;
      ++i;
    }
    if (i == bound.rank()) break;
    ++cur[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kgck
