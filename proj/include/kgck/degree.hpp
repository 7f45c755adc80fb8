#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace kgck {

/// An element of N^k. Arithmetic is coordinatewise; the partial order is the
/// product order (`leq`). The total order used for canonical listings is
/// graded lexicographic (`operator<=>`): total size first, then coordinates.
class DegreeVector {
 public:
  DegreeVector() = default;
  explicit DegreeVector(std::size_t rank) : coords_(rank, 0) {}
  DegreeVector(std::initializer_list<std::uint32_t> coords) : coords_(coords) {}
  explicit DegreeVector(std::vector<std::uint32_t> coords) : coords_(std::move(coords)) {}

  static DegreeVector unit(std::size_t rank, std::size_t color);

  std::size_t rank() const noexcept { return coords_.size(); }
  std::uint32_t operator[](std::size_t i) const { return coords_[i]; }
  std::uint32_t& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<std::uint32_t>& coords() const noexcept { return coords_; }

  std::uint64_t total() const noexcept;
  bool is_zero() const noexcept;

  DegreeVector& operator+=(const DegreeVector& other);
  /// Throws DegreeOutOfRange unless `other` is below `*this` in product order.
  DegreeVector& operator-=(const DegreeVector& other);

  friend DegreeVector operator+(DegreeVector a, const DegreeVector& b) { return a += b; }
  friend DegreeVector operator-(DegreeVector a, const DegreeVector& b) { return a -= b; }

  friend bool operator==(const DegreeVector&, const DegreeVector&) = default;
  friend std::strong_ordering operator<=>(const DegreeVector& a, const DegreeVector& b);

  std::string to_string() const;

 private:
  std::vector<std::uint32_t> coords_;
};

/// Product order: every coordinate of `a` is at most the matching one of `b`.
bool leq(const DegreeVector& a, const DegreeVector& b);
DegreeVector join(const DegreeVector& a, const DegreeVector& b);
DegreeVector meet(const DegreeVector& a, const DegreeVector& b);

/// All n with 0 <= n <= bound, in graded lexicographic order.
std::vector<DegreeVector> lattice_below(const DegreeVector& bound);

}  // namespace kgck
