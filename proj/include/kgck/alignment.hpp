#pragma once

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "kgck/kgraph.hpp"

namespace kgck {

/// (α, β) with μα = νβ a minimal common extension of μ and ν.
struct MinPair {
  Path alpha;
  Path beta;

  friend bool operator==(const MinPair&, const MinPair&) = default;
  friend auto operator<=>(const MinPair&, const MinPair&) = default;
};

/// A finite set of paths with a common range. Members are kept sorted and
/// deduplicated.
class PathFamily {
 public:
  explicit PathFamily(VertexId range) : range_(range) {}
  /// Throws RangeMismatch if some member does not have range `range`.
  PathFamily(VertexId range, std::vector<Path> members);

  VertexId range() const noexcept { return range_; }
  const std::vector<Path>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(const Path& p) const;
  bool has_vertex() const;
  bool subset_of(const PathFamily& other) const;

  friend bool operator==(const PathFamily&, const PathFamily&) = default;
  /// Canonical order: range, then size, then members lexicographically.
  friend std::strong_ordering operator<=>(const PathFamily& a, const PathFamily& b);

 private:
  VertexId range_;
  std::vector<Path> members_;
};

std::string to_string(const KGraph& g, const PathFamily& family);

std::vector<Path> mce(const KGraph& g, const Path& mu, const Path& nu);
std::vector<MinPair> lambda_min(const KGraph& g, const Path& mu, const Path& nu);
/// Whether MCE(μ, ν) is nonempty.
bool aligned(const KGraph& g, const Path& mu, const Path& nu);

/// Ext(μ; E). Throws RangeMismatch unless r(E) = r(μ).
std::vector<Path> ext(const KGraph& g, const Path& mu, const PathFamily& family);
PathFamily ext_family(const KGraph& g, const Path& mu, const PathFamily& family);

/// Whether μ ∈ EΛ, i.e. some member of E is an initial segment of μ.
bool in_family_extensions(const KGraph& g, const Path& mu, const PathFamily& family);

struct ClosureOptions {
  std::size_t max_size = 100000;
};

/// ΠE: the least set containing E with λ Ext(μ; {σ}) ⊆ G whenever
/// λ, μ, σ ∈ G, d(λ) = d(μ) and s(λ) = s(μ). Throws ClosureBudgetExceeded
/// if the set outgrows `options.max_size`.
std::vector<Path> pi_closure(const KGraph& g, const std::vector<Path>& seed,
                             const ClosureOptions& options = {});

/// {(λ, μ) ∈ G × G : d(λ) = d(μ), s(λ) = s(μ)}.
std::vector<std::pair<Path, Path>> pairs_ds(const std::vector<Path>& set);

}  // namespace kgck
