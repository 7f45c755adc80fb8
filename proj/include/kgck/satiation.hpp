#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "kgck/alignment.hpp"

namespace kgck {

using FamilyMask = std::uint64_t;

struct UniverseOptions {
  /// Degree window D. Defaults to the maximum degree for acyclic graphs and
  /// is required for cyclic ones.
  std::optional<DegreeVector> window;
  /// Largest family admitted; 0 means no cap.
  std::size_t max_family_size = 0;
  /// Per-vertex bound on |vΛ^{<=D} \ {v}|; at most 63.
  std::size_t max_candidates = 20;
};

/// The finite search space for collections of exhaustive sets: at each
/// vertex v, the subsets of vΛ^{<=D} \ {v} that are provably exhaustive.
/// Families are encoded as bitmasks over the per-vertex candidate list.
class Universe {
 public:
  /// Throws PreconditionFailed for a cyclic graph without a window and
  /// UniverseTooLarge when some vertex has too many candidates.
  static std::shared_ptr<const Universe> build(const KGraph& g, const UniverseOptions& options = {});

  const KGraph& graph() const noexcept { return graph_; }
  const DegreeVector& window() const noexcept { return window_; }
  std::size_t max_family_size() const noexcept { return max_family_size_; }
  /// True when the universe is all of FE(Λ): acyclic, window covering the
  /// maximum degree, no size cap.
  bool exact() const noexcept { return exact_; }

  const std::vector<Path>& candidates(VertexId v) const { return at(v).cands; }
  std::optional<std::size_t> candidate_index(VertexId v, const Path& p) const;
  /// nullopt when some member lies outside the window or is a vertex.
  std::optional<FamilyMask> mask_of(const PathFamily& family) const;
  PathFamily family(VertexId v, FamilyMask mask) const;

  /// Whether the family is provably exhaustive and within the size cap.
  bool is_fe(VertexId v, FamilyMask mask) const;
  /// Every FE mask at v, ascending.
  std::vector<FamilyMask> all_fe(VertexId v) const;

  // Tables used by the Σ maps.
  struct VertexTables {
    std::vector<Path> window_paths;  // vΛ^{<=D}, includes v
    std::vector<Path> cands;         // window_paths minus v
    std::vector<std::size_t> window_to_cand;  // npos for the vertex
    std::map<Path, std::size_t> cand_index;
    /// truncations[i]: candidate indices of λ_i(0, n), 0 < n <= d(λ_i)
    std::vector<std::vector<std::size_t>> truncations;
    /// prefix_mask[w]: candidates that are initial segments of window path w
    std::vector<FamilyMask> prefix_mask;
    /// ext_single[w][i]: Ext(window path w; {λ_i}) as a mask at s(w)
    std::vector<std::vector<FamilyMask>> ext_single;
    /// graft[i][j]: index at v of λ_i·(candidate j at s(λ_i)), or npos
    std::vector<std::vector<std::size_t>> graft;
    /// For acyclic graphs: per test path λ ∈ vΛ, candidates aligned with λ.
    std::vector<FamilyMask> hits;
  };
  const VertexTables& at(VertexId v) const { return tables_.at(index_of(v)); }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  explicit Universe(KGraph g) : graph_(std::move(g)) {}
  bool compute_fe(VertexId v, FamilyMask mask) const;

  KGraph graph_;
  DegreeVector window_;
  std::size_t max_family_size_ = 0;
  bool exact_ = false;
  std::vector<VertexTables> tables_;
  mutable std::mutex cache_mutex_;
  mutable std::vector<std::unordered_map<FamilyMask, bool>> fe_cache_;
};

/// A set of exhaustive families inside a Universe.
class FamilyCollection {
 public:
  explicit FamilyCollection(std::shared_ptr<const Universe> universe);

  /// Throws PreconditionFailed if a family contains a vertex, leaves the
  /// window, or is not provably exhaustive.
  static FamilyCollection from_families(std::shared_ptr<const Universe> universe,
                                        const std::vector<PathFamily>& families);
  /// Every FE family of the universe.
  static FamilyCollection full(std::shared_ptr<const Universe> universe);

  const Universe& universe() const noexcept { return *universe_; }
  const std::shared_ptr<const Universe>& universe_ptr() const noexcept { return universe_; }

  bool insert(VertexId v, FamilyMask mask);
  bool contains(VertexId v, FamilyMask mask) const;
  bool contains(const PathFamily& family) const;
  const std::set<FamilyMask>& at(VertexId v) const { return members_.at(index_of(v)); }
  std::size_t size() const;
  bool empty() const { return size() == 0; }

  /// Members in canonical order.
  std::vector<PathFamily> families() const;
  /// The ⊆-minimal members, canonical order.
  std::vector<PathFamily> minimal_families() const;
  bool subset_of(const FamilyCollection& other) const;

  friend bool operator==(const FamilyCollection& a, const FamilyCollection& b) {
    return a.universe_ == b.universe_ && a.members_ == b.members_;
  }

 private:
  std::shared_ptr<const Universe> universe_;
  std::vector<std::set<FamilyMask>> members_;
};

FamilyCollection sigma1(const FamilyCollection& c);
FamilyCollection sigma2(const FamilyCollection& c);
FamilyCollection sigma3(const FamilyCollection& c);
FamilyCollection sigma4(const FamilyCollection& c);
/// Σ = Σ4 ∘ Σ3 ∘ Σ2 ∘ Σ1.
FamilyCollection sigma(const FamilyCollection& c);

struct SatiateOptions {
  std::size_t max_iterations = 1000;
  std::size_t max_members = std::size_t{1} << 22;
};

/// Least fixed point of Σ above c. Throws FixpointBudgetExceeded.
FamilyCollection satiate(const FamilyCollection& c, const SatiateOptions& options = {});

struct SatiationViolation {
  std::string axiom;  // "S1".."S4"
  PathFamily g;
  PathFamily produced;
  std::string detail;
};

struct SatiationReport {
  bool satiated = true;
  std::optional<SatiationViolation> violation;
};

/// Checks (S1)-(S4) within the universe; reports the first violation in
/// canonical order.
SatiationReport is_satiated(const FamilyCollection& c);

enum class Membership { Yes, No, Unknown };
std::string_view to_string(Membership m);

/// Membership of F in a (satiated) collection. Exact when the universe is;
/// otherwise No is only returned for families provably outside FE(Λ).
Membership member(const PathFamily& family, const FamilyCollection& s);

}  // namespace kgck
