#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kgck/degree.hpp"

namespace kgck {

enum class VertexId : std::uint32_t {};
enum class EdgeId : std::uint32_t {};

constexpr std::uint32_t index_of(VertexId v) noexcept { return static_cast<std::uint32_t>(v); }
constexpr std::uint32_t index_of(EdgeId e) noexcept { return static_cast<std::uint32_t>(e); }

// ---------------------------------------------------------------------------
// Skeleton presentation
// ---------------------------------------------------------------------------

struct EdgeSpec {
  std::string id;
  std::uint32_t color = 1;  // 1-based, as in graph files
  std::string range;
  std::string source;

  friend bool operator==(const EdgeSpec&, const EdgeSpec&) = default;
};

/// One commuting square: the path "e then f" equals the path "f' then e'".
/// e and e' share a colour, f and f' share a different colour.
struct SquareSpec {
  std::string e;
  std::string f;
  std::string f_prime;
  std::string e_prime;

  friend bool operator==(const SquareSpec&, const SquareSpec&) = default;
};

struct SkeletonSpec {
  std::uint32_t rank = 1;
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
  std::vector<SquareSpec> squares;

  friend bool operator==(const SkeletonSpec&, const SkeletonSpec&) = default;
};

/// Identifier and colour-range checks shared by `validate` and the file
/// reader: throws DuplicateId, UnknownColor, UnknownVertex or DomainError.
void check_structure(const SkeletonSpec& spec);

// ---------------------------------------------------------------------------
// Paths
// ---------------------------------------------------------------------------

/// A morphism of the path category, stored as its colour-ascending normal
/// form. Vertices are the degree-zero paths. Paths are only meaningful
/// relative to the KGraph that produced them.
class Path {
 public:
  Path() = default;

  VertexId range() const noexcept { return range_; }
  VertexId source() const noexcept { return source_; }
  const DegreeVector& degree() const noexcept { return degree_; }
  const std::vector<EdgeId>& word() const noexcept { return word_; }
  bool is_vertex() const noexcept { return word_.empty(); }
  std::size_t length() const noexcept { return word_.size(); }

  friend bool operator==(const Path& a, const Path& b) {
    return a.range_ == b.range_ && a.word_ == b.word_;
  }
  /// Canonical order: range, then degree (graded lexicographic), then word.
  friend std::strong_ordering operator<=>(const Path& a, const Path& b);

 private:
  friend class KGraph;
  Path(VertexId range, VertexId source, DegreeVector degree, std::vector<EdgeId> word)
      : range_(range), source_(source), degree_(std::move(degree)), word_(std::move(word)) {}

  VertexId range_{};
  VertexId source_{};
  DegreeVector degree_;
  std::vector<EdgeId> word_;
};

// ---------------------------------------------------------------------------
// KGraph
// ---------------------------------------------------------------------------

class KGraph;

/// Validates a skeleton and builds the k-graph it presents. Vertices and
/// edges are re-indexed in id order so that word comparison is id
/// comparison.
KGraph validate(const SkeletonSpec& spec);

class KGraph {
 public:
  std::size_t rank() const noexcept { return rank_; }
  std::size_t vertex_count() const noexcept { return vertex_names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::string& name(VertexId v) const { return vertex_names_.at(index_of(v)); }
  const std::string& name(EdgeId e) const { return edges_.at(index_of(e)).name; }
  std::optional<VertexId> find_vertex(std::string_view id) const;
  std::optional<EdgeId> find_edge(std::string_view id) const;

  /// 0-based colour.
  std::size_t color(EdgeId e) const { return edges_[index_of(e)].color; }
  VertexId range(EdgeId e) const { return edges_[index_of(e)].range; }
  VertexId source(EdgeId e) const { return edges_[index_of(e)].source; }

  /// Edges of 0-based colour `color` whose range is `v`, ascending.
  std::span<const EdgeId> edges_into(VertexId v, std::size_t color) const {
    return into_[index_of(v) * rank_ + color];
  }

  std::vector<VertexId> vertices() const;

  /// Whether the 1-skeleton has a directed cycle (equivalently, Λ is infinite).
  bool is_cyclic() const noexcept { return cyclic_; }
  /// Coordinatewise maximum degree of a path; only for acyclic graphs.
  const DegreeVector& max_degree() const;
  /// Every vertex reachable from `v` receives edges of every colour, so that
  /// wΛ^n is nonempty for all such w and all n.
  bool source_free_from(VertexId v) const;

  /// The square partner of the composable two-colour word (x, y).
  std::pair<EdgeId, EdgeId> swap(EdgeId x, EdgeId y) const;

  Path vertex_path(VertexId v) const;
  Path edge_path(EdgeId e) const;
  /// Normal form of a composable edge word given in any colour order.
  Path path_from_word(VertexId range, std::span<const EdgeId> word) const;

  Path compose(const Path& p, const Path& q) const;
  /// λ(m, n). Requires 0 <= m <= n <= d(p).
  Path segment(const Path& p, const DegreeVector& m, const DegreeVector& n) const;
  /// (p(0,m), p(m,d(p))).
  std::pair<Path, Path> factor(const Path& p, const DegreeVector& m) const;
  /// The vertex p(m).
  VertexId vertex_at(const Path& p, const DegreeVector& m) const;
  /// Whether q = p(0, d(q)).
  bool is_prefix(const Path& q, const Path& p) const;

  /// vΛ^n in canonical order.
  std::vector<Path> paths(VertexId v, const DegreeVector& n) const;
  /// vΛ^{<=N} in canonical order.
  std::vector<Path> paths_up_to(VertexId v, const DegreeVector& bound) const;

  /// Rewrites the edge sequence so that its colour sequence is `colors`
  /// (a permutation of the word's colours), applying squares only.
  std::vector<EdgeId> rearrange(std::span<const EdgeId> word,
                                std::span<const std::size_t> colors) const;

  std::string to_string(const Path& p) const;
  /// Inverse of to_string: a vertex id, or edge ids joined by '.' read from
  /// the range end (any colour order, must be composable).
  Path parse_path(std::string_view text) const;

  /// Canonical skeleton: ids sorted, squares normalised so that e has the
  /// smaller colour, squares sorted.
  SkeletonSpec spec() const;

 private:
  friend KGraph validate(const SkeletonSpec& spec);

  struct Edge {
    std::string name;
    std::size_t color;
    VertexId range;
    VertexId source;
  };

  KGraph() = default;
  void check_composable_word(VertexId range, std::span<const EdgeId> word) const;
  DegreeVector histogram(std::span<const EdgeId> word) const;
  VertexId end_vertex(VertexId range, std::span<const EdgeId> word) const;

  std::size_t rank_ = 0;
  std::vector<std::string> vertex_names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> into_;  // [vertex * rank + color]
  std::map<std::pair<EdgeId, EdgeId>, std::pair<EdgeId, EdgeId>> swaps_;
  std::map<std::string, VertexId, std::less<>> vertex_lookup_;
  std::map<std::string, EdgeId, std::less<>> edge_lookup_;
  bool cyclic_ = false;
  std::optional<DegreeVector> max_degree_;
};

/// A materialised finite window of Λ, grouped by range and source. Without
/// a window the graph must be acyclic and the catalogue is all of Λ.
class PathCatalog {
 public:
  explicit PathCatalog(const KGraph& graph);
  PathCatalog(const KGraph& graph, const DegreeVector& window);

  const KGraph& graph() const noexcept { return *graph_; }
  /// True when the catalogue is all of Λ.
  bool exact() const noexcept { return exact_; }
  const DegreeVector& window() const noexcept { return window_; }

  // The rvalue overloads return by value so `for (p : PathCatalog(g).all())`
  // does not dangle.
  const std::vector<Path>& all() const& noexcept { return all_; }
  std::vector<Path> all() && { return std::move(all_); }
  /// Paths with range v (vΛ), canonical order.
  const std::vector<Path>& with_range(VertexId v) const& { return by_range_.at(index_of(v)); }
  std::vector<Path> with_range(VertexId v) && { return std::move(by_range_.at(index_of(v))); }
  /// Paths with source v (Λv), canonical order.
  const std::vector<Path>& with_source(VertexId v) const& { return by_source_.at(index_of(v)); }
  std::vector<Path> with_source(VertexId v) && { return std::move(by_source_.at(index_of(v))); }
  std::optional<std::size_t> find(const Path& p) const;
  bool contains(const Path& p) const { return find(p).has_value(); }

 private:
  void build();

  const KGraph* graph_;
  bool exact_ = false;
  DegreeVector window_;
  std::vector<Path> all_;
  std::vector<std::vector<Path>> by_range_;
  std::vector<std::vector<Path>> by_source_;
  std::map<Path, std::size_t> index_;
};

}  // namespace kgck
