#include "kgck/kgraph.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "kgck/error.hpp"

namespace kgck {

std::strong_ordering operator<=>(const Path& a, const Path& b) {
  if (auto c = a.range_ <=> b.range_; c != 0) return c;
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  return a.word_ <=> b.word_;
}

void check_structure(const SkeletonSpec& spec) {
  if (spec.rank == 0) throw Error(ErrorCode::DomainError, "rank must be at least 1");
  std::set<std::string, std::less<>> ids;
  for (const auto& v : spec.vertices) {
    if (v.empty()) throw Error(ErrorCode::ParseError, "empty vertex id");
    if (!ids.insert(v).second) throw Error(ErrorCode::DuplicateId, "vertex '" + v + "'");
  }
  std::set<std::string, std::less<>> vertex_ids(spec.vertices.begin(), spec.vertices.end());
  for (const auto& e : spec.edges) {
    if (e.id.empty()) throw Error(ErrorCode::ParseError, "empty edge id");
    if (e.id.find('.') != std::string::npos) {
      throw Error(ErrorCode::ParseError, "edge id '" + e.id + "' contains '.'");
    }
    if (!ids.insert(e.id).second) throw Error(ErrorCode::DuplicateId, "edge '" + e.id + "'");
    if (e.color < 1 || e.color > spec.rank) {
      throw Error(ErrorCode::UnknownColor,
                  "edge '" + e.id + "' has colour " + std::to_string(e.color));
    }
    if (!vertex_ids.contains(e.range)) {
      throw Error(ErrorCode::UnknownVertex, "range '" + e.range + "' of edge '" + e.id + "'");
    }
    if (!vertex_ids.contains(e.source)) {
      throw Error(ErrorCode::UnknownVertex, "source '" + e.source + "' of edge '" + e.id + "'");
    }
  }
}

namespace {

std::string describe(const KGraph& g, std::initializer_list<EdgeId> word) {
  std::string out;
  for (auto e : word) {
    if (!out.empty()) out += ' ';
    out += g.name(e);
  }
  return out;
}

bool has_directed_cycle(std::size_t n, const std::vector<std::vector<std::uint32_t>>& adj) {
  // 0 = unvisited, 1 = on stack, 2 = done
  std::vector<int> state(n, 0);
  std::function<bool(std::uint32_t)> visit = [&](std::uint32_t u) {
    state[u] = 1;
    for (auto w : adj[u]) {
      if (state[w] == 1) return true;
      if (state[w] == 0 && visit(w)) return true;
    }
    state[u] = 2;
    return false;
  };
  for (std::uint32_t u = 0; u < n; ++u) {
    if (state[u] == 0 && visit(u)) return true;
  }
  return false;
}

}  // namespace

KGraph validate(const SkeletonSpec& spec) {
  check_structure(spec);
  KGraph g;
  g.rank_ = spec.rank;

  g.vertex_names_ = spec.vertices;
  std::sort(g.vertex_names_.begin(), g.vertex_names_.end());
  for (std::uint32_t i = 0; i < g.vertex_names_.size(); ++i) {
    g.vertex_lookup_.emplace(g.vertex_names_[i], VertexId{i});
  }

  std::vector<EdgeSpec> edges = spec.edges;
  std::sort(edges.begin(), edges.end(),
            [](const EdgeSpec& a, const EdgeSpec& b) { return a.id < b.id; });
  for (std::uint32_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    g.edges_.push_back({e.id, e.color - 1, g.vertex_lookup_.at(e.range),
                        g.vertex_lookup_.at(e.source)});
    g.edge_lookup_.emplace(e.id, EdgeId{i});
  }
  g.into_.assign(g.vertex_names_.size() * g.rank_, {});
  for (std::uint32_t i = 0; i < g.edges_.size(); ++i) {
    const auto& e = g.edges_[i];
    g.into_[index_of(e.range) * g.rank_ + e.color].push_back(EdgeId{i});
  }

  auto lookup_edge = [&](const std::string& id) {
    auto found = g.find_edge(id);
    if (!found) throw Error(ErrorCode::UnknownEdge, "square mentions unknown edge '" + id + "'");
    return *found;
  };

  for (const auto& sq : spec.squares) {
    EdgeId e = lookup_edge(sq.e), f = lookup_edge(sq.f);
    EdgeId fp = lookup_edge(sq.f_prime), ep = lookup_edge(sq.e_prime);
    const std::string where = "square [" + describe(g, {e, f, fp, ep}) + "]";
    if (g.color(e) != g.color(ep) || g.color(f) != g.color(fp) || g.color(e) == g.color(f)) {
      throw Error(ErrorCode::IncompatibleEndpoints, where + " has inconsistent colours");
    }
    if (g.range(e) != g.range(fp) || g.source(e) != g.range(f) ||
        g.source(f) != g.source(ep) || g.source(fp) != g.range(ep)) {
      throw Error(ErrorCode::IncompatibleEndpoints, where);
    }
    auto insert = [&](std::pair<EdgeId, EdgeId> from, std::pair<EdgeId, EdgeId> to) {
      auto [it, inserted] = g.swaps_.emplace(from, to);
      if (!inserted && it->second != to) {
        throw Error(ErrorCode::NonBijectiveSquare,
                    "pair (" + describe(g, {from.first, from.second}) + ") is matched with both (" +
                        describe(g, {it->second.first, it->second.second}) + ") and (" +
                        describe(g, {to.first, to.second}) + ")");
      }
    };
    insert({e, f}, {fp, ep});
    insert({fp, ep}, {e, f});
  }

  // Completeness: every composable two-colour pair lies in exactly one square.
  for (std::uint32_t xi = 0; xi < g.edges_.size(); ++xi) {
    EdgeId x{xi};
    for (std::size_t c = 0; c < g.rank_; ++c) {
      if (c == g.color(x)) continue;
      for (EdgeId y : g.edges_into(g.source(x), c)) {
        if (!g.swaps_.contains({x, y})) {
          throw Error(ErrorCode::MissingSquare,
                      "no square for the path (" + describe(g, {x, y}) + ")");
        }
      }
    }
  }

  // Associativity: every three-colour word sorts to the same normal form
  // along every sequence of square swaps.
  if (g.rank_ >= 3) {
    std::function<void(std::vector<EdgeId>, std::set<std::vector<EdgeId>>&)> sort_all =
        [&](std::vector<EdgeId> w, std::set<std::vector<EdgeId>>& out) {
          bool sorted = true;
          for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (g.color(w[i]) > g.color(w[i + 1])) {
              sorted = false;
              auto next = w;
              std::tie(next[i], next[i + 1]) = g.swap(w[i], w[i + 1]);
              sort_all(std::move(next), out);
            }
          }
          if (sorted) out.insert(w);
        };
    for (std::uint32_t xi = 0; xi < g.edges_.size(); ++xi) {
      EdgeId x{xi};
      for (std::size_t cy = 0; cy < g.rank_; ++cy) {
        if (cy == g.color(x)) continue;
        for (EdgeId y : g.edges_into(g.source(x), cy)) {
          for (std::size_t cz = 0; cz < g.rank_; ++cz) {
            if (cz == g.color(x) || cz == cy) continue;
            for (EdgeId z : g.edges_into(g.source(y), cz)) {
              std::set<std::vector<EdgeId>> forms;
              sort_all({x, y, z}, forms);
              if (forms.size() != 1) {
                throw Error(ErrorCode::HexagonViolation,
                            "the path (" + describe(g, {x, y, z}) +
                                ") has more than one normal form");
              }
            }
          }
        }
      }
    }
  }

  std::vector<std::vector<std::uint32_t>> adj(g.vertex_names_.size());
  for (const auto& e : g.edges_) adj[index_of(e.range)].push_back(index_of(e.source));
  g.cyclic_ = has_directed_cycle(g.vertex_names_.size(), adj);

  if (!g.cyclic_) {
    // Longest run of each colour, by memoised search over normal forms.
    DegreeVector best(g.rank_);
    std::vector<VertexId> verts = g.vertices();
    for (auto v : verts) {
      std::function<void(VertexId, std::size_t, DegreeVector&)> walk =
          [&](VertexId cur, std::size_t color, DegreeVector& d) {
            best = join(best, d);
            for (std::size_t c = color; c < g.rank_; ++c) {
              for (EdgeId e : g.edges_into(cur, c)) {
                ++d[c];
                walk(g.source(e), c, d);
                --d[c];
              }
            }
          };
      DegreeVector d(g.rank_);
      walk(v, 0, d);
    }
    g.max_degree_ = best;
  }
  return g;
}

std::optional<VertexId> KGraph::find_vertex(std::string_view id) const {
  auto it = vertex_lookup_.find(id);
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> KGraph::find_edge(std::string_view id) const {
  auto it = edge_lookup_.find(id);
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

std::vector<VertexId> KGraph::vertices() const {
  std::vector<VertexId> out;
  for (std::uint32_t i = 0; i < vertex_names_.size(); ++i) out.push_back(VertexId{i});
  return out;
}

const DegreeVector& KGraph::max_degree() const {
  if (!max_degree_) {
    throw Error(ErrorCode::CyclicGraphUnsupported, "maximum degree of a cyclic graph");
  }
  return *max_degree_;
}

bool KGraph::source_free_from(VertexId v) const {
  std::vector<bool> seen(vertex_count(), false);
  std::vector<VertexId> stack{v};
  seen[index_of(v)] = true;
  while (!stack.empty()) {
    VertexId w = stack.back();
    stack.pop_back();
    for (std::size_t c = 0; c < rank_; ++c) {
      auto in = edges_into(w, c);
      if (in.empty()) return false;
      for (EdgeId e : in) {
        auto s = index_of(source(e));
        if (!seen[s]) {
          seen[s] = true;
          stack.push_back(source(e));
        }
      }
    }
  }
  return true;
}

std::pair<EdgeId, EdgeId> KGraph::swap(EdgeId x, EdgeId y) const {
  auto it = swaps_.find({x, y});
  if (it == swaps_.end()) {
    throw Error(ErrorCode::NotComposable,
                "no square for (" + name(x) + " " + name(y) + ")");
  }
  return it->second;
}

Path KGraph::vertex_path(VertexId v) const { return Path(v, v, DegreeVector(rank_), {}); }

Path KGraph::edge_path(EdgeId e) const {
  return Path(range(e), source(e), DegreeVector::unit(rank_, color(e)), {e});
}

DegreeVector KGraph::histogram(std::span<const EdgeId> word) const {
  DegreeVector d(rank_);
  for (auto e : word) ++d[color(e)];
  return d;
}

VertexId KGraph::end_vertex(VertexId r, std::span<const EdgeId> word) const {
  return word.empty() ? r : source(word.back());
}

void KGraph::check_composable_word(VertexId r, std::span<const EdgeId> word) const {
  VertexId cur = r;
  for (auto e : word) {
    if (range(e) != cur) {
      throw Error(ErrorCode::NotComposable,
                  "edge '" + name(e) + "' does not start at '" + name(cur) + "'");
    }
    cur = source(e);
  }
}

Path KGraph::path_from_word(VertexId r, std::span<const EdgeId> word) const {
  check_composable_word(r, word);
  std::vector<EdgeId> w(word.begin(), word.end());
  // insertion sort by colour, one square per adjacent swap
  for (std::size_t i = 1; i < w.size(); ++i) {
    for (std::size_t j = i; j > 0 && color(w[j - 1]) > color(w[j]); --j) {
      std::tie(w[j - 1], w[j]) = swap(w[j - 1], w[j]);
    }
  }
  const VertexId s = end_vertex(r, w);
  DegreeVector d = histogram(w);
  return Path(r, s, std::move(d), std::move(w));
}

Path KGraph::compose(const Path& p, const Path& q) const {
  if (p.source() != q.range()) {
    throw Error(ErrorCode::NotComposable, "s(" + to_string(p) + ") = " + name(p.source()) +
                                              " but r(" + to_string(q) + ") = " +
                                              name(q.range()));
  }
  std::vector<EdgeId> w = p.word();
  w.insert(w.end(), q.word().begin(), q.word().end());
  for (std::size_t i = p.length(); i < w.size(); ++i) {
    for (std::size_t j = i; j > 0 && color(w[j - 1]) > color(w[j]); --j) {
      std::tie(w[j - 1], w[j]) = swap(w[j - 1], w[j]);
    }
  }
  return Path(p.range(), q.source(), p.degree() + q.degree(), std::move(w));
}

std::vector<EdgeId> KGraph::rearrange(std::span<const EdgeId> word,
                                      std::span<const std::size_t> colors) const {
  std::vector<EdgeId> w(word.begin(), word.end());
  for (std::size_t i = 0; i < colors.size(); ++i) {
    std::size_t j = i;
    while (j < w.size() && color(w[j]) != colors[i]) ++j;
    if (j == w.size()) {
      throw Error(ErrorCode::DegreeOutOfRange, "colour sequence is not a permutation of the word");
    }
    // everything in [i, j) has a colour other than colors[i]
    for (; j > i; --j) std::tie(w[j - 1], w[j]) = swap(w[j - 1], w[j]);
  }
  return w;
}

std::pair<Path, Path> KGraph::factor(const Path& p, const DegreeVector& m) const {
  return {segment(p, DegreeVector(rank_), m), segment(p, m, p.degree())};
}

Path KGraph::segment(const Path& p, const DegreeVector& m, const DegreeVector& n) const {
  if (!leq(m, n) || !leq(n, p.degree())) {
    throw Error(ErrorCode::DegreeOutOfRange, "segment " + m.to_string() + ".." + n.to_string() +
                                                 " of a path of degree " +
                                                 p.degree().to_string());
  }
  if (m.is_zero() && n == p.degree()) return p;
  std::vector<std::size_t> target;
  target.reserve(p.length());
  auto append_block = [&](const DegreeVector& d) {
    for (std::size_t c = 0; c < rank_; ++c) target.insert(target.end(), d[c], c);
  };
  append_block(m);
  append_block(n - m);
  append_block(p.degree() - n);
  std::vector<EdgeId> w = rearrange(p.word(), target);
  auto begin = static_cast<std::ptrdiff_t>(m.total());
  auto end = static_cast<std::ptrdiff_t>(n.total());
  VertexId r = begin == 0 ? p.range() : source(w[begin - 1]);
  std::vector<EdgeId> middle(w.begin() + begin, w.begin() + end);
  VertexId s = end_vertex(r, middle);
  return Path(r, s, n - m, std::move(middle));
}

VertexId KGraph::vertex_at(const Path& p, const DegreeVector& m) const {
  return segment(p, m, m).range();
}

bool KGraph::is_prefix(const Path& q, const Path& p) const {
  if (q.range() != p.range() || !leq(q.degree(), p.degree())) return false;
  return segment(p, DegreeVector(rank_), q.degree()) == q;
}

std::vector<Path> KGraph::paths(VertexId v, const DegreeVector& n) const {
  std::vector<Path> out;
  std::vector<EdgeId> word;
  std::function<void(VertexId, std::size_t, std::uint32_t)> rec =
      [&](VertexId cur, std::size_t c, std::uint32_t left) {
        while (c < rank_ && left == 0) {
          ++c;
          if (c < rank_) left = n[c];
        }
        if (c == rank_) {
          out.push_back(Path(v, cur, n, word));
          return;
        }
        for (EdgeId e : edges_into(cur, c)) {
          word.push_back(e);
          rec(source(e), c, left - 1);
          word.pop_back();
        }
      };
  rec(v, 0, n[0]);
  return out;
}

std::vector<Path> KGraph::paths_up_to(VertexId v, const DegreeVector& bound) const {
  std::vector<Path> out;
  for (const auto& n : lattice_below(bound)) {
    auto layer = paths(v, n);
    out.insert(out.end(), std::make_move_iterator(layer.begin()),
               std::make_move_iterator(layer.end()));
  }
  return out;
}

std::string KGraph::to_string(const Path& p) const {
  if (p.is_vertex()) return name(p.range());
  std::string out;
  for (auto e : p.word()) {
    if (!out.empty()) out += '.';
    out += name(e);
  }
  return out;
}

Path KGraph::parse_path(std::string_view text) const {
  if (auto v = find_vertex(text)) return vertex_path(*v);
  std::vector<EdgeId> word;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto dot = text.find('.', start);
    auto piece = text.substr(start, dot == std::string_view::npos ? dot : dot - start);
    auto e = find_edge(piece);
    if (!e) throw Error(ErrorCode::UnknownEdge, "'" + std::string(piece) + "' in path '" +
                                                    std::string(text) + "'");
    word.push_back(*e);
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return path_from_word(range(word.front()), word);
}

SkeletonSpec KGraph::spec() const {
  SkeletonSpec s;
  s.rank = static_cast<std::uint32_t>(rank_);
  s.vertices = vertex_names_;
  for (const auto& e : edges_) {
    s.edges.push_back({e.name, static_cast<std::uint32_t>(e.color + 1), name(e.range),
                       name(e.source)});
  }
  for (const auto& [from, to] : swaps_) {
    if (color(from.first) < color(from.second)) {
      s.squares.push_back({name(from.first), name(from.second), name(to.first), name(to.second)});
    }
  }
  std::sort(s.squares.begin(), s.squares.end(), [](const SquareSpec& a, const SquareSpec& b) {
    return std::tie(a.e, a.f, a.f_prime, a.e_prime) < std::tie(b.e, b.f, b.f_prime, b.e_prime);
  });
  return s;
}

// ---------------------------------------------------------------------------

PathCatalog::PathCatalog(const KGraph& graph) : graph_(&graph), exact_(true) {
  if (graph.is_cyclic()) {
    throw Error(ErrorCode::CyclicGraphUnsupported,
                "a cyclic graph has infinitely many paths; give a window");
  }
  window_ = graph.max_degree();
  build();
}

PathCatalog::PathCatalog(const KGraph& graph, const DegreeVector& window)
    : graph_(&graph), window_(window) {
  if (window.rank() != graph.rank()) {
    throw Error(ErrorCode::DomainError, "window rank does not match the graph");
  }
  exact_ = !graph.is_cyclic() && leq(graph.max_degree(), window);
  build();
}

void PathCatalog::build() {
  const auto n = graph_->vertex_count();
  by_range_.assign(n, {});
  by_source_.assign(n, {});
  for (auto v : graph_->vertices()) {
    by_range_[index_of(v)] = graph_->paths_up_to(v, window_);
    for (const auto& p : by_range_[index_of(v)]) {
      by_source_[index_of(p.source())].push_back(p);
      all_.push_back(p);
    }
  }
  for (auto& list : by_source_) std::sort(list.begin(), list.end());
  for (std::size_t i = 0; i < all_.size(); ++i) index_.emplace(all_[i], i);
}

std::optional<std::size_t> PathCatalog::find(const Path& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace kgck
