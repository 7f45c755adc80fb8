#pragma once

// Brute-force reference implementations used by the unit and acceptance
// tests. Everything here is computed from the raw skeleton (edge list and
// square table) without the library's normal form: a path is the class of
// edge words reachable by swapping adjacent letters along squares.

#include <compare>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "kgck/alignment.hpp"
#include "kgck/kgraph.hpp"

namespace kgck::oracle {

using Word = std::vector<int>;
using Degree = std::vector<int>;

/// A path: range vertex plus the least word of its class.
struct Key {
  int range = 0;
  Word word;
  friend auto operator<=>(const Key&, const Key&) = default;
};

struct Fam {
  int range = 0;
  std::set<Key> members;
  friend auto operator<=>(const Fam&, const Fam&) = default;
};

class Model {
 public:
  explicit Model(const KGraph& g);

  const KGraph& graph() const { return *g_; }
  std::size_t rank() const { return rank_; }
  int vertex_count() const { return static_cast<int>(vertex_names_.size()); }

  // conversions to and from library values (by name only)
  Key key(const Path& p) const;
  Path path(const Key& k) const;
  Fam fam(const PathFamily& f) const;
  PathFamily family(const Fam& f) const;
  int vertex(VertexId v) const;

  const std::set<Word>& klass(const Word& w) const;
  Key canon(int range, const Word& w) const;
  Degree degree(const Word& w) const;
  int source(const Key& k) const;
  bool is_vertex(const Key& k) const { return k.word.empty(); }

  /// Classes of all composable words at v with the given colour histogram.
  std::vector<Key> paths(int v, const Degree& n) const;
  std::vector<Key> paths_up_to(int v, const Degree& bound) const;
  /// Largest colour histogram of any word (acyclic skeletons only).
  Degree max_degree() const;

  Key compose(const Key& p, const Key& q) const;
  bool is_prefix(const Key& q, const Key& p) const;
  /// All (p(0,m), p(m,d(p))) read off words in the class of p.
  std::set<std::pair<Key, Key>> factorizations(const Key& p, const Degree& m) const;
  /// Every prefix of p (including the vertex and p itself).
  std::set<Key> prefixes(const Key& p) const;
  /// (n, q) for every factorisation p = p(0,n) q.
  std::vector<std::pair<Degree, Key>> tails(const Key& p) const;

  std::set<Key> mce(const Key& mu, const Key& nu) const;
  std::set<Key> ext(const Key& mu, const std::set<Key>& e) const;
  bool in_extensions(const Key& mu, const std::set<Key>& e) const;

  /// Ext(λ; E) != ∅ for every λ ∈ vΛ^{<= bound}.
  bool exhaustive(int v, const std::set<Key>& e, const Degree& bound) const;

 private:
  const KGraph* g_;
  std::size_t rank_;
  std::vector<std::string> vertex_names_;
  std::vector<std::string> edge_names_;
  std::vector<int> color_, range_, source_;
  std::map<std::string, int> vertex_index_, edge_index_;
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> swaps_;
  mutable std::map<Word, std::size_t> class_of_;
  mutable std::deque<std::set<Word>> classes_;  // deque: klass() references stay valid
};

Degree join(const Degree& a, const Degree& b);
bool leq(const Degree& a, const Degree& b);
Degree to_degree(const DegreeVector& d);

// ---------------------------------------------------------------------------
// Finite exhaustive sets and satiation, straight from the axioms
// ---------------------------------------------------------------------------

/// Every FE family at every vertex of an acyclic graph (at most 16
/// non-vertex paths per vertex).
std::set<Fam> all_fe(const Model& m);

/// The least collection containing `generators` and closed under (S1)-(S4),
/// by forward chaining over `fe`. Throws std::logic_error if a rule produces
/// a family outside `fe`.
std::set<Fam> least_satiated(const Model& m, const std::set<Fam>& fe,
                             const std::set<Fam>& generators);

/// Whether `c` is closed under (S1)-(S4).
bool is_satiated(const Model& m, const std::set<Fam>& fe, const std::set<Fam>& c);

/// E-compatible boundary paths straight from the definition: for every
/// factorisation x = x(0,n) y and every E in S at x(n), some member of E is
/// an initial segment of y.
bool is_boundary(const Model& m, const Key& x, const std::set<Fam>& s);

}  // namespace kgck::oracle
