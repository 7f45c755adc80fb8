#include "kgck/satiation.hpp"

#include <algorithm>
#include <bit>

#include "kgck/error.hpp"
#include "kgck/exhaustive.hpp"

namespace kgck {

namespace {

constexpr std::size_t kHardCandidateLimit = 63;

FamilyMask bit(std::size_t i) { return FamilyMask{1} << i; }

template <typename F>
void for_each_bit(FamilyMask mask, F&& f) {
  while (mask) {
    const auto i = static_cast<std::size_t>(std::countr_zero(mask));
    f(i);
    mask &= mask - 1;
  }
}

/// Inserts a Σ-produced family, which the theory guarantees to be in FE(Λ).
/// A failure is a library bug when the universe is exact; otherwise the
/// family is outside what the window can certify and is dropped.
void admit(FamilyCollection& out, VertexId v, FamilyMask mask) {
  const Universe& u = out.universe();
  if (u.is_fe(v, mask)) {
    out.insert(v, mask);
    return;
  }
  if (u.exact() && (u.max_family_size() == 0)) {
    throw Error(ErrorCode::InvariantViolation,
                "Σ produced a non-exhaustive family " + to_string(u.graph(), u.family(v, mask)));
  }
}

struct GraftOption {
  FamilyMask produced;
  std::optional<FamilyMask> replacement;  // F_λ at s(λ), if λ is replaced
};

/// Options for one member λ_i of E in (S4): keep λ_i, or replace it by
/// λ_i F for some F ∈ s(λ_i)C whose graft stays in the window.
std::vector<GraftOption> graft_options(const FamilyCollection& c, VertexId v, std::size_t i) {
  const Universe& u = c.universe();
  const auto& tv = u.at(v);
  const Path& lambda = tv.cands[i];
  std::vector<GraftOption> out{{bit(i), std::nullopt}};
  for (FamilyMask f : c.at(lambda.source())) {
    FamilyMask produced = 0;
    bool inside = true;
    for_each_bit(f, [&](std::size_t j) {
      const std::size_t k = tv.graft[i][j];
      if (k == Universe::npos) {
        inside = false;
      } else {
        produced |= bit(k);
      }
    });
    if (inside) out.push_back({produced, f});
  }
  return out;
}

std::string describe_graft(const Universe& u, VertexId v,
                           const std::vector<std::pair<std::size_t, FamilyMask>>& choices) {
  const KGraph& g = u.graph();
  std::string out = "G' = {";
  for (std::size_t k = 0; k < choices.size(); ++k) {
    if (k) out += ", ";
    out += g.to_string(u.candidates(v)[choices[k].first]);
  }
  out += "}";
  for (const auto& [i, f] : choices) {
    const Path& lambda = u.candidates(v)[i];
    out += "; G'_" + g.to_string(lambda) + " = " + to_string(g, u.family(lambda.source(), f));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Universe
// ---------------------------------------------------------------------------

std::shared_ptr<const Universe> Universe::build(const KGraph& g, const UniverseOptions& options) {
  std::shared_ptr<Universe> u(new Universe(g));
  if (options.window) {
    if (options.window->rank() != g.rank()) {
      throw Error(ErrorCode::PreconditionFailed, "window rank differs from graph rank");
    }
    u->window_ = *options.window;
  } else if (g.is_cyclic()) {
    throw Error(ErrorCode::PreconditionFailed, "a cyclic graph needs an explicit degree window");
  } else {
    u->window_ = g.max_degree();
  }
  u->max_family_size_ = options.max_family_size;
  u->exact_ = !g.is_cyclic() && leq(g.max_degree(), u->window_) && options.max_family_size == 0;

  const std::size_t limit = std::min(options.max_candidates, kHardCandidateLimit);
  const auto vertices = g.vertices();
  u->tables_.resize(vertices.size());
  u->fe_cache_.resize(vertices.size());

  for (VertexId v : vertices) {
    auto& t = u->tables_[index_of(v)];
    t.window_paths = g.paths_up_to(v, u->window_);
    for (const auto& p : t.window_paths) {
      if (p.is_vertex()) {
        t.window_to_cand.push_back(npos);
      } else {
        t.window_to_cand.push_back(t.cands.size());
        t.cand_index.emplace(p, t.cands.size());
        t.cands.push_back(p);
      }
    }
    if (t.cands.size() > limit) {
      throw Error(ErrorCode::UniverseTooLarge,
                  std::to_string(t.cands.size()) + " candidate paths at " + g.name(v) +
                      " (limit " + std::to_string(limit) + ")");
    }
  }

  for (VertexId v : vertices) {
    auto& t = u->tables_[index_of(v)];
    const std::size_t n = t.cands.size();

    t.truncations.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Path& lambda = t.cands[i];
      for (const auto& m : lattice_below(lambda.degree())) {
        if (m.is_zero()) continue;
        t.truncations[i].push_back(
            t.cand_index.at(g.segment(lambda, DegreeVector(g.rank()), m)));
      }
    }

    for (const auto& w : t.window_paths) {
      FamilyMask prefixes = 0;
      std::vector<FamilyMask> exts(n, 0);
      const auto& ts = u->tables_[index_of(w.source())];
      for (std::size_t i = 0; i < n; ++i) {
        if (leq(t.cands[i].degree(), w.degree()) && g.is_prefix(t.cands[i], w)) prefixes |= bit(i);
        for (const auto& pair : lambda_min(g, w, t.cands[i])) {
          if (pair.alpha.is_vertex()) continue;
          exts[i] |= bit(ts.cand_index.at(pair.alpha));
        }
      }
      t.prefix_mask.push_back(prefixes);
      t.ext_single.push_back(std::move(exts));
    }

    t.graft.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& ts = u->tables_[index_of(t.cands[i].source())];
      for (const auto& tail : ts.cands) {
        Path p = g.compose(t.cands[i], tail);
        auto it = t.cand_index.find(p);
        t.graft[i].push_back(it == t.cand_index.end() ? npos : it->second);
      }
    }

    if (!g.is_cyclic()) {
      for (const auto& lambda : g.paths_up_to(v, g.max_degree())) {
        FamilyMask h = 0;
        for (std::size_t i = 0; i < n; ++i) {
          if (aligned(g, lambda, t.cands[i])) h |= bit(i);
        }
        t.hits.push_back(h);
      }
    }
  }
  return u;
}

std::optional<std::size_t> Universe::candidate_index(VertexId v, const Path& p) const {
  const auto& idx = at(v).cand_index;
  auto it = idx.find(p);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

std::optional<FamilyMask> Universe::mask_of(const PathFamily& family) const {
  FamilyMask mask = 0;
  for (const auto& p : family.members()) {
    auto i = candidate_index(family.range(), p);
    if (!i) return std::nullopt;
    mask |= bit(*i);
  }
  return mask;
}

PathFamily Universe::family(VertexId v, FamilyMask mask) const {
  std::vector<Path> members;
  for_each_bit(mask, [&](std::size_t i) { members.push_back(at(v).cands.at(i)); });
  return PathFamily(v, std::move(members));
}

bool Universe::compute_fe(VertexId v, FamilyMask mask) const {
  if (mask == 0) return false;
  if (max_family_size_ != 0 && static_cast<std::size_t>(std::popcount(mask)) > max_family_size_) {
    return false;
  }
  if (!graph_.is_cyclic()) {
    const auto& hits = at(v).hits;
    return std::all_of(hits.begin(), hits.end(), [&](FamilyMask h) { return (h & mask) != 0; });
  }
  return is_exhaustive(graph_, family(v, mask)).status == ExhaustiveStatus::Exhaustive;
}

bool Universe::is_fe(VertexId v, FamilyMask mask) const {
  if (!graph_.is_cyclic()) return compute_fe(v, mask);
  {
    std::lock_guard lock(cache_mutex_);
    auto& cache = fe_cache_[index_of(v)];
    if (auto it = cache.find(mask); it != cache.end()) return it->second;
  }
  const bool result = compute_fe(v, mask);
  std::lock_guard lock(cache_mutex_);
  fe_cache_[index_of(v)].emplace(mask, result);
  return result;
}

std::vector<FamilyMask> Universe::all_fe(VertexId v) const {
  const std::size_t n = at(v).cands.size();
  std::vector<FamilyMask> out;
  const FamilyMask full = n == 0 ? 0 : (n == 64 ? ~FamilyMask{0} : bit(n) - 1);
  for (FamilyMask m = 1; m != 0 && m <= full; ++m) {
    if (is_fe(v, m)) out.push_back(m);
  }
  return out;
}

// ---------------------------------------------------------------------------
// FamilyCollection
// ---------------------------------------------------------------------------

FamilyCollection::FamilyCollection(std::shared_ptr<const Universe> universe)
    : universe_(std::move(universe)), members_(universe_->graph().vertex_count()) {}

FamilyCollection FamilyCollection::from_families(std::shared_ptr<const Universe> universe,
                                                 const std::vector<PathFamily>& families) {
  FamilyCollection out(std::move(universe));
  const Universe& u = *out.universe_;
  for (const auto& f : families) {
    const std::string shown = to_string(u.graph(), f);
    if (f.has_vertex()) {
      throw Error(ErrorCode::PreconditionFailed, "family " + shown + " contains a vertex");
    }
    auto mask = u.mask_of(f);
    if (!mask) {
      throw Error(ErrorCode::PreconditionFailed, "family " + shown + " leaves the degree window");
    }
    if (!u.is_fe(f.range(), *mask)) {
      throw Error(ErrorCode::PreconditionFailed,
                  "family " + shown + " is not provably exhaustive (or exceeds the size cap)");
    }
    out.insert(f.range(), *mask);
  }
  return out;
}

FamilyCollection FamilyCollection::full(std::shared_ptr<const Universe> universe) {
  FamilyCollection out(std::move(universe));
  for (VertexId v : out.universe_->graph().vertices()) {
    for (FamilyMask m : out.universe_->all_fe(v)) out.insert(v, m);
  }
  return out;
}

bool FamilyCollection::insert(VertexId v, FamilyMask mask) {
  return members_.at(index_of(v)).insert(mask).second;
}

bool FamilyCollection::contains(VertexId v, FamilyMask mask) const {
  return members_.at(index_of(v)).count(mask) != 0;
}

bool FamilyCollection::contains(const PathFamily& family) const {
  auto mask = universe_->mask_of(family);
  return mask && contains(family.range(), *mask);
}

std::size_t FamilyCollection::size() const {
  std::size_t n = 0;
  for (const auto& s : members_) n += s.size();
  return n;
}

std::vector<PathFamily> FamilyCollection::families() const {
  std::vector<PathFamily> out;
  for (VertexId v : universe_->graph().vertices()) {
    for (FamilyMask m : at(v)) out.push_back(universe_->family(v, m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PathFamily> FamilyCollection::minimal_families() const {
  std::vector<PathFamily> out;
  for (VertexId v : universe_->graph().vertices()) {
    const auto& s = at(v);
    for (FamilyMask m : s) {
      bool minimal = std::none_of(s.begin(), s.end(), [&](FamilyMask h) {
        return h != m && (h & m) == h;
      });
      if (minimal) out.push_back(universe_->family(v, m));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool FamilyCollection::subset_of(const FamilyCollection& other) const {
  if (universe_ != other.universe_) return false;
  for (std::size_t v = 0; v < members_.size(); ++v) {
    if (!std::includes(other.members_[v].begin(), other.members_[v].end(), members_[v].begin(),
                       members_[v].end())) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Σ maps
// ---------------------------------------------------------------------------

FamilyCollection sigma1(const FamilyCollection& c) {
  const Universe& u = c.universe();
  FamilyCollection out = c;
  for (VertexId v : u.graph().vertices()) {
    const std::size_t n = u.candidates(v).size();
    const FamilyMask full = n == 0 ? 0 : bit(n) - 1;
    for (FamilyMask e : c.at(v)) {
      for (FamilyMask f = e;; f = (f + 1) | e) {
        if (u.max_family_size() == 0 ||
            static_cast<std::size_t>(std::popcount(f)) <= u.max_family_size()) {
          out.insert(v, f);
        }
        if (f == full) break;
      }
    }
  }
  return out;
}

FamilyCollection sigma2(const FamilyCollection& c) {
  const Universe& u = c.universe();
  FamilyCollection out = c;
  for (VertexId v : u.graph().vertices()) {
    const auto& t = u.at(v);
    for (FamilyMask e : c.at(v)) {
      for (std::size_t w = 0; w < t.window_paths.size(); ++w) {
        if (t.prefix_mask[w] & e) continue;  // μ ∈ EΛ
        FamilyMask produced = 0;
        for_each_bit(e, [&](std::size_t i) { produced |= t.ext_single[w][i]; });
        admit(out, t.window_paths[w].source(), produced);
      }
    }
  }
  return out;
}

FamilyCollection sigma3(const FamilyCollection& c) {
  const Universe& u = c.universe();
  FamilyCollection out = c;
  for (VertexId v : u.graph().vertices()) {
    const auto& t = u.at(v);
    for (FamilyMask e : c.at(v)) {
      std::set<FamilyMask> partial{0};
      for_each_bit(e, [&](std::size_t i) {
        std::set<FamilyMask> next;
        for (FamilyMask p : partial) {
          for (std::size_t k : t.truncations[i]) next.insert(p | bit(k));
        }
        partial = std::move(next);
      });
      for (FamilyMask p : partial) admit(out, v, p);
    }
  }
  return out;
}

FamilyCollection sigma4(const FamilyCollection& c) {
  const Universe& u = c.universe();
  FamilyCollection out = c;
  for (VertexId v : u.graph().vertices()) {
    for (FamilyMask e : c.at(v)) {
      std::set<FamilyMask> partial{0};
      for_each_bit(e, [&](std::size_t i) {
        std::set<FamilyMask> next;
        const auto options = graft_options(c, v, i);
        for (FamilyMask p : partial) {
          for (const auto& o : options) next.insert(p | o.produced);
        }
        partial = std::move(next);
      });
      for (FamilyMask p : partial) admit(out, v, p);
    }
  }
  return out;
}

FamilyCollection sigma(const FamilyCollection& c) {
  return sigma4(sigma3(sigma2(sigma1(c))));
}

FamilyCollection satiate(const FamilyCollection& c, const SatiateOptions& options) {
  FamilyCollection current = c;
  for (std::size_t iteration = 0; iteration < options.max_iterations; ++iteration) {
    FamilyCollection next = sigma(current);
    if (next.size() > options.max_members) {
      throw Error(ErrorCode::FixpointBudgetExceeded,
                  "satiation exceeded " + std::to_string(options.max_members) + " families");
    }
    if (next == current) return current;
    current = std::move(next);
  }
  throw Error(ErrorCode::FixpointBudgetExceeded,
              "no fixed point after " + std::to_string(options.max_iterations) + " iterations");
}

// ---------------------------------------------------------------------------
// Axiom check
// ---------------------------------------------------------------------------

SatiationReport is_satiated(const FamilyCollection& c) {
  const Universe& u = c.universe();
  const KGraph& g = u.graph();
  SatiationReport report;

  // Orders the candidate generators canonically so the first violation is
  // reproducible.
  std::vector<std::pair<PathFamily, FamilyMask>> members;
  for (VertexId v : g.vertices()) {
    for (FamilyMask m : c.at(v)) members.emplace_back(u.family(v, m), m);
  }
  std::sort(members.begin(), members.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  auto fail = [&](std::string axiom, const PathFamily& gfam, VertexId w, FamilyMask produced,
                  std::string detail) {
    report.satiated = false;
    report.violation =
        SatiationViolation{std::move(axiom), gfam, u.family(w, produced), std::move(detail)};
    return report;
  };
  // A produced family counts only when the universe certifies it.
  auto missing = [&](VertexId w, FamilyMask m) { return u.is_fe(w, m) && !c.contains(w, m); };

  // (S1)
  for (const auto& [gfam, e] : members) {
    const VertexId v = gfam.range();
    const std::size_t n = u.candidates(v).size();
    const FamilyMask full = n == 0 ? 0 : bit(n) - 1;
    for (FamilyMask f = e;; f = (f + 1) | e) {
      if (missing(v, f)) return fail("S1", gfam, v, f, "superset not in the collection");
      if (f == full) break;
    }
  }
  // (S2)
  for (const auto& [gfam, e] : members) {
    const VertexId v = gfam.range();
    const auto& t = u.at(v);
    for (std::size_t w = 0; w < t.window_paths.size(); ++w) {
      if (t.prefix_mask[w] & e) continue;
      FamilyMask produced = 0;
      for_each_bit(e, [&](std::size_t i) { produced |= t.ext_single[w][i]; });
      const VertexId s = t.window_paths[w].source();
      if (missing(s, produced)) {
        return fail("S2", gfam, s, produced, "mu = " + g.to_string(t.window_paths[w]));
      }
    }
  }
  // (S3)
  for (const auto& [gfam, e] : members) {
    const VertexId v = gfam.range();
    const auto& t = u.at(v);
    std::map<FamilyMask, std::string> partial{{0, ""}};
    for_each_bit(e, [&](std::size_t i) {
      std::map<FamilyMask, std::string> next;
      for (const auto& [p, why] : partial) {
        for (std::size_t k : t.truncations[i]) {
          std::string entry = (why.empty() ? "" : why + ", ") + g.to_string(t.cands[i]) + " -> " +
                              g.to_string(t.cands[k]);
          next.emplace(p | bit(k), std::move(entry));
        }
      }
      partial = std::move(next);
    });
    for (const auto& [p, why] : partial) {
      if (missing(v, p)) return fail("S3", gfam, v, p, "truncations " + why);
    }
  }
  // (S4)
  for (const auto& [gfam, e] : members) {
    const VertexId v = gfam.range();
    using Choices = std::vector<std::pair<std::size_t, FamilyMask>>;
    std::map<FamilyMask, Choices> partial{{0, {}}};
    for_each_bit(e, [&](std::size_t i) {
      std::map<FamilyMask, Choices> next;
      const auto options = graft_options(c, v, i);
      for (const auto& [p, choices] : partial) {
        for (const auto& o : options) {
          Choices extended = choices;
          if (o.replacement) extended.emplace_back(i, *o.replacement);
          next.emplace(p | o.produced, std::move(extended));
        }
      }
      partial = std::move(next);
    });
    for (const auto& [p, choices] : partial) {
      if (missing(v, p)) return fail("S4", gfam, v, p, describe_graft(u, v, choices));
    }
  }
  return report;
}

std::string_view to_string(Membership m) {
  switch (m) {
    case Membership::Yes: return "Yes";
    case Membership::No: return "No";
    case Membership::Unknown: return "Unknown";
  }
  return "Unknown";
}

Membership member(const PathFamily& family, const FamilyCollection& s) {
  const Universe& u = s.universe();
  if (family.empty() || family.has_vertex()) return Membership::No;  // not in FE(Λ)
  if (auto mask = u.mask_of(family)) {
    if (s.contains(family.range(), *mask)) return Membership::Yes;
    if (u.exact()) return Membership::No;
  }
  const auto verdict = is_exhaustive(u.graph(), family);
  if (verdict.status == ExhaustiveStatus::NotExhaustive) return Membership::No;
  return Membership::Unknown;
}

}  // namespace kgck
