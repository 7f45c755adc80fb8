#include "kgck/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kgck/error.hpp"
#include "kgck/exhaustive.hpp"

namespace kgck {

namespace {

std::string lattice_name(const DegreeVector& n) { return n.to_string(); }

void require_exact(const FamilyCollection& s, std::string_view what) {
  if (!s.universe().exact()) {
    throw Error(ErrorCode::InexactUniverse,
                std::string(what) + " needs a satiation over an exact universe");
  }
}

void require_acyclic(const KGraph& g, std::string_view what) {
  if (g.is_cyclic()) {
    throw Error(ErrorCode::CyclicGraphUnsupported, std::string(what) + " on a cyclic graph");
  }
}

/// The families of s(λ)S in canonical order, per vertex.
std::vector<std::vector<PathFamily>> listings(const FamilyCollection& s) {
  std::vector<std::vector<PathFamily>> out(s.universe().graph().vertex_count());
  for (auto& f : s.families()) out[index_of(f.range())].push_back(std::move(f));
  return out;
}

bool aperiodic_against(const KGraph& g, const Path& x, const std::vector<Path>& into) {
  for (std::size_t i = 0; i < into.size(); ++i) {
    const Path lx = g.compose(into[i], x);
    for (std::size_t j = i + 1; j < into.size(); ++j) {
      if (into[i].range() != into[j].range()) continue;
      if (!mce(g, lx, g.compose(into[j], x)).empty()) return false;
    }
  }
  return true;
}

}  // namespace

KGraph omega(std::size_t k, const DegreeVector& m) {
  if (k == 0 || m.rank() != k) {
    throw Error(ErrorCode::DomainError, "omega needs k >= 1 and a degree of rank k");
  }
  SkeletonSpec spec;
  spec.rank = static_cast<std::uint32_t>(k);
  const auto points = lattice_below(m);
  auto edge_name = [](std::size_t color, const DegreeVector& n) {
    return "c" + std::to_string(color + 1) + lattice_name(n);
  };
  for (const auto& n : points) {
    spec.vertices.push_back(lattice_name(n));
    for (std::size_t i = 0; i < k; ++i) {
      DegreeVector up = n + DegreeVector::unit(k, i);
      if (!leq(up, m)) continue;
      spec.edges.push_back(
          {edge_name(i, n), static_cast<std::uint32_t>(i + 1), lattice_name(n), lattice_name(up)});
      for (std::size_t j = i + 1; j < k; ++j) {
        DegreeVector both = up + DegreeVector::unit(k, j);
        if (!leq(both, m)) continue;
        DegreeVector side = n + DegreeVector::unit(k, j);
        spec.squares.push_back({edge_name(i, n), edge_name(j, up), edge_name(j, n),
                                edge_name(i, side)});
      }
    }
  }
  return validate(spec);
}

std::uint64_t position(std::uint64_t m, std::uint64_t n) {
  if (m == 0 || n == 0) throw Error(ErrorCode::DomainError, "position is defined for m, n >= 1");
  const std::uint64_t t = m + n - 1;
  return t * (t - 1) / 2 + m;
}

std::pair<std::uint64_t, std::uint64_t> position_inverse(std::uint64_t l) {
  if (l == 0) throw Error(ErrorCode::DomainError, "position_inverse is defined for l >= 1");
  // diagonal t holds positions t(t-1)/2 + 1 .. t(t+1)/2
  auto t = static_cast<std::uint64_t>((std::sqrt(8.0 * static_cast<double>(l) + 1.0) - 1.0) / 2.0);
  while (t * (t + 1) / 2 < l) ++t;
  while (t > 1 && (t - 1) * t / 2 >= l) --t;
  const std::uint64_t m = l - t * (t - 1) / 2;
  return {m, t + 1 - m};
}

bool is_boundary(const Path& x, const FamilyCollection& s, BoundaryCheck mode) {
  require_exact(s, "is_boundary");
  const Universe& u = s.universe();
  const KGraph& g = u.graph();
  for (const auto& n : lattice_below(x.degree())) {
    const Path tail = g.segment(x, n, x.degree());
    const VertexId w = tail.range();
    const auto& members = s.at(w);
    for (FamilyMask e : members) {
      if (mode == BoundaryCheck::Minimal &&
          std::any_of(members.begin(), members.end(),
                      [&](FamilyMask h) { return h != e && (h & e) == h; })) {
        continue;
      }
      if (!in_family_extensions(g, tail, u.family(w, e))) return false;
    }
  }
  return true;
}

std::vector<Path> boundary_paths(VertexId v, const FamilyCollection& s) {
  const KGraph& g = s.universe().graph();
  require_acyclic(g, "boundary_paths");
  std::vector<Path> out;
  for (auto& x : g.paths_up_to(v, g.max_degree())) {
    if (is_boundary(x, s)) out.push_back(std::move(x));
  }
  if (out.empty()) {
    throw Error(ErrorCode::InvariantViolation, "no boundary path at " + g.name(v));
  }
  return out;
}

std::vector<Path> boundary_paths(const FamilyCollection& s) {
  std::vector<Path> out;
  for (VertexId v : s.universe().graph().vertices()) {
    auto part = boundary_paths(v, s);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Path extend(const Path& lambda, const Path& x, const FamilyCollection& s) {
  const KGraph& g = s.universe().graph();
  Path out = g.compose(lambda, x);
  if (is_boundary(x, s) && !is_boundary(out, s)) {
    throw Error(ErrorCode::InvariantViolation,
                "extending boundary path " + g.to_string(x) + " by " + g.to_string(lambda) +
                    " left the boundary");
  }
  return out;
}

Path restrict(const Path& x, const DegreeVector& n, const FamilyCollection& s) {
  const KGraph& g = s.universe().graph();
  Path out = g.segment(x, n, x.degree());
  if (is_boundary(x, s) && !is_boundary(out, s)) {
    throw Error(ErrorCode::InvariantViolation,
                "restricting boundary path " + g.to_string(x) + " to " + n.to_string() +
                    " left the boundary");
  }
  return out;
}

Path construct_boundary(VertexId v, const FamilyCollection& s,
                        const std::optional<PathFamily>& avoid) {
  const Universe& u = s.universe();
  const KGraph& g = u.graph();
  require_acyclic(g, "construct_boundary");
  require_exact(s, "construct_boundary");
  if (avoid) {
    const std::string shown = to_string(g, *avoid);
    if (avoid->range() != v) {
      throw Error(ErrorCode::PreconditionFailed, "avoided family " + shown + " is not based at " +
                                                     g.name(v));
    }
    if (avoid->has_vertex() || is_exhaustive(g, *avoid).status != ExhaustiveStatus::Exhaustive) {
      throw Error(ErrorCode::PreconditionFailed,
                  "avoided family " + shown + " is not a vertex-free exhaustive family");
    }
    if (member(*avoid, s) == Membership::Yes) {
      throw Error(ErrorCode::PreconditionFailed, "avoided family " + shown + " belongs to S");
    }
  }

  const auto lists = listings(s);
  std::vector<Path> lambdas{g.vertex_path(v)};  // lambdas[l - 1] = λ_l
  // Each change strictly increases the degree, so an acyclic graph forces
  // stabilisation; the cap only guards against a library bug.
  const std::uint64_t max_steps = 1'000'000;
  for (std::uint64_t l = 1; l <= max_steps; ++l) {
    const Path& current = lambdas.back();
    if (is_boundary(current, s)) {
      if (avoid && in_family_extensions(g, current, *avoid)) {
        throw Error(ErrorCode::InvariantViolation,
                    "constructed path " + g.to_string(current) + " meets the avoided family");
      }
      return current;
    }
    const auto [i, j] = position_inverse(l);
    const Path& anchor = lambdas.at(i - 1);
    const auto& listing = lists[index_of(anchor.source())];
    Path next = current;
    if (j <= listing.size()) {
      const PathFamily& target = listing[j - 1];
      const Path tail = g.segment(current, anchor.degree(), current.degree());
      if (!in_family_extensions(g, tail, target)) {
        const auto choices = ext(g, tail, target);
        std::optional<Path> chosen;
        if (!avoid) {
          chosen = choices.front();
        } else {
          const PathFamily f_l = ext_family(g, current, *avoid);
          for (const auto& alpha : choices) {
            if (in_family_extensions(g, alpha, f_l)) continue;
            if (member(ext_family(g, alpha, f_l), s) == Membership::No) {
              chosen = alpha;
              break;
            }
          }
          if (!chosen) {
            throw Error(ErrorCode::InvariantViolation,
                        "no admissible extension avoiding " + to_string(g, f_l) + " at step " +
                            std::to_string(l));
          }
        }
        next = g.compose(current, *chosen);
      }
    }
    lambdas.push_back(std::move(next));
  }
  throw Error(ErrorCode::InvariantViolation, "boundary construction did not stabilise");
}

std::vector<Path> mce_morphisms(const KGraph& g, const Path& x, const Path& y) {
  std::vector<Path> out;
  if (x.range() != y.range()) return out;
  for (auto& z : g.paths(x.range(), join(x.degree(), y.degree()))) {
    const DegreeVector zero(g.rank());
    if (g.segment(z, zero, x.degree()) == x && g.segment(z, zero, y.degree()) == y) {
      out.push_back(std::move(z));
    }
  }
  return out;
}

bool is_aperiodic_path(const KGraph& g, const Path& x) {
  require_acyclic(g, "is_aperiodic_path");
  PathCatalog catalog(g);
  return aperiodic_against(g, x, catalog.with_source(x.range()));
}

std::optional<bool> is_aperiodic_path_bounded(const KGraph& g, const Path& x,
                                              const DegreeVector& window) {
  PathCatalog catalog(g, window);
  if (!aperiodic_against(g, x, catalog.with_source(x.range()))) return false;
  if (catalog.exact()) return true;
  return std::nullopt;
}

DegreeVector separation_degree(const KGraph& g, const Path& x, const Path& lambda,
                               const Path& mu) {
  if (lambda == mu || lambda.source() != x.range() || mu.source() != x.range()) {
    throw Error(ErrorCode::PreconditionFailed,
                "separation_degree needs distinct paths with source r(x)");
  }
  for (const auto& n : lattice_below(x.degree())) {
    const Path head = g.segment(x, DegreeVector(g.rank()), n);
    if (lambda_min(g, g.compose(lambda, head), g.compose(mu, head)).empty()) return n;
  }
  throw Error(ErrorCode::NoSeparation, g.to_string(lambda) + " and " + g.to_string(mu) +
                                           " are not separated along " + g.to_string(x));
}

ConditionCReport condition_c(const FamilyCollection& s) {
  const Universe& u = s.universe();
  const KGraph& g = u.graph();
  require_acyclic(g, "condition_c");
  require_exact(s, "condition_c");
  PathCatalog catalog(g);
  ConditionCReport report;
  for (VertexId v : g.vertices()) {
    std::vector<std::pair<Path, bool>> candidates;
    for (auto& x : boundary_paths(v, s)) {
      const bool ok = aperiodic_against(g, x, catalog.with_source(x.range()));
      candidates.emplace_back(std::move(x), ok);
    }
    auto first_witness = [&](const std::optional<PathFamily>& f) -> std::optional<Path> {
      for (const auto& [x, ok] : candidates) {
        if (ok && !(f && in_family_extensions(g, x, *f))) return x;
      }
      return std::nullopt;
    };

    ConditionCEntry plain{v, std::nullopt, first_witness(std::nullopt)};
    report.holds = report.holds && plain.witness.has_value();
    report.entries.push_back(std::move(plain));
    for (FamilyMask m : u.all_fe(v)) {
      if (s.contains(v, m)) continue;
      PathFamily f = u.family(v, m);
      ConditionCEntry entry{v, f, first_witness(f)};
      report.holds = report.holds && entry.witness.has_value();
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

}  // namespace kgck
