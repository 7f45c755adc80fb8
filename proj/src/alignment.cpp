#include "kgck/alignment.hpp"

#include <algorithm>
#include <map>

#include "kgck/error.hpp"

namespace kgck {

namespace {

void sort_unique(std::vector<Path>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

PathFamily::PathFamily(VertexId range, std::vector<Path> members)
    : range_(range), members_(std::move(members)) {
  for (const auto& p : members_) {
    if (p.range() != range_) {
      throw Error(ErrorCode::RangeMismatch, "family member does not have the family's range");
    }
  }
  sort_unique(members_);
}

bool PathFamily::contains(const Path& p) const {
  return std::binary_search(members_.begin(), members_.end(), p);
}

bool PathFamily::has_vertex() const {
  return std::any_of(members_.begin(), members_.end(), [](const Path& p) { return p.is_vertex(); });
}

bool PathFamily::subset_of(const PathFamily& other) const {
  return range_ == other.range_ &&
         std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

std::strong_ordering operator<=>(const PathFamily& a, const PathFamily& b) {
  if (auto c = a.range_ <=> b.range_; c != 0) return c;
  if (auto c = a.members_.size() <=> b.members_.size(); c != 0) return c;
  return a.members_ <=> b.members_;
}

std::string to_string(const KGraph& g, const PathFamily& family) {
  std::string out = "{";
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (i) out += ", ";
    out += g.to_string(family.members()[i]);
  }
  return out + "}";
}

std::vector<Path> mce(const KGraph& g, const Path& mu, const Path& nu) {
  std::vector<Path> out;
  if (mu.range() != nu.range()) return out;
  const DegreeVector target = join(mu.degree(), nu.degree());
  for (const auto& alpha : g.paths(mu.source(), target - mu.degree())) {
    Path lambda = g.compose(mu, alpha);
    if (g.is_prefix(nu, lambda)) out.push_back(std::move(lambda));
  }
  // MCE(μ, ν) ⊆ r(μ)Λ^{d(μ) ∨ d(ν)}, finite by construction
  std::sort(out.begin(), out.end());
  return out;
}

bool aligned(const KGraph& g, const Path& mu, const Path& nu) {
  if (mu.range() != nu.range()) return false;
  if (leq(nu.degree(), mu.degree())) return g.is_prefix(nu, mu);
  if (leq(mu.degree(), nu.degree())) return g.is_prefix(mu, nu);
  return !mce(g, mu, nu).empty();
}

std::vector<MinPair> lambda_min(const KGraph& g, const Path& mu, const Path& nu) {
  std::vector<MinPair> out;
  for (const auto& lambda : mce(g, mu, nu)) {
    out.push_back({g.segment(lambda, mu.degree(), lambda.degree()),
                   g.segment(lambda, nu.degree(), lambda.degree())});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Path> ext(const KGraph& g, const Path& mu, const PathFamily& family) {
  if (family.range() != mu.range()) {
    throw Error(ErrorCode::RangeMismatch, "Ext(" + g.to_string(mu) + "; E) with r(E) = " +
                                              g.name(family.range()));
  }
  std::vector<Path> out;
  for (const auto& nu : family.members()) {
    for (auto& pair : lambda_min(g, mu, nu)) out.push_back(std::move(pair.alpha));
  }
  sort_unique(out);
  return out;
}

PathFamily ext_family(const KGraph& g, const Path& mu, const PathFamily& family) {
  return PathFamily(mu.source(), ext(g, mu, family));
}

bool in_family_extensions(const KGraph& g, const Path& mu, const PathFamily& family) {
  return std::any_of(family.members().begin(), family.members().end(),
                     [&](const Path& nu) { return g.is_prefix(nu, mu); });
}

std::vector<Path> pi_closure(const KGraph& g, const std::vector<Path>& seed,
                             const ClosureOptions& options) {
  std::vector<Path> closed = seed;
  sort_unique(closed);
  std::map<std::pair<Path, Path>, std::vector<Path>> ext_cache;
  auto ext_single = [&](const Path& mu, const Path& sigma) -> const std::vector<Path>& {
    auto key = std::make_pair(mu, sigma);
    auto it = ext_cache.find(key);
    if (it == ext_cache.end()) {
      std::vector<Path> alphas;
      for (auto& pair : lambda_min(g, mu, sigma)) alphas.push_back(std::move(pair.alpha));
      it = ext_cache.emplace(std::move(key), std::move(alphas)).first;
    }
    return it->second;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Path> fresh;
    for (const auto& lambda : closed) {
      for (const auto& mu : closed) {
        if (mu.degree() != lambda.degree() || mu.source() != lambda.source()) continue;
        for (const auto& sigma : closed) {
          if (sigma.range() != mu.range()) continue;
          for (const auto& alpha : ext_single(mu, sigma)) {
            Path p = g.compose(lambda, alpha);
            if (!std::binary_search(closed.begin(), closed.end(), p)) fresh.push_back(std::move(p));
          }
        }
      }
    }
    if (!fresh.empty()) {
      changed = true;
      closed.insert(closed.end(), fresh.begin(), fresh.end());
      sort_unique(closed);
      if (closed.size() > options.max_size) {
        throw Error(ErrorCode::ClosureBudgetExceeded,
                    "closure exceeded " + std::to_string(options.max_size) + " paths");
      }
    }
  }
  return closed;
}

std::vector<std::pair<Path, Path>> pairs_ds(const std::vector<Path>& set) {
  std::vector<std::pair<Path, Path>> out;
  for (const auto& lambda : set) {
    for (const auto& mu : set) {
      if (lambda.degree() == mu.degree() && lambda.source() == mu.source()) {
        out.emplace_back(lambda, mu);
      }
    }
  }
  return out;
}

}  // namespace kgck
