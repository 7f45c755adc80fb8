#include "kgck/exhaustive.hpp"

#include <algorithm>
#include <thread>

#include "kgck/error.hpp"

namespace kgck {

std::string_view to_string(ExhaustiveStatus status) {
  switch (status) {
    case ExhaustiveStatus::Exhaustive: return "Exhaustive";
    case ExhaustiveStatus::NotExhaustive: return "NotExhaustive";
    case ExhaustiveStatus::Unknown: return "Unknown";
  }
  return "Unknown";
}

namespace {

bool meets_family(const KGraph& g, const Path& lambda, const PathFamily& family) {
  return std::any_of(family.members().begin(), family.members().end(),
                     [&](const Path& mu) { return aligned(g, lambda, mu); });
}

DegreeVector family_join(const KGraph& g, const PathFamily& family) {
  DegreeVector n(g.rank());
  for (const auto& mu : family.members()) n = join(n, mu.degree());
  return n;
}

std::size_t count_subsets(std::size_t n, std::size_t max_size, std::size_t cap) {
  // sum_{k=1}^{max_size} C(n, k), saturating at cap + 1
  std::size_t total = 0;
  std::size_t binom = 1;
  for (std::size_t k = 1; k <= std::min(n, max_size); ++k) {
    binom = binom * (n - k + 1) / k;
    total += binom;
    if (total > cap || binom > cap) return cap + 1;
  }
  return total;
}

}  // namespace

ExhaustiveVerdict is_exhaustive(const KGraph& g, const PathFamily& family,
                                std::optional<DegreeVector> depth) {
  const VertexId v = family.range();
  ExhaustiveVerdict verdict;
  if (family.empty()) {
    // Ext(v; ∅) = ∅
    verdict.status = ExhaustiveStatus::NotExhaustive;
    verdict.witness = g.vertex_path(v);
    verdict.searched_depth = DegreeVector(g.rank());
    return verdict;
  }

  const DegreeVector n = family_join(g, family);
  if (!g.is_cyclic()) {
    verdict.searched_depth = g.max_degree();
    for (const auto& lambda : g.paths_up_to(v, g.max_degree())) {
      if (!meets_family(g, lambda, family)) {
        verdict.status = ExhaustiveStatus::NotExhaustive;
        verdict.witness = lambda;
        return verdict;
      }
    }
    verdict.status = ExhaustiveStatus::Exhaustive;
    return verdict;
  }

  if (g.source_free_from(v)) {
    verdict.searched_depth = n;
    for (const auto& x : g.paths(v, n)) {
      if (!in_family_extensions(g, x, family)) {
        verdict.status = ExhaustiveStatus::NotExhaustive;
        verdict.witness = x;
        return verdict;
      }
    }
    verdict.status = ExhaustiveStatus::Exhaustive;
    return verdict;
  }

  DegreeVector bound = depth ? *depth : n;
  if (!depth) {
    for (std::size_t i = 0; i < g.rank(); ++i) bound[i] += 1;
  }
  verdict.searched_depth = bound;
  for (const auto& lambda : g.paths_up_to(v, bound)) {
    if (!meets_family(g, lambda, family)) {
      verdict.status = ExhaustiveStatus::NotExhaustive;
      verdict.witness = lambda;
      return verdict;
    }
  }
  verdict.status = ExhaustiveStatus::Unknown;
  return verdict;
}

std::vector<PathFamily> fe_enumerate(const KGraph& g, VertexId v, const DegreeVector& depth,
                                     std::size_t max_size, const EnumerationOptions& options) {
  std::vector<Path> candidates;
  for (auto& p : g.paths_up_to(v, depth)) {
    if (!p.is_vertex()) candidates.push_back(std::move(p));
  }
  const std::size_t n = candidates.size();
  if (count_subsets(n, max_size, options.max_subsets) > options.max_subsets) {
    throw Error(ErrorCode::BudgetExceeded,
                "more than " + std::to_string(options.max_subsets) + " candidate subsets at " +
                    g.name(v));
  }

  // For acyclic graphs each test path's aligned candidates are computed once;
  // a subset is exhaustive iff it meets every test path's list.
  std::vector<std::vector<std::size_t>> hits;
  const bool finite = !g.is_cyclic();
  if (finite) {
    for (const auto& lambda : g.paths_up_to(v, g.max_degree())) {
      std::vector<std::size_t> h;
      for (std::size_t i = 0; i < n; ++i) {
        if (aligned(g, lambda, candidates[i])) h.push_back(i);
      }
      hits.push_back(std::move(h));
    }
  }

  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::size_t> combo;
  for (std::size_t k = 1; k <= std::min(n, max_size); ++k) {
    combo.resize(k);
    for (std::size_t i = 0; i < k; ++i) combo[i] = i;
    while (true) {
      subsets.push_back(combo);
      std::size_t i = k;
      while (i > 0 && combo[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++combo[i - 1];
      for (std::size_t j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
    }
  }

  auto make_family = [&](const std::vector<std::size_t>& idx) {
    std::vector<Path> members;
    for (auto i : idx) members.push_back(candidates[i]);
    return PathFamily(v, std::move(members));
  };
  auto check = [&](const std::vector<std::size_t>& idx) {
    if (finite) {
      std::vector<char> in(n, 0);
      for (auto i : idx) in[i] = 1;
      return std::all_of(hits.begin(), hits.end(), [&](const std::vector<std::size_t>& h) {
        return std::any_of(h.begin(), h.end(), [&](std::size_t i) { return in[i] != 0; });
      });
    }
    return is_exhaustive(g, make_family(idx)).status == ExhaustiveStatus::Exhaustive;
  };

  std::vector<char> accepted(subsets.size(), 0);
  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1 || subsets.size() < 64) {
    for (std::size_t i = 0; i < subsets.size(); ++i) accepted[i] = check(subsets[i]);
  } else {
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < jobs; ++t) {
      workers.emplace_back([&, t] {
        for (std::size_t i = t; i < subsets.size(); i += jobs) accepted[i] = check(subsets[i]);
      });
    }
    for (auto& w : workers) w.join();
  }

  std::vector<PathFamily> out;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    if (accepted[i]) out.push_back(make_family(subsets[i]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PathFamily> minimal_elements(const std::vector<PathFamily>& families) {
  std::vector<PathFamily> out;
  for (const auto& f : families) {
    bool minimal = std::none_of(families.begin(), families.end(), [&](const PathFamily& h) {
      return h != f && h.subset_of(f);
    });
    if (minimal) out.push_back(f);
  }
  return out;
}

std::vector<PathFamily> minimal_exhaustive(const KGraph& g, VertexId v, const DegreeVector& depth,
                                           std::size_t max_size,
                                           const EnumerationOptions& options) {
  return minimal_elements(fe_enumerate(g, v, depth, max_size, options));
}

}  // namespace kgck
