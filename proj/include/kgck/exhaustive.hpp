#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kgck/alignment.hpp"

namespace kgck {

enum class ExhaustiveStatus { Exhaustive, NotExhaustive, Unknown };

std::string_view to_string(ExhaustiveStatus status);

struct ExhaustiveVerdict {
  ExhaustiveStatus status = ExhaustiveStatus::Unknown;
  /// Present iff NotExhaustive: a path λ ∈ r(E)Λ with Ext(λ; E) = ∅.
  std::optional<Path> witness;
  DegreeVector searched_depth;
};

/// Decides exhaustiveness where that is provably possible:
///  - acyclic graphs: full check over r(E)Λ;
///  - graphs that are source-free below r(E): E is exhaustive iff every
///    x ∈ r(E)Λ^N, N = ∨ d(E), extends some member of E.
/// Otherwise searches r(E)Λ^{<=depth} (default N + (1,...,1)) for a witness
/// and answers Unknown if none is found.
ExhaustiveVerdict is_exhaustive(const KGraph& g, const PathFamily& family,
                                std::optional<DegreeVector> depth = std::nullopt);

struct EnumerationOptions {
  std::size_t max_subsets = std::size_t{1} << 22;
  unsigned jobs = 1;
};

/// All E ⊆ vΛ^{<=depth} \ {v} with 1 <= |E| <= max_size that are provably
/// exhaustive, in canonical order. Throws BudgetExceeded when the number of
/// candidate subsets exceeds `options.max_subsets`.
std::vector<PathFamily> fe_enumerate(const KGraph& g, VertexId v, const DegreeVector& depth,
                                     std::size_t max_size, const EnumerationOptions& options = {});

/// The ⊆-minimal elements of fe_enumerate.
std::vector<PathFamily> minimal_exhaustive(const KGraph& g, VertexId v, const DegreeVector& depth,
                                           std::size_t max_size,
                                           const EnumerationOptions& options = {});

/// Keeps the ⊆-minimal families of a list, preserving order.
std::vector<PathFamily> minimal_elements(const std::vector<PathFamily>& families);

}  // namespace kgck
