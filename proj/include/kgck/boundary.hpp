#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "kgck/satiation.hpp"

namespace kgck {

/// Ω_{k,m}: vertices n <= m (named "(n1,...,nk)"), one edge "c<i>(n)" of
/// colour i with range n and source n + e_i whenever n + e_i <= m.
KGraph omega(std::size_t k, const DegreeVector& m);

/// Diagonal listing of (N \ {0})^2: P(m, n) = (m+n-1)(m+n-2)/2 + m.
std::uint64_t position(std::uint64_t m, std::uint64_t n);
std::pair<std::uint64_t, std::uint64_t> position_inverse(std::uint64_t l);

enum class BoundaryCheck {
  Minimal,  // only the ⊆-minimal members of S (equivalent by (S1))
  Full,     // every member of S
};

/// Whether the finite path x is an S-compatible boundary path: for every
/// n <= d(x) and every E ∈ S at x(n), x(n, d(x)) has an initial segment in E.
/// Throws InexactUniverse unless S lives in an exact universe.
bool is_boundary(const Path& x, const FamilyCollection& s,
                 BoundaryCheck mode = BoundaryCheck::Minimal);

/// v∂(Λ; S) in canonical order. Acyclic graphs only.
std::vector<Path> boundary_paths(VertexId v, const FamilyCollection& s);
/// ∂(Λ; S) in canonical order.
std::vector<Path> boundary_paths(const FamilyCollection& s);

/// λx, asserting that boundary paths stay boundary paths.
Path extend(const Path& lambda, const Path& x, const FamilyCollection& s);
/// x(n, d(x)), with the same assertion.
Path restrict(const Path& x, const DegreeVector& n, const FamilyCollection& s);

/// Builds a boundary path at v by serving the obligations (i_l, j_l) of the
/// diagonal listing against canonical listings of s(λ_i)S. With `avoid`,
/// extensions are chosen so that Ext(λ_l; F) stays outside S, and the
/// result has no initial segment in F. Throws PreconditionFailed when F is
/// in S or is not a vertex-free exhaustive family.
Path construct_boundary(VertexId v, const FamilyCollection& s,
                        const std::optional<PathFamily>& avoid = std::nullopt);

/// Common extensions z of degree d(x) ∨ d(y) whose restrictions to
/// Ω_{k,d(x)} and Ω_{k,d(y)} are x and y.
std::vector<Path> mce_morphisms(const KGraph& g, const Path& x, const Path& y);

/// MCE(λx, μx) = ∅ for all distinct λ, μ ∈ Λr(x). Acyclic graphs only.
bool is_aperiodic_path(const KGraph& g, const Path& x);
/// Truncated variant for any graph: false once a pair λ ≠ μ of degree at
/// most `window` with MCE(λx, μx) ≠ ∅ is found; nullopt if none is found
/// and the window does not cover Λ.
std::optional<bool> is_aperiodic_path_bounded(const KGraph& g, const Path& x,
                                              const DegreeVector& window);

/// Least n <= d(x) (graded-lex scan) with Λmin(λx(0,n), μx(0,n)) = ∅.
/// Throws NoSeparation when there is none.
DegreeVector separation_degree(const KGraph& g, const Path& x, const Path& lambda,
                               const Path& mu);

struct ConditionCEntry {
  VertexId vertex{};
  std::optional<PathFamily> avoided;  // F ∈ vFE \ S, or none for the plain clause
  std::optional<Path> witness;        // aperiodic boundary path, if any
};

struct ConditionCReport {
  bool holds = true;
  std::vector<ConditionCEntry> entries;
};

/// Condition (C) over the universe of S. Acyclic graphs only.
ConditionCReport condition_c(const FamilyCollection& s);

}  // namespace kgck
