#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kgck/boundary.hpp"
#include "kgck/sparse.hpp"

namespace kgck {

// ---------------------------------------------------------------------------
// Formal elements Σ a_{λ,μ} t_λ t_μ*
// ---------------------------------------------------------------------------

template <typename T>
struct FormalElement {
  std::map<std::pair<Path, Path>, T> terms;

  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const FormalElement&, const FormalElement&) = default;
};

/// c · t_λ t_μ*. Throws PreconditionFailed unless s(λ) = s(μ).
template <typename T>
FormalElement<T> formal_term(const Path& lambda, const Path& mu, const T& coefficient = T(1));

template <typename T>
FormalElement<T> formal_add(const FormalElement<T>& a, const FormalElement<T>& b);
template <typename T>
FormalElement<T> formal_scale(const FormalElement<T>& a, const T& c);
template <typename T>
FormalElement<T> formal_star(const FormalElement<T>& a);
/// (λ1, μ1)(λ2, μ2) = Σ_{(α,β) ∈ Λmin(μ1, λ2)} (λ1α, μ2β), bilinearly.
template <typename T>
FormalElement<T> formal_mul(const KGraph& g, const FormalElement<T>& a, const FormalElement<T>& b);
/// Keeps the terms with d(λ) = d(μ).
template <typename T>
FormalElement<T> gauge_expectation(const FormalElement<T>& a);

std::string to_string(const KGraph& g, const FormalElement<Rational>& a);

// ---------------------------------------------------------------------------
// Families of operators
// ---------------------------------------------------------------------------

template <typename T>
struct CKFamily {
  std::size_t dim = 0;
  std::map<Path, SparseMatrix<T>> t;
  /// Basis labels when the carrier space is spanned by paths (boundary reps).
  std::vector<Path> basis;

  /// Throws IncompleteFamily when λ has no operator.
  const SparseMatrix<T>& at(const Path& lambda) const;
};

template <typename T>
CKFamily<Complex> to_complex(const CKFamily<T>& family);

/// The zero family on a space of dimension `dim`, for all of Λ (acyclic).
CKFamily<Rational> zero_family(const KGraph& g, std::size_t dim);

template <typename T>
SparseMatrix<T> evaluate(const FormalElement<T>& a, const CKFamily<T>& family);

/// Π_{λ∈E} (t_{r(E)} − t_λ t_λ*); the empty product is the identity.
template <typename T>
SparseMatrix<T> gap_product(const CKFamily<T>& family, VertexId range,
                            const std::vector<Path>& members, const KGraph& g);

struct RelationResult {
  std::string name;
  double deviation = 0.0;
  bool passed = true;
  std::string witness;  // first offending instance
};

struct FamilyReport {
  std::vector<RelationResult> relations;
  bool vertices_nonzero = true;  // every t_v != 0
  bool degenerate = false;       // every t_v == 0
  bool all_passed() const;
  const RelationResult& relation(const std::string& name) const;
};

/// Checks TCK1-TCK3, (CK) for every generator, commuting range projections
/// and "t_v != 0 for all v iff t_λ != 0 for all λ". Throws IncompleteFamily
/// when an operator needed by a relation is missing.
template <typename T>
FamilyReport verify_family(const KGraph& g, const CKFamily<T>& family,
                           const std::vector<PathFamily>& generators);

/// S_S(λ) e_x = e_{λx} on the span of ∂(Λ; S). Acyclic graphs, exact S.
/// With `verify`, the relations are checked against every member of S and a
/// failure throws InvariantViolation.
CKFamily<Rational> boundary_rep(const FamilyCollection& s, bool verify = true);

// ---------------------------------------------------------------------------
// Matrix units
// ---------------------------------------------------------------------------

/// ΠE ×_{d,s} ΠE in canonical order.
std::vector<std::pair<Path, Path>> grid_pairs(const std::vector<Path>& pi_e);

/// Θ(t)^{ΠE}_{λ,μ}. Throws PairNotInGrid.
template <typename T>
SparseMatrix<T> theta(const KGraph& g, const CKFamily<T>& family, const std::vector<Path>& pi_e,
                      const Path& lambda, const Path& mu);
template <typename T>
FormalElement<T> formal_theta(const KGraph& g, const std::vector<Path>& pi_e, const Path& lambda,
                              const Path& mu);

/// T^{ΠE}(λ) = {ν ∉ Λ^0 : λν ∈ ΠE} as a family at s(λ).
PathFamily theta_tails(const KGraph& g, const std::vector<Path>& pi_e, const Path& lambda);

struct MatrixUnitReport {
  double adjoint_deviation = 0.0;     // Θ_{λ,μ}* = Θ_{μ,λ}
  double product_deviation = 0.0;     // Θ_{λ,μ} Θ_{σ,τ} = δ_{μ,σ} Θ_{λ,τ}
  double expansion_deviation = 0.0;   // t_λ t_μ* = Σ_{λν∈ΠE} Θ_{λν,μν}
  std::string witness;
  bool passed(double tolerance = 0.0) const {
    return adjoint_deviation <= tolerance && product_deviation <= tolerance &&
           expansion_deviation <= tolerance;
  }
};

template <typename T>
MatrixUnitReport matrix_unit_check(const KGraph& g, const CKFamily<T>& family,
                                   const std::vector<Path>& pi_e);

/// Grid pairs whose universal Θ is nonzero: member(T^{ΠE}(λ), S) != Yes.
std::vector<std::pair<Path, Path>> nonzero_theta_pattern(const FamilyCollection& s,
                                                         const std::vector<Path>& pi_e);

struct FaithfulReport {
  bool route_a = true;  // Θ(t) != 0 wherever the universal Θ is
  bool route_b = true;  // t_v != 0 and gap products nonzero off S
  bool agree() const { return route_a == route_b; }
  bool faithful() const { return route_a && route_b; }
  std::string route_a_failure;
  std::string route_b_failure;
  std::size_t windows_checked = 0;
};

/// Both characterisations of injectivity on the core. Route (a) runs over
/// ΠE for each supplied window E and, for acyclic graphs, over E = Λ.
template <typename T>
FaithfulReport faithful_on_core_check(const CKFamily<T>& family, const FamilyCollection& s,
                                      const std::vector<std::vector<Path>>& windows);

/// ‖gap(E) t_μ t_μ* − t_μ gap(Ext(μ;E)) t_μ*‖.
template <typename T>
double shift_gaps_check(const KGraph& g, const CKFamily<T>& family, const PathFamily& e,
                        const Path& mu);

// ---------------------------------------------------------------------------
// Gauge action and the conditional expectation
// ---------------------------------------------------------------------------

/// U_z = diag(z^{d(x)}) over the basis paths.
SparseMatrix<Complex> gauge_unitary(const CKFamily<Complex>& family,
                                    const std::vector<Complex>& z);

/// max over z and λ of ‖U_z t_λ U_z* − z^{d(λ)} t_λ‖.
double gauge_unitary_check(const CKFamily<Complex>& family, const std::vector<std::vector<Complex>>& zs);

/// Pseudo-random points of the k-torus.
std::vector<std::vector<Complex>> random_torus_points(std::size_t k, std::size_t count,
                                                      std::uint64_t seed);
/// The finite subgroup Z_{N_1} × ... × Z_{N_k} of the torus with
/// N_i > max degree in colour i (and at least `min_size` elements in total);
/// averaging γ_z over it is exactly the gauge expectation on Λ.
std::vector<std::vector<Complex>> gauge_averaging_points(const KGraph& g, std::size_t min_size = 8);

/// (1/|Z|) Σ_z U_z π(a) U_z*.
SparseMatrix<Complex> gauge_average(const FormalElement<Complex>& a,
                                    const CKFamily<Complex>& family,
                                    const std::vector<std::vector<Complex>>& zs);

struct NormPair {
  double lhs = 0.0;  // ‖π(Φ(a))‖
  double rhs = 0.0;  // ‖π(a)‖
  bool holds(double tolerance = 1e-9) const { return lhs <= rhs + tolerance; }
};

/// Checks the hypotheses of the contraction inequality once (relations for
/// every member of S, t_v != 0, gap products off S, condition (C)) and then
/// evaluates norms. Throws HypothesisNotMet.
class ContractionChecker {
 public:
  ContractionChecker(const CKFamily<Rational>& family, const FamilyCollection& s);
  NormPair check(const FormalElement<Complex>& a) const;

 private:
  const KGraph* graph_;
  CKFamily<Complex> family_;
};

}  // namespace kgck
