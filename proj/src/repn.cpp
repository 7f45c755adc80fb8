#include "kgck/repn.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include <Eigen/Dense>

#include "kgck/error.hpp"

namespace kgck {

namespace {

template <typename T>
void accumulate(FormalElement<T>& out, const Path& lambda, const Path& mu, const T& c) {
  if (ScalarTraits<T>::is_zero(c)) return;
  auto key = std::make_pair(lambda, mu);
  auto [it, inserted] = out.terms.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (ScalarTraits<T>::is_zero(it->second)) out.terms.erase(it);
  }
}

/// Running maximum of a deviation with the first offending instance.
struct Tracker {
  RelationResult result;
  double tolerance;

  Tracker(std::string name, double tol) : tolerance(tol) { result.name = std::move(name); }

  template <typename Describe>
  void record(double dev, Describe&& describe) {
    if (dev > result.deviation) result.deviation = dev;
    if (dev > tolerance && result.passed) {
      result.passed = false;
      result.witness = describe();
    }
  }
};

std::string pair_text(const KGraph& g, const Path& a, const Path& b) {
  return "(" + g.to_string(a) + ", " + g.to_string(b) + ")";
}

std::string set_text(const KGraph& g, const std::vector<Path>& paths) {
  std::string out = "{";
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (i) out += ", ";
    out += g.to_string(paths[i]);
  }
  return out + "}";
}

bool in_set(const std::vector<Path>& sorted, const Path& p) {
  return std::find(sorted.begin(), sorted.end(), p) != sorted.end();
}

/// ν with λν ∈ ΠE and ν not a vertex, in canonical order.
std::vector<Path> tails(const KGraph& g, const std::vector<Path>& pi_e, const Path& lambda) {
  std::vector<Path> out;
  for (const auto& rho : pi_e) {
    if (rho == lambda || !g.is_prefix(lambda, rho)) continue;
    out.push_back(g.segment(rho, lambda.degree(), rho.degree()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void require_grid(const KGraph& g, const std::vector<Path>& pi_e, const Path& lambda,
                  const Path& mu) {
  if (!in_set(pi_e, lambda) || !in_set(pi_e, mu) || lambda.degree() != mu.degree() ||
      lambda.source() != mu.source()) {
    throw Error(ErrorCode::PairNotInGrid, pair_text(g, lambda, mu) + " is not in ΠE ×_{d,s} ΠE");
  }
}

std::complex<double> torus_power(const std::vector<Complex>& z, const DegreeVector& n) {
  Complex out{1.0, 0.0};
  for (std::size_t i = 0; i < n.rank(); ++i) out *= std::pow(z[i], static_cast<int>(n[i]));
  return out;
}

}  // namespace

double operator_norm(const SparseMatrix<Complex>& m) {
  if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) return 0.0;
  Eigen::MatrixXcd dense = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(m.rows()),
                                                  static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& [j, v] : m.row(i)) {
      dense(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(dense);
  return svd.singularValues()(0);
}

// ---------------------------------------------------------------------------
// Formal elements
// ---------------------------------------------------------------------------

template <typename T>
FormalElement<T> formal_term(const Path& lambda, const Path& mu, const T& coefficient) {
  if (lambda.source() != mu.source()) {
    throw Error(ErrorCode::PreconditionFailed, "t_λ t_μ* needs s(λ) = s(μ)");
  }
  FormalElement<T> out;
  accumulate(out, lambda, mu, coefficient);
  return out;
}

template <typename T>
FormalElement<T> formal_add(const FormalElement<T>& a, const FormalElement<T>& b) {
  FormalElement<T> out = a;
  for (const auto& [key, c] : b.terms) accumulate(out, key.first, key.second, c);
  return out;
}

template <typename T>
FormalElement<T> formal_scale(const FormalElement<T>& a, const T& c) {
  FormalElement<T> out;
  for (const auto& [key, x] : a.terms) accumulate(out, key.first, key.second, T(x * c));
  return out;
}

template <typename T>
FormalElement<T> formal_star(const FormalElement<T>& a) {
  FormalElement<T> out;
  for (const auto& [key, c] : a.terms) {
    accumulate(out, key.second, key.first, ScalarTraits<T>::conj(c));
  }
  return out;
}

template <typename T>
FormalElement<T> formal_mul(const KGraph& g, const FormalElement<T>& a, const FormalElement<T>& b) {
  FormalElement<T> out;
  for (const auto& [k1, c1] : a.terms) {
    for (const auto& [k2, c2] : b.terms) {
      for (const auto& [alpha, beta] : lambda_min(g, k1.second, k2.first)) {
        accumulate(out, g.compose(k1.first, alpha), g.compose(k2.second, beta), T(c1 * c2));
      }
    }
  }
  return out;
}

template <typename T>
FormalElement<T> gauge_expectation(const FormalElement<T>& a) {
  FormalElement<T> out;
  for (const auto& [key, c] : a.terms) {
    if (key.first.degree() == key.second.degree()) out.terms.emplace(key, c);
  }
  return out;
}

std::string to_string(const KGraph& g, const FormalElement<Rational>& a) {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : a.terms) {
    if (!first) out << " + ";
    first = false;
    out << c << "*" << pair_text(g, key.first, key.second);
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

template <typename T>
const SparseMatrix<T>& CKFamily<T>::at(const Path& lambda) const {
  auto it = t.find(lambda);
  if (it == t.end()) {
    throw Error(ErrorCode::IncompleteFamily, "no operator for a path of degree " +
                                                 lambda.degree().to_string());
  }
  return it->second;
}

template <typename T>
CKFamily<Complex> to_complex(const CKFamily<T>& family) {
  CKFamily<Complex> out;
  out.dim = family.dim;
  out.basis = family.basis;
  for (const auto& [p, m] : family.t) out.t.emplace(p, to_complex(m));
  return out;
}

CKFamily<Rational> zero_family(const KGraph& g, std::size_t dim) {
  CKFamily<Rational> out;
  out.dim = dim;
  for (const auto& p : PathCatalog(g).all()) out.t.emplace(p, SparseMatrix<Rational>(dim, dim));
  return out;
}

template <typename T>
SparseMatrix<T> evaluate(const FormalElement<T>& a, const CKFamily<T>& family) {
  SparseMatrix<T> out(family.dim, family.dim);
  for (const auto& [key, c] : a.terms) {
    out += (family.at(key.first) * family.at(key.second).adjoint()) * c;
  }
  return out;
}

template <typename T>
SparseMatrix<T> gap_product(const CKFamily<T>& family, VertexId range,
                            const std::vector<Path>& members, const KGraph& g) {
  SparseMatrix<T> out = SparseMatrix<T>::identity(family.dim);
  if (members.empty()) return out;
  const SparseMatrix<T>& tv = family.at(g.vertex_path(range));
  for (const auto& lambda : members) {
    const auto& tl = family.at(lambda);
    out = out * (tv - tl * tl.adjoint());
  }
  return out;
}

bool FamilyReport::all_passed() const {
  return std::all_of(relations.begin(), relations.end(),
                     [](const RelationResult& r) { return r.passed; });
}

const RelationResult& FamilyReport::relation(const std::string& name) const {
  for (const auto& r : relations) {
    if (r.name == name) return r;
  }
  throw Error(ErrorCode::DomainError, "no relation named " + name);
}

template <typename T>
FamilyReport verify_family(const KGraph& g, const CKFamily<T>& family,
                           const std::vector<PathFamily>& generators) {
  const double tol = ScalarTraits<T>::tolerance;
  for (VertexId v : g.vertices()) (void)family.at(g.vertex_path(v));
  if (!g.is_cyclic()) {
    for (const auto& p : PathCatalog(g).all()) (void)family.at(p);
  }
  auto present = [&](const Path& p) { return family.t.count(p) != 0; };

  std::vector<Path> paths;
  for (const auto& [p, m] : family.t) paths.push_back(p);
  std::vector<Path> vertices;
  for (VertexId v : g.vertices()) vertices.push_back(g.vertex_path(v));

  Tracker tck1("TCK1", tol);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto& p = family.at(vertices[i]);
    tck1.record(deviation(p, p.adjoint()), [&] { return g.to_string(vertices[i]) + " not self-adjoint"; });
    tck1.record(deviation(p * p, p), [&] { return g.to_string(vertices[i]) + " not idempotent"; });
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      tck1.record((p * family.at(vertices[j])).frobenius_norm(),
                  [&] { return pair_text(g, vertices[i], vertices[j]) + " not orthogonal"; });
    }
  }

  Tracker tck2("TCK2", tol);
  for (const auto& lambda : paths) {
    for (const auto& mu : paths) {
      if (lambda.source() != mu.range()) continue;
      const Path composite = g.compose(lambda, mu);
      if (!present(composite)) continue;
      tck2.record(deviation(family.at(lambda) * family.at(mu), family.at(composite)),
                  [&] { return pair_text(g, lambda, mu); });
    }
  }

  Tracker tck3("TCK3", tol);
  for (const auto& lambda : paths) {
    for (const auto& mu : paths) {
      const auto pairs = lambda_min(g, lambda, mu);
      if (!std::all_of(pairs.begin(), pairs.end(), [&](const MinPair& p) {
            return present(p.alpha) && present(p.beta);
          })) {
        continue;
      }
      SparseMatrix<T> rhs(family.dim, family.dim);
      for (const auto& [alpha, beta] : pairs) rhs += family.at(alpha) * family.at(beta).adjoint();
      tck3.record(deviation(family.at(lambda).adjoint() * family.at(mu), rhs),
                  [&] { return pair_text(g, lambda, mu); });
    }
  }

  Tracker ck("CK", tol);
  for (const auto& e : generators) {
    ck.record(gap_product(family, e.range(), e.members(), g).frobenius_norm(),
              [&] { return to_string(g, e); });
  }

  Tracker commute("range-projections-commute", tol);
  std::vector<SparseMatrix<T>> ranges;
  for (const auto& p : paths) ranges.push_back(family.at(p) * family.at(p).adjoint());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      commute.record(deviation(ranges[i] * ranges[j], ranges[j] * ranges[i]),
                     [&] { return pair_text(g, paths[i], paths[j]); });
    }
  }

  FamilyReport report;
  report.vertices_nonzero = std::all_of(vertices.begin(), vertices.end(),
                                        [&](const Path& v) { return !family.at(v).is_zero(); });
  report.degenerate = std::all_of(vertices.begin(), vertices.end(),
                                  [&](const Path& v) { return family.at(v).is_zero(); });
  const bool paths_nonzero = std::all_of(paths.begin(), paths.end(),
                                         [&](const Path& p) { return !family.at(p).is_zero(); });
  RelationResult nonzero{"nonzero-consistency", 0.0, report.vertices_nonzero == paths_nonzero, ""};
  if (!nonzero.passed) nonzero.witness = "t_v != 0 for all v but some t_λ = 0";

  report.relations = {tck1.result, tck2.result, tck3.result, ck.result, commute.result, nonzero};
  return report;
}

CKFamily<Rational> boundary_rep(const FamilyCollection& s, bool verify) {
  const Universe& u = s.universe();
  const KGraph& g = u.graph();
  if (g.is_cyclic()) {
    throw Error(ErrorCode::CyclicGraphUnsupported, "boundary representation of a cyclic graph");
  }
  if (!u.exact()) {
    throw Error(ErrorCode::InexactUniverse, "boundary representation needs an exact universe");
  }
  CKFamily<Rational> out;
  out.basis = boundary_paths(s);
  out.dim = out.basis.size();
  std::map<Path, std::size_t> index;
  for (std::size_t i = 0; i < out.basis.size(); ++i) index.emplace(out.basis[i], i);

  for (const auto& lambda : PathCatalog(g).all()) {
    SparseMatrix<Rational> m(out.dim, out.dim);
    for (std::size_t i = 0; i < out.basis.size(); ++i) {
      const Path& x = out.basis[i];
      if (x.range() != lambda.source()) continue;
      auto it = index.find(g.compose(lambda, x));
      if (it == index.end()) {
        throw Error(ErrorCode::InvariantViolation,
                    g.to_string(lambda) + " · " + g.to_string(x) + " is not a boundary path");
      }
      m.set(it->second, i, Rational(1));
    }
    out.t.emplace(lambda, std::move(m));
  }

  if (verify) {
    const auto report = verify_family(g, out, s.families());
    for (const auto& r : report.relations) {
      if (!r.passed) {
        throw Error(ErrorCode::InvariantViolation,
                    "boundary representation violates " + r.name + " at " + r.witness);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Matrix units
// ---------------------------------------------------------------------------

std::vector<std::pair<Path, Path>> grid_pairs(const std::vector<Path>& pi_e) {
  return pairs_ds(pi_e);
}

PathFamily theta_tails(const KGraph& g, const std::vector<Path>& pi_e, const Path& lambda) {
  return PathFamily(lambda.source(), tails(g, pi_e, lambda));
}

template <typename T>
SparseMatrix<T> theta(const KGraph& g, const CKFamily<T>& family, const std::vector<Path>& pi_e,
                      const Path& lambda, const Path& mu) {
  require_grid(g, pi_e, lambda, mu);
  const auto gap = gap_product(family, lambda.source(), tails(g, pi_e, lambda), g);
  return family.at(lambda) * gap * family.at(mu).adjoint();
}

template <typename T>
FormalElement<T> formal_theta(const KGraph& g, const std::vector<Path>& pi_e, const Path& lambda,
                              const Path& mu) {
  require_grid(g, pi_e, lambda, mu);
  const Path s = g.vertex_path(lambda.source());
  FormalElement<T> product = formal_term<T>(s, s);
  for (const auto& nu : tails(g, pi_e, lambda)) {
    FormalElement<T> factor = formal_add(formal_term<T>(s, s), formal_term<T>(nu, nu, T(-1)));
    product = formal_mul(g, product, factor);
  }
  return formal_mul(g, formal_mul(g, formal_term<T>(lambda, s), product), formal_term<T>(s, mu));
}

template <typename T>
MatrixUnitReport matrix_unit_check(const KGraph& g, const CKFamily<T>& family,
                                   const std::vector<Path>& pi_e) {
  const double tol = ScalarTraits<T>::tolerance;
  MatrixUnitReport report;
  const auto pairs = grid_pairs(pi_e);
  std::map<std::pair<Path, Path>, SparseMatrix<T>> thetas;
  for (const auto& [l, m] : pairs) thetas.emplace(std::make_pair(l, m), theta(g, family, pi_e, l, m));

  auto note = [&](double dev, double& slot, auto&& describe) {
    slot = std::max(slot, dev);
    if (dev > tol && report.witness.empty()) report.witness = describe();
  };

  for (const auto& [key, th] : thetas) {
    note(deviation(th.adjoint(), thetas.at({key.second, key.first})), report.adjoint_deviation,
         [&] { return "adjoint at " + pair_text(g, key.first, key.second); });
  }
  for (const auto& [k1, a] : thetas) {
    for (const auto& [k2, b] : thetas) {
      const SparseMatrix<T> prod = a * b;
      const double dev = k1.second == k2.first
                             ? deviation(prod, thetas.at({k1.first, k2.second}))
                             : prod.frobenius_norm();
      note(dev, report.product_deviation, [&] {
        return "product " + pair_text(g, k1.first, k1.second) + pair_text(g, k2.first, k2.second);
      });
    }
  }
  for (const auto& [lambda, mu] : pairs) {
    const SparseMatrix<T> lhs = family.at(lambda) * family.at(mu).adjoint();
    SparseMatrix<T> rhs(family.dim, family.dim);
    bool in_grid = true;
    for (const auto& rho : pi_e) {
      if (!g.is_prefix(lambda, rho)) continue;
      const Path nu = g.segment(rho, lambda.degree(), rho.degree());
      auto it = thetas.find({rho, g.compose(mu, nu)});
      if (it == thetas.end()) {
        in_grid = false;
        break;
      }
      rhs += it->second;
    }
    const double dev = in_grid ? deviation(lhs, rhs) : std::numeric_limits<double>::infinity();
    note(dev, report.expansion_deviation,
         [&] { return "expansion at " + pair_text(g, lambda, mu); });
  }
  return report;
}

std::vector<std::pair<Path, Path>> nonzero_theta_pattern(const FamilyCollection& s,
                                                         const std::vector<Path>& pi_e) {
  if (!s.universe().exact()) {
    throw Error(ErrorCode::InexactUniverse, "the nonzero Θ pattern needs an exact universe");
  }
  const KGraph& g = s.universe().graph();
  std::vector<std::pair<Path, Path>> out;
  std::map<Path, bool> nonzero;
  for (auto& [lambda, mu] : grid_pairs(pi_e)) {
    auto it = nonzero.find(lambda);
    if (it == nonzero.end()) {
      const bool nz = member(theta_tails(g, pi_e, lambda), s) != Membership::Yes;
      it = nonzero.emplace(lambda, nz).first;
    }
    if (it->second) out.emplace_back(std::move(lambda), std::move(mu));
  }
  return out;
}

template <typename T>
FaithfulReport faithful_on_core_check(const CKFamily<T>& family, const FamilyCollection& s,
                                      const std::vector<std::vector<Path>>& windows) {
  const Universe& u = s.universe();
  const KGraph& g = u.graph();
  if (!u.exact()) {
    throw Error(ErrorCode::InexactUniverse, "faithfulness check needs an exact universe");
  }
  FaithfulReport report;

  std::vector<std::vector<Path>> all_windows = windows;
  if (!g.is_cyclic()) all_windows.push_back(PathCatalog(g).all());
  for (const auto& e : all_windows) {
    const auto pi_e = pi_closure(g, e);
    ++report.windows_checked;
    for (const auto& [lambda, mu] : nonzero_theta_pattern(s, pi_e)) {
      if (theta(g, family, pi_e, lambda, mu).is_zero()) {
        if (report.route_a) {
          report.route_a_failure = "Θ" + pair_text(g, lambda, mu) + " vanishes for E = " +
                                   set_text(g, e);
        }
        report.route_a = false;
        break;
      }
    }
  }

  for (VertexId v : g.vertices()) {
    if (family.at(g.vertex_path(v)).is_zero()) {
      if (report.route_b) report.route_b_failure = "t_" + g.name(v) + " = 0";
      report.route_b = false;
    }
  }
  for (VertexId v : g.vertices()) {
    for (FamilyMask m : u.all_fe(v)) {
      if (s.contains(v, m)) continue;
      const PathFamily f = u.family(v, m);
      if (gap_product(family, v, f.members(), g).is_zero()) {
        if (report.route_b) report.route_b_failure = "gap product of " + to_string(g, f) + " = 0";
        report.route_b = false;
      }
    }
  }
  return report;
}

template <typename T>
double shift_gaps_check(const KGraph& g, const CKFamily<T>& family, const PathFamily& e,
                        const Path& mu) {
  if (mu.range() != e.range()) {
    throw Error(ErrorCode::RangeMismatch, "shift_gaps_check needs r(μ) = r(E)");
  }
  const auto& tm = family.at(mu);
  const SparseMatrix<T> lhs = gap_product(family, e.range(), e.members(), g) * (tm * tm.adjoint());
  const SparseMatrix<T> rhs =
      tm * gap_product(family, mu.source(), ext(g, mu, e), g) * tm.adjoint();
  return deviation(lhs, rhs);
}

// ---------------------------------------------------------------------------
// Gauge action
// ---------------------------------------------------------------------------

SparseMatrix<Complex> gauge_unitary(const CKFamily<Complex>& family, const std::vector<Complex>& z) {
  if (family.basis.size() != family.dim) {
    throw Error(ErrorCode::PreconditionFailed, "gauge unitaries need a path-labelled basis");
  }
  SparseMatrix<Complex> u(family.dim, family.dim);
  for (std::size_t i = 0; i < family.dim; ++i) u.set(i, i, torus_power(z, family.basis[i].degree()));
  return u;
}

double gauge_unitary_check(const CKFamily<Complex>& family,
                           const std::vector<std::vector<Complex>>& zs) {
  double worst = 0.0;
  for (const auto& z : zs) {
    const auto u = gauge_unitary(family, z);
    const auto u_star = u.adjoint();
    for (const auto& [lambda, t] : family.t) {
      worst = std::max(worst, deviation(u * t * u_star, t * torus_power(z, lambda.degree())));
    }
  }
  return worst;
}

std::vector<std::vector<Complex>> random_torus_points(std::size_t k, std::size_t count,
                                                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::vector<std::vector<Complex>> out(count);
  for (auto& z : out) {
    for (std::size_t i = 0; i < k; ++i) z.push_back(std::polar(1.0, angle(rng)));
  }
  return out;
}

std::vector<std::vector<Complex>> gauge_averaging_points(const KGraph& g, std::size_t min_size) {
  if (g.is_cyclic()) {
    throw Error(ErrorCode::CyclicGraphUnsupported, "finite gauge averaging needs bounded degrees");
  }
  std::vector<std::size_t> orders;
  std::size_t total = 1;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    orders.push_back(g.max_degree()[i] + 1);
    total *= orders.back();
  }
  while (total < min_size) {
    total = total / orders[0] * (orders[0] + 1);
    ++orders[0];
  }
  std::vector<std::vector<Complex>> out{{}};
  for (std::size_t n : orders) {
    std::vector<std::vector<Complex>> next;
    for (const auto& prefix : out) {
      for (std::size_t j = 0; j < n; ++j) {
        auto z = prefix;
        z.push_back(std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) /
                                        static_cast<double>(n)));
        next.push_back(std::move(z));
      }
    }
    out = std::move(next);
  }
  return out;
}

SparseMatrix<Complex> gauge_average(const FormalElement<Complex>& a,
                                    const CKFamily<Complex>& family,
                                    const std::vector<std::vector<Complex>>& zs) {
  const auto pa = evaluate(a, family);
  SparseMatrix<Complex> sum(family.dim, family.dim);
  for (const auto& z : zs) {
    const auto u = gauge_unitary(family, z);
    sum += u * pa * u.adjoint();
  }
  return sum * Complex(1.0 / static_cast<double>(zs.size()), 0.0);
}

ContractionChecker::ContractionChecker(const CKFamily<Rational>& family, const FamilyCollection& s)
    : graph_(&s.universe().graph()), family_(to_complex(family)) {
  const auto report = verify_family(*graph_, family, s.families());
  if (!report.all_passed()) {
    throw Error(ErrorCode::HypothesisNotMet, "the family is not a relative Cuntz-Krieger family");
  }
  if (!faithful_on_core_check(family, s, {}).faithful()) {
    throw Error(ErrorCode::HypothesisNotMet, "the family is not faithful on the core");
  }
  if (!condition_c(s).holds) {
    throw Error(ErrorCode::HypothesisNotMet, "condition (C) fails");
  }
}

NormPair ContractionChecker::check(const FormalElement<Complex>& a) const {
  return {operator_norm(evaluate(gauge_expectation(a), family_)),
          operator_norm(evaluate(a, family_))};
}

// ---------------------------------------------------------------------------
// Instantiations
// ---------------------------------------------------------------------------

#define KGCK_INSTANTIATE(T)                                                                      \
  template FormalElement<T> formal_term(const Path&, const Path&, const T&);                     \
  template FormalElement<T> formal_add(const FormalElement<T>&, const FormalElement<T>&);        \
  template FormalElement<T> formal_scale(const FormalElement<T>&, const T&);                     \
  template FormalElement<T> formal_star(const FormalElement<T>&);                                \
  template FormalElement<T> formal_mul(const KGraph&, const FormalElement<T>&,                   \
                                       const FormalElement<T>&);                                 \
  template FormalElement<T> gauge_expectation(const FormalElement<T>&);                          \
  template struct CKFamily<T>;                                                                   \
  template CKFamily<Complex> to_complex(const CKFamily<T>&);                                     \
  template SparseMatrix<T> evaluate(const FormalElement<T>&, const CKFamily<T>&);                \
  template SparseMatrix<T> gap_product(const CKFamily<T>&, VertexId, const std::vector<Path>&,   \
                                       const KGraph&);                                           \
  template FamilyReport verify_family(const KGraph&, const CKFamily<T>&,                         \
                                      const std::vector<PathFamily>&);                           \
  template SparseMatrix<T> theta(const KGraph&, const CKFamily<T>&, const std::vector<Path>&,    \
                                 const Path&, const Path&);                                      \
  template FormalElement<T> formal_theta(const KGraph&, const std::vector<Path>&, const Path&,   \
                                         const Path&);                                           \
  template MatrixUnitReport matrix_unit_check(const KGraph&, const CKFamily<T>&,                 \
                                              const std::vector<Path>&);                         \
  template FaithfulReport faithful_on_core_check(const CKFamily<T>&, const FamilyCollection&,    \
                                                 const std::vector<std::vector<Path>>&);         \
  template double shift_gaps_check(const KGraph&, const CKFamily<T>&, const PathFamily&,         \
                                   const Path&);

KGCK_INSTANTIATE(Rational)
KGCK_INSTANTIATE(Complex)

#undef KGCK_INSTANTIATE

}  // namespace kgck
