#include "support/criteria.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include <Eigen/Dense>

#include "kgck/boundary.hpp"
#include "kgck/error.hpp"
#include "kgck/repn.hpp"
#include "kgck/sampling.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"
#include "support/random_graphs.hpp"

namespace kgck::testing {

namespace {

using oracle::Fam;
using oracle::Key;
using oracle::Model;

/// Collects counts and the first failure.
class Tally {
 public:
  void count(const std::string& what, std::size_t n = 1) { counts_[what] += n; }
  void fail(const std::string& why) {
    if (first_failure_.empty()) first_failure_ = why;
    ++failures_;
  }
  void expect(bool ok, const std::function<std::string()>& why) {
    if (!ok) fail(why());
  }
  CriterionResult result() const {
    if (failures_) {
      return {false, std::to_string(failures_) + " failure(s); first: " + first_failure_};
    }
    std::string text;
    for (const auto& [what, n] : counts_) {
      if (!text.empty()) text += ", ";
      text += std::to_string(n) + " " + what;
    }
    return {true, text};
  }

 private:
  std::map<std::string, std::size_t> counts_;
  std::size_t failures_ = 0;
  std::string first_failure_;
};

std::size_t uniform(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

template <typename T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v) {
  return v.at(uniform(rng, v.size()));
}

std::vector<Path> random_subset(std::mt19937_64& rng, std::vector<Path> pool, std::size_t count) {
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(std::min(count, pool.size()));
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::set<Key> keys(const Model& m, const std::vector<Path>& paths) {
  std::set<Key> out;
  for (const auto& p : paths) out.insert(m.key(p));
  return out;
}

std::set<Fam> fams(const Model& m, const std::vector<PathFamily>& families) {
  std::set<Fam> out;
  for (const auto& f : families) out.insert(m.fam(f));
  return out;
}

std::string show(const KGraph& g, const std::vector<Path>& paths) {
  std::string out = "{";
  for (std::size_t i = 0; i < paths.size(); ++i) out += (i ? ", " : "") + g.to_string(paths[i]);
  return out + "}";
}

/// ∏_{λ ∈ members} (t_v − t_λ t_λ*), computed here rather than by the library.
SparseMatrix<Rational> gap(const CKFamily<Rational>& t, const Path& v, const std::vector<Path>& members) {
  SparseMatrix<Rational> out = t.at(v);
  for (const auto& lambda : members) {
    const auto& tl = t.at(lambda);
    out = out * (t.at(v) - tl * tl.adjoint());
  }
  return out;
}

/// ΠE by a naive fixpoint over oracle keys.
std::set<Key> pi_closure_oracle(const Model& m, const std::set<Key>& seed) {
  std::set<Key> g = seed;
  bool changed = true;
  while (changed) {
    changed = false;
    const std::vector<Key> cur(g.begin(), g.end());
    for (const auto& lambda : cur) {
      for (const auto& mu : cur) {
        if (m.degree(lambda.word) != m.degree(mu.word) || m.source(lambda) != m.source(mu)) continue;
        for (const auto& sigma : cur) {
          if (sigma.range != mu.range) continue;
          for (const auto& alpha : m.ext(mu, {sigma})) changed |= g.insert(m.compose(lambda, alpha)).second;
        }
      }
    }
  }
  return g;
}

/// The largest singular value from the eigenvalues of A*A, independent of
/// the library's SVD.
double norm_oracle(const SparseMatrix<Complex>& a) {
  if (a.rows() == 0) return 0.0;
  const auto n = static_cast<Eigen::Index>(a.cols());
  Eigen::MatrixXcd dense = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(a.rows()), n);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (const auto& [j, v] : a.row(i)) dense(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(dense.adjoint() * dense, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

}  // namespace

// ---------------------------------------------------------------------------
// 1. factorisation
// ---------------------------------------------------------------------------

CriterionResult factorization_uniqueness(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  struct Case {
    std::string name;
    KGraph g;
    DegreeVector bound;
  };
  std::vector<Case> cases;
  for (const char* f : {"omega_1_3.json", "omega_2_11.json", "omega_2_21.json"}) {
    KGraph g = load_fixture(f);
    DegreeVector b = g.max_degree();
    cases.push_back({f, std::move(g), std::move(b)});
  }
  cases.push_back({"g1.json", load_fixture("g1.json"), DegreeVector{3, 3}});
  for (int i = 0; i < 20; ++i) {
    KGraph g = validate(random_spec(rng, i % 2 == 0 ? 2 : 3));
    DegreeVector b = g.max_degree();
    cases.push_back({"random#" + std::to_string(i), std::move(g), std::move(b)});
  }

  Tally t;
  for (const auto& c : cases) {
    const Model m(c.g);
    t.count("graphs");
    for (VertexId v : c.g.vertices()) {
      const auto lib = c.g.paths_up_to(v, c.bound);
      t.expect(keys(m, lib) == [&] {
        auto ks = m.paths_up_to(m.vertex(v), oracle::to_degree(c.bound));
        return std::set<Key>(ks.begin(), ks.end());
      }(), [&] { return c.name + ": path enumeration at " + c.g.name(v) + " disagrees with word classes"; });
      for (const auto& p : lib) {
        t.count("paths");
        const Key kp = m.key(p);
        for (const auto& split : lattice_below(p.degree())) {
          t.count("splits");
          const auto pairs = m.factorizations(kp, oracle::to_degree(split));
          const auto [head, tail] = c.g.factor(p, split);
          const std::pair<Key, Key> lib_pair{m.key(head), m.key(tail)};
          t.expect(pairs.size() == 1 && *pairs.begin() == lib_pair, [&] {
            return c.name + ": " + c.g.to_string(p) + " at " + split.to_string() + " has " +
                   std::to_string(pairs.size()) + " factorisation(s) or disagrees with segment()";
          });
          t.expect(c.g.compose(head, tail) == p, [&] { return c.name + ": compose(factor) != p"; });
          // brute-force prefix search over every path of degree `split`
          std::vector<Path> found;
          for (const auto& q : c.g.paths(v, split)) {
            if (m.is_prefix(m.key(q), kp)) found.push_back(q);
          }
          t.expect(found.size() == 1 && found.front() == head, [&] {
            return c.name + ": prefix search at " + split.to_string() + " of " + c.g.to_string(p) +
                   " found " + show(c.g, found);
          });
        }
      }
    }
  }
  return t.result();
}

// ---------------------------------------------------------------------------
// 2. Ext(λ2; Ext(λ1; E)) = Ext(λ1λ2; E)
// ---------------------------------------------------------------------------

CriterionResult extension_composition(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<KGraph, DegreeVector>> graphs;
  for (auto& f : acyclic_fixtures()) {
    DegreeVector b = f.graph.max_degree();
    graphs.emplace_back(std::move(f.graph), std::move(b));
  }
  graphs.emplace_back(load_fixture("g1.json"), DegreeVector{2, 2});
  std::vector<Model> models;
  for (const auto& [g, b] : graphs) models.emplace_back(g);

  Tally t;
  for (int n = 0; n < 500; ++n) {
    const std::size_t gi = static_cast<std::size_t>(n) % graphs.size();
    const auto& [g, bound] = graphs[gi];
    const Model& m = models[gi];
    const VertexId v = pick(rng, g.vertices());
    const auto at_v = g.paths_up_to(v, bound);
    const Path& l1 = pick(rng, at_v);
    const auto at_s = g.paths_up_to(l1.source(), bound);
    const Path& l2 = pick(rng, at_s);
    const PathFamily e(v, random_subset(rng, at_v, 1 + uniform(rng, 3)));

    const auto lhs = ext(g, l2, ext_family(g, l1, e));
    const Path l1l2 = g.compose(l1, l2);
    const auto rhs = ext(g, l1l2, e);
    t.count("instances");
    t.expect(lhs == rhs, [&] {
      return "Ext(" + g.to_string(l2) + "; Ext(" + g.to_string(l1) + "; " + to_string(g, e) + ")) = " +
             show(g, lhs) + " but Ext(" + g.to_string(l1l2) + "; E) = " + show(g, rhs);
    });
    t.expect(keys(m, rhs) == m.ext(m.key(l1l2), m.fam(e).members),
             [&] { return "ext(" + g.to_string(l1l2) + ", " + to_string(g, e) + ") disagrees with the oracle"; });
  }
  return t.result();
}

// ---------------------------------------------------------------------------
// 3. matrix units
// ---------------------------------------------------------------------------

CriterionResult matrix_units(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Tally t;
  for (const auto& fx : acyclic_fixtures()) {
    const Model m(fx.graph);
    const auto all = PathCatalog(fx.graph).all();
    for (const auto& [sname, s] : standard_collections(fx.graph, rng)) {
      const auto rep = boundary_rep(s);
      const KGraph& g = s.universe().graph();
      for (int w = 0; w < 10; ++w) {
        const auto e = random_subset(rng, all, 1 + uniform(rng, 3));
        const auto pi = pi_closure(g, e);
        t.count("windows");
        t.expect(keys(m, pi) == pi_closure_oracle(m, keys(m, e)),
                 [&] { return fx.name + ": ΠE of " + show(g, e) + " disagrees with the fixpoint oracle"; });

        const auto grid = grid_pairs(pi);
        std::map<std::pair<Path, Path>, SparseMatrix<Rational>> th;
        for (const auto& [lambda, mu] : grid) {
          std::vector<Path> tails;
          for (const auto& rho : pi) {
            if (rho != lambda && m.is_prefix(m.key(lambda), m.key(rho))) {
              tails.push_back(g.segment(rho, lambda.degree(), rho.degree()));
            }
          }
          const Path sv = g.vertex_path(lambda.source());
          const auto mine = rep.at(lambda) * gap(rep, sv, tails) * rep.at(mu).adjoint();
          t.expect(mine == theta(g, rep, pi, lambda, mu), [&] {
            return fx.name + "/" + sname + ": Θ(" + g.to_string(lambda) + ", " + g.to_string(mu) +
                   ") differs from the direct product";
          });
          th.emplace(std::make_pair(lambda, mu), mine);
        }
        for (const auto& [lm, a] : th) {
          t.expect(a.adjoint() == th.at({lm.second, lm.first}),
                   [&] { return fx.name + "/" + sname + ": Θ* != Θ transposed at " + g.to_string(lm.first); });
          for (const auto& [st, b] : th) {
            const auto prod = a * b;
            const bool ok = lm.second == st.first ? prod == th.at({lm.first, st.second}) : prod.is_zero();
            t.count("products");
            t.expect(ok, [&] {
              return fx.name + "/" + sname + ": Θ(" + g.to_string(lm.first) + "," + g.to_string(lm.second) +
                     ")Θ(" + g.to_string(st.first) + "," + g.to_string(st.second) + ") wrong";
            });
          }
          // t_λ t_μ* = Σ_{λν ∈ ΠE} Θ_{λν, μν}
          const auto& [lambda, mu] = lm;
          SparseMatrix<Rational> sum(rep.dim, rep.dim);
          for (const auto& [lm2, c] : th) {
            if (!m.is_prefix(m.key(lambda), m.key(lm2.first))) continue;
            const Path nu = g.segment(lm2.first, lambda.degree(), lm2.first.degree());
            if (lm2.second == g.compose(mu, nu)) sum += c;
          }
          t.expect(sum == rep.at(lambda) * rep.at(mu).adjoint(), [&] {
            return fx.name + "/" + sname + ": expansion of t_" + g.to_string(lambda) + " t_" + g.to_string(mu) +
                   "* fails";
          });
        }
        const auto report = matrix_unit_check(g, rep, pi);
        t.expect(report.passed(0.0), [&] { return fx.name + "/" + sname + ": matrix_unit_check: " + report.witness; });
      }
    }
  }
  return t.result();
}

// ---------------------------------------------------------------------------
// 4. satiation
// ---------------------------------------------------------------------------

CriterionResult satiation_correctness(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Tally t;
  for (const char* file : {"omega_2_11.json", "omega_2_21.json"}) {
    const KGraph graph = load_fixture(file);
    const Model m(graph);
    const auto u = Universe::build(graph);
    const auto lib_fe = all_fe_families(*u);
    const auto fe = oracle::all_fe(m);
    t.expect(fams(m, lib_fe) == fe, [&] { return std::string(file) + ": FE window disagrees with brute force"; });
    const std::vector<Fam> fe_list(fe.begin(), fe.end());

    auto lib_satiate = [&](const std::vector<PathFamily>& gens) {
      return fams(m, satiate(FamilyCollection::from_families(u, gens)).families());
    };
    auto to_lib = [&](const std::set<Fam>& c) {
      std::vector<PathFamily> out;
      for (const auto& f : c) out.push_back(m.family(f));
      return out;
    };

    // every generator collection of size <= 2
    std::vector<std::set<Fam>> gens{{}};
    for (std::size_t i = 0; i < fe_list.size(); ++i) {
      gens.push_back({fe_list[i]});
      for (std::size_t j = i + 1; j < fe_list.size(); ++j) gens.push_back({fe_list[i], fe_list[j]});
    }
    std::vector<std::set<Fam>> satiated_all;
    const bool powerset = fe_list.size() <= 12;
    if (powerset) {
      for (std::uint32_t mask = 0; mask < (1u << fe_list.size()); ++mask) {
        std::set<Fam> c;
        for (std::size_t i = 0; i < fe_list.size(); ++i) {
          if (mask & (1u << i)) c.insert(fe_list[i]);
        }
        if (oracle::is_satiated(m, fe, c)) satiated_all.push_back(std::move(c));
      }
      t.count("satiated collections enumerated", satiated_all.size());
    }
    for (const auto& c : gens) {
      const auto expected = oracle::least_satiated(m, fe, c);
      t.count("generator sets");
      t.expect(lib_satiate(to_lib(c)) == expected,
               [&] { return std::string(file) + ": satiate differs from the least satiated superset"; });
      if (powerset) {
        std::set<Fam> meet = fe;
        for (const auto& s : satiated_all) {
          if (!std::includes(s.begin(), s.end(), c.begin(), c.end())) continue;
          std::set<Fam> next;
          std::set_intersection(meet.begin(), meet.end(), s.begin(), s.end(), std::inserter(next, next.end()));
          meet = std::move(next);
        }
        t.expect(meet == expected, [&] { return std::string(file) + ": forward chaining differs from the meet"; });
      }
    }

    // closure-operator laws on random generators
    for (int n = 0; n < 50; ++n) {
      std::vector<PathFamily> c;
      for (std::size_t k = uniform(rng, 4); k > 0; --k) c.push_back(pick(rng, lib_fe));
      std::vector<PathFamily> d = c;
      for (std::size_t k = 1 + uniform(rng, 2); k > 0; --k) d.push_back(pick(rng, lib_fe));
      const auto sc = satiate(FamilyCollection::from_families(u, c));
      const auto sd = satiate(FamilyCollection::from_families(u, d));
      t.count("law checks");
      t.expect(FamilyCollection::from_families(u, c).subset_of(sc), [&] { return std::string(file) + ": not extensive"; });
      t.expect(sc.subset_of(sd), [&] { return std::string(file) + ": not monotone"; });
      t.expect(satiate(sc) == sc, [&] { return std::string(file) + ": not idempotent"; });
      t.expect(is_satiated(sc).satiated, [&] { return std::string(file) + ": result fails the axiom check"; });
    }
  }
  return t.result();
}

// ---------------------------------------------------------------------------
// 5. which matrix units vanish
// ---------------------------------------------------------------------------

CriterionResult nonzero_matrix_units(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Tally t;
  for (const auto& fx : acyclic_fixtures()) {
    const Model m(fx.graph);
    for (const auto& [sname, s] : standard_collections(fx.graph, rng)) {
      const auto rep = boundary_rep(s);
      const KGraph& g = s.universe().graph();
      const auto in_s = fams(m, s.families());
      for (const auto& f : all_fe_families(s.universe())) {
        const bool vanishes = gap(rep, g.vertex_path(f.range()), f.members()).is_zero();
        const Membership mem = member(f, s);
        t.count("families");
        t.expect(vanishes == (mem == Membership::Yes), [&] {
          return fx.name + "/" + sname + ": gap of " + to_string(g, f) + (vanishes ? " vanishes" : " is nonzero") +
                 " but member = " + std::string(to_string(mem));
        });
        t.expect((mem == Membership::Yes) == (in_s.count(m.fam(f)) > 0),
                 [&] { return fx.name + "/" + sname + ": member() disagrees with the collection"; });
      }
    }
  }
  return t.result();
}

// ---------------------------------------------------------------------------
// 6. faithfulness on the core
// ---------------------------------------------------------------------------

CriterionResult faithful_characterisation(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Tally t;
  for (const auto& fx : acyclic_fixtures()) {
    for (const auto& [sname, s] : standard_collections(fx.graph, rng)) {
      const KGraph& g = s.universe().graph();
      const auto all = PathCatalog(g).all();
      std::vector<PathFamily> outside;
      for (const auto& f : all_fe_families(s.universe())) {
        if (!s.contains(f)) outside.push_back(f);
      }
      std::vector<std::vector<Path>> windows;
      for (const auto& f : outside) {
        auto w = f.members();
        w.push_back(g.vertex_path(f.range()));
        windows.push_back(std::move(w));
      }
      for (int k = 0; k < 3; ++k) windows.push_back(random_subset(rng, all, 1 + uniform(rng, 3)));

      const auto own = faithful_on_core_check(boundary_rep(s), s, windows);
      t.count("faithful checks");
      t.expect(own.faithful() && own.agree(), [&] {
        return fx.name + "/" + sname + ": own representation not faithful: " + own.route_a_failure + " / " +
               own.route_b_failure;
      });

      for (std::size_t k = 0; k < std::min<std::size_t>(outside.size(), 4); ++k) {
        const auto& f = outside[uniform(rng, outside.size())];
        std::vector<PathFamily> bigger = s.families();
        bigger.push_back(f);
        const auto s2 = satiate(FamilyCollection::from_families(s.universe_ptr(), bigger));
        const auto report = faithful_on_core_check(boundary_rep(s2), s, windows);
        t.count("strictly larger collections");
        t.expect(!report.route_a && !report.route_b, [&] {
          return fx.name + "/" + sname + ": representation for S + " + to_string(g, f) +
                 " was not detected as unfaithful (route a " + (report.route_a ? "ok" : "fail") + ", route b " +
                 (report.route_b ? "ok" : "fail") + ")";
        });
      }
    }
  }
  return t.result();
}

// ---------------------------------------------------------------------------
// 7. shift gaps
// ---------------------------------------------------------------------------

CriterionResult shift_gaps(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  struct Rep {
    std::string name;
    FamilyCollection s;
    CKFamily<Rational> t;
  };
  std::vector<Rep> reps;
  std::vector<std::unique_ptr<Model>> models;
  for (const auto& fx : acyclic_fixtures()) {
    for (auto& [sname, s] : standard_collections(fx.graph, rng)) {
      auto rep = boundary_rep(s);
      reps.push_back({fx.name + "/" + sname, std::move(s), std::move(rep)});
      models.push_back(std::make_unique<Model>(reps.back().s.universe().graph()));
    }
  }
  Tally t;
  for (int n = 0; n < 200; ++n) {
    const std::size_t i = uniform(rng, reps.size());
    const auto& r = reps[i];
    const Model& m = *models[i];
    const KGraph& g = r.s.universe().graph();
    const VertexId v = pick(rng, g.vertices());
    const auto at_v = PathCatalog(g).with_range(v);
    const PathFamily e(v, random_subset(rng, at_v, 1 + uniform(rng, 3)));
    const Path& mu = pick(rng, at_v);

    const double dev = shift_gaps_check(g, r.t, e, mu);
    std::vector<Path> ext_mu;
    for (const auto& k : m.ext(m.key(mu), m.fam(e).members)) ext_mu.push_back(m.path(k));
    const auto& tm = r.t.at(mu);
    const auto lhs = gap(r.t, g.vertex_path(v), e.members()) * tm * tm.adjoint();
    const auto rhs = tm * gap(r.t, g.vertex_path(mu.source()), ext_mu) * tm.adjoint();
    t.count("instances");
    t.expect(dev == 0.0 && lhs == rhs, [&] {
      return r.name + ": E = " + to_string(g, e) + ", μ = " + g.to_string(mu) + ", deviation " + std::to_string(dev);
    });
  }
  return t.result();
}

// ---------------------------------------------------------------------------
// 8. gauge action
// ---------------------------------------------------------------------------

CriterionResult gauge_compatibility(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Sampler sampler(seed);
  Tally t;
  double worst_unitary = 0.0;
  double worst_average = 0.0;
  for (const auto& fx : acyclic_fixtures()) {
    auto cols = standard_collections(fx.graph, rng);
    const auto& s = cols[uniform(rng, cols.size())].s;
    const KGraph& g = s.universe().graph();
    const auto fam = to_complex(boundary_rep(s));
    const auto zs = random_torus_points(g.rank(), 8, seed + 17);

    auto unitary = [&](const std::vector<Complex>& z) {
      SparseMatrix<Complex> u(fam.dim, fam.dim);
      for (std::size_t i = 0; i < fam.basis.size(); ++i) {
        Complex c(1.0);
        const auto& d = fam.basis[i].degree();
        for (std::size_t j = 0; j < d.rank(); ++j) c *= std::pow(z[j], static_cast<int>(d[j]));
        u.set(i, i, c);
      }
      return u;
    };

    const double lib_dev = gauge_unitary_check(fam, zs);
    worst_unitary = std::max(worst_unitary, lib_dev);
    for (const auto& z : zs) {
      const auto u = unitary(z);
      for (const auto& [lambda, tl] : fam.t) {
        Complex c(1.0);
        for (std::size_t j = 0; j < g.rank(); ++j) c *= std::pow(z[j], static_cast<int>(lambda.degree()[j]));
        worst_unitary = std::max(worst_unitary, deviation(u * tl * u.adjoint(), c * tl));
      }
    }
    t.count("fixtures");

    const auto points = gauge_averaging_points(g);
    const auto all = PathCatalog(g).all();
    for (int k = 0; k < 10; ++k) {
      const auto a = sampler.formal_element(all, 10);
      const auto expected = evaluate(gauge_expectation(a), fam);
      const auto pa = evaluate(a, fam);
      SparseMatrix<Complex> avg(fam.dim, fam.dim);
      for (const auto& z : points) {
        const auto u = unitary(z);
        avg += u * pa * u.adjoint();
      }
      avg *= Complex(1.0 / static_cast<double>(points.size()));
      worst_average = std::max({worst_average, deviation(expected, avg),
                                deviation(expected, gauge_average(a, fam, points))});
      t.count("elements");
    }
  }
  t.expect(worst_unitary <= 1e-12, [&] { return "gauge unitary deviation " + std::to_string(worst_unitary); });
  t.expect(worst_average <= 1e-9, [&] { return "averaged conjugation deviation " + std::to_string(worst_average); });
  auto r = t.result();
  if (r.passed) {
    std::ostringstream s;
    s << r.detail << ", max unitary deviation " << worst_unitary << ", max averaging deviation " << worst_average;
    r.detail = s.str();
  }
  return r;
}

// ---------------------------------------------------------------------------
// 9. expectation contraction
// ---------------------------------------------------------------------------

CriterionResult expectation_contraction(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Sampler sampler(seed);
  Tally t;
  std::size_t clean = 0;
  for (const auto& fx : acyclic_fixtures()) {
    for (const auto& [sname, s] : standard_collections(fx.graph, rng)) {
      if (!condition_c(s).holds) {
        t.count("collections without condition (C)");
        continue;
      }
      ++clean;
      const KGraph& g = s.universe().graph();
      const auto rep = boundary_rep(s);
      const auto fam = to_complex(rep);
      const ContractionChecker checker(rep, s);
      const auto all = PathCatalog(g).all();
      for (int k = 0; k < 100; ++k) {
        const auto a = sampler.formal_element(all, 10);
        const auto n = checker.check(a);
        const double rhs = norm_oracle(evaluate(a, fam));
        const double lhs = norm_oracle(evaluate(gauge_expectation(a), fam));
        t.count("elements");
        t.expect(n.holds(1e-9) && lhs <= rhs + 1e-9, [&] {
          std::ostringstream o;
          o << fx.name << "/" << sname << ": ‖π(Φ(a))‖ = " << n.lhs << " > ‖π(a)‖ = " << n.rhs;
          return o.str();
        });
        t.expect(std::abs(n.rhs - rhs) <= 1e-9 && std::abs(n.lhs - lhs) <= 1e-9,
                 [&] { return fx.name + "/" + sname + ": operator norm disagrees with the eigenvalue oracle"; });
      }
    }
  }
  t.expect(clean > 0, [] { return "no collection satisfies condition (C)"; });
  return t.result();
}

// ---------------------------------------------------------------------------
// 10. boundary paths exist and avoid
// ---------------------------------------------------------------------------

CriterionResult boundary_existence(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Tally t;
  for (const auto& fx : acyclic_fixtures()) {
    auto cols = standard_collections(fx.graph, rng);
    const auto u = cols.front().s.universe_ptr();
    const auto fe = all_fe_families(*u);
    for (std::size_t k = 0; k < std::min<std::size_t>(fe.size(), 6); ++k) {
      const auto& gen = fe[uniform(rng, fe.size())];
      cols.push_back({"satiate(" + to_string(u->graph(), gen) + ")",
                      satiate(FamilyCollection::from_families(u, {gen}))});
    }
    for (const auto& [sname, s] : cols) {
      const KGraph& g = s.universe().graph();
      const Model m(g);
      const auto in_s = fams(m, s.families());
      std::map<VertexId, std::set<Key>> expected;
      for (VertexId v : g.vertices()) {
        for (const auto& x : m.paths_up_to(m.vertex(v), m.max_degree())) {
          if (oracle::is_boundary(m, x, in_s)) expected[v].insert(x);
        }
        const auto found = boundary_paths(v, s);
        t.count("vertices");
        t.expect(!found.empty() && keys(m, found) == expected[v], [&] {
          return fx.name + "/" + sname + ": boundary paths at " + g.name(v) + " = " + show(g, found) +
                 " disagree with the definition";
        });
      }
      for (const auto& f : fe) {
        if (s.contains(f)) continue;
        const Path x = construct_boundary(f.range(), s, f);
        const Key kx = m.key(x);
        t.count("avoided families");
        t.expect(!m.in_extensions(kx, m.fam(f).members) && expected[f.range()].count(kx), [&] {
          return fx.name + "/" + sname + ": construct_boundary avoiding " + to_string(g, f) + " gave " +
                 g.to_string(x);
        });
      }
    }
  }
  return t.result();
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "factorization uniqueness", factorization_uniqueness},
      {2, "extension composition", extension_composition},
      {3, "matrix units", matrix_units},
      {4, "satiation correctness", satiation_correctness},
      {5, "vanishing matrix units", nonzero_matrix_units},
      {6, "faithfulness on the core", faithful_characterisation},
      {7, "shift gaps", shift_gaps},
      {8, "gauge compatibility", gauge_compatibility},
      {9, "expectation contraction", expectation_contraction},
      {10, "boundary existence", boundary_existence},
  };
  return all;
}

}  // namespace kgck::testing
