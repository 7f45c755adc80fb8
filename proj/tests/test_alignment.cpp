#include <gtest/gtest.h>

#include <random>

#include "kgck/alignment.hpp"
#include "kgck/error.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

namespace kgck {
namespace {

using testing::load_fixture;

class OmegaSquare : public ::testing::Test {
 protected:
  KGraph g = load_fixture("omega_2_11.json");
  Path p(std::string_view s) const { return g.parse_path(s); }
  PathFamily fam(std::initializer_list<std::string_view> members) const {
    std::vector<Path> ps;
    for (auto m : members) ps.push_back(p(m));
    return PathFamily(ps.front().range(), ps);
  }
};

TEST_F(OmegaSquare, MceOfTheTwoEdges) {
  const auto m = mce(g, p("a"), p("b"));
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m.front(), p("a.b'"));
  EXPECT_EQ(mce(g, p("b"), p("a")), m);
}

TEST_F(OmegaSquare, VertexCases) {
  const Path v = p("(0,0)");
  EXPECT_EQ(mce(g, v, v), std::vector<Path>{v});
  const auto lm = lambda_min(g, v, v);
  ASSERT_EQ(lm.size(), 1u);
  EXPECT_EQ(lm.front().alpha, v);
  EXPECT_TRUE(lambda_min(g, p("a"), p("a'")).empty());  // ranges differ
}

TEST_F(OmegaSquare, ExtExamples) {
  EXPECT_EQ(ext(g, p("b"), fam({"a"})), std::vector<Path>{p("a'")});
  EXPECT_EQ(ext(g, p("(0,0)"), fam({"a", "b"})), (fam({"a", "b"}).members()));
  EXPECT_EQ(ext(g, p("a"), fam({"a"})), std::vector<Path>{p("(1,0)")});
  EXPECT_THROW(ext(g, p("a'"), fam({"a"})), Error);
}

TEST_F(OmegaSquare, PiClosure) {
  const auto v = pi_closure(g, {p("(0,0)")});
  EXPECT_EQ(v, std::vector<Path>{p("(0,0)")});
  const auto ab = pi_closure(g, {p("a"), p("b")});
  EXPECT_NE(std::find(ab.begin(), ab.end(), p("a.b'")), ab.end());
  EXPECT_EQ(ab.size(), 3u);
  EXPECT_EQ(pairs_ds(ab).size(), 3u);  // diagonal only
}

TEST(Alignment, SingleVertexMinPairs) {
  const KGraph g = load_fixture("g1.json");
  const auto lm = lambda_min(g, g.parse_path("b"), g.parse_path("r"));
  ASSERT_EQ(lm.size(), 1u);
  EXPECT_EQ(lm.front().alpha, g.parse_path("r"));
  EXPECT_EQ(lm.front().beta, g.parse_path("b"));
  EXPECT_EQ(mce(g, g.parse_path("b"), g.parse_path("r")), std::vector<Path>{g.parse_path("b.r")});
}

TEST(Alignment, MinPairsComposeToTheMce) {
  for (const auto& fx : testing::acyclic_fixtures()) {
    const KGraph& g = fx.graph;
    const auto all = PathCatalog(g).all();
    for (const auto& mu : all) {
      for (const auto& nu : PathCatalog(g).with_range(mu.range())) {
        const auto m = mce(g, mu, nu);
        EXPECT_EQ(m, mce(g, nu, mu));
        const auto lm = lambda_min(g, mu, nu);
        ASSERT_EQ(lm.size(), m.size());
        for (const auto& [alpha, beta] : lm) {
          const Path x = g.compose(mu, alpha);
          EXPECT_EQ(x, g.compose(nu, beta));
          EXPECT_EQ(x.degree(), join(mu.degree(), nu.degree()));
          EXPECT_TRUE(std::binary_search(m.begin(), m.end(), x));
        }
      }
    }
  }
}

TEST(Alignment, MatchesOracle) {
  for (const auto& fx : testing::acyclic_fixtures()) {
    const KGraph& g = fx.graph;
    const oracle::Model o(g);
    const auto all = PathCatalog(g).all();
    for (const auto& mu : all) {
      for (const auto& nu : PathCatalog(g).with_range(mu.range())) {
        std::set<oracle::Key> lib;
        for (const auto& x : mce(g, mu, nu)) lib.insert(o.key(x));
        EXPECT_EQ(lib, o.mce(o.key(mu), o.key(nu))) << fx.name;
      }
    }
  }
}

TEST(Alignment, ExtDistributesOverUnions) {
  std::mt19937_64 rng(3);
  for (const auto& fx : testing::acyclic_fixtures()) {
    const KGraph& g = fx.graph;
    for (VertexId v : g.vertices()) {
      auto at_v = PathCatalog(g).with_range(v);
      for (int n = 0; n < 10; ++n) {
        std::shuffle(at_v.begin(), at_v.end(), rng);
        const std::size_t cut = at_v.size() / 2;
        const PathFamily e(v, {at_v.begin(), at_v.begin() + static_cast<std::ptrdiff_t>(cut)});
        const PathFamily f(v, {at_v.begin() + static_cast<std::ptrdiff_t>(cut), at_v.end()});
        const PathFamily ef(v, at_v);
        for (const auto& mu : at_v) {
          auto a = ext(g, mu, e);
          const auto b = ext(g, mu, f);
          a.insert(a.end(), b.begin(), b.end());
          std::sort(a.begin(), a.end());
          a.erase(std::unique(a.begin(), a.end()), a.end());
          EXPECT_EQ(a, ext(g, mu, ef));
        }
      }
    }
  }
}

TEST(Alignment, PiClosureIsClosed) {
  std::mt19937_64 rng(5);
  for (const auto& fx : testing::acyclic_fixtures()) {
    const KGraph& g = fx.graph;
    auto all = PathCatalog(g).all();
    for (int n = 0; n < 10; ++n) {
      std::shuffle(all.begin(), all.end(), rng);
      const std::vector<Path> seed(all.begin(), all.begin() + std::min<std::ptrdiff_t>(3, std::ssize(all)));
      const auto pi = pi_closure(g, seed);
      auto in = [&](const Path& x) { return std::binary_search(pi.begin(), pi.end(), x); };
      for (const auto& s : seed) EXPECT_TRUE(in(s));
      for (const auto& l : pi) {
        for (const auto& m : pi) {
          for (const auto& [alpha, beta] : lambda_min(g, l, m)) EXPECT_TRUE(in(g.compose(l, alpha)));
        }
      }
      for (const auto& [l, m] : pairs_ds(pi)) {
        for (const auto& x : pi) {
          if (x.degree() == l.degree() || !g.is_prefix(l, x)) continue;
          const Path nu = g.segment(x, l.degree(), x.degree());
          EXPECT_TRUE(in(g.compose(m, nu))) << fx.name;
        }
      }
    }
  }
}

TEST(Alignment, ClosureBudget) {
  const KGraph g = load_fixture("omega_2_11.json");
  const std::vector<Path> seed{g.parse_path("a"), g.parse_path("b")};
  EXPECT_THROW(pi_closure(g, seed, ClosureOptions{2}), Error);  // grows to {a, b, c}
  EXPECT_EQ(pi_closure(g, seed, ClosureOptions{3}).size(), 3u);
}

}  // namespace
}  // namespace kgck
