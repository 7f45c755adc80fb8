#pragma once

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "kgck/satiation.hpp"

namespace kgck::testing {

std::string fixture_path(std::string_view file);
KGraph load_fixture(std::string_view file);

struct Fixture {
  std::string name;
  KGraph graph;
};

/// The acyclic graph fixtures, in a fixed order.
std::vector<Fixture> acyclic_fixtures();

struct NamedCollection {
  std::string name;
  FamilyCollection s;
};

/// The three collections the property suites run against: the satiation of
/// no generators, of one random FE family, and the full FE window.
std::vector<NamedCollection> standard_collections(const KGraph& g, std::mt19937_64& rng);

/// Every FE family of an exact universe, over all vertices.
std::vector<PathFamily> all_fe_families(const Universe& u);

}  // namespace kgck::testing
