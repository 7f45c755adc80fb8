#include "support/fixtures.hpp"

#include "kgck/io.hpp"

namespace kgck::testing {

std::string fixture_path(std::string_view file) {
  return std::string(KGCK_FIXTURE_DIR) + "/" + std::string(file);
}

KGraph load_fixture(std::string_view file) { return validate(read_graph_file(fixture_path(file))); }

std::vector<Fixture> acyclic_fixtures() {
  std::vector<Fixture> out;
  for (const char* name : {"omega_1_3", "omega_2_11", "omega_2_11_minus", "omega_2_21", "omega_3_111",
                           "fork", "diamond"}) {
    out.push_back({name, load_fixture(std::string(name) + ".json")});
  }
  return out;
}

std::vector<PathFamily> all_fe_families(const Universe& u) {
  std::vector<PathFamily> out;
  for (VertexId v : u.graph().vertices()) {
    for (FamilyMask m : u.all_fe(v)) out.push_back(u.family(v, m));
  }
  return out;
}

std::vector<NamedCollection> standard_collections(const KGraph& g, std::mt19937_64& rng) {
  auto u = Universe::build(g);
  std::vector<NamedCollection> out;
  out.push_back({"satiate(none)", satiate(FamilyCollection(u))});
  const auto fe = all_fe_families(*u);
  if (!fe.empty()) {
    const auto& gen = fe[std::uniform_int_distribution<std::size_t>(0, fe.size() - 1)(rng)];
    out.push_back({"satiate(" + to_string(u->graph(), gen) + ")",
                   satiate(FamilyCollection::from_families(u, {gen}))});
  }
  out.push_back({"full", FamilyCollection::full(u)});
  return out;
}

}  // namespace kgck::testing
