#include "hilbert_chow/fixtures.hpp"

#include "hilbert_chow/error.hpp"

namespace hilbert_chow {

HomogeneousIdeal Fixture::ideal() const {
  std::vector<HomogeneousPoly> gens;
  for (const auto& g : generators) gens.push_back(HomogeneousPoly::parse(g, num_vars));
  return HomogeneousIdeal(num_vars, std::move(gens));
}

std::vector<OnePS> Fixture::one_ps() const {
  std::vector<OnePS> out;
  for (const auto& r : lambdas) out.push_back(make_one_ps(r, num_vars));
  return out;
}

const std::vector<Fixture>& builtin_fixtures() {
  static const std::vector<Fixture> all = [] {
    std::vector<Fixture> f;
    f.push_back({"conic", 3, {"z0*z2 - z1^2"}, {{1, 1, -2}, {-1, -1, 2}, {2, -1, -1}, {1, 0, -1}, {0, 0, 0}},
                 2, 6, 2, true});
    f.push_back({"twisted_cubic",
                 4,
                 {"z0*z2 - z1^2", "z0*z3 - z1*z2", "z1*z3 - z2^2"},
                 {{1, 1, -1, -1}, {1, 0, 0, -1}, {2, 1, -1, -2}, {3, 1, -1, -3}, {1, -1, 1, -1}},
                 2, 6, 2, false});
    f.push_back({"quadric_surface", 4, {"z0*z3 - z1*z2"}, {{2, 0, -1, -1}, {1, -1, 0, 0}, {1, 1, -1, -1}, {1, 0, -1, 0}},
                 2, 6, 1, false});
    f.push_back({"point", 3, {"z1", "z2"}, {{1, 0, -1}, {-2, 1, 1}, {0, 1, -1}}, 1, 4, 1, true});
    f.push_back({"two_points", 2, {"z0*z1"}, {{1, -1}, {-1, 1}}, 1, 4, 1, true});
    f.push_back({"fat_point", 3, {"z0^2", "z0*z1", "z1^2"}, {{1, 0, -1}, {1, 1, -2}}, 2, 5, 2, true});
    f.push_back({"plane", 3, {}, {{1, 1, -2}, {1, 0, -1}}, 1, 5, 1, true});
    return f;
  }();
  return all;
}

const Fixture& builtin_fixture(const std::string& name) {
  for (const auto& f : builtin_fixtures()) {
    if (f.name == name) return f;
  }
  throw input_error("unknown_fixture", "no built-in fixture named '" + name + "'");
}

}  // namespace hilbert_chow
