#ifndef HILBERT_CHOW_FIXTURES_HPP
#define HILBERT_CHOW_FIXTURES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hilbert_chow/graded_ideal.hpp"
#include "hilbert_chow/hilbert_weight.hpp"

namespace hilbert_chow {

/// Small ideals used by selftest and the test suites.
struct Fixture {
  std::string name;
  std::size_t num_vars = 0;
  std::vector<std::string> generators;
  std::vector<std::vector<std::int64_t>> lambdas;
  int m_lo = 2;      ///< weight window
  int m_hi = 6;
  int chow_m = 2;    ///< degree of the Koszul complexes (0 disables Chow checks)
  bool interpolate_chow = false;

  HomogeneousIdeal ideal() const;
  std::vector<OnePS> one_ps() const;
};

const std::vector<Fixture>& builtin_fixtures();
/// Throws an input Error for unknown names.
const Fixture& builtin_fixture(const std::string& name);

}  // namespace hilbert_chow

#endif  // HILBERT_CHOW_FIXTURES_HPP
