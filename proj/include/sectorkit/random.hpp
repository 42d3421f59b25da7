#pragma once

#include <cstdint>
#include <random>

#include "sectorkit/linalg.hpp"

namespace sectorkit {

/// Seeded generator for test instances. The gaussian variates are produced
/// by an explicit Box-Muller transform over mt19937_64 output so that a
/// given seed yields the same stream on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform();  // [0, 1)
  double gaussian();
  Complex complex_gaussian();
  std::int64_t below(std::int64_t n);  // uniform in [0, n)

  Mat matrix(Index rows, Index cols);
  Vec vector(Index dim);
  Mat unitary(Index dim);
  Mat hermitian(Index dim);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace sectorkit
