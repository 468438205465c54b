#pragma once

#include <cstdint>
#include <random>

#include "balcat/balanced/balanced.hpp"

namespace balcat {

/// Seeded generators for test instances. Randomness only picks inputs; every
/// computation on them is deterministic.
class Corpus {
 public:
  explicit Corpus(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  /// Entries drawn from {-3..3}.
  Matrix matrix(const Field& f, std::size_t rows, std::size_t cols);
  /// Between min_total and max_total basis vectors with random grades.
  GradedObject graded_object(const GroupPtr& k, std::size_t max_total, std::size_t min_total = 0);
  /// Invertible and grade preserving, entries in {-2..2} block by block.
  Matrix graded_automorphism(const GradedObject& obj, const Field& f);
  /// A free module on a random nonzero graded object of dimension <= max_rank,
  /// written in a random homogeneous basis.
  GradedModuleObject free_module(const AlgebraObjectPtr& b, Side side, std::size_t max_rank);
  /// A box of random free modules, or the sum of two such, in a random
  /// homogeneous basis.
  GradedBimoduleObject bimodule(const EnvelopingAlgebra& e, std::size_t max_rank);

 private:
  std::mt19937_64 rng_;
};

/// The bimodule transported along a grade-preserving invertible p.
GradedBimoduleObject change_of_basis(const GradedBimoduleObject& x, const Matrix& p);
/// Direct sum of bimodule objects over the same algebras.
GradedBimoduleObject direct_sum(const GradedBimoduleObject& x, const GradedBimoduleObject& y);

}  // namespace balcat
