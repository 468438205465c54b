#pragma once

#include <vector>

#include "balcat/algebra/module.hpp"

namespace balcat {

struct MoritaData {
  /// The left A-module p itself.
  AlgModule p;
  /// b = End_A(p) in the basis `basis`, with product phi . psi := psi ∘ phi.
  AlgebraPtr b;
  std::vector<Matrix> basis;
  /// p as a right b-module, p . phi = phi(p).
  AlgModule p_over_b;
  /// One check per test module X: p ⊗_b Hom_A(p, X) -> X is an isomorphism.
  CheckReport counit_check;
};

/// Hom_A(p, x) as a left module over b = End_A(p), with phi . f = f ∘ phi.
AlgModule hom_from_generator(const MoritaData& data, const AlgModule& x,
                             std::vector<Matrix>* hom_basis = nullptr);

/// The endomorphism algebra of a nonzero left A-module p and the evaluation
/// counit checked on each test module. Throws PreconditionError for p = 0.
MoritaData endomorphism_algebra_morita(const AlgModule& p, const std::vector<AlgModule>& tests);

}  // namespace balcat
