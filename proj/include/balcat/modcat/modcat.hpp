#pragma once

#include <optional>
#include <vector>

#include "balcat/gradedcat/objects.hpp"

namespace balcat {

/// IHom(source, target) for module objects on the same side over the same
/// algebra object.
///
/// Right modules form a left C-module category and the component of grade g
/// is Hom(k_g ⊗ source, target). Left modules form a right C-module category
/// and the component is Hom(source ⊗ k_g, target). Either way the basis
/// vector v of the value classifies the linear map maps[v] on the underlying
/// spaces, of degree value.grade(v).
class InternalHomValue {
 public:
  InternalHomValue(GradedModuleObject source, GradedModuleObject target);

  Side side() const { return source_.side(); }
  const GradedModuleObject& source() const { return source_; }
  const GradedModuleObject& target() const { return target_; }
  const GradedObject& value() const { return value_; }
  /// value ⊗ source -> target (right) or source ⊗ value -> target (left).
  const GradedMorphism& evaluation() const { return evaluation_; }
  const std::vector<Matrix>& maps() const { return maps_; }
  /// Indices of the value basis in grade g.
  std::vector<std::size_t> component(std::size_t g) const { return value_.indices_of_grade(g); }

  /// Coordinates (a vector on the value basis) of a module map of degree g;
  /// nullopt if phi is not such a map.
  std::optional<Vector> classify(std::size_t g, const Matrix& phi) const;

 private:
  GradedModuleObject source_;
  GradedModuleObject target_;
  std::vector<Matrix> maps_;  // filled while value_ is built
  GradedObject value_;
  GradedMorphism evaluation_;
  std::vector<std::optional<CoordinateSystem>> coordinates_;
};

/// Throws StructureMismatch for different algebra objects or sides.
InternalHomValue internal_hom(const GradedModuleObject& m1, const GradedModuleObject& m2);

/// The adjunction Hom_C(c, IHom(m1, m2)) ≅ Hom_M(c ⊗ m1, m2) (or m1 ⊗ c for
/// left modules). Both sides are computed independently for every simple c
/// and for each extra object, and the map f -> ev ∘ (f ⊗ id) is checked to
/// land in module maps and to be injective with the right rank.
CheckReport verify_internal_hom_adjunction(const InternalHomValue& ihom,
                                           const std::vector<GradedObject>& extra = {});

/// m^c = dual(c) ⊗ m for right modules and m ⊗ dual(c) for left modules.
GradedModuleObject cotensor(const GradedObject& c, const GradedModuleObject& m);
/// Hom_M(c ⊗ n, m) ≅ Hom_M(n, m^c) for each n (n ⊗ c on the left side),
/// through the explicit coevaluation transposition.
CheckReport verify_cotensor_adjunction(const GradedObject& c, const GradedModuleObject& m,
                                       const std::vector<GradedModuleObject>& ns);

/// The algebra object IHom(p, p). Its product is composition of classified
/// maps, v_phi v_psi = v_{phi ∘ psi}, with unit the identity of p. Throws
/// PreconditionError for p = 0.
struct OstrikData {
  InternalHomValue ihom;
  AlgebraObjectPtr algebra;
};
OstrikData ostrik_algebra_data(const GradedModuleObject& p);
GradedAlgebraObject ostrik_algebra(const GradedModuleObject& p);

/// For the regular module of b: columns are the coordinates of left
/// multiplication by each basis vector of b in IHom(b, b). Transporting the
/// ostrik algebra along this matrix reproduces b's structure constants.
Matrix regular_identification(const OstrikData& data);

/// The canonical map IHom(p, x) ⊗ p -> x (p ⊗ IHom(p, x) -> x for left
/// modules) is onto, for each x.
CheckReport generator_check(const GradedModuleObject& p, const std::vector<GradedModuleObject>& xs);

/// IHom(p, -) applied to s stays exact: the induced map IHom(p, b) ->
/// IHom(p, c) is onto and the dimensions add up.
CheckReport projectivity_probe(const GradedModuleObject& p, const ShortExactSequence& s);

/// IHom(p, m) as a right module over the ostrik algebra, acting by
/// precomposition. Only right module categories are supported here.
GradedModuleObject ihom_as_module(const OstrikData& data, const GradedModuleObject& m);

struct Reconstruction {
  /// x ⊗_A p with its residual right B-action.
  GradedModuleObject module;
  /// Quotient map from x ⊗ p.
  Matrix projection;
};

/// x ⊗_A p: the cokernel of x ⊗ A ⊗ p ⇉ x ⊗ p, with the residual B-action.
/// x must be a right module object over data.algebra; p must be a right
/// module. Throws ValidationError when x fails its axioms.
Reconstruction reconstruction_functor(const OstrikData& data, const GradedModuleObject& x);

/// Rank checks that the unit x -> IHom(p, x ⊗_A p) and the counit
/// IHom(p, m) ⊗_A p -> m are isomorphisms.
CheckReport reconstruction_unit_check(const OstrikData& data, const GradedModuleObject& x);
CheckReport reconstruction_counit_check(const OstrikData& data, const GradedModuleObject& m);

}  // namespace balcat
