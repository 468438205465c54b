#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "balcat/gradedcat/objects.hpp"

namespace balcat {

/// The plain algebra E whose left modules are the graded A-B-bimodules.
///
/// Basis a_i ⊗ δ_h ⊗ b_j at index (i * |K| + h) * dim B + j, with
///   (a ⊗ δ_h ⊗ b)(a' ⊗ δ_h' ⊗ b') = [h = |a'| h' |b'|] aa' ⊗ δ_h' ⊗ b'b
/// for homogeneous a', b'. It acts on a bimodule by x -> a . P_h(x) . b where
/// P_h projects onto grade h.
class EnvelopingAlgebra {
 public:
  EnvelopingAlgebra(AlgebraObjectPtr a, AlgebraObjectPtr b);

  const FinAlgebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  const AlgebraObjectPtr& left() const { return a_; }
  const AlgebraObjectPtr& right() const { return b_; }
  const FiniteGroup& group() const { return a_->group(); }

  std::size_t index(std::size_t i, std::size_t h, std::size_t j) const;
  struct Triple {
    std::size_t a, h, b;
  };
  Triple triple(std::size_t index) const;

  /// 1 ⊗ δ_h ⊗ 1, a ⊗ 1 ⊗ 1 and 1 ⊗ 1 ⊗ b as elements of E.
  SparseVector grade_projector(std::size_t h) const;
  SparseVector from_left(std::size_t i) const;
  SparseVector from_right(std::size_t j) const;

  /// The bimodule as a left E-module on the same basis.
  AlgModule to_module(const GradedBimoduleObject& x) const;
  /// Back to a bimodule. The basis is kept when the grade projectors are
  /// diagonal; otherwise a homogeneous basis is chosen grade by grade.
  GradedBimoduleObject to_bimodule(const AlgModule& m) const;

 private:
  AlgebraObjectPtr a_;
  AlgebraObjectPtr b_;
  AlgebraPtr algebra_;
};

/// Throws StructureMismatch for different groups or fields and
/// ValidationError if A, B or E fail their axioms.
std::shared_ptr<const EnvelopingAlgebra> enveloping_algebra(const AlgebraObjectPtr& a,
                                                            const AlgebraObjectPtr& b);

/// M ⊠_C N for M = left A-module objects and N = right B-module objects,
/// realized as A-B-bimodule objects, i.e. left E-modules.
struct BalancedProduct {
  GroupPtr group;
  AlgebraObjectPtr a;
  AlgebraObjectPtr b;
  std::shared_ptr<const EnvelopingAlgebra> enveloping;
  SemisimplicityCertificate certificate;
  /// dim Z(E), present when E is certified semisimple and the field was
  /// asserted to split it.
  std::optional<std::size_t> simple_count;
};

BalancedProduct balanced_product(const AlgebraObjectPtr& a, const AlgebraObjectPtr& b,
                                 bool field_is_splitting);
/// Throws PreconditionError when the count is not certified.
std::size_t simple_count_balanced(const BalancedProduct& bp);

/// x ⊗ y with A on the left factor and B on the right factor.
GradedBimoduleObject box_object(const GradedModuleObject& x, const GradedModuleObject& y);
/// A ⊠ B = A ⊗ B.
GradedBimoduleObject free_bimodule(const AlgebraObjectPtr& a, const AlgebraObjectPtr& b);

struct BalancingWitness {
  GradedBimoduleObject source;  // (x ⊗ c) ⊠ y
  GradedBimoduleObject target;  // x ⊠ (c ⊗ y)
  GradedMorphism beta;
  /// beta is a bimodule isomorphism.
  CheckReport report;
};

/// The balancing induced by the associator of Vect[K], built by tracking
/// basis vectors (i, k, j) from (x ⊗ c) ⊗ y to x ⊗ (c ⊗ y).
BalancingWitness canonical_balancing(const GradedModuleObject& x, const GradedObject& c,
                                     const GradedModuleObject& y);
/// β_{x,c,c'⊗y} β_{x⊗c,c',y} = (id ⊠ assoc) β_{x,c⊗c',y} (assoc ⊠ id).
CheckReport pentagon_check(const GradedModuleObject& x, const GradedObject& c,
                           const GradedObject& c2, const GradedModuleObject& y);
/// (id ⊠ l_y) β_{x,1,y} = r_x ⊠ id.
CheckReport triangle_check(const GradedModuleObject& x, const GradedModuleObject& y);

struct HomFormula {
  /// dim Hom(x ⊠ y, x' ⊠ y') of graded bimodules.
  std::size_t lhs = 0;
  /// sum over g of dim IHom_M(x, x')_g dim IHom_N(y, y')_{g^-1}.
  std::size_t rhs = 0;
  bool equal() const { return lhs == rhs; }
};
HomFormula hom_formula_check(const GradedModuleObject& x, const GradedModuleObject& x2,
                             const GradedModuleObject& y, const GradedModuleObject& y2);

/// X ⊗ B ⊗ B ⇉ X ⊗ B -> X: the cokernel of the difference map and the
/// isomorphism to X induced by the action.
CheckReport coequalizer_presentation(const GradedBimoduleObject& x);

/// A right-exact functor Bimod -> Mod_D presented as W ⊗_E -, for W a D-E
/// bimodule. The value comes with the quotient map from W ⊗ M.
struct FunctorValue {
  AlgModule module;  // left D-module
  Matrix projection;
  Matrix section;
};
FunctorValue apply_functor(const AlgBimodule& w, const AlgModule& m);
/// The map W ⊗_E M -> W ⊗_E M' induced by an E-module map phi: M -> M'.
Matrix apply_functor(const AlgBimodule& w, const FunctorValue& src, const FunctorValue& dst,
                     const Matrix& phi);

struct Extension {
  /// coker(δ̄_X) as a left D-module.
  AlgModule value;
  /// coker(δ̄_X) -> W ⊗_E X, induced by the action X ⊗ B -> X.
  Matrix comparison;
  CheckReport report;
};

/// Extends the balanced functor F(x, y) = W ⊗_E (x ⊠ y) to X: δ̄_X is the
/// map F(X, B ⊗ B) -> F(X, B) induced on cokernels of the left bar
/// resolution by the right bar differential transported through the
/// balancing; the result is coker(δ̄_X). Throws ValidationError when W fails
/// the bimodule axioms or its right algebra is not E.
Extension extend_balanced_functor(const EnvelopingAlgebra& e, const AlgBimodule& w,
                                  const GradedBimoduleObject& x);

/// A1 ⊗ A2 over Vect. Throws FieldMismatch.
FinAlgebra deligne_product_plain(const FinAlgebra& a1, const FinAlgebra& a2);

/// s ⊠ y for a sequence of left A-modules, and x ⊠ s for right B-modules:
/// the boxed maps are bimodule maps and the rank bookkeeping of an exact
/// sequence holds.
CheckReport box_exactness_probe(const ShortExactSequence& s, const GradedModuleObject& y);
CheckReport box_exactness_probe(const GradedModuleObject& x, const ShortExactSequence& s);

}  // namespace balcat
