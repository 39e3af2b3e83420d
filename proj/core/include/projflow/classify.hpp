#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "projflow/orbits.hpp"
#include "projflow/vector_field.hpp"

namespace projflow {

/// Projective direction (p, q) of a root line of yϖ - xϱ.
using Direction = std::pair<Rat, Rat>;

enum class RootKind { Squarefree, Double, Triple, IdenticallyZero };
/// Unlisted marks multiple-root fields outside the three normal forms.
enum class IntegralKind { I, II, III, Unlisted };

struct IntegralCase {
  IntegralKind kind = IntegralKind::Unlisted;
  Rat lambda;  // meaningful for I and III
};

struct RootStructure {
  RootKind kind = RootKind::IdenticallyZero;
  /// Rational root directions with multiplicity; irrational roots are absent.
  std::vector<std::pair<Direction, int>> roots;
  bool all_rational = false;
  /// For Double and Triple: the normal form reached by `witness`.
  std::optional<IntegralCase> normal_form;
  Mat2 witness;
  std::optional<VectorField> conjugated;
};

RootStructure multiple_root_case(const VectorField& vf);

struct Normalized {
  VectorField field;
  Mat2 witness;  // field == conjugate_linear(input, witness)
};

/// Moves the three rational roots of yϖ - xϱ to y = 0, x = 0 and x = y.
Normalized root_normalize(const VectorField& vf);

struct BCForm {
  Rat B, C;
  Mat2 witness;  // scalar conjugation reaching the (B, C) family shape
};
BCForm to_BC_normal_form(const VectorField& normalized);

/// The field (B-1)/(C-1) x² + B xy • (B-1)/(C-1) C xy + y².
VectorField bc_field(const Rat& B, const Rat& C);

struct ConjugacyTriple {
  Rat a, b, c;
  bool satisfies_identity() const;
};
ConjugacyTriple conjugacy_triple(const Rat& B, const Rat& C);

struct AlgebraicType {
  long n = 0;
  Rat Q;
  friend bool operator==(const AlgebraicType& l, const AlgebraicType& r) { return l.n == r.n && l.Q == r.Q; }
};
std::optional<AlgebraicType> algebraic_type(const Rat& B, const Rat& C);

/// Level of the rational flow of type (n, Q), if the flow is rational.
std::optional<Rat> rational_flow_predicate(long n, const Rat& Q);

namespace flow {
struct RayDegenerate {};
struct AbelianI {
  Rat B, C;
  OrbitForm orbit;
};
struct AbelianII {
  bool pi_squarefree = false;
};
struct Integral {
  IntegralCase value;
};
struct Algebraic {
  AlgebraicType type;
  Rat B, C;
  OrbitForm orbit;
};
struct Rational {
  Rat level;
  AlgebraicType type;
};
}  // namespace flow

using FlowClass = std::variant<flow::RayDegenerate, flow::AbelianI, flow::AbelianII, flow::Integral, flow::Algebraic,
                               flow::Rational>;

struct Classification {
  FlowClass value;
  Mat2 witness;          // linear map to the normal-form frame
  VectorField normal_form;
};

Classification classify(const VectorField& vf);

std::string tag(const FlowClass& c);
std::string to_string(IntegralKind k);
std::string to_string(RootKind k);

/// True when the numerator of a homogeneous rational function has no repeated
/// projective root.
bool binary_form_squarefree(const BivarPoly& f);

}  // namespace projflow
