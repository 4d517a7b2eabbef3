#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cherednik/labels.hpp"
#include "cherednik/singular_constructors.hpp"
#include "cherednik/standard_module.hpp"

namespace cherednik {

/// INT(a, b, sigma): D = d_a - d_b + sigma*c0*r is a non-negative integer with
/// D = a - b mod r. HALF(sign): sign*2*c0 is a positive odd integer.
struct AtomicCondition {
  enum class Kind { Int, Half };
  Kind kind = Kind::Int;
  int a = 0;
  int b = 0;
  int sigma = 0;
  int sign = 1;

  static AtomicCondition integral(int a, int b, int sigma) { return {Kind::Int, a, b, sigma, 1}; }
  static AtomicCondition half(int sign) { return {Kind::Half, 0, 0, 0, sign}; }

  /// d_a - d_b + sigma*c0*r, or sign*2*c0 for HALF.
  Rational value(const Params& p) const;
  bool holds(const Params& p) const;
  /// "d1-d2+c0r" or "c0=-k/2".
  std::string str() const;
};

struct AtomResult {
  AtomicCondition atom;
  Rational value;
  bool holds = false;
};

/// One rule evaluated under one assignment of its index variables.
struct RuleEvaluation {
  /// 1..16; 0 marks the identity of a label.
  int rule = 0;
  /// Which disjunct of rule 16 (0 or 1); 0 elsewhere.
  int alternative = 0;
  /// Index variables a, b, c, s; unused entries are -1.
  std::array<int, 4> vars{-1, -1, -1, -1};
  std::vector<AtomResult> atoms;
  bool fired = false;
  /// Degree of the constructed generator image, when fired.
  std::optional<int> degree;

  std::string vars_str() const;
};

struct ConditionReport {
  Label from;
  Label to;
  /// Every (rule, assignment) whose label shapes match, fired or not.
  std::vector<RuleEvaluation> evaluations;

  bool exists() const;
  std::vector<RuleEvaluation> fired() const;
  /// Sorted, deduplicated degrees over the fired evaluations.
  std::vector<int> predicted_degrees() const;
};

/// True when the necessary tableau-content condition for a nonzero morphism
/// from label `from` to label `to` holds.
bool necessary_condition(const Label& from, const Label& to, const Params& p);

ConditionReport hom_conditions(const Label& from, const Label& to, const Params& p);

/// Cheap form of hom_conditions(...).exists().
bool hom_rule_fires(const Label& from, const Label& to, const Params& p);

/// A module map Delta(domain) -> Delta(codomain), stored as the image of the
/// first generator 1 (x) v_T (v_T1 for pair domains). The second pair
/// generator is the transposition of the first, so its image is derived.
struct HomMap {
  Label domain;
  Label codomain;
  ModElem image;
  int rule = 0;
  std::vector<CaseTag> cases;

  int degree() const { return image.degree(); }
  /// Image of 1 (x) v_slot.
  ModElem generator_image(int slot) const;
};

/// Builds the morphism for a fired evaluation. Throws InapplicableCase if the
/// evaluation did not fire and ZeroComposite if a composite vanishes.
HomMap build_hom(const ParamsPtr& p, const Label& from, const Label& to, const RuleEvaluation& ev);

/// The identity of Delta(label).
HomMap identity_hom(const ParamsPtr& p, const Label& label);

ModElem apply_hom(const HomMap& h, const ModElem& e);

/// g * h(v) == h(g * v) for the group generators and every domain generator.
bool is_equivariant(const HomMap& h);

/// g * f, the composite Delta(f.domain) -> Delta(g.codomain).
HomMap compose(const HomMap& g, const HomMap& f);

struct SingularSpaceOptions {
  /// Skip weight blocks whose kernel already vanishes modulo a large prime.
  bool mod_p_filter = true;
  /// Shuffle monomial order within each weight block.
  std::optional<unsigned> shuffle_seed;
};

/// Basis of the singular vectors of degree d in Delta(mu).
std::vector<ModElem> singular_space(const ParamsPtr& p, const Label& mu, int d,
                                    const SingularSpaceOptions& opt = {});

/// Multiplicity of S^lambda in the span of `basis`, via the isotypic projector
/// over Q(zeta_r). Throws NotWStable if the span is not W-stable.
int isotypic_multiplicity(const std::vector<ModElem>& basis, const Label& lambda);

/// multiplicities[lambda][d] = multiplicity of S^lambda in the degree-d
/// singular vectors of Delta(mu), for d = 0..max_degree.
struct SingularMultiplicities {
  Label mu;
  int max_degree = 0;
  std::map<Label, std::vector<int>> by_label;

  int total(const Label& lambda) const;
};

/// Weight-block computation of every multiplicity at once.
SingularMultiplicities singular_multiplicities(const Params& p, const Label& mu, int max_degree);

/// dim Hom(Delta(lambda), Delta(mu)) restricted to generator degree <= max_degree.
int hom_dim_bruteforce(const Label& lambda, const Label& mu, const Params& p, int max_degree);

struct DimensionTwoReport {
  std::vector<AtomResult> atoms;
  bool holds = false;
  Label from;
  Label to;
};

/// The four-atom criterion INT(i,k,+1), INT(i,k,-1), INT(j,i,+1), INT(j,i,-1)
/// under which dim Hom(Delta(pair{i,k}), Delta(pair{i,j})) = 2.
DimensionTwoReport dimension_two_criterion(const Params& p, int i, int j, int k);

/// Rank over Q of the generator images (all maps share domain and codomain).
std::size_t hom_rank(const std::vector<HomMap>& maps);

struct DiagramEdge {
  Label from;
  Label to;
  int rule = 0;
  int degree = 0;
  std::array<int, 4> vars{-1, -1, -1, -1};
};

struct MorphismDiagram {
  std::vector<Label> nodes;
  /// Single-condition edges (rules 1-9), stably sorted.
  std::vector<DiagramEdge> edges;
  /// Edges surviving the reduction, same order.
  std::vector<DiagramEdge> reduced;

  std::string dot(bool reduced_only) const;
};

MorphismDiagram morphism_diagram(const ParamsPtr& p);

}  // namespace cherednik
