#pragma once

#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "cherednik/cyclotomic.hpp"
#include "cherednik/rational.hpp"

namespace cherednik {

/// Parameters (r, c0, d_0..d_{r-1}) with d_0 + ... + d_{r-1} = 0.
class Params {
 public:
  using Scalar = Rational;

  /// Throws InvalidParams on r < 1, wrong arity, or a nonzero sum of the d's.
  Params(int r, Rational c0, std::vector<Rational> d);

  int r() const { return r_; }
  const Rational& c0() const { return c0_; }
  /// d_k for any integer k, indices taken mod r.
  const Rational& d(long k) const;
  const std::vector<Rational>& d_values() const { return d_; }

  std::string digest() const;
  friend bool operator==(const Params&, const Params&) = default;

 private:
  int r_;
  Rational c0_;
  std::vector<Rational> d_;
};

/// Mathematical (non-negative) residue.
inline long mod_r(long k, long r) {
  const long m = k % r;
  return m < 0 ? m + r : m;
}

/// Floor division for any sign of the numerator; r > 0.
inline long floor_div(long a, long r) {
  const long q = a / r;
  return (a % r != 0 && a < 0) ? q - 1 : q;
}

enum class LabelKind { Row, Col, Pair };

/// Irreducible representation of G(r,1,2): one row in component i, one
/// column in component i, or single boxes in components i < j.
struct Label {
  LabelKind kind = LabelKind::Row;
  int i = 0;
  int j = 0;

  static Label row(int i) { return {LabelKind::Row, i, i}; }
  static Label col(int i) { return {LabelKind::Col, i, i}; }
  /// Canonicalizes to i < j; throws InvalidLabel for i == j.
  static Label pair(int a, int b);

  /// Parses "row:i", "col:i", "pair:i,j", validating indices against r.
  static Label parse(std::string_view text, int r);

  int dim() const { return kind == LabelKind::Pair ? 2 : 1; }
  std::string str() const;

  friend auto operator<=>(const Label&, const Label&) = default;
  friend bool operator==(const Label&, const Label&) = default;
};

std::vector<Label> enumerate_labels(int r);

struct Box {
  int component = 0;
  int row = 0;
  int col = 0;
  int content() const { return col - row; }
  friend bool operator==(const Box&, const Box&) = default;
};

/// boxes[k] holds the entry k + 1.
struct Tableau {
  std::array<Box, 2> boxes;
};

/// Standard Young tableaux in slot order: one for Row/Col, (T1, T2) for Pair.
std::vector<Tableau> tableaux(const Label& label);

Rational charged_content(const Box& box, const Params& p);

/// diag(zeta^a, zeta^b) times the coordinate transposition when swap is set.
struct GroupElement {
  int r = 1;
  int a = 0;
  int b = 0;
  bool swap = false;

  static GroupElement identity(int r) { return {r, 0, 0, false}; }
  static GroupElement diag(int r, long a, long b);
  static GroupElement transposition(int r) { return {r, 0, 0, true}; }
  /// zeta_1 or zeta_2 (axis 1 or 2) raised to the power k.
  static GroupElement zeta_axis(int r, int axis, long k);

  GroupElement inverse() const;
  friend GroupElement operator*(const GroupElement& g, const GroupElement& h);
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  std::string str() const;
};

/// All 2 r^2 elements, in a fixed order.
std::vector<GroupElement> group_elements(int r);

/// g maps basis vector `slot` of S^label to sign * zeta^zeta_exp * (basis vector `slot`).
struct SlotImage {
  int slot = 0;
  long zeta_exp = 0;
  int sign = 1;
};
SlotImage act_on_slot(const Label& label, const GroupElement& g, int slot);

/// Exponents (e1, e2) with zeta_1 v = zeta^e1 v and zeta_2 v = zeta^e2 v.
std::array<int, 2> slot_weight(const Label& label, int slot);

/// The image of x1^n x2^m under g: coefficient zeta^zeta_exp times x1^n' x2^m'.
/// Diagonal elements act on the x's through the inverse (dual) character.
struct MonomialImage {
  int n = 0;
  int m = 0;
  long zeta_exp = 0;
};
MonomialImage act_on_monomial(const GroupElement& g, int n, int m);

std::vector<CycloNum> w_act_on_rep(const Label& label, const GroupElement& g,
                                   const std::vector<CycloNum>& v);
CycloNum character(const Label& label, const GroupElement& g);

}  // namespace cherednik
