#pragma once

#include <map>
#include <stdexcept>
#include <memory>
#include <string>
#include <string_view>

#include "cherednik/cyclotomic.hpp"
#include "cherednik/labels.hpp"
#include "cherednik/rational.hpp"

namespace cherednik {

using ParamsPtr = std::shared_ptr<const Params>;

/// x1^n x2^m (x) v_t, where t indexes the tableau slot.
struct Mono {
  int n = 0;
  int m = 0;
  int t = 0;
  int degree() const { return n + m; }
  friend bool operator==(const Mono&, const Mono&) = default;
};

/// n descending, then m ascending, then slot ascending.
struct CanonicalOrder {
  bool operator()(const Mono& a, const Mono& b) const {
    if (a.n != b.n) return a.n > b.n;
    if (a.m != b.m) return a.m < b.m;
    return a.t < b.t;
  }
};

/// Sparse element of a standard module with coefficients in F.
template <class F>
class BasicModElem {
 public:
  using Terms = std::map<Mono, F, CanonicalOrder>;

  BasicModElem(ParamsPtr params, Label label) : params_(std::move(params)), label_(label) {}

  const Params& params() const { return *params_; }
  const ParamsPtr& params_ptr() const { return params_; }
  const Label& label() const { return label_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c to the coefficient of `mono`, dropping the entry if it cancels.
  void add_term(const Mono& mono, const F& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(mono, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  BasicModElem& operator+=(const BasicModElem& o) {
    check_compatible(o);
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
  }
  BasicModElem& operator-=(const BasicModElem& o) {
    check_compatible(o);
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
  }
  template <class G>
  BasicModElem& scale(const G& g) {
    if (g.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [mono, c] : terms_) c = c * g;
    return *this;
  }

  friend BasicModElem operator+(BasicModElem a, const BasicModElem& b) { return a += b; }
  friend BasicModElem operator-(BasicModElem a, const BasicModElem& b) { return a -= b; }
  friend bool operator==(const BasicModElem& a, const BasicModElem& b) {
    return a.label_ == b.label_ && *a.params_ == *b.params_ && a.terms_ == b.terms_;
  }

  /// Throws std::invalid_argument unless both live in the same module.
  void check_compatible(const BasicModElem& o) const {
    if (label_ != o.label_ || (params_ != o.params_ && !(*params_ == *o.params_)))
      throw std::invalid_argument("module elements from different modules: " + label_.str() + " vs " +
                                  o.label_.str());
  }

 private:
  ParamsPtr params_;
  Label label_;
  Terms terms_;
};

class ModElem : public BasicModElem<Rational> {
 public:
  using BasicModElem<Rational>::BasicModElem;
  ModElem(BasicModElem<Rational> base) : BasicModElem<Rational>(std::move(base)) {}  // NOLINT

  static ModElem monomial(ParamsPtr params, Label label, int n, int m, int t,
                          const Rational& c = Rational(1));
  /// 1 (x) v_slot.
  static ModElem generator(ParamsPtr params, Label label, int slot = 0);

  Rational coeff(const Mono& mono) const;
  /// Largest n + m over the terms; -1 for zero.
  int degree() const;

  /// Canonical text, e.g. "(96/115)*x1^9*x2^4 (x) vT1 + (1)*x1^13 (x) vT1".
  std::string str() const;
  /// The input syntax accepted by parse().
  std::string input_str() const;

  /// Parses sums of "c*x1^n*x2^m@t" with t in {T, T1, T2}; throws std::invalid_argument.
  static ModElem parse(ParamsPtr params, Label label, std::string_view text);
};

ModElem operator*(const Rational& c, ModElem e);

class CycloModElem : public BasicModElem<CycloNum> {
 public:
  using BasicModElem<CycloNum>::BasicModElem;
  CycloModElem(BasicModElem<CycloNum> base) : BasicModElem<CycloNum>(std::move(base)) {}  // NOLINT

  static CycloModElem from_rational(const ModElem& e);
  /// Throws NotRational if any coefficient does not collapse.
  ModElem to_rational() const;
};

/// Slot name used in text output: "T" for one-dimensional labels, "T1"/"T2" otherwise.
std::string slot_name(const Label& label, int slot);

ModElem x_mul(const ModElem& e, int n, int m, const Rational& c = Rational(1));
CycloModElem x_mul(const CycloModElem& e, int n, int m, const CycloNum& c);

/// Group action; throws NotRational when the image leaves the rational span.
ModElem w_act(const ModElem& e, const GroupElement& g);
CycloModElem w_act(const CycloModElem& e, const GroupElement& g);

ModElem y_act(const ModElem& e, int axis);
bool is_singular(const ModElem& e);
ModElem homogeneous_component(const ModElem& e, int degree);

/// Scales so the first term in canonical order has coefficient 1.
ModElem normalized(const ModElem& e);

}  // namespace cherednik
