#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cherednik/cyclotomic.hpp"
#include "cherednik/rational.hpp"

namespace cherednik {

/// Integers modulo the Mersenne prime 2^31 - 1.
struct Fp {
  static constexpr std::uint64_t P = 2147483647ULL;
  std::uint64_t v = 0;

  Fp() = default;
  Fp(long x) : v(static_cast<std::uint64_t>(x % static_cast<long>(P) + static_cast<long>(P)) % P) {}  // NOLINT

  bool is_zero() const { return v == 0; }
  Fp& operator+=(Fp o) { v = (v + o.v) % P; return *this; }
  Fp& operator-=(Fp o) { v = (v + P - o.v) % P; return *this; }
  Fp& operator*=(Fp o) { v = (v * o.v) % P; return *this; }
  friend Fp operator+(Fp a, Fp b) { return a += b; }
  friend Fp operator-(Fp a, Fp b) { return a -= b; }
  friend Fp operator*(Fp a, Fp b) { return a *= b; }
  friend Fp operator-(Fp a) { return Fp() - a; }
  friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
};

Fp field_inverse(Fp a);
inline Rational field_inverse(const Rational& a) { return inverse(a); }
inline CycloNum field_inverse(const CycloNum& a) { return a.inv(); }

/// Reduction mod P; empty when P divides the denominator.
std::optional<Fp> to_fp(const Rational& q);

template <class F>
using Matrix = std::vector<std::vector<F>>;

/// In-place reduced row echelon form; returns the pivot column of each
/// nonzero row, in order. Rows past the returned size are zero afterwards.
template <class F>
std::vector<std::size_t> row_reduce(Matrix<F>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t sel = row;
    while (sel < a.size() && a[sel][c].is_zero()) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[row], a[sel]);
    const F inv = field_inverse(a[row][c]);
    for (std::size_t k = c; k < cols; ++k)
      if (!a[row][k].is_zero()) a[row][k] = a[row][k] * inv;
    for (std::size_t r2 = 0; r2 < a.size(); ++r2) {
      if (r2 == row || a[r2][c].is_zero()) continue;
      const F f = a[r2][c];
      for (std::size_t k = c; k < cols; ++k)
        if (!a[row][k].is_zero()) a[r2][k] = a[r2][k] - f * a[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

template <class F>
std::size_t matrix_rank(Matrix<F> a, std::size_t cols) {
  return row_reduce(a, cols).size();
}

/// Basis of the null space {v : a v = 0}, one vector per free column, with a
/// 1 in that column.
template <class F>
std::vector<std::vector<F>> kernel_basis(Matrix<F> a, std::size_t cols, const F& zero, const F& one) {
  const auto pivots = row_reduce(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<F>> out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(cols, zero);
    v[free] = one;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (!a[r][free].is_zero()) v[pivots[r]] = zero - a[r][free];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace cherednik
