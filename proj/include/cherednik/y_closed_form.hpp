#pragma once

#include "cherednik/labels.hpp"

namespace cherednik {

/// Closed-form action of y_axis on x1^n x2^m (x) v_slot.
///
/// Each resulting term is reported through emit(n', m', slot', coeff). The
/// scalar type S only needs ring operations, construction from long and
/// is_zero(); `params` supplies r(), c0() and d(k) in that scalar type.
template <class S, class P, class Emit>
void y_closed_form(const P& params, const Label& label, int axis, int n, int m, int slot, Emit&& emit) {
  const long r = params.r();
  const S c0 = params.c0();
  const S rc0 = S(r) * c0;
  auto put = [&](long a, long b, int t, const S& c) {
    if (!c.is_zero()) emit(static_cast<int>(a), static_cast<int>(b), t, c);
  };

  if (label.kind != LabelKind::Pair) {
    const long i = label.i;
    const S cs = label.kind == LabelKind::Row ? rc0 : S(0) - rc0;
    if (axis == 1) {
      const S diag = S(n) - S(params.d(i)) + S(params.d(i - n));
      if (n > m) {
        put(n - 1, m, 0, diag - cs);
        for (long k = 1; k <= floor_div(n - m - 1, r); ++k) put(n - k * r - 1, m + k * r, 0, S(0) - cs);
      } else {
        if (n >= 1) put(n - 1, m, 0, diag);
        for (long k = 1; k <= floor_div(m - n, r); ++k) put(n + k * r - 1, m - k * r, 0, cs);
      }
    } else {
      const S diag = S(m) - S(params.d(i)) + S(params.d(i - m));
      if (n >= m) {
        if (m >= 1) put(n, m - 1, 0, diag);
        for (long k = 1; k <= floor_div(n - m, r); ++k) put(n - k * r, m + k * r - 1, 0, cs);
      } else {
        put(n, m - 1, 0, diag - cs);
        for (long k = 1; k <= floor_div(m - n - 1, r); ++k) put(n + k * r, m - k * r - 1, 0, S(0) - cs);
      }
    }
    return;
  }

  const long i = label.i, j = label.j, gap = j - i;
  const S neg = S(0) - rc0;
  if (axis == 1) {
    if (slot == 0) {
      if (n >= 1) put(n - 1, m, 0, S(n) - S(params.d(i)) + S(params.d(i - n)));
      if (n > m)
        for (long k = 1; k <= floor_div(n - m - 1 + gap, r); ++k) put(n - k * r + gap - 1, m + k * r - gap, 1, neg);
      else if (n < m)
        for (long k = 0; k <= floor_div(m - n - gap, r); ++k) put(n + k * r + gap - 1, m - k * r - gap, 1, rc0);
    } else {
      if (n >= 1) put(n - 1, m, 1, S(n) - S(params.d(j)) + S(params.d(j - n)));
      if (n > m)
        for (long k = 0; k <= floor_div(n - m - 1 - gap, r); ++k) put(n - k * r - gap - 1, m + k * r + gap, 0, neg);
      else if (n < m)
        for (long k = 1; k <= floor_div(m - n + gap, r); ++k) put(n + k * r - gap - 1, m - k * r + gap, 0, rc0);
    }
  } else {
    if (slot == 0) {
      if (m >= 1) put(n, m - 1, 0, S(m) - S(params.d(j)) + S(params.d(j - m)));
      if (n > m)
        for (long k = 1; k <= floor_div(n - m + gap, r); ++k) put(n - k * r + gap, m + k * r - gap - 1, 1, rc0);
      else if (n < m)
        for (long k = 0; k <= floor_div(m - n - gap - 1, r); ++k) put(n + k * r + gap, m - k * r - gap - 1, 1, neg);
    } else {
      if (m >= 1) put(n, m - 1, 1, S(m) - S(params.d(i)) + S(params.d(i - m)));
      if (n > m)
        for (long k = 0; k <= floor_div(n - m - gap, r); ++k) put(n - k * r - gap, m + k * r + gap - 1, 0, rc0);
      else if (n < m)
        for (long k = 1; k <= floor_div(m - n + gap - 1, r); ++k) put(n + k * r - gap, m - k * r + gap - 1, 0, neg);
    }
  }
}

}  // namespace cherednik
