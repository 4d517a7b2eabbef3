#pragma once

#include <random>
#include <vector>

#include "cherednik/labels.hpp"
#include "cherednik/standard_module.hpp"

namespace testutil {

using namespace cherednik;

inline Rational random_rational(std::mt19937& rng, int num_bound, int den_bound) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound), den(1, den_bound);
  return Rational(num(rng), den(rng));
}

/// Random parameters with d summing to zero.
inline ParamsPtr random_params(std::mt19937& rng, int r, int num_bound = 9, int den_bound = 4) {
  std::vector<Rational> d;
  Rational sum(0);
  for (int k = 0; k + 1 < r; ++k) {
    d.push_back(random_rational(rng, num_bound, den_bound));
    sum += d.back();
  }
  d.push_back(-sum);
  Rational c0 = random_rational(rng, num_bound, den_bound);
  return std::make_shared<const Params>(r, c0, d);
}

inline Label random_label(std::mt19937& rng, int r) {
  const auto labels = enumerate_labels(r);
  std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
  return labels[pick(rng)];
}

inline ModElem random_elem(std::mt19937& rng, const ParamsPtr& p, const Label& l, int max_degree, int terms) {
  ModElem e(p, l);
  std::uniform_int_distribution<int> deg(0, max_degree), slot(0, l.dim() - 1);
  for (int k = 0; k < terms; ++k) {
    const int d = deg(rng);
    std::uniform_int_distribution<int> split(0, d);
    const int n = split(rng);
    e.add_term({n, d - n, slot(rng)}, random_rational(rng, 7, 5));
  }
  return e;
}

inline ParamsPtr section6() {
  return std::make_shared<const Params>(3, Rational(1), std::vector<Rational>{5, 0, -5});
}

}  // namespace testutil
