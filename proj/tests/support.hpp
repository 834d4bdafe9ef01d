#pragma once

#include <random>

#include "homcas/homspace.hpp"
#include "homcas/kernel.hpp"

namespace homcas::testing {

inline Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline Vector random_vector(std::size_t n, std::mt19937_64& rng) {
  Vector v(n);
  for (auto& x : v) x = small_rational(rng);
  return v;
}

inline Matrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = small_rational(rng);
  return m;
}

inline Matrix random_invertible(std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Matrix m = random_matrix(n, n, rng);
    if (rank(m) == n) return m;
  }
}

inline HomObject random_object(std::size_t n, std::mt19937_64& rng) {
  return HomObject(random_invertible(n, rng));
}

}  // namespace homcas::testing
