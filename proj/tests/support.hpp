#pragma once

// Hand-rolled generators and brute-force oracles shared by the tests.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "idcomp.hpp"

namespace testing_support {

using namespace idcomp;

inline FMatrix random_matrix(std::mt19937_64& rng, PrimeField F, std::size_t r, std::size_t c) {
  FMatrix m(F, r, c);
  std::uniform_int_distribution<Elem> d(0, F.prime() - 1);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  }
  return m;
}

/// Calls visit on every vector of F_p^len; stops when visit returns true.
inline bool for_each_vector(PrimeField F, std::size_t len, const std::function<bool(const std::vector<Elem>&)>& visit) {
  std::vector<Elem> v(len, 0);
  while (true) {
    if (visit(v)) return true;
    std::size_t k = 0;
    while (k < len) {
      if (++v[k] < F.prime()) break;
      v[k] = 0;
      ++k;
    }
    if (k == len) return false;
  }
}

inline Mor random_mor(std::mt19937_64& rng, const AddCat& cat, const Obj& x, const Obj& y) {
  Mor m = cat.zero(x, y);
  std::uniform_int_distribution<Elem> d(0, cat.field().prime() - 1);
  for (auto& c : m.coords) c = d(rng);
  return m;
}

inline Obj vpow(std::size_t k) {
  Obj o;
  o.summands.assign(k, 0);
  return o;
}

inline Mor vmat(const AddCat& /*cat*/, std::size_t rows, std::size_t cols, std::vector<Elem> entries) {
  return Mor{vpow(cols), vpow(rows), std::move(entries)};
}

/// Some invertible endomorphism of x, drawn at random (identity fallback).
inline Mor random_automorphism(std::mt19937_64& rng, const BaseCategory& cat, const Obj& x) {
  for (int t = 0; t < 64; ++t) {
    auto u = random_mor(rng, cat, x, x);
    if (inverse_of(cat, u)) return u;
  }
  return cat.identity(x);
}

}  // namespace testing_support
