#pragma once

/**
 * @file oracles.hpp
 * @brief The two reference categories used throughout the tests.
 *
 * Vect: one basic V with End(V) = F_p, i.e. finite-dimensional vector
 * spaces. R-oracle: one basic R with End(R) = F_2[x]/(x^2 + x), i.e. free
 * modules over F_2 x F_2. The idempotent x is not split by free modules.
 */

#include "addcat.hpp"
#include "suspension.hpp"

namespace idcomp::oracles {

inline CategoryPresentation vect_presentation(Elem p = 2) {
  auto pres = CategoryPresentation::with_shape(PrimeField(p), {"V"}, {{1}});
  pres.basis_names = {{{"idV"}}};
  pres.constant_ref(0, 0, 0, 0, 0, 0) = 1;
  pres.identities[0] = {1};
  return pres;
}

inline BaseCategory vect(Elem p = 2) { return BaseCategory(vect_presentation(p)); }

/// Basis (one, x) with x*x = x.
inline CategoryPresentation free_module_presentation() {
  auto pres = CategoryPresentation::with_shape(PrimeField(2), {"R"}, {{2}});
  pres.basis_names = {{{"one", "x"}}};
  pres.constant_ref(0, 0, 0, 0, 0, 0) = 1;  // one*one = one
  pres.constant_ref(0, 0, 0, 0, 1, 1) = 1;  // one*x = x
  pres.constant_ref(0, 0, 0, 1, 0, 1) = 1;  // x*one = x
  pres.constant_ref(0, 0, 0, 1, 1, 1) = 1;  // x*x = x
  pres.identities[0] = {1, 0};
  return pres;
}

inline BaseCategory free_module() { return BaseCategory(free_module_presentation()); }

/// The endomorphism x of R^{⊕k} acting diagonally.
inline Mor free_module_x(const AddCat& cat, std::size_t k) {
  Obj o;
  o.summands.assign(k, 0);
  Mor m = cat.zero(o, o);
  auto off = cat.block_offsets(o, o);
  for (std::size_t i = 0; i < k; ++i) m.coords[off[i * k + i] + 1] = 1;
  return m;
}

}  // namespace idcomp::oracles
