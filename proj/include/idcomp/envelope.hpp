#pragma once

/**
 * @file envelope.hpp
 * @brief Checks relating a base category to its idempotent completion:
 * ι is an additive, fully faithful functor, complements give X ⊕ X' ≅ ιA,
 * and objects of the completion decompose into pieces with local
 * endomorphism rings.
 */

#include <string>
#include <vector>

#include "exang.hpp"
#include "karoubi.hpp"

namespace idcomp {

inline std::string describe(const KObj& x) {
  return "(" + std::to_string(x.base.size()) + " summands, e=" + describe(x.e) + ")";
}

inline std::vector<AxiomVerdict> envelope_checks(const KaroubiCategory& K, std::size_t dims, long long cap,
                                                 long long budget) {
  const auto& C = K.base();
  const auto objs = objects_up_to(C.presentation().size(), dims);
  const auto kobjs = envelope_battery(K, objs, budget);

  auto note = [](AxiomVerdict& v, bool ok, const std::string& w) {
    ++v.checked;
    if (!ok && v.status != Status::Fail) {
      v.status = Status::Fail;
      v.witness = w;
    }
  };
  auto functor = make_verdict("inclusion is a functor");
  auto additive = make_verdict("inclusion is additive");
  auto faithful = make_verdict("inclusion is fully faithful");
  for (const auto& x : objs) {
    note(functor, K.include(C.identity(x)) == K.identity(K.include(x)), "identity of " + std::to_string(x.size()));
    for (const auto& y : objs) {
      note(faithful, K.hom_basis(K.include(x), K.include(y)).size() == C.hom_dimension(x, y),
           std::to_string(x.size()) + " -> " + std::to_string(y.size()));
      auto fs = morphism_battery(C, x, y, cap, 3);
      for (std::size_t i = 0; i < fs.size(); ++i) {
        const auto& g = fs[(i * 5 + 1) % fs.size()];
        note(additive, K.include(C.add(fs[i], g)) == K.add(K.include(fs[i]), K.include(g)), describe(fs[i]));
        for (const auto& z : objs) {
          for (const auto& h : morphism_battery(C, y, z, 4, 9)) {
            note(functor, K.include(C.compose(h, fs[i])) == K.compose(K.include(h), K.include(fs[i])),
                 describe(h) + " o " + describe(fs[i]));
          }
        }
      }
    }
  }

  auto complements = make_verdict("complement isomorphisms");
  auto ks = make_verdict("completion is Krull-Schmidt");
  auto splitter = [&](const KObj& o, const KMor& q, long long b) { return K.split_idempotent(o, q, b); };
  for (const auto& x : kobjs) {
    const auto ci = complement_iso(K, x);
    note(complements, ci.verified && K.complement(K.complement(x)) == x, describe(x));
    auto d = decompose_object(K, x, budget, splitter);
    bool ok = d.status == Status::Pass;
    for (auto s : d.local) ok = ok && s == Status::Pass;
    ++ks.checked;
    if (!ok && ks.status == Status::Pass) {
      ks.status = d.status == Status::Unknown ? Status::Unknown : Status::Fail;
      ks.witness = describe(x);
    }
  }
  return {functor, additive, faithful, complements, ks};
}

}  // namespace idcomp
