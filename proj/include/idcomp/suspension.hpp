#pragma once

/**
 * @file suspension.hpp
 * @brief Strict automorphisms Σ of a presented category, and the category
 * type that pairs a presentation with one.
 */

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "addcat.hpp"

namespace idcomp {

/// Σ permutes basics and acts on each Hom(B_i, B_j) by an invertible matrix
/// Hom(B_i, B_j) -> Hom(Σ B_i, Σ B_j).
struct Suspension {
  std::vector<int> object_map;
  std::vector<std::vector<FMatrix>> hom_maps;  // [i][j]

  static Suspension identity(const CategoryPresentation& p) {
    Suspension s;
    const auto m = p.size();
    for (std::size_t i = 0; i < m; ++i) s.object_map.push_back(static_cast<int>(i));
    s.hom_maps.assign(m, std::vector<FMatrix>(m));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) s.hom_maps[i][j] = FMatrix::identity(p.field, p.dim(i, j));
    }
    return s;
  }

  /// Inverse automorphism Σ^{-1}.
  Suspension inverse() const {
    Suspension inv;
    const auto m = object_map.size();
    inv.object_map.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) inv.object_map[static_cast<std::size_t>(object_map[i])] = static_cast<int>(i);
    inv.hom_maps.assign(m, std::vector<FMatrix>(m));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        auto mi = idcomp::inverse(hom_maps[i][j]);
        if (!mi) throw std::invalid_argument("Suspension: hom map is not invertible");
        inv.hom_maps[static_cast<std::size_t>(object_map[i])][static_cast<std::size_t>(object_map[j])] = *mi;
      }
    }
    return inv;
  }

  Obj apply(const Obj& x) const {
    Obj out;
    for (int b : x.summands) out.summands.push_back(object_map[static_cast<std::size_t>(b)]);
    return out;
  }

  Mor apply(const AddCat& cat, const Mor& f) const {
    Mor out = cat.zero(apply(f.src), apply(f.dst));
    auto off_in = cat.block_offsets(f.src, f.dst);
    auto off_out = cat.block_offsets(out.src, out.dst);
    const auto F = cat.field();
    for (std::size_t j = 0; j < f.dst.size(); ++j) {
      for (std::size_t i = 0; i < f.src.size(); ++i) {
        const auto& h = hom_maps[static_cast<std::size_t>(f.src.summands[i])][static_cast<std::size_t>(f.dst.summands[j])];
        const auto b = j * f.src.size() + i;
        for (std::size_t r = 0; r < h.rows(); ++r) {
          Elem acc = 0;
          for (std::size_t c = 0; c < h.cols(); ++c) acc = F.add(acc, F.mul(h(r, c), f.coords[off_in[b] + c]));
          out.coords[off_out[b] + r] = acc;
        }
      }
    }
    return out;
  }
};

struct SuspensionReport {
  Status status = Status::Pass;
  std::string message;
};

/// Σ must be a bijection on basics with invertible hom maps of matching
/// shape, preserve identities, and preserve composition on all basis pairs.
inline SuspensionReport validate_suspension(const AddCat& cat, const Suspension& s) {
  const auto& P = cat.presentation();
  const auto m = P.size();
  if (s.object_map.size() != m || s.hom_maps.size() != m) return {Status::Fail, "suspension has wrong size"};
  std::vector<bool> hit(m, false);
  for (int b : s.object_map) {
    if (b < 0 || static_cast<std::size_t>(b) >= m || hit[static_cast<std::size_t>(b)]) {
      return {Status::Fail, "suspension object map is not a bijection"};
    }
    hit[static_cast<std::size_t>(b)] = true;
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (s.hom_maps[i].size() != m) return {Status::Fail, "suspension hom map table has wrong size"};
    for (std::size_t j = 0; j < m; ++j) {
      const auto& h = s.hom_maps[i][j];
      const auto si = static_cast<std::size_t>(s.object_map[i]);
      const auto sj = static_cast<std::size_t>(s.object_map[j]);
      if (h.cols() != P.dim(i, j) || h.rows() != P.dim(si, sj)) {
        return {Status::Fail, "hom map " + P.basics[i] + "->" + P.basics[j] + " has wrong shape"};
      }
      if (!idcomp::inverse(h)) return {Status::Fail, "hom map " + P.basics[i] + "->" + P.basics[j] + " is not invertible"};
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    auto id = cat.identity(cat.basic(static_cast<int>(i)));
    if (s.apply(cat, id) != cat.identity(s.apply(id.src))) return {Status::Fail, "Σ(1_" + P.basics[i] + ") != 1"};
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t a = 0; a < P.dim(i, j); ++a) {
          for (std::size_t b = 0; b < P.dim(j, k); ++b) {
            Mor f = cat.zero(cat.basic(static_cast<int>(i)), cat.basic(static_cast<int>(j)));
            f.coords[a] = 1;
            Mor g = cat.zero(cat.basic(static_cast<int>(j)), cat.basic(static_cast<int>(k)));
            g.coords[b] = 1;
            if (s.apply(cat, cat.compose(g, f)) != cat.compose(s.apply(cat, g), s.apply(cat, f))) {
              return {Status::Fail, "Σ does not preserve " + P.basis_label(j, k, b) + " o " + P.basis_label(i, j, a)};
            }
          }
        }
      }
    }
  }
  return {};
}

/// A presented additive category together with a strict automorphism Σ.
class BaseCategory : public AddCat {
 public:
  BaseCategory() = default;
  BaseCategory(std::shared_ptr<const CategoryPresentation> pres, Suspension sigma)
      : AddCat(std::move(pres)),
        sigma_(std::make_shared<const Suspension>(std::move(sigma))),
        sigma_inv_(std::make_shared<const Suspension>(sigma_->inverse())) {}
  BaseCategory(CategoryPresentation pres, Suspension sigma)
      : BaseCategory(std::make_shared<const CategoryPresentation>(std::move(pres)), std::move(sigma)) {}
  explicit BaseCategory(CategoryPresentation pres)
      : BaseCategory(std::make_shared<const CategoryPresentation>(pres), Suspension::identity(pres)) {}

  const Suspension& suspension() const { return *sigma_; }

  Obj suspend(const Obj& x) const { return sigma_->apply(x); }
  Mor suspend(const Mor& f) const { return sigma_->apply(*this, f); }
  Obj desuspend(const Obj& x) const { return sigma_inv_->apply(x); }
  Mor desuspend(const Mor& f) const { return sigma_inv_->apply(*this, f); }

  /// Smallest m >= 1 with Σ^m = 1 on every basis morphism, or 0 if none up to limit.
  int suspension_order(int limit = 64) const {
    const auto& P = presentation();
    for (int m = 1; m <= limit; ++m) {
      bool ok = true;
      for (std::size_t i = 0; i < P.size() && ok; ++i) {
        for (std::size_t j = 0; j < P.size() && ok; ++j) {
          for (std::size_t a = 0; a < P.dim(i, j) && ok; ++a) {
            Mor f = zero(basic(static_cast<int>(i)), basic(static_cast<int>(j)));
            f.coords[a] = 1;
            Mor g = f;
            for (int t = 0; t < m; ++t) g = suspend(g);
            ok = (g == f);
          }
        }
        Obj o = basic(static_cast<int>(i));
        Obj q = o;
        for (int t = 0; t < m; ++t) q = suspend(q);
        ok = ok && q == o;
      }
      if (ok) return m;
    }
    return 0;
  }

  SplitResult<BaseCategory> split_idempotent(const Obj& x, const Mor& e, long long budget) const {
    return idcomp::split_idempotent(*this, x, e, budget);
  }

 private:
  std::shared_ptr<const Suspension> sigma_;
  std::shared_ptr<const Suspension> sigma_inv_;
};

}  // namespace idcomp
