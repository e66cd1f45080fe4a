#pragma once

/**
 * @file addcat.hpp
 * @brief Finitely presented additive categories over F_p.
 *
 * A presentation lists basic objects B_0..B_{m-1}, a basis of every
 * Hom(B_i, B_j), the structure constants of composition on basis
 * morphisms, and the coordinates of each identity. Objects are formal
 * direct sums (ordered lists of basics); a morphism X -> Y is a grid of
 * blocks, block (j, i) holding the coordinates of a map X_i -> Y_j.
 */

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "field.hpp"
#include "linear.hpp"
#include "verdict.hpp"

namespace idcomp {

struct CategoryPresentation {
  PrimeField field{2};
  std::vector<std::string> basics;
  /// hom_dims[i][j] = dim Hom(B_i, B_j).
  std::vector<std::vector<std::size_t>> hom_dims;
  /// Optional labels for basis morphisms, basis_names[i][j][k].
  std::vector<std::vector<std::vector<std::string>>> basis_names;
  /// comp[(i*m + j)*m + k] holds, for g in Hom(B_j,B_k) and f in Hom(B_i,B_j),
  /// the coordinates of g∘f in Hom(B_i,B_k), laid out as [g][f][c].
  std::vector<std::vector<Elem>> comp;
  /// identities[i] = coordinates of 1_{B_i} in Hom(B_i, B_i).
  std::vector<std::vector<Elem>> identities;

  std::size_t size() const noexcept { return basics.size(); }
  std::size_t dim(std::size_t i, std::size_t j) const { return hom_dims[i][j]; }

  std::size_t table_index(std::size_t i, std::size_t j, std::size_t k) const { return (i * size() + j) * size() + k; }

  Elem constant(std::size_t i, std::size_t j, std::size_t k, std::size_t g, std::size_t f, std::size_t c) const {
    const auto& t = comp[table_index(i, j, k)];
    return t[(g * dim(i, j) + f) * dim(i, k) + c];
  }
  Elem& constant_ref(std::size_t i, std::size_t j, std::size_t k, std::size_t g, std::size_t f, std::size_t c) {
    auto& t = comp[table_index(i, j, k)];
    return t[(g * dim(i, j) + f) * dim(i, k) + c];
  }

  std::string basis_label(std::size_t i, std::size_t j, std::size_t k) const {
    if (i < basis_names.size() && j < basis_names[i].size() && k < basis_names[i][j].size()) {
      return basis_names[i][j][k];
    }
    return "b" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(k);
  }

  std::optional<std::size_t> basic_index(const std::string& name) const {
    auto it = std::find(basics.begin(), basics.end(), name);
    if (it == basics.end()) return std::nullopt;
    return static_cast<std::size_t>(it - basics.begin());
  }

  /// Allocate zeroed tables for the given basics and dimensions.
  static CategoryPresentation with_shape(PrimeField f, std::vector<std::string> names,
                                         std::vector<std::vector<std::size_t>> dims) {
    CategoryPresentation p;
    p.field = f;
    p.basics = std::move(names);
    p.hom_dims = std::move(dims);
    const auto m = p.size();
    p.comp.assign(m * m * m, {});
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = 0; k < m; ++k) {
          p.comp[p.table_index(i, j, k)].assign(p.dim(j, k) * p.dim(i, j) * p.dim(i, k), 0);
        }
      }
    }
    p.identities.assign(m, {});
    for (std::size_t i = 0; i < m; ++i) p.identities[i].assign(p.dim(i, i), 0);
    return p;
  }
};

/// Formal direct sum of basic objects; the empty list is the zero object.
struct Obj {
  std::vector<int> summands;

  bool is_zero() const noexcept { return summands.empty(); }
  std::size_t size() const noexcept { return summands.size(); }
  auto operator<=>(const Obj&) const = default;
};

struct Mor {
  Obj src;
  Obj dst;
  std::vector<Elem> coords;

  bool operator==(const Mor&) const = default;
};

/// Thrown for presentations whose tables do not have the declared shape.
class PresentationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The additive category generated by a presentation.
class AddCat {
 public:
  using Object = Obj;
  using Morphism = Mor;

  AddCat() = default;
  explicit AddCat(std::shared_ptr<const CategoryPresentation> pres) : pres_(std::move(pres)) {}
  explicit AddCat(CategoryPresentation pres)
      : pres_(std::make_shared<const CategoryPresentation>(std::move(pres))) {}

  const CategoryPresentation& presentation() const { return *pres_; }
  std::shared_ptr<const CategoryPresentation> presentation_ptr() const { return pres_; }
  PrimeField field() const { return pres_->field; }

  Obj basic(int i) const { return Obj{{i}}; }

  std::size_t hom_dimension(const Obj& x, const Obj& y) const {
    std::size_t d = 0;
    for (int yj : y.summands) {
      for (int xi : x.summands) d += pres_->dim(xi, yj);
    }
    return d;
  }

  /// Offset of block (j, i) inside the coordinate vector of a map x -> y.
  std::vector<std::size_t> block_offsets(const Obj& x, const Obj& y) const {
    std::vector<std::size_t> off;
    off.reserve(x.size() * y.size() + 1);
    std::size_t o = 0;
    for (int yj : y.summands) {
      for (int xi : x.summands) {
        off.push_back(o);
        o += pres_->dim(xi, yj);
      }
    }
    off.push_back(o);
    return off;
  }

  Mor zero(const Obj& x, const Obj& y) const { return Mor{x, y, std::vector<Elem>(hom_dimension(x, y), 0)}; }

  Mor identity(const Obj& x) const {
    Mor m = zero(x, x);
    auto off = block_offsets(x, x);
    for (std::size_t i = 0; i < x.size(); ++i) {
      const auto& id = pres_->identities[x.summands[i]];
      std::copy(id.begin(), id.end(), m.coords.begin() + static_cast<long>(off[i * x.size() + i]));
    }
    return m;
  }

  Mor from_coords(const Obj& x, const Obj& y, std::vector<Elem> coords) const {
    if (coords.size() != hom_dimension(x, y)) throw std::invalid_argument("AddCat: coordinate length mismatch");
    for (auto& c : coords) c %= field().prime();
    return Mor{x, y, std::move(coords)};
  }

  Mor compose(const Mor& g, const Mor& f) const {
    if (f.dst != g.src) throw std::invalid_argument("AddCat::compose: f.dst != g.src");
    const auto& P = *pres_;
    const auto F = P.field;
    const Obj& x = f.src;
    const Obj& y = f.dst;
    const Obj& z = g.dst;
    Mor out = zero(x, z);
    auto off_f = block_offsets(x, y);
    auto off_g = block_offsets(y, z);
    auto off_o = block_offsets(x, z);
    for (std::size_t k = 0; k < z.size(); ++k) {
      const auto bk = static_cast<std::size_t>(z.summands[k]);
      for (std::size_t i = 0; i < x.size(); ++i) {
        const auto bi = static_cast<std::size_t>(x.summands[i]);
        const std::size_t dik = P.dim(bi, bk);
        if (dik == 0) continue;
        Elem* o = out.coords.data() + off_o[k * x.size() + i];
        for (std::size_t j = 0; j < y.size(); ++j) {
          const auto bj = static_cast<std::size_t>(y.summands[j]);
          const std::size_t dij = P.dim(bi, bj);
          const std::size_t djk = P.dim(bj, bk);
          if (dij == 0 || djk == 0) continue;
          const Elem* gb = g.coords.data() + off_g[k * y.size() + j];
          const Elem* fb = f.coords.data() + off_f[j * x.size() + i];
          const auto& t = P.comp[P.table_index(bi, bj, bk)];
          for (std::size_t a = 0; a < djk; ++a) {
            if (gb[a] == 0) continue;
            for (std::size_t b = 0; b < dij; ++b) {
              if (fb[b] == 0) continue;
              const Elem coef = F.mul(gb[a], fb[b]);
              const Elem* row = t.data() + (a * dij + b) * dik;
              for (std::size_t c = 0; c < dik; ++c) {
                if (row[c] != 0) o[c] = F.add(o[c], F.mul(coef, row[c]));
              }
            }
          }
        }
      }
    }
    return out;
  }

  Mor add(const Mor& a, const Mor& b) const {
    if (a.src != b.src || a.dst != b.dst) throw std::invalid_argument("AddCat::add: shape mismatch");
    Mor out = a;
    const auto F = field();
    for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] = F.add(out.coords[i], b.coords[i]);
    return out;
  }

  Mor scale(const Mor& a, Elem s) const {
    Mor out = a;
    const auto F = field();
    for (auto& c : out.coords) c = F.mul(c, s);
    return out;
  }

  bool is_zero(const Mor& a) const {
    return std::all_of(a.coords.begin(), a.coords.end(), [](Elem e) { return e == 0; });
  }

  std::vector<Elem> flatten(const Mor& a) const { return a.coords; }
  const Obj& src(const Mor& a) const { return a.src; }
  const Obj& dst(const Mor& a) const { return a.dst; }
  Obj zero_object() const { return Obj{}; }

  Obj direct_sum(std::span<const Obj> parts) const {
    Obj out;
    for (const auto& p : parts) out.summands.insert(out.summands.end(), p.summands.begin(), p.summands.end());
    return out;
  }
  Obj direct_sum(const Obj& a, const Obj& b) const {
    std::vector<Obj> parts{a, b};
    return direct_sum(std::span<const Obj>(parts));
  }

  std::vector<Mor> hom_basis(const Obj& x, const Obj& y) const {
    const auto d = hom_dimension(x, y);
    std::vector<Mor> out;
    out.reserve(d);
    for (std::size_t k = 0; k < d; ++k) {
      Mor m = zero(x, y);
      m.coords[k] = 1;
      out.push_back(std::move(m));
    }
    return out;
  }

  /// Assemble a map (sum of src_parts) -> (sum of dst_parts) from blocks
  /// given row-major: blocks[j * src_parts.size() + i] : src_parts[i] -> dst_parts[j].
  Mor block_matrix(std::span<const Obj> dst_parts, std::span<const Obj> src_parts, const std::vector<Mor>& blocks) const {
    if (blocks.size() != dst_parts.size() * src_parts.size()) {
      throw std::invalid_argument("AddCat::block_matrix: wrong number of blocks");
    }
    Obj x = direct_sum(src_parts);
    Obj y = direct_sum(dst_parts);
    Mor out = zero(x, y);
    auto off = block_offsets(x, y);
    std::size_t gj = 0;
    for (std::size_t pj = 0; pj < dst_parts.size(); ++pj) {
      for (std::size_t jj = 0; jj < dst_parts[pj].size(); ++jj, ++gj) {
        std::size_t gi = 0;
        for (std::size_t pi = 0; pi < src_parts.size(); ++pi) {
          const Mor& b = blocks[pj * src_parts.size() + pi];
          if (b.src != src_parts[pi] || b.dst != dst_parts[pj]) {
            throw std::invalid_argument("AddCat::block_matrix: block has wrong shape");
          }
          auto boff = block_offsets(b.src, b.dst);
          for (std::size_t ii = 0; ii < src_parts[pi].size(); ++ii, ++gi) {
            std::size_t from = boff[jj * b.src.size() + ii];
            std::size_t len = boff[jj * b.src.size() + ii + 1] - from;
            std::copy_n(b.coords.begin() + static_cast<long>(from), len,
                        out.coords.begin() + static_cast<long>(off[gj * x.size() + gi]));
          }
        }
      }
    }
    return out;
  }

  /// Extract block (j, i) of f relative to the given decompositions.
  Mor block(const Mor& f, std::span<const Obj> dst_parts, std::span<const Obj> src_parts, std::size_t j,
            std::size_t i) const {
    if (direct_sum(src_parts) != f.src || direct_sum(dst_parts) != f.dst) {
      throw std::invalid_argument("AddCat::block: decomposition does not match morphism");
    }
    std::size_t j0 = 0, i0 = 0;
    for (std::size_t t = 0; t < j; ++t) j0 += dst_parts[t].size();
    for (std::size_t t = 0; t < i; ++t) i0 += src_parts[t].size();
    Mor out = zero(src_parts[i], dst_parts[j]);
    auto off = block_offsets(f.src, f.dst);
    auto boff = block_offsets(out.src, out.dst);
    for (std::size_t jj = 0; jj < dst_parts[j].size(); ++jj) {
      for (std::size_t ii = 0; ii < src_parts[i].size(); ++ii) {
        std::size_t from = off[(j0 + jj) * f.src.size() + (i0 + ii)];
        std::size_t len = boff[jj * out.src.size() + ii + 1] - boff[jj * out.src.size() + ii];
        std::copy_n(f.coords.begin() + static_cast<long>(from), len,
                    out.coords.begin() + static_cast<long>(boff[jj * out.src.size() + ii]));
      }
    }
    return out;
  }

  /// Single-basic categories with a one-dimensional endomorphism space are
  /// matrix categories over F_p; these expose dimension and rank directly.
  bool is_vector_space_like() const {
    return pres_->size() == 1 && pres_->dim(0, 0) == 1 && pres_->identities[0][0] == 1 &&
           pres_->comp[0].size() == 1 && pres_->comp[0][0] == 1;
  }
  std::size_t vs_dim(const Obj& x) const { return x.size(); }
  std::size_t vs_rank(const Mor& f) const {
    return rank(FMatrix(field(), f.dst.size(), f.src.size(), f.coords));
  }

 private:
  std::shared_ptr<const CategoryPresentation> pres_;
};

// ---------------------------------------------------------------------------
// Validation

struct ValidationReport {
  enum class Kind { Ok, Associativity, LeftIdentity, RightIdentity };
  Status status = Status::Pass;
  Kind kind = Kind::Ok;
  /// Basics of the witness (i -> j -> k -> l for associativity) and basis indices.
  std::vector<std::size_t> basics;
  std::vector<std::size_t> basis;
  std::string message;
};

inline void check_presentation_shape(const CategoryPresentation& p) {
  const auto m = p.size();
  if (p.hom_dims.size() != m) throw PresentationError("hom_dims has wrong number of rows");
  for (const auto& row : p.hom_dims) {
    if (row.size() != m) throw PresentationError("hom_dims has wrong number of columns");
  }
  if (p.comp.size() != m * m * m) throw PresentationError("composition table has wrong size");
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        if (p.comp[p.table_index(i, j, k)].size() != p.dim(j, k) * p.dim(i, j) * p.dim(i, k)) {
          throw PresentationError("composition block (" + p.basics[i] + "," + p.basics[j] + "," + p.basics[k] +
                                  ") has wrong size");
        }
      }
    }
  }
  if (p.identities.size() != m) throw PresentationError("identity list has wrong size");
  for (std::size_t i = 0; i < m; ++i) {
    if (p.identities[i].size() != p.dim(i, i)) throw PresentationError("identity of " + p.basics[i] + " has wrong size");
  }
  for (const auto& t : p.comp) {
    for (auto c : t) {
      if (c >= p.field.prime()) throw PresentationError("structure constant out of range");
    }
  }
}

/// Associativity on every basis triple and both identity laws on every
/// basis morphism. Throws PresentationError on malformed tables.
inline ValidationReport validate_presentation(const CategoryPresentation& pres) {
  check_presentation_shape(pres);
  AddCat cat(pres);
  const auto m = pres.size();
  auto unit = [&](std::size_t i, std::size_t j, std::size_t k) {
    Mor u = cat.zero(cat.basic(static_cast<int>(i)), cat.basic(static_cast<int>(j)));
    u.coords[k] = 1;
    return u;
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t a = 0; a < pres.dim(i, j); ++a) {
        Mor f = unit(i, j, a);
        if (cat.compose(cat.identity(cat.basic(static_cast<int>(j))), f) != f) {
          return {Status::Fail, ValidationReport::Kind::LeftIdentity, {i, j}, {a},
                  "1_" + pres.basics[j] + " o " + pres.basis_label(i, j, a) + " != " + pres.basis_label(i, j, a)};
        }
        if (cat.compose(f, cat.identity(cat.basic(static_cast<int>(i)))) != f) {
          return {Status::Fail, ValidationReport::Kind::RightIdentity, {i, j}, {a},
                  pres.basis_label(i, j, a) + " o 1_" + pres.basics[i] + " != " + pres.basis_label(i, j, a)};
        }
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t l = 0; l < m; ++l) {
          for (std::size_t a = 0; a < pres.dim(i, j); ++a) {
            for (std::size_t b = 0; b < pres.dim(j, k); ++b) {
              for (std::size_t c = 0; c < pres.dim(k, l); ++c) {
                Mor fa = unit(i, j, a), gb = unit(j, k, b), hc = unit(k, l, c);
                if (cat.compose(cat.compose(hc, gb), fa) != cat.compose(hc, cat.compose(gb, fa))) {
                  return {Status::Fail, ValidationReport::Kind::Associativity, {i, j, k, l}, {a, b, c},
                          "(" + pres.basis_label(k, l, c) + " o " + pres.basis_label(j, k, b) + ") o " +
                              pres.basis_label(i, j, a) + " != " + pres.basis_label(k, l, c) + " o (" +
                              pres.basis_label(j, k, b) + " o " + pres.basis_label(i, j, a) + ")"};
                }
              }
            }
          }
        }
      }
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Endomorphism rings, idempotents, isomorphisms

template <AdditiveCategory Cat>
std::optional<typename Cat::Morphism> is_isomorphism(const Cat& cat, const typename Cat::Morphism& f) {
  return inverse_of(cat, f);
}

template <AdditiveCategory Cat>
struct EndRing {
  typename Cat::Object object;
  std::vector<typename Cat::Morphism> basis;
  /// mult_table[a][b] = coordinates of basis[a] ∘ basis[b] in the basis.
  std::vector<std::vector<std::vector<Elem>>> mult_table;
  std::vector<Elem> unit;
};

/// Coordinates of m in a basis (given as morphisms), by linear solve.
template <AdditiveCategory Cat>
std::vector<Elem> coordinates_in(const Cat& cat, const std::vector<typename Cat::Morphism>& basis,
                                 const typename Cat::Morphism& m) {
  const auto F = cat.field();
  auto target = cat.flatten(m);
  FMatrix a(F, target.size(), basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    auto col = cat.flatten(basis[k]);
    for (std::size_t i = 0; i < col.size(); ++i) a(i, k) = col[i];
  }
  auto sol = solve(a, FMatrix::column(F, target));
  if (!sol) throw std::logic_error("coordinates_in: morphism outside the span of the basis");
  return sol->particular.column_vector(0);
}

template <AdditiveCategory Cat>
EndRing<Cat> end_ring(const Cat& cat, const typename Cat::Object& x) {
  EndRing<Cat> r;
  r.object = x;
  r.basis = cat.hom_basis(x, x);
  for (const auto& a : r.basis) {
    std::vector<std::vector<Elem>> row;
    for (const auto& b : r.basis) row.push_back(coordinates_in(cat, r.basis, cat.compose(a, b)));
    r.mult_table.push_back(std::move(row));
  }
  r.unit = coordinates_in(cat, r.basis, cat.identity(x));
  return r;
}

/// Every element of End(x), in lexicographic coordinate order.
template <AdditiveCategory Cat>
std::vector<typename Cat::Morphism> ring_elements(const Cat& cat, const typename Cat::Object& x, Budget& budget,
                                                  Search* outcome = nullptr) {
  std::vector<typename Cat::Morphism> out;
  auto s = enumerate_hom(cat, x, x, budget, [&](const typename Cat::Morphism& m) {
    out.push_back(m);
    return false;
  });
  if (outcome) *outcome = s;
  return out;
}

template <AdditiveCategory Cat>
struct IdempotentList {
  std::vector<typename Cat::Morphism> idempotents;
  bool exhaustive = false;  // false means Unknown: the list is partial
};

/// Idempotents of End(x) by exhaustive enumeration when p^dim fits the budget.
template <AdditiveCategory Cat>
IdempotentList<Cat> idempotents(const Cat& cat, const typename Cat::Object& x, long long budget) {
  IdempotentList<Cat> out;
  Budget b(budget);
  auto s = enumerate_hom(cat, x, x, b, [&](const typename Cat::Morphism& m) {
    if (cat.compose(m, m) == m) out.idempotents.push_back(m);
    return false;
  });
  out.exhaustive = (s == Search::Exhausted);
  return out;
}

/// Locality by definition: the non-units form an additive subgroup closed
/// under left and right multiplication. Brute force over the finite ring.
template <AdditiveCategory Cat>
Status is_local_ring(const Cat& cat, const typename Cat::Object& x, long long budget) {
  Budget b(budget);
  Search s{};
  auto elems = ring_elements(cat, x, b, &s);
  if (s != Search::Exhausted) return Status::Unknown;
  if (elems.size() <= 1) return Status::Fail;  // the zero ring is not local
  const auto one = cat.identity(x);
  std::vector<bool> unit(elems.size(), false);
  for (std::size_t a = 0; a < elems.size(); ++a) {
    for (std::size_t c = 0; c < elems.size() && !unit[a]; ++c) {
      if (cat.compose(elems[a], elems[c]) == one && cat.compose(elems[c], elems[a]) == one) unit[a] = true;
    }
  }
  std::vector<typename Cat::Morphism> nonunits;
  for (std::size_t a = 0; a < elems.size(); ++a) {
    if (!unit[a]) nonunits.push_back(elems[a]);
  }
  auto is_nonunit = [&](const typename Cat::Morphism& m) {
    return std::find(nonunits.begin(), nonunits.end(), m) != nonunits.end();
  };
  for (const auto& a : nonunits) {
    for (const auto& c : nonunits) {
      if (!is_nonunit(cat.add(a, c))) return Status::Fail;
    }
    for (const auto& r : elems) {
      if (!is_nonunit(cat.compose(r, a)) || !is_nonunit(cat.compose(a, r))) return Status::Fail;
    }
  }
  return Status::Pass;
}

// ---------------------------------------------------------------------------
// Idempotent splitting by search in the base category

/// Sorted multisets of basics with at most max_size summands, smallest first.
inline std::vector<Obj> objects_up_to(std::size_t num_basics, std::size_t max_size) {
  std::vector<Obj> out{Obj{}};
  std::vector<Obj> frontier{Obj{}};
  for (std::size_t sz = 1; sz <= max_size; ++sz) {
    std::vector<Obj> next;
    for (const auto& o : frontier) {
      int start = o.summands.empty() ? 0 : o.summands.back();
      for (int b = start; b < static_cast<int>(num_basics); ++b) {
        Obj n = o;
        n.summands.push_back(b);
        next.push_back(n);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

/// Search for y, r: x -> y, s: y -> x with s r = e and r s = 1_y over all
/// y with at most |x| summands. r is enumerated; s is solved for linearly.
template <std::derived_from<AddCat> Cat>
SplitResult<Cat> split_idempotent(const Cat& cat, const Obj& x, const Mor& e, long long budget) {
  if (e.src != x || e.dst != x || cat.compose(e, e) != e) {
    throw std::invalid_argument("split_idempotent: e is not an idempotent endomorphism of x");
  }
  SplitResult<Cat> out;
  if (cat.is_zero(e)) {
    out.status = SplitStatus::Split;
    out.splitting = Splitting<Cat>{Obj{}, cat.zero(x, Obj{}), cat.zero(Obj{}, x)};
    return out;
  }
  if (e == cat.identity(x)) {
    out.status = SplitStatus::Split;
    out.splitting = Splitting<Cat>{x, e, e};
    return out;
  }
  Budget b(budget);
  for (const auto& y : objects_up_to(cat.presentation().size(), x.size())) {
    std::optional<Splitting<Cat>> found;
    auto s = enumerate_hom(cat, x, y, b, [&](const Mor& r) {
      auto sol = solve_affine(cat, std::vector<HomSlot<Cat>>{{y, x}}, [&](const std::vector<Mor>& sv) {
        return std::vector<Mor>{sub(cat, cat.compose(sv[0], r), e), sub(cat, cat.compose(r, sv[0]), cat.identity(y))};
      });
      if (!sol) return false;
      found = Splitting<Cat>{y, r, sol->particular[0]};
      return true;
    });
    if (s == Search::Found) {
      out.status = SplitStatus::Split;
      out.splitting = std::move(found);
      return out;
    }
    if (s == Search::OutOfBudget) {
      out.status = SplitStatus::Unknown;
      return out;
    }
  }
  out.status = SplitStatus::NotSplitHere;
  return out;
}

// ---------------------------------------------------------------------------
// Krull–Schmidt analysis

template <AdditiveCategory Cat>
struct KrullSchmidtResult {
  Status status = Status::Unknown;              // Pass: decomposition complete; Unknown: budget
  std::vector<typename Cat::Object> parts;      // indecomposable summands (up to iso)
  std::vector<Status> local;                    // locality of End(part) for each part
};

/// Recursively split nontrivial idempotents until none split. `splitter`
/// is called as splitter(x, e, budget) -> SplitResult<Cat>.
template <AdditiveCategory Cat, class Splitter>
KrullSchmidtResult<Cat> decompose_object(const Cat& cat, const typename Cat::Object& x, long long budget,
                                         Splitter&& splitter, int depth = 0) {
  using M = typename Cat::Morphism;
  KrullSchmidtResult<Cat> out;
  if (hom_dim(cat, x, x) == 0) {
    out.status = Status::Pass;
    return out;
  }
  if (depth > 32) return out;
  const auto one = cat.identity(x);
  auto idem = idempotents(cat, x, budget);
  bool unknown = !idem.exhaustive;
  for (const M& e : idem.idempotents) {
    if (cat.is_zero(e) || e == one) continue;
    auto s1 = splitter(x, e, budget);
    auto s2 = splitter(x, sub(cat, one, e), budget);
    if (s1.status == SplitStatus::Unknown || s2.status == SplitStatus::Unknown) {
      unknown = true;
      continue;
    }
    if (s1.status != SplitStatus::Split || s2.status != SplitStatus::Split) continue;
    const auto& y1 = s1.splitting->y;
    const auto& y2 = s2.splitting->y;
    const auto d = hom_dim(cat, x, x);
    if (hom_dim(cat, y1, y1) >= d || hom_dim(cat, y2, y2) >= d) {
      unknown = true;
      continue;
    }
    auto a = decompose_object(cat, y1, budget, splitter, depth + 1);
    auto b = decompose_object(cat, y2, budget, splitter, depth + 1);
    out.status = combine(a.status, b.status);
    out.parts = a.parts;
    out.parts.insert(out.parts.end(), b.parts.begin(), b.parts.end());
    out.local = a.local;
    out.local.insert(out.local.end(), b.local.begin(), b.local.end());
    return out;
  }
  out.status = unknown ? Status::Unknown : Status::Pass;
  out.parts = {x};
  out.local = {is_local_ring(cat, x, budget)};
  return out;
}

struct PresentationKrullSchmidt {
  KrullSchmidtResult<AddCat> decomposition;  // parts are Obj either way
  Status is_ks = Status::Unknown;  // every basic has a local endomorphism ring
};

/// Decompose x summand by summand, and decide whether every basic has a
/// local endomorphism ring.
inline PresentationKrullSchmidt krull_schmidt(const AddCat& cat, const Obj& x, long long budget) {
  PresentationKrullSchmidt out;
  out.decomposition.status = Status::Pass;
  auto splitter = [&](const Obj& o, const Mor& e, long long b) { return split_idempotent(cat, o, e, b); };
  for (int bsc : x.summands) {
    auto r = decompose_object(cat, cat.basic(bsc), budget, splitter);
    out.decomposition.status = combine(out.decomposition.status, r.status);
    out.decomposition.parts.insert(out.decomposition.parts.end(), r.parts.begin(), r.parts.end());
    out.decomposition.local.insert(out.decomposition.local.end(), r.local.begin(), r.local.end());
  }
  out.is_ks = Status::Pass;
  for (std::size_t b = 0; b < cat.presentation().size(); ++b) {
    out.is_ks = combine(out.is_ks, is_local_ring(cat, cat.basic(static_cast<int>(b)), budget));
  }
  return out;
}

}  // namespace idcomp
