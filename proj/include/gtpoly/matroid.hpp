#pragma once

/**
 * @file matroid.hpp
 * @brief Realized matroids over a supported ring: A -> M(A) = M(∅)/(ψ(i) : i ∈ A).
 *
 * The ambient module is always R^D. A set of forced columns C is quotiented
 * out of every M(A): it carries contracted elements and, for matroids whose
 * M(∅) has torsion, the relations t_j e_{d+j} presenting that torsion. So
 * every module is the cokernel of one column selection and goes through the
 * same Smith-form pipeline.
 */

#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "gtpoly/error.hpp"
#include "gtpoly/matrix.hpp"
#include "gtpoly/module.hpp"

namespace gtpoly {

/// Subset of the ground set as a bitmask; bit i is element i (0-based).
using Subset = std::uint64_t;

inline constexpr std::size_t default_max_ground = 24;

inline std::size_t subset_size(Subset s) { return static_cast<std::size_t>(std::popcount(s)); }
inline bool contains(Subset s, std::size_t i) { return (s >> i) & 1U; }
inline Subset with(Subset s, std::size_t i) { return s | (Subset{1} << i); }
inline Subset without(Subset s, std::size_t i) { return s & ~(Subset{1} << i); }
inline Subset full_subset(std::size_t n) { return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1; }

inline std::vector<std::size_t> subset_elements(Subset s) {
  std::vector<std::size_t> out;
  while (s) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

/// "{1,2}" with the given element labels (1-based by default).
inline std::string subset_to_string(Subset s, std::span<const std::size_t> labels = {}) {
  std::string out = "{";
  bool first = true;
  for (auto i : subset_elements(s)) {
    out += (first ? "" : ",") + std::to_string(labels.empty() ? i + 1 : labels[i]);
    first = false;
  }
  return out + "}";
}

enum class ElementKind { loop, coloop, ordinary };

inline std::string_view to_string(ElementKind k) {
  switch (k) {
    case ElementKind::loop: return "loop";
    case ElementKind::coloop: return "coloop";
    case ElementKind::ordinary: return "ordinary";
  }
  return "?";
}

template <SupportedRing R>
struct AxiomReport {
  bool pass = true;
  ModuleClass<R> base, with_b, with_c, with_bc;
  std::string detail;
};

template <SupportedRing R>
class RealizedMatroid {
 public:
  using Module = Cokernel<R>;

  /// ψ(i) = column i of matrix; forced columns are quotiented out everywhere.
  RealizedMatroid(Matrix<R> matrix, Matrix<R> forced, std::vector<std::size_t> labels,
                  std::size_t max_ground = default_max_ground)
      : matrix_(std::move(matrix)), forced_(std::move(forced)), labels_(std::move(labels)), max_ground_(max_ground) {
    if (matrix_.rows() == 0) throw invalid_input("realization needs a nonzero ambient rank");
    if (forced_.cols() == 0) forced_ = Matrix<R>(matrix_.rows(), 0);
    if (forced_.rows() != matrix_.rows()) throw invalid_input("forced columns have the wrong length");
    if (matrix_.cols() > max_ground_ || matrix_.cols() > 63)
      throw invalid_input("ground set of " + std::to_string(matrix_.cols()) + " elements exceeds the enumeration cap of " +
                          std::to_string(std::min<std::size_t>(max_ground_, 63)));
    if (labels_.empty())
      for (std::size_t i = 0; i < matrix_.cols(); ++i) labels_.push_back(i + 1);
    if (labels_.size() != matrix_.cols()) throw invalid_input("label count does not match ground set");
    base_free_rank_ = module_of(0).module_class.free_rank;
  }

  std::size_t ambient_rank() const { return matrix_.rows(); }
  std::size_t size() const { return matrix_.cols(); }
  Subset ground() const { return full_subset(size()); }
  const Matrix<R>& matrix() const { return matrix_; }
  const Matrix<R>& forced() const { return forced_; }
  const std::vector<std::size_t>& labels() const { return labels_; }
  std::size_t max_ground() const { return max_ground_; }

  /// Memoized class and presentation of M(A).
  const Module& module_of(Subset a) const {
    if (a & ~ground()) throw std::out_of_range("subset " + std::to_string(a) + " is not inside the ground set");
    {
      std::shared_lock lock(cache_->mutex);
      auto it = cache_->entries.find(a);
      if (it != cache_->entries.end()) return *it->second;
    }
    auto idx = subset_elements(a);
    auto computed = std::make_shared<const Module>(cokernel_class(ambient_rank(), forced_.hconcat(matrix_.select_columns(idx))));
    std::unique_lock lock(cache_->mutex);
    // a concurrent insert of the same key carries an identical value
    auto [it, inserted] = cache_->entries.try_emplace(a, std::move(computed));
    return *it->second;
  }

  const ModuleClass<R>& class_of(Subset a) const { return module_of(a).module_class; }
  const TorsionPresentation<R>& presentation_of(Subset a) const { return module_of(a).presentation; }
  ModuleClass<R> torsion_of(Subset a) const { return class_of(a).torsion_part(); }

  /// Rank of A in the generic matroid: the drop in free rank from M(∅).
  std::size_t generic_rank(Subset a) const { return base_free_rank_ - class_of(a).free_rank; }
  std::size_t rank() const { return generic_rank(ground()); }
  bool is_independent(Subset a) const { return generic_rank(a) == subset_size(a); }

  /// Independent sets by increasing size; supersets of dependent sets are
  /// never tested.
  std::vector<Subset> independents() const {
    std::vector<Subset> out{0};
    std::vector<Subset> layer{0};
    while (!layer.empty()) {
      std::vector<Subset> next;
      for (Subset a : layer) {
        // extend only by elements above the current maximum, so each set is generated once
        std::size_t start = a ? static_cast<std::size_t>(std::bit_width(a)) : 0;
        for (std::size_t i = start; i < size(); ++i) {
          Subset b = with(a, i);
          bool all_faces = true;
          for (auto j : subset_elements(a)) {
            Subset face = without(b, j);
            if (!std::binary_search(layer.begin(), layer.end(), face)) {
              all_faces = false;
              break;
            }
          }
          if (all_faces && is_independent(b)) next.push_back(b);
        }
      }
      std::sort(next.begin(), next.end());
      out.insert(out.end(), next.begin(), next.end());
      layer = std::move(next);
    }
    return out;
  }

  ElementKind element_kind(std::size_t i) const {
    check_index(i);
    if (generic_rank(with(0, i)) == 0) return ElementKind::loop;
    if (generic_rank(without(ground(), i)) + 1 == rank()) return ElementKind::coloop;
    return ElementKind::ordinary;
  }

  /// M \ i: column i dropped.
  RealizedMatroid deleted(std::size_t i) const {
    check_index(i);
    std::vector<std::size_t> keep;
    std::vector<std::size_t> labels;
    for (std::size_t j = 0; j < size(); ++j)
      if (j != i) {
        keep.push_back(j);
        labels.push_back(labels_[j]);
      }
    return RealizedMatroid(matrix_.select_columns(keep), forced_, std::move(labels), max_ground_);
  }

  /// M / i: column i forced into every quotient, so (M/i)(A) = M(A ∪ {i}).
  RealizedMatroid contracted(std::size_t i) const {
    check_index(i);
    std::vector<std::size_t> keep;
    std::vector<std::size_t> labels;
    for (std::size_t j = 0; j < size(); ++j)
      if (j != i) {
        keep.push_back(j);
        labels.push_back(labels_[j]);
      }
    std::size_t one[] = {i};
    return RealizedMatroid(matrix_.select_columns(keep), forced_.hconcat(matrix_.select_columns(one)), std::move(labels),
                           max_ground_);
  }

  /// M'(A) = M(∅) / (tor(∅) + ψ[A]).
  RealizedMatroid quotient_by_empty_torsion() const {
    const auto& p = presentation_of(0);
    return RealizedMatroid(matrix_, forced_.hconcat(p.generators), labels_, max_ground_);
  }

  bool empty_is_torsion_free() const { return class_of(0).is_torsion_free(); }
  bool full_is_zero() const { return class_of(ground()).is_zero(); }

  /// Checks the one-step quotient axiom at (A, b, c) by two independent
  /// routes: each class is recomputed from a reversed column order, and
  /// from the explicit quotient of the presented M(A) by the images of ψ(b)
  /// and ψ(c).
  AxiomReport<R> axiom_consistency_check(Subset a, std::size_t b, std::size_t c) const {
    check_index(b);
    check_index(c);
    if (contains(a, b) || contains(a, c)) throw invalid_input("b and c must lie outside A");
    AxiomReport<R> rep;
    rep.base = class_of(a);
    rep.with_b = class_of(with(a, b));
    rep.with_c = class_of(with(a, c));
    rep.with_bc = class_of(with(with(a, b), c));

    auto fail = [&](const std::string& why) {
      rep.pass = false;
      rep.detail += (rep.detail.empty() ? "" : "; ") + why;
    };

    auto reversed_class = [&](Subset s) {
      auto idx = subset_elements(s);
      std::vector<std::size_t> rev(idx.rbegin(), idx.rend());
      Matrix<R> cols = matrix_.select_columns(rev);
      std::vector<std::size_t> frev;
      for (std::size_t k = forced_.cols(); k-- > 0;) frev.push_back(k);
      return cokernel_class(ambient_rank(), cols.hconcat(forced_.select_columns(frev))).module_class;
    };
    for (Subset s : {a, with(a, b), with(a, c), with(with(a, b), c)})
      if (reversed_class(s) != class_of(s)) fail("column order changes the class of " + subset_to_string(s, labels_));

    const auto& pa = presentation_of(a);
    auto image = [&](std::size_t e) { return module_coordinates(pa, matrix_.column(e)); };
    auto quotient = [&](std::vector<std::vector<QuadInt<R>>> extra) {
      const std::size_t m = pa.chain.size(), f = pa.free_coordinates.rows();
      Matrix<R> rel(m + f, m + extra.size());
      for (std::size_t k = 0; k < m; ++k) rel(k, k) = pa.chain[k];
      for (std::size_t j = 0; j < extra.size(); ++j)
        for (std::size_t k = 0; k < m + f; ++k) rel(k, m + j) = extra[j][k];
      return cokernel_class(m + f, rel).module_class;
    };
    if (quotient({image(b)}) != rep.with_b) fail("M(A ∪ b) is not M(A)/(x)");
    if (quotient({image(c)}) != rep.with_c) fail("M(A ∪ c) is not M(A)/(y)");
    if (quotient({image(b), image(c)}) != rep.with_bc) fail("M(A ∪ bc) is not M(A)/(x, y)");
    return rep;
  }

 private:
  // coordinates of v in M(A) ≅ ⊕ R/(d_k) ⊕ R^f, torsion part unreduced
  static std::vector<QuadInt<R>> module_coordinates(const TorsionPresentation<R>& p, std::span<const QuadInt<R>> v) {
    std::vector<QuadInt<R>> out;
    for (std::size_t k = 0; k < p.coordinates.rows(); ++k) {
      QuadInt<R> s;
      for (std::size_t i = 0; i < p.ambient_rank; ++i) s += p.coordinates(k, i) * v[i];
      out.push_back(std::move(s));
    }
    for (std::size_t k = 0; k < p.free_coordinates.rows(); ++k) {
      QuadInt<R> s;
      for (std::size_t i = 0; i < p.ambient_rank; ++i) s += p.free_coordinates(k, i) * v[i];
      out.push_back(std::move(s));
    }
    return out;
  }

  void check_index(std::size_t i) const {
    if (i >= size()) throw std::out_of_range("element " + std::to_string(i) + " outside a ground set of size " + std::to_string(size()));
  }

  struct Cache {
    std::shared_mutex mutex;
    std::unordered_map<Subset, std::shared_ptr<const Module>> entries;
  };

  Matrix<R> matrix_;
  Matrix<R> forced_;
  std::vector<std::size_t> labels_;
  std::size_t max_ground_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
  std::size_t base_free_rank_ = 0;
};

/// Matroid realized by the columns of matrix in R^d (torsion-free M(∅)).
template <SupportedRing R>
RealizedMatroid<R> realize(const Matrix<R>& matrix, std::size_t max_ground = default_max_ground) {
  return RealizedMatroid<R>(matrix, Matrix<R>(matrix.rows(), 0), {}, max_ground);
}

/// Matroid with M(∅) = R^d ⊕ R/(t_1) ⊕ ... ⊕ R/(t_k): the last k rows of
/// matrix are the coordinates in the torsion summands.
template <SupportedRing R>
RealizedMatroid<R> realize_with_torsion(const Matrix<R>& matrix, std::span<const QuadInt<R>> empty_torsion,
                                        std::size_t max_ground = default_max_ground) {
  const std::size_t k = empty_torsion.size();
  if (matrix.rows() < k) throw invalid_input("matrix has fewer rows than torsion summands at the empty set");
  if (matrix.rows() == k) throw invalid_input("realization needs a nonzero free ambient rank");
  Matrix<R> forced(matrix.rows(), k);
  for (std::size_t j = 0; j < k; ++j) {
    if (empty_torsion[j].is_zero()) throw invalid_input("torsion summand R/(0) is not torsion");
    forced(matrix.rows() - k + j, j) = empty_torsion[j];
  }
  return RealizedMatroid<R>(matrix, std::move(forced), {}, max_ground);
}

}  // namespace gtpoly
