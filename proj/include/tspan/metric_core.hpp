#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tspan/rat.hpp"

namespace tspan {

/// Rational coordinate tuple, measured with the l-infinity metric.
using PointN = std::vector<Rat>;

/// Labeled finite metric space. Only constructible through validate_metric,
/// so every instance satisfies the metric axioms with distinct points.
class FiniteMetric {
public:
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  const Rat& operator()(std::size_t i, std::size_t j) const { return dist_[i * labels_.size() + j]; }
  const Rat& at(std::string_view a, std::string_view b) const;

  std::optional<std::size_t> index_of(std::string_view label) const;
  /// Throws Error(UnknownLabel).
  std::size_t require_index(std::string_view label) const;

  std::vector<std::vector<Rat>> matrix() const;

  friend bool operator==(const FiniteMetric&, const FiniteMetric&) = default;

private:
  FiniteMetric(std::vector<std::string> labels, std::vector<Rat> dist)
      : labels_(std::move(labels)), dist_(std::move(dist)) {}

  friend FiniteMetric validate_metric(std::vector<std::string> labels,
                                      const std::vector<std::vector<Rat>>& matrix);

  std::vector<std::string> labels_;
  std::vector<Rat> dist_;  // row-major
};

/// Checks the metric axioms. Failures throw Error with the witness indices:
/// AsymmetricMatrix(i,j), NegativeDistance(i,j), ZeroOffDiagonal(i,j),
/// TriangleViolation(i,j,k) meaning d(i,k) > d(i,j) + d(j,k).
FiniteMetric validate_metric(std::vector<std::string> labels, const std::vector<std::vector<Rat>>& matrix);

Rat linf_distance(std::span<const Rat> u, std::span<const Rat> v);

/// The metric induced by l-infinity on a point list.
FiniteMetric linf_metric(std::vector<std::string> labels, std::span<const PointN> points);

/// Glues two metrics along their common labels: cross distances are
/// min over shared u of d1(x,u) + d2(u,y). Result labels are M1's followed by
/// M2's labels that M1 lacks.
FiniteMetric glue_metrics(const FiniteMetric& m1, const FiniteMetric& m2);

/// A label z with d(x,z) = d(z,y) = d(x,y)/2, first in label order, if any.
std::optional<std::string> has_midpoint(const FiniteMetric& m, std::string_view x, std::string_view y);

}  // namespace tspan
