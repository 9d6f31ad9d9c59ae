#include "tspan/metric_core.hpp"

#include <set>

#include "tspan/error.hpp"

namespace tspan {

const Rat& FiniteMetric::at(std::string_view a, std::string_view b) const {
  return (*this)(require_index(a), require_index(b));
}

std::optional<std::size_t> FiniteMetric::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

std::size_t FiniteMetric::require_index(std::string_view label) const {
  if (auto i = index_of(label)) return *i;
  throw Error(ErrorCode::UnknownLabel, "no label '" + std::string(label) + "'");
}

std::vector<std::vector<Rat>> FiniteMetric::matrix() const {
  const std::size_t n = size();
  std::vector<std::vector<Rat>> out(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = (*this)(i, j);
  return out;
}

FiniteMetric validate_metric(std::vector<std::string> labels, const std::vector<std::vector<Rat>>& matrix) {
  const std::size_t n = labels.size();
  if (matrix.size() != n) {
    throw Error(ErrorCode::ShapeMismatch, "matrix has " + std::to_string(matrix.size()) + " rows for " +
                                              std::to_string(n) + " labels");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) throw Error(ErrorCode::ShapeMismatch, "row " + std::to_string(i) + " has wrong length", {i});
  }
  std::set<std::string> seen;
  for (std::size_t i = 0; i < n; ++i) {
    if (!seen.insert(labels[i]).second) throw Error(ErrorCode::DuplicateLabel, "label '" + labels[i] + "' repeats", {i});
  }
  auto pair_name = [&](std::size_t i, std::size_t j) { return "(" + labels[i] + "," + labels[j] + ")"; };
  for (std::size_t i = 0; i < n; ++i) {
    if (!matrix[i][i].is_zero()) throw Error(ErrorCode::NonzeroDiagonal, "d" + pair_name(i, i) + " != 0", {i, i});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (matrix[i][j] != matrix[j][i]) throw Error(ErrorCode::AsymmetricMatrix, "d" + pair_name(i, j), {i, j});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (matrix[i][j].sign() < 0) throw Error(ErrorCode::NegativeDistance, "d" + pair_name(i, j), {i, j});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (matrix[i][j].is_zero()) throw Error(ErrorCode::ZeroOffDiagonal, "d" + pair_name(i, j) + " = 0", {i, j});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        if (matrix[i][k] > matrix[i][j] + matrix[j][k]) {
          throw Error(ErrorCode::TriangleViolation,
                      "d(" + labels[i] + "," + labels[k] + ") > d(" + labels[i] + "," + labels[j] + ") + d(" +
                          labels[j] + "," + labels[k] + ")",
                      {i, j, k});
        }
      }
    }
  }
  std::vector<Rat> flat;
  flat.reserve(n * n);
  for (const auto& row : matrix) flat.insert(flat.end(), row.begin(), row.end());
  return FiniteMetric(std::move(labels), std::move(flat));
}

Rat linf_distance(std::span<const Rat> u, std::span<const Rat> v) {
  if (u.size() != v.size() || u.empty()) {
    throw Error(ErrorCode::DimensionMismatch,
                "dimensions " + std::to_string(u.size()) + " and " + std::to_string(v.size()));
  }
  Rat best;
  for (std::size_t i = 0; i < u.size(); ++i) {
    Rat d = (u[i] - v[i]).abs();
    if (d > best) best = std::move(d);
  }
  return best;
}

FiniteMetric linf_metric(std::vector<std::string> labels, std::span<const PointN> points) {
  if (labels.size() != points.size()) throw Error(ErrorCode::ShapeMismatch, "labels and points differ in count");
  const std::size_t n = points.size();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = linf_distance(points[i], points[j]);
  return validate_metric(std::move(labels), m);
}

FiniteMetric glue_metrics(const FiniteMetric& m1, const FiniteMetric& m2) {
  std::vector<std::size_t> overlap1, overlap2;  // matching positions in m1 and m2
  std::vector<std::size_t> only2;
  for (std::size_t j = 0; j < m2.size(); ++j) {
    if (auto i = m1.index_of(m2.label(j))) {
      overlap1.push_back(*i);
      overlap2.push_back(j);
    } else {
      only2.push_back(j);
    }
  }
  if (overlap1.empty()) throw Error(ErrorCode::DisjointLabelSets, "metrics share no label");
  for (std::size_t a = 0; a < overlap1.size(); ++a) {
    for (std::size_t b = a + 1; b < overlap1.size(); ++b) {
      if (m1(overlap1[a], overlap1[b]) != m2(overlap2[a], overlap2[b])) {
        throw Error(ErrorCode::OverlapDisagreement,
                    "d(" + m1.label(overlap1[a]) + "," + m1.label(overlap1[b]) + ") differs",
                    {overlap1[a], overlap1[b]});
      }
    }
  }

  std::vector<std::string> labels = m1.labels();
  for (std::size_t j : only2) labels.push_back(m2.label(j));
  const std::size_t n1 = m1.size();
  const std::size_t n = labels.size();
  std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j) d[i][j] = m1(i, j);
  for (std::size_t a = 0; a < only2.size(); ++a)
    for (std::size_t b = 0; b < only2.size(); ++b) d[n1 + a][n1 + b] = m2(only2[a], only2[b]);
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t a = 0; a < only2.size(); ++a) {
      std::optional<Rat> best;
      for (std::size_t k = 0; k < overlap1.size(); ++k) {
        Rat via = m1(i, overlap1[k]) + m2(overlap2[k], only2[a]);
        if (!best || via < *best) best = std::move(via);
      }
      d[i][n1 + a] = *best;
      d[n1 + a][i] = *best;
    }
  }
  return validate_metric(std::move(labels), d);
}

std::optional<std::string> has_midpoint(const FiniteMetric& m, std::string_view x, std::string_view y) {
  const std::size_t i = m.require_index(x);
  const std::size_t j = m.require_index(y);
  const Rat half = m(i, j) / Rat(2);
  for (std::size_t z = 0; z < m.size(); ++z) {
    if (m(i, z) == half && m(z, j) == half) return m.label(z);
  }
  return std::nullopt;
}

}  // namespace tspan
