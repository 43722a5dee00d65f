#pragma once

#include "nilfit/linalg.hpp"

namespace nilfit {

// Finite reduced set of points in P^(k-1): no zero vectors, no repeats
// after normalization, full coordinate rank k (the points do not all lie
// in one hyperplane).
struct PointSet {
    Field field = Field::rationals();
    std::size_t k = 0;
    std::vector<Vec> points;  // each normalized, first nonzero entry = 1
    std::vector<int> labels;  // 1-based original indices
    bool affine_chart = false;  // built by embed_affine (last coord is the chart)

    std::size_t size() const { return points.size(); }
};

PointSet make_point_set(const Field& field, std::vector<Vec> raw);

// Projectivizes affine points by appending the coordinate 1.
PointSet embed_affine(const Field& field, const std::vector<Vec>& affine_points);

struct GenericityReport {
    bool generic = true;
    std::vector<int> witness;  // labels of one dependent (k-1)-subset
};

// (k-2)-genericity: every k-1 of the coordinate vectors are independent.
GenericityReport check_generic(const PointSet& ps);

}  // namespace nilfit
