#include "nilfit/points.hpp"

#include "nilfit/combinatorics.hpp"

namespace nilfit {

PointSet make_point_set(const Field& field, std::vector<Vec> raw) {
    if (raw.empty()) throw InputError("empty point set");
    const std::size_t k = raw[0].size();
    if (k < 2) throw InputError("points need at least 2 homogeneous coordinates");
    if (k > kMaxVars - 1)
        throw InputError("ambient dimension too large (k <= " +
                         std::to_string(kMaxVars - 1) + ")");

    PointSet ps;
    ps.field = field;
    ps.k = k;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i].size() != k)
            throw InputError("point " + std::to_string(i + 1) +
                             " has inconsistent coordinate count");
        for (const auto& c : raw[i])
            if (c.field() != field)
                throw InputError("coordinate field mismatch");
        bool zero = true;
        for (const auto& c : raw[i]) zero = zero && c.is_zero();
        if (zero)
            throw InputError("point " + std::to_string(i + 1) +
                             " is the zero vector");
        Vec p = normalize_first_nonzero(raw[i]);
        for (std::size_t j = 0; j < ps.points.size(); ++j)
            if (ps.points[j] == p)
                throw InputError("points " + std::to_string(j + 1) + " and " +
                                 std::to_string(i + 1) +
                                 " coincide in projective space");
        ps.points.push_back(std::move(p));
        ps.labels.push_back(static_cast<int>(i + 1));
    }
    if (rank(ps.points) != k)
        throw InputError(
            "degenerate point set: all points lie in a hyperplane (rank < k)");
    return ps;
}

PointSet embed_affine(const Field& field, const std::vector<Vec>& affine_points) {
    if (affine_points.empty()) throw InputError("empty point set");
    std::vector<Vec> raw;
    raw.reserve(affine_points.size());
    const FieldElement one = FieldElement::one(field);
    for (const auto& p : affine_points) {
        Vec q = p;
        q.push_back(one);
        raw.push_back(std::move(q));
    }
    PointSet ps = make_point_set(field, std::move(raw));
    ps.affine_chart = true;
    return ps;
}

GenericityReport check_generic(const PointSet& ps) {
    GenericityReport rep;
    const std::size_t r = ps.k - 1;
    for_each_combination(ps.size(), r, [&](const std::vector<std::size_t>& idx) {
        Mat m;
        m.reserve(r);
        for (std::size_t i : idx) m.push_back(ps.points[i]);
        if (rank(std::move(m)) < r) {
            rep.generic = false;
            for (std::size_t i : idx) rep.witness.push_back(ps.labels[i]);
            return false;
        }
        return true;
    });
    return rep;
}

}  // namespace nilfit
