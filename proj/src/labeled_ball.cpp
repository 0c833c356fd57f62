#include "cubegrowth/labeled_ball.hpp"

#include <set>

#include "cubegrowth/errors.hpp"

namespace cubegrowth {

std::vector<std::string> LabeledBall::orbit_ids() const {
    std::set<std::string> ids;
    for (const auto& [v, o] : label) ids.insert(o);
    return {ids.begin(), ids.end()};
}

bool LabeledBall::is_star_complete(const std::string& v) const {
    return complex.distance(base, v) <= radius - dim;
}

int LabeledBall::safe_degree(const std::string& orbit) const {
    auto it = lift.find(orbit);
    if (it == lift.end()) throw PreconditionError("unknown orbit '" + orbit + "'");
    return radius - complex.distance(base, it->second);
}

std::vector<long> LabeledBall::sphere_sizes() const {
    std::vector<long> counts(static_cast<size_t>(radius) + 1, 0);
    for (int d : complex.distances_from(base))
        if (d >= 0 && d <= radius) ++counts[static_cast<size_t>(d)];
    return counts;
}

} // namespace cubegrowth
