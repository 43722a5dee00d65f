#include "nilfit/ring.hpp"

#include <algorithm>

namespace nilfit {

Ring::Ring(Field field, std::vector<std::string> vars, MonomialOrder order)
    : field_(field), vars_(std::move(vars)), order_(order) {
    if (vars_.empty() || vars_.size() > kMaxVars)
        throw InputError("ring must have between 1 and " +
                         std::to_string(kMaxVars) + " variables");
    for (std::size_t i = 0; i < vars_.size(); ++i)
        for (std::size_t j = i + 1; j < vars_.size(); ++j)
            if (vars_[i] == vars_[j])
                throw InputError("duplicate variable name '" + vars_[i] + "'");
}

RingPtr Ring::make(Field field, std::vector<std::string> vars,
                   MonomialOrder order) {
    return RingPtr(new Ring(field, std::move(vars), order));
}

int Ring::var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

bool Ring::same_as(const Ring& o) const {
    return this == &o ||
           (field_ == o.field_ && vars_ == o.vars_ && order_ == o.order_);
}

RingPtr Ring::with_order(MonomialOrder ord) const {
    if (ord == order_) return shared_from_this();
    return make(field_, vars_, ord);
}

std::vector<std::string> Ring::standard_var_names(std::size_t k) {
    if (k <= 3) {
        static const std::vector<std::string> xyz = {"x", "y", "z"};
        return {xyz.begin(), xyz.begin() + k};
    }
    std::vector<std::string> names;
    names.reserve(k);
    for (std::size_t i = 1; i <= k; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

void require_same_ring(const Ring& a, const Ring& b) {
    if (!a.same_as(b)) throw InputError("polynomial ring contexts differ");
}

}  // namespace nilfit
