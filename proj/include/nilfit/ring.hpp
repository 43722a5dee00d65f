#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nilfit/field.hpp"
#include "nilfit/monomial.hpp"

namespace nilfit {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Polynomial ring context: ground field, named variables, active monomial
// order. Immutable; shared by every polynomial living in it.
class Ring : public std::enable_shared_from_this<Ring> {
public:
    static RingPtr make(Field field, std::vector<std::string> vars,
                        MonomialOrder order = MonomialOrder::grevlex());

    const Field& field() const { return field_; }
    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& var_names() const { return vars_; }
    const std::string& var_name(std::size_t i) const { return vars_[i]; }
    // -1 when the name is unknown.
    int var_index(const std::string& name) const;
    const MonomialOrder& order() const { return order_; }

    // Same field, same variables, same order.
    bool same_as(const Ring& o) const;
    RingPtr with_order(MonomialOrder ord) const;

    // x,y,z for k <= 3; x1..xk otherwise.
    static std::vector<std::string> standard_var_names(std::size_t k);

private:
    Ring(Field field, std::vector<std::string> vars, MonomialOrder order);

    Field field_;
    std::vector<std::string> vars_;
    MonomialOrder order_;
};

void require_same_ring(const Ring& a, const Ring& b);

}  // namespace nilfit
