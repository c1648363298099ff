#include "confsphere/hopf.hpp"

#include <array>
#include <map>

namespace confsphere {

std::vector<TripleTerm> iterated_coproduct(const CoalgebraSpec& spec, int class_index) {
    std::map<std::array<int, 3>, long> acc;
    for (const auto& t : spec.coproduct(class_index)) {
        if (t.left == kUnit) {
            acc[{kUnit, kUnit, t.right}] += t.coeff;
            continue;
        }
        for (const auto& s : spec.coproduct(t.left))
            acc[{s.left, s.right, t.right}] += t.coeff * s.coeff;
    }
    std::vector<TripleTerm> out;
    for (const auto& [k, c] : acc)
        if (c != 0)
            out.push_back({c, k[0], k[1], k[2]});
    return out;
}

AlgebraVector Antipode::of_factor(int factor) {
    if (factor == kUnit)
        return alg_.vec(alg_.unit());
    return of_class(factor);
}

AlgebraVector Antipode::compute(int class_index) {
    const CoalgebraSpec& spec = alg_.spec();
    const LabelClass& c = spec.cls(class_index);

    if (c.degree == 0) {
        if (!alg_.localized())
            throw UnsupportedError("antipode of the grouplike " + c.id +
                                   " needs the group-completed algebra");
        Monomial m = alg_.unit();
        m.grouplike[(std::size_t)c.component] = -1;
        return alg_.vec(m);
    }

    // chi(x) * U = -sum over proper terms chi(l) * r, with U the counit
    // partner of x (the unit, or the component class of x).
    int partner = spec.counit_partner(class_index);
    AlgebraVector rhs;
    bool leading_seen = false;
    for (const auto& t : spec.coproduct(class_index)) {
        if (t.left == class_index && t.right == partner) {
            if (t.coeff != 1 || leading_seen)
                throw UnsupportedError("class " + c.id +
                                       " has a malformed counit term; validate the spec");
            leading_seen = true;
            continue;
        }
        AlgebraVector chi_l = of_factor(t.left);
        AlgebraVector r =
            t.right == kUnit ? alg_.vec(alg_.unit()) : alg_.vec(alg_.from_class(t.right));
        add_scaled(rhs, alg_.multiply(chi_l, r), Scalar::from_long(t.coeff, alg_.field()));
    }
    if (!leading_seen)
        throw UnsupportedError("class " + c.id + " lacks its counit term (x,unit)");

    AlgebraVector inv_partner;
    if (partner == kUnit) {
        inv_partner = alg_.vec(alg_.unit());
    } else {
        if (!alg_.localized())
            throw UnsupportedError("antipode of " + c.id + " needs the group-completed algebra");
        Monomial m = alg_.unit();
        m.grouplike[(std::size_t)spec.cls(partner).component] = -1;
        inv_partner = alg_.vec(m);
    }
    AlgebraVector result;
    add_scaled(result, alg_.multiply(rhs, inv_partner), -Scalar::one(alg_.field()));
    return result;
}

const AlgebraVector& Antipode::of_class(int class_index) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto it = memo_.find(class_index);
    if (it != memo_.end())
        return it->second;
    if (!in_progress_.insert(class_index).second)
        throw UnsupportedError("antipode recursion cycles through " +
                               alg_.spec().cls(class_index).id + "; validate the spec");
    AlgebraVector result = compute(class_index);
    in_progress_.erase(class_index);
    return memo_.emplace(class_index, std::move(result)).first->second;
}

}  // namespace confsphere
