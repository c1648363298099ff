#ifndef CONFSPHERE_HOPF_HPP
#define CONFSPHERE_HOPF_HPP

#include "confsphere/coalgebra.hpp"
#include "confsphere/free_algebra.hpp"

#include <map>
#include <mutex>
#include <set>
#include <vector>

namespace confsphere {

// One term of (Delta (x) id) Delta(x); factors are class indices or kUnit.
struct TripleTerm {
    long coeff = 0;
    int x1 = kUnit, x2 = kUnit, x3 = kUnit;
};

// Computed by composing the stored binary coproduct; coassociativity is a
// validated input invariant, so expanding either slot agrees.
std::vector<TripleTerm> iterated_coproduct(const CoalgebraSpec& spec, int class_index);

/// The Hopf conjugation chi of H(Omega^n Sigma^n X) on the image of H(X),
/// solved from m(chi (x) id) Delta = unit . counit by degree recursion:
/// chi(a) = a^-1 on grouplikes, and for positive-degree x the proper
/// coproduct terms of lower degree determine chi(x).
class Antipode {
public:
    explicit Antipode(const FreeAlgebra& alg) : alg_(alg) {}

    const FreeAlgebra& algebra() const { return alg_; }
    const AlgebraVector& of_class(int class_index);
    // chi of a coproduct factor: kUnit -> 1.
    AlgebraVector of_factor(int factor);

private:
    AlgebraVector compute(int class_index);

    const FreeAlgebra& alg_;
    std::map<int, AlgebraVector> memo_;
    std::set<int> in_progress_;
    std::recursive_mutex mu_;
};

}  // namespace confsphere

#endif
