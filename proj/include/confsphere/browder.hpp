#ifndef CONFSPHERE_BROWDER_HPP
#define CONFSPHERE_BROWDER_HPP

#include "confsphere/free_algebra.hpp"
#include "confsphere/hopf.hpp"
#include "confsphere/matrix.hpp"

#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace confsphere {

// The (twisted) Browder action restricted to one (degree, component) block:
// columns indexed by pairs (label class, source monomial), rows by target
// monomials.
struct ActionBlock {
    BlockKey target;
    std::vector<Monomial> target_basis;
    std::vector<std::pair<int, Monomial>> columns;
    ExactMatrix matrix;
};

/// The Browder action lambda_* and the twisted Browder action k_* as explicit
/// linear maps. Brackets are evaluated by the rewriting system: normal form
/// on Lie generators, the Leibniz rule across products, zero on non-top or
/// Bockstein-topped operation strings, ad_z^p on top strings, and
/// [x,a^-1] = -[x,a]a^-2 on grouplike inverses. For n = 1 the bracket is the
/// graded commutator of the word algebra.
class BrowderAction {
public:
    explicit BrowderAction(const FreeAlgebra& alg);

    const FreeAlgebra& algebra() const { return alg_; }
    Antipode& antipode() const { return chi_; }

    AlgebraVector act(int class_index, const AlgebraVector& v) const;
    AlgebraVector act_twisted(int class_index, const AlgebraVector& v) const;

    // General bracket of algebra elements (also drives ad_z^p internally).
    AlgebraVector bracket(const AlgebraVector& u, const AlgebraVector& v) const;

    ActionBlock action_matrix(const BlockKey& target, bool twisted) const;

private:
    // A single factor occurrence: a positive-degree generator or a grouplike
    // class, with exponent +1 or -1 (inverses only for grouplikes).
    struct Factor {
        bool grouplike = false;
        int id = 0;  // generator index, or component index when grouplike
        int sgn = 1;
    };

    std::vector<Factor> factors_of(const Monomial& m) const;
    int factor_degree(const Factor& f) const;
    Monomial factor_monomial(const Factor& f) const;
    Monomial strip_first(const Monomial& m, const Factor& f) const;

    AlgebraVector bracket_mono(const Monomial& a, const Monomial& b) const;
    AlgebraVector bracket_left_factor(const Factor& f, const Monomial& b) const;
    AlgebraVector bracket_factors(const Factor& a, const Factor& b) const;
    // Bracket of two bare generators/grouplikes (exponent +1), memoized.
    const AlgebraVector& gen_bracket(const Factor& a, const Factor& b) const;
    AlgebraVector gen_bracket_compute(const Factor& a, const Factor& b) const;

    TensorVec lie_value_of(const Factor& f) const;
    AlgebraVector lie_normal_to_vector(const TensorVec& value) const;
    // [x, m] for a label class, splitting off the grouplike exponents so the
    // positive part is computed once per class (blocks of one degree share it
    // across the whole component lattice).
    AlgebraVector act_class_mono(int class_index, const Monomial& m) const;

    const FreeAlgebra& alg_;
    mutable Antipode chi_;
    mutable std::map<std::array<int, 4>, AlgebraVector> gen_memo_;
    mutable std::map<std::pair<int, Monomial>, AlgebraVector> act_memo_;
    mutable std::mutex memo_mu_;
    std::map<std::pair<int, std::vector<std::pair<bool, int>>>, int> gen_lookup_;
};

}  // namespace confsphere

#endif
