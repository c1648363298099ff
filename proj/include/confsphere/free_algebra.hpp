#ifndef CONFSPHERE_FREE_ALGEBRA_HPP
#define CONFSPHERE_FREE_ALGEBRA_HPP

#include "confsphere/coalgebra.hpp"
#include "confsphere/dyer_lashof.hpp"
#include "confsphere/field.hpp"
#include "confsphere/grading.hpp"
#include "confsphere/lie.hpp"

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace confsphere {

// Commutative monomial (n >= 2): sorted (generator, exponent) pairs over the
// positive-degree generators plus one exponent per grouplike class; for
// n = 1 a word in the label-class alphabet instead.
struct Monomial {
    std::vector<std::pair<int, int>> factors;
    std::vector<int> grouplike;
    std::vector<int> word;

    bool is_unit() const { return factors.empty() && word.empty() && all_grouplike_zero(); }
    bool all_grouplike_zero() const {
        for (int e : grouplike)
            if (e != 0)
                return false;
        return true;
    }
    auto operator<=>(const Monomial&) const = default;
};

using AlgebraVector = std::map<Monomial, Scalar>;

void add_term(AlgebraVector& v, const Monomial& m, const Scalar& c);
void add_scaled(AlgebraVector& v, const AlgebraVector& w, const Scalar& c);

// One (degree, component) block. comp runs over the reduced components (the
// pi_0 coordinates); base is the base-component particle count, aggregated
// over all values when absent (the twisted action does not preserve it).
struct BlockKey {
    int degree = 0;
    std::vector<int> comp;
    std::optional<int> base;

    auto operator<=>(const BlockKey&) const = default;
};

/// H(C(R^n,X)) as the free graded-commutative algebra on the admissible
/// Dyer-Lashof generators (n >= 2) or the tensor algebra on the label
/// classes (n = 1); localized = group completion (grouplike exponents in Z).
class FreeAlgebra {
public:
    FreeAlgebra(const CoalgebraSpec& spec, int n, const FieldSpec& field, int max_degree,
                int max_weight, bool localized);

    const CoalgebraSpec& spec() const { return spec_; }
    int n() const { return n_; }
    const FieldSpec& field() const { return field_; }
    bool localized() const { return localized_; }
    int max_degree() const { return max_degree_; }
    int max_weight() const { return max_weight_; }
    const LieBasis& lie() const { return *lie_; }

    const std::vector<DLGenerator>& generators() const { return gens_; }
    bool gen_exterior(int g) const;  // odd degree and char != 2
    int lie_gen_to_generator(int lie_index) const;  // -1 when absent (grouplikes)

    int degree(const Monomial& m) const;
    Weight weight_of(const Monomial& m) const;
    std::string name(const Monomial& m) const;

    Monomial unit() const;
    Monomial from_generator(int gen_index) const;
    // The weight-1 monomial of a label class (grouplike exponent or
    // weight-one generator / one-letter word).
    Monomial from_class(int class_index) const;
    AlgebraVector vec(const Monomial& m) const;

    AlgebraVector multiply(const AlgebraVector& u, const AlgebraVector& v) const;
    AlgebraVector multiply_mono(const Monomial& a, const Monomial& b) const;

    // Complete, duplicate-free, deterministic monomial list of one block.
    const std::vector<Monomial>& block_basis(const BlockKey& key) const;

    BlockKey block_of(const Monomial& m, bool with_base) const;

private:
    void enumerate_block(const BlockKey& key, std::vector<Monomial>& out) const;

    CoalgebraSpec spec_;  // owned copy; callers may pass temporaries
    int n_;
    FieldSpec field_;
    int max_degree_;
    int max_weight_;
    bool localized_;
    std::unique_ptr<LieBasis> lie_;
    std::vector<DLGenerator> gens_;
    std::vector<int> lie_to_gen_;
    std::vector<int> class_to_gen_;
    mutable std::map<BlockKey, std::vector<Monomial>> block_cache_;
};

// Group completion: passage to H(Omega^n Sigma^n X) by inverting the
// grouplike component classes; the identity for connected X.
FreeAlgebra group_complete(const CoalgebraSpec& spec, int n, const FieldSpec& field,
                           int max_degree, int max_weight);

}  // namespace confsphere

#endif
