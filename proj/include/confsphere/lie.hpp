#ifndef CONFSPHERE_LIE_HPP
#define CONFSPHERE_LIE_HPP

#include "confsphere/coalgebra.hpp"
#include "confsphere/field.hpp"
#include "confsphere/grading.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace confsphere {

// Bracket expression: a leaf (label class) or a pair of subtrees.
struct TreeNode;
using Tree = std::shared_ptr<const TreeNode>;

struct TreeNode {
    int leaf = -1;  // class index when a leaf; -1 for internal nodes
    Tree left, right;
};

Tree tree_leaf(int class_index);
Tree tree_pair(Tree left, Tree right);

int tree_weight(const Tree& t);
int tree_degree(const CoalgebraSpec& spec, int n, const Tree& t);
Weight tree_component(const CoalgebraSpec& spec, const Tree& t);
std::string tree_name(const CoalgebraSpec& spec, const Tree& t);

// Element of the shifted tensor envelope: word of class indices -> coefficient.
// The bracket is the graded commutator for the shifted degree |c| + n - 1,
// which satisfies antisymmetry, the graded Jacobi identity, [u,u] = 0 for
// even shifted degree (and in char 2 for all u), and [u,[u,u]] = 0 on the
// nose, so the Lie basis is the span of left-normed bracket values.
using TensorVec = std::map<std::vector<int>, Scalar>;

struct LieGenerator {
    Tree tree;                 // canonical left-normed representative
    std::vector<int> seq;      // its leaf sequence
    int degree = 0;
    Weight component;          // particle counts per component slot
    std::string name;
    TensorVec value;
    int weight() const { return (int)seq.size(); }
};

/// Basis of the free graded Lie algebra on the label classes with bracket of
/// degree n-1, per (degree, weight, component), plus normal-form expansion.
class LieBasis {
public:
    LieBasis(const CoalgebraSpec& spec, int n, const FieldSpec& field, int max_degree,
             int max_weight);

    const std::vector<LieGenerator>& gens() const { return gens_; }
    const CoalgebraSpec& spec() const { return spec_; }
    int n() const { return n_; }
    const FieldSpec& field() const { return field_; }
    int max_degree() const { return max_degree_; }
    int max_weight() const { return max_weight_; }

    TensorVec tree_value(const Tree& t) const;
    TensorVec commutator(const TensorVec& u, const TensorVec& v) const;

    // Expand a bracket expression in the canonical basis: generator index ->
    // coefficient. Throws UnsupportedError("bound overflow...") when a tree
    // exceeds the enumerated bounds.
    std::map<int, Scalar> normal_form(const Tree& t) const;
    std::map<int, Scalar> normal_form(const std::vector<std::pair<Scalar, Tree>>& combo) const;
    std::map<int, Scalar> normal_form_value(const TensorVec& value) const;

private:
    int shifted_degree_mod2(int class_index) const;
    int value_shifted_parity(const TensorVec& v) const;

    CoalgebraSpec spec_;  // owned copy; callers may pass temporaries
    int n_;
    FieldSpec field_;
    int max_degree_;
    int max_weight_;
    std::vector<LieGenerator> gens_;
    // generator indices per leaf multiset (sorted class-index vector)
    std::map<std::vector<int>, std::vector<int>> by_multiset_;
};

}  // namespace confsphere

#endif
