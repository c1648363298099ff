#ifndef CONFSPHERE_DYER_LASHOF_HPP
#define CONFSPHERE_DYER_LASHOF_HPP

#include "confsphere/field.hpp"
#include "confsphere/grading.hpp"
#include "confsphere/lie.hpp"

#include <string>
#include <vector>

namespace confsphere {

// One block beta^eps Q_i of an operation string, 0 < i < n.
struct OpBlock {
    bool bockstein = false;
    int index = 0;
};

// Blocks are stored outermost first; the empty string is the identity.
struct OpString {
    std::vector<OpBlock> blocks;
    bool empty() const { return blocks.empty(); }
    std::string str() const;
};

struct DLGenerator {
    OpString ops;
    int base = 0;  // index into LieBasis::gens()
    int degree = 0;
    Weight component;
    std::string name;
    int weight() const { return component.total(); }
};

// Admissible operation strings on one Lie generator, within bounds.
//
// p = 2: indices weakly monotone with the smallest outermost, no Bocksteins.
// p odd: additionally every Q_i must apply to a class of degree = i (mod 2),
// which encodes the parity rules (innermost index matches the base degree,
// adjacent Q's agree in parity, Q's separated by a beta disagree).
// Characteristic 0 admits only the identity.
std::vector<DLGenerator> enumerate_admissible(const LieGenerator& base, int base_index,
                                              const FieldSpec& field, int n, int max_degree,
                                              int max_weight);

}  // namespace confsphere

#endif
