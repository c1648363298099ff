#ifndef CONFSPHERE_ASSEMBLE_HPP
#define CONFSPHERE_ASSEMBLE_HPP

#include "confsphere/browder.hpp"
#include "confsphere/coalgebra.hpp"
#include "confsphere/free_algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace confsphere {

enum class SpaceKind {
    conf_rn,      // C(R^n, X)
    omega,        // Omega^n Sigma^n X (group completion)
    conf_sphere,  // C(S^n, X)
    sections,     // Gamma(tau_n^+(X))
    maps,         // Lambda^n Sigma^n X
    snaith        // D_k(S^n, X)
};

const char* kind_name(SpaceKind k);
std::optional<SpaceKind> parse_kind(const std::string& s);

struct HomologyOptions {
    int max_degree = 8;
    int max_weight = 8;   // particle-count cap for unlocalized kinds with grouplikes
    int comp_range = 4;   // scan box [-R, R] per component for completed kinds
    std::optional<std::vector<int>> component;  // exact pi_0 filter
    int snaith_weight = 1;
    int jobs = 1;
};

struct HomologyRow {
    int degree = 0;
    std::vector<int> comp;          // pi_0 coordinates; empty for connected X
    std::optional<int> base_weight; // base-component particle count when graded
    std::size_t dim = 0;
    std::vector<std::string> basis;
};

struct HomologyTable {
    SpaceKind kind = SpaceKind::conf_rn;
    unsigned long characteristic = 0;
    std::string spec_name;
    int n = 2;
    bool connected = true;
    bool has_base_classes = false;
    // the enumeration bounds actually used, so suspicious dimension drops
    // near the boundary are visible to the user
    int max_degree = 0;
    int max_weight = 0;  // 0 = not a binding constraint
    std::vector<HomologyRow> rows;

    std::size_t dim_at(int degree, const std::vector<int>& comp = {}) const;
    std::size_t dim_at_weight(int degree, int total_weight) const;
};

// H_i = coker(action)_i + suspended kernel (action)_{i-1}, assembled
// blockwise; conf_rn/omega report plain basis counts.
HomologyTable homology(const CoalgebraSpec& spec, int n, const FieldSpec& field, SpaceKind kind,
                       const HomologyOptions& opt);

struct DiffEntry {
    int degree = 0;
    std::vector<int> comp;
    std::size_t dim_a = 0, dim_b = 0;
};

struct DiffReport {
    std::vector<DiffEntry> entries;
    bool identical() const { return entries.empty(); }
};

// Per-(degree, component) dimension diff; offsets shift the second kind's
// components (Gamma_{k+1} vs Lambda_k alignment).
DiffReport compare_tables(const HomologyTable& a, const HomologyTable& b,
                          const std::vector<int>& offset_b = {});
DiffReport compare(const CoalgebraSpec& spec, int n, const FieldSpec& field, SpaceKind a,
                   SpaceKind b, const HomologyOptions& opt,
                   const std::vector<int>& offset_b = {});

std::string render_component(const HomologyTable& t, const HomologyRow& r);

}  // namespace confsphere

#endif
