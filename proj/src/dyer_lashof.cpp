#include "confsphere/dyer_lashof.hpp"

#include <limits>

namespace confsphere {

std::string OpString::str() const {
    std::string s;
    for (const auto& b : blocks) {
        if (!s.empty())
            s += ' ';
        s += (b.bockstein ? "bQ" : "Q") + std::to_string(b.index);
    }
    return s;
}

namespace {

struct Enumerator {
    const LieGenerator& base;
    int base_index;
    long p;  // characteristic, >= 2 here
    int n;
    int max_degree;
    int max_weight;
    std::vector<DLGenerator>* out;

    void emit(const std::vector<OpBlock>& inner_first, int degree, const Weight& comp) {
        DLGenerator g;
        g.ops.blocks.assign(inner_first.rbegin(), inner_first.rend());
        g.base = base_index;
        g.degree = degree;
        g.component = comp;
        g.name = g.ops.empty() ? base.name : g.ops.str() + " " + base.name;
        out->push_back(std::move(g));
    }

    // Extend outward; outer_cap keeps the index sequence weakly monotone with
    // the smallest index outermost.
    void extend(std::vector<OpBlock>& inner_first, int degree, const Weight& comp,
                int outer_cap) {
        for (int i = 1; i <= std::min(n - 1, outer_cap); ++i) {
            if (p != 2 && ((degree - i) % 2 != 0))
                continue;  // Q_i is only defined when i matches the degree parity
            for (int eps = 0; eps <= (p == 2 ? 0 : 1); ++eps) {
                long nd = p * (long)degree + (long)i * (p - 1) - eps;
                if (nd > max_degree)
                    continue;
                Weight nc = comp.scaled((int)p);
                if (nc.total() > max_weight)
                    continue;
                inner_first.push_back({eps == 1, i});
                emit(inner_first, (int)nd, nc);
                extend(inner_first, (int)nd, nc, i);
                inner_first.pop_back();
            }
        }
    }
};

}  // namespace

std::vector<DLGenerator> enumerate_admissible(const LieGenerator& base, int base_index,
                                              const FieldSpec& field, int n, int max_degree,
                                              int max_weight) {
    std::vector<DLGenerator> out;
    std::vector<OpBlock> cur;
    Enumerator e{base, base_index, (long)field.characteristic(), n, max_degree, max_weight, &out};
    e.emit(cur, base.degree, base.component);  // the identity string
    if (field.characteristic() == 0)
        return out;
    if (base.degree > max_degree || base.component.total() > max_weight)
        return out;  // base itself out of range; callers filter anyway
    e.extend(cur, base.degree, base.component, std::numeric_limits<int>::max());
    return out;
}

}  // namespace confsphere
