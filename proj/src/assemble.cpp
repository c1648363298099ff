#include "confsphere/assemble.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

namespace confsphere {

const char* kind_name(SpaceKind k) {
    switch (k) {
        case SpaceKind::conf_rn: return "rn";
        case SpaceKind::omega: return "omega";
        case SpaceKind::conf_sphere: return "sphere";
        case SpaceKind::sections: return "sections";
        case SpaceKind::maps: return "maps";
        case SpaceKind::snaith: return "snaith";
    }
    return "?";
}

std::optional<SpaceKind> parse_kind(const std::string& s) {
    if (s == "rn" || s == "conf_rn") return SpaceKind::conf_rn;
    if (s == "omega") return SpaceKind::omega;
    if (s == "sphere" || s == "conf_sphere") return SpaceKind::conf_sphere;
    if (s == "sections") return SpaceKind::sections;
    if (s == "maps") return SpaceKind::maps;
    if (s == "snaith") return SpaceKind::snaith;
    return std::nullopt;
}

std::size_t HomologyTable::dim_at(int degree, const std::vector<int>& comp) const {
    std::size_t d = 0;
    for (const auto& r : rows)
        if (r.degree == degree && (comp.empty() || r.comp == comp))
            d += r.dim;
    return d;
}

std::size_t HomologyTable::dim_at_weight(int degree, int total_weight) const {
    std::size_t d = 0;
    for (const auto& r : rows) {
        int w = r.base_weight.value_or(0);
        for (int c : r.comp)
            w += c;
        if (r.degree == degree && w == total_weight)
            d += r.dim;
    }
    return d;
}

namespace {

bool kind_localized(SpaceKind k) {
    return k == SpaceKind::omega || k == SpaceKind::sections || k == SpaceKind::maps;
}

bool kind_has_action(SpaceKind k) {
    return k == SpaceKind::conf_sphere || k == SpaceKind::sections || k == SpaceKind::maps ||
           k == SpaceKind::snaith;
}

std::string scalar_prefix(const Scalar& c, bool first) {
    if (c.is_one())
        return first ? "" : " + ";
    if ((-c).is_one())
        return first ? "-" : " - ";
    std::string s = c.str();
    if (!first && !s.empty() && s[0] == '-')
        return " - " + s.substr(1) + "*";
    return (first ? "" : " + ") + s + "*";
}

std::string kernel_name(const FreeAlgebra& alg, const ActionBlock& blk,
                        const std::vector<Scalar>& kv) {
    std::string s = "S[";
    bool first = true;
    for (std::size_t j = 0; j < kv.size(); ++j) {
        if (kv[j].is_zero())
            continue;
        s += scalar_prefix(kv[j], first);
        s += alg.spec().cls(blk.columns[j].first).id;
        s += "\xe2\x8a\x97";  // tensor sign
        s += alg.name(blk.columns[j].second);
        first = false;
    }
    return s + "]";
}

struct BlockResult {
    BlockKey key;
    std::vector<std::string> coker_names;
    std::vector<std::string> kernel_names;
};

bool within_filter(const HomologyOptions& opt, const std::vector<int>& comp, bool localized) {
    if (opt.component)
        return comp == *opt.component;
    if (!localized)
        return true;  // particle counts are bounded by max_weight instead
    for (int c : comp)
        if (c < -opt.comp_range || c > opt.comp_range)
            return false;
    return true;
}

}  // namespace

HomologyTable homology(const CoalgebraSpec& spec, int n, const FieldSpec& field, SpaceKind kind,
                       const HomologyOptions& opt) {
    const bool localized = kind_localized(kind);
    const bool connected = spec.connected();
    const bool track_base = kind != SpaceKind::maps;
    const std::size_t ncomp = spec.components().size();

    if (kind == SpaceKind::snaith && opt.snaith_weight < 1)
        throw UnsupportedError("snaith pieces need weight >= 1");

    bool has_base_classes = false;
    for (const auto& c : spec.classes())
        if (c.degree > 0 && c.component == kBase)
            has_base_classes = true;

    const int D = opt.max_degree;
    int wcap = std::max(opt.max_weight, kind == SpaceKind::snaith ? opt.snaith_weight : 0);
    int eff_weight = connected ? INT_MAX / 2 : wcap;
    FreeAlgebra alg(spec, n, field, D, eff_weight, localized);
    BrowderAction action(alg);

    HomologyTable table;
    table.kind = kind;
    table.characteristic = field.characteristic();
    table.spec_name = spec.name();
    table.n = n;
    table.connected = connected;
    table.has_base_classes = has_base_classes;
    table.max_degree = D;
    table.max_weight = connected ? 0 : wcap;

    // Collect the block keys that can carry rows within bounds.
    std::set<BlockKey> keys;
    auto key_ok = [&](const BlockKey& k) {
        if (k.degree < 0 || k.degree > D)
            return false;
        if (!localized)
            for (int c : k.comp)
                if (c < 0)
                    return false;
        if (kind == SpaceKind::snaith) {
            // the particle count is the scope; the range box does not apply
            if (opt.component && k.comp != *opt.component)
                return false;
            int total = k.base.value_or(0);
            for (int c : k.comp)
                total += c;
            return total == opt.snaith_weight;
        }
        return within_filter(opt, k.comp, localized);
    };

    if (connected) {
        // Harvest present weights from the aggregated block of each degree,
        // then add the action-shifted targets for kernel-only rows.
        for (int d = 0; d <= D; ++d) {
            BlockKey agg{d, {}, std::nullopt};
            std::set<int> weights;
            for (const Monomial& m : alg.block_basis(agg))
                weights.insert(alg.weight_of(m).v[0]);
            for (int w : weights) {
                BlockKey k{d, {}, track_base ? std::optional<int>(w) : std::nullopt};
                if (key_ok(k))
                    keys.insert(k);
                for (const auto& c : spec.classes()) {
                    BlockKey t{d + c.degree + (n - 1), {},
                               track_base ? std::optional<int>(w + 1) : std::nullopt};
                    if (key_ok(t))
                        keys.insert(t);
                }
            }
        }
    } else {
        // Box enumeration over the component lattice.
        std::vector<std::vector<int>> comps;
        if (opt.component) {
            comps.push_back(*opt.component);
        } else {
            std::vector<int> cur(ncomp, 0);
            int lo = localized ? -opt.comp_range : 0;
            int hi = localized ? opt.comp_range : wcap;
            std::function<void(std::size_t)> rec = [&](std::size_t i) {
                if (i == ncomp) {
                    comps.push_back(cur);
                    return;
                }
                for (int v = lo; v <= hi; ++v) {
                    cur[i] = v;
                    rec(i + 1);
                }
            };
            rec(0);
        }
        for (int d = 0; d <= D; ++d)
            for (const auto& c : comps) {
                if (!track_base) {
                    BlockKey k{d, c, std::nullopt};
                    if (key_ok(k))
                        keys.insert(k);
                    continue;
                }
                int bmax = has_base_classes ? d : 0;
                for (int b = 0; b <= bmax; ++b) {
                    BlockKey k{d, c, b};
                    if (key_ok(k))
                        keys.insert(k);
                }
            }
    }

    std::vector<BlockKey> key_list(keys.begin(), keys.end());
    std::vector<BlockResult> results(key_list.size());

    auto eval_key = [&](std::size_t i) {
        const BlockKey& key = key_list[i];
        BlockResult& res = results[i];
        res.key = key;
        if (!kind_has_action(kind)) {
            for (const Monomial& m : alg.block_basis(key))
                res.coker_names.push_back(alg.name(m));
            return;
        }
        ActionBlock blk = action.action_matrix(key, kind == SpaceKind::maps);
        for (std::size_t r : cokernel_representatives(blk.matrix))
            res.coker_names.push_back(alg.name(blk.target_basis[r]));
        if (key.degree + 1 <= D) {  // kernels of top-degree blocks land out of range
            ReduceResult rr = reduce(blk.matrix);
            for (const auto& kv : rr.kernel_basis)
                res.kernel_names.push_back(kernel_name(alg, blk, kv));
        }
    };

    int jobs = std::max(1, opt.jobs);
    if (jobs == 1 || key_list.size() < 2) {
        for (std::size_t i = 0; i < key_list.size(); ++i)
            eval_key(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= key_list.size())
                        return;
                    eval_key(i);
                }
            });
        for (auto& th : pool)
            th.join();
    }

    // Assemble rows: row(d) = coker(d) + suspended kernel(d-1).
    std::map<std::tuple<int, std::vector<int>, int>, HomologyRow> rows;
    auto row_for = [&](int degree, const std::vector<int>& comp,
                       std::optional<int> base) -> HomologyRow& {
        auto key = std::make_tuple(degree, comp, base ? *base : INT_MIN);
        auto it = rows.find(key);
        if (it == rows.end()) {
            HomologyRow r;
            r.degree = degree;
            r.comp = comp;
            r.base_weight = base;
            it = rows.emplace(key, std::move(r)).first;
        }
        return it->second;
    };
    for (const BlockResult& res : results) {
        if (!res.coker_names.empty()) {
            HomologyRow& r = row_for(res.key.degree, res.key.comp, res.key.base);
            for (const auto& s : res.coker_names)
                r.basis.push_back(s);
        }
        if (!res.kernel_names.empty() && res.key.degree + 1 <= D) {
            HomologyRow& r = row_for(res.key.degree + 1, res.key.comp, res.key.base);
            for (const auto& s : res.kernel_names)
                r.basis.push_back(s);
        }
    }
    for (auto& [k, r] : rows) {
        r.dim = r.basis.size();
        if (r.dim > 0)
            table.rows.push_back(std::move(r));
    }
    return table;
}

DiffReport compare_tables(const HomologyTable& a, const HomologyTable& b,
                          const std::vector<int>& offset_b) {
    std::map<std::pair<int, std::vector<int>>, std::pair<std::size_t, std::size_t>> agg;
    for (const auto& r : a.rows)
        agg[{r.degree, r.comp}].first += r.dim;
    for (const auto& r : b.rows) {
        std::vector<int> c = r.comp;
        for (std::size_t i = 0; i < c.size() && i < offset_b.size(); ++i)
            c[i] += offset_b[i];
        agg[{r.degree, c}].second += r.dim;
    }
    DiffReport rep;
    for (const auto& [k, d] : agg)
        if (d.first != d.second)
            rep.entries.push_back({k.first, k.second, d.first, d.second});
    return rep;
}

DiffReport compare(const CoalgebraSpec& spec, int n, const FieldSpec& field, SpaceKind a,
                   SpaceKind b, const HomologyOptions& opt, const std::vector<int>& offset_b) {
    HomologyTable ta = homology(spec, n, field, a, opt);
    HomologyTable tb = homology(spec, n, field, b, opt);
    return compare_tables(ta, tb, offset_b);
}

std::string render_component(const HomologyTable& t, const HomologyRow& r) {
    if (t.connected)
        return std::to_string(r.base_weight.value_or(0));
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < r.comp.size(); ++i)
        os << (i ? "," : "") << r.comp[i];
    if (r.base_weight && t.has_base_classes)
        os << ";" << *r.base_weight;
    os << ")";
    return os.str();
}

}  // namespace confsphere
