#include "confsphere/browder.hpp"

#include <array>

namespace confsphere {

namespace {

std::vector<std::pair<bool, int>> serialize_ops(const OpString& ops, std::size_t skip = 0) {
    std::vector<std::pair<bool, int>> v;
    for (std::size_t i = skip; i < ops.blocks.size(); ++i)
        v.push_back({ops.blocks[i].bockstein, ops.blocks[i].index});
    return v;
}

}  // namespace

BrowderAction::BrowderAction(const FreeAlgebra& alg) : alg_(alg), chi_(alg) {
    for (std::size_t g = 0; g < alg_.generators().size(); ++g) {
        const DLGenerator& dl = alg_.generators()[g];
        gen_lookup_[{dl.base, serialize_ops(dl.ops)}] = (int)g;
    }
}

std::vector<BrowderAction::Factor> BrowderAction::factors_of(const Monomial& m) const {
    std::vector<Factor> out;
    for (const auto& [g, e] : m.factors)
        for (int k = 0; k < e; ++k)
            out.push_back({false, g, 1});
    for (std::size_t j = 0; j < m.grouplike.size(); ++j) {
        int e = m.grouplike[j];
        for (int k = 0; k < (e < 0 ? -e : e); ++k)
            out.push_back({true, (int)j, e < 0 ? -1 : 1});
    }
    return out;
}

int BrowderAction::factor_degree(const Factor& f) const {
    return f.grouplike ? 0 : alg_.generators()[(std::size_t)f.id].degree;
}

Monomial BrowderAction::factor_monomial(const Factor& f) const {
    Monomial m = alg_.unit();
    if (f.grouplike)
        m.grouplike[(std::size_t)f.id] = f.sgn;
    else
        m.factors.push_back({f.id, 1});
    return m;
}

Monomial BrowderAction::strip_first(const Monomial& m, const Factor& f) const {
    Monomial r = m;
    if (f.grouplike) {
        r.grouplike[(std::size_t)f.id] -= f.sgn;
        return r;
    }
    for (auto it = r.factors.begin(); it != r.factors.end(); ++it) {
        if (it->first == f.id) {
            if (--it->second == 0)
                r.factors.erase(it);
            return r;
        }
    }
    throw std::logic_error("factor not present in monomial");
}

TensorVec BrowderAction::lie_value_of(const Factor& f) const {
    if (f.grouplike) {
        int cls = alg_.spec().grouplike_of(f.id);
        TensorVec v;
        v[{cls}] = Scalar::one(alg_.field());
        return v;
    }
    const DLGenerator& dl = alg_.generators()[(std::size_t)f.id];
    return alg_.lie().gens()[(std::size_t)dl.base].value;
}

AlgebraVector BrowderAction::lie_normal_to_vector(const TensorVec& value) const {
    AlgebraVector out;
    for (const auto& [li, c] : alg_.lie().normal_form_value(value)) {
        int g = alg_.lie_gen_to_generator(li);
        if (g < 0)
            throw UnsupportedError("bracket result exceeds the enumerated generator bounds");
        add_term(out, alg_.from_generator(g), c);
    }
    return out;
}

AlgebraVector BrowderAction::gen_bracket_compute(const Factor& a, const Factor& b) const {
    const int n = alg_.n();
    const bool a_ops = !a.grouplike && !alg_.generators()[(std::size_t)a.id].ops.empty();
    const bool b_ops = !b.grouplike && !alg_.generators()[(std::size_t)b.id].ops.empty();

    if (b_ops) {
        const DLGenerator& dl = alg_.generators()[(std::size_t)b.id];
        const OpBlock& outer = dl.ops.blocks[0];
        if (outer.bockstein || outer.index < n - 1)
            return {};  // the action kills every non-top operation
        // Top operation: [a, Q_{n-1} z] = ad_z^p(a).
        Monomial z;
        if (dl.ops.blocks.size() == 1) {
            const LieGenerator& lg = alg_.lie().gens()[(std::size_t)dl.base];
            z = lg.degree == 0 ? alg_.from_class(lg.seq[0])
                               : alg_.from_generator(alg_.lie_gen_to_generator(dl.base));
        } else {
            auto it = gen_lookup_.find({dl.base, serialize_ops(dl.ops, 1)});
            if (it == gen_lookup_.end())
                throw std::logic_error("inner operation string missing from the generator table");
            z = alg_.from_generator(it->second);
        }
        AlgebraVector zv = alg_.vec(z);
        AlgebraVector u = alg_.vec(factor_monomial(a));
        long p = (long)alg_.field().characteristic();
        for (long k = 0; k < p; ++k)
            u = bracket(u, zv);
        return u;
    }
    if (a_ops) {
        // flip: [a,b] = -(-1)^{s(a)s(b)} [b,a]
        int sa = (factor_degree(a) + n - 1) & 1;
        int sb = (factor_degree(b) + n - 1) & 1;
        AlgebraVector flipped = gen_bracket(b, a);
        AlgebraVector out;
        Scalar c = Scalar::one(alg_.field());
        if ((sa & sb) == 0)
            c = -c;
        add_scaled(out, flipped, c);
        return out;
    }
    // Both Lie-type: the honest Lie bracket, expanded in the canonical basis.
    return lie_normal_to_vector(alg_.lie().commutator(lie_value_of(a), lie_value_of(b)));
}

const AlgebraVector& BrowderAction::gen_bracket(const Factor& a, const Factor& b) const {
    std::array<int, 4> key{a.grouplike ? 1 : 0, a.id, b.grouplike ? 1 : 0, b.id};
    {
        std::lock_guard<std::mutex> lock(memo_mu_);
        auto it = gen_memo_.find(key);
        if (it != gen_memo_.end())
            return it->second;
    }
    AlgebraVector v = gen_bracket_compute(a, b);
    std::lock_guard<std::mutex> lock(memo_mu_);
    return gen_memo_.emplace(key, std::move(v)).first->second;
}

AlgebraVector BrowderAction::bracket_factors(const Factor& a, const Factor& b) const {
    Factor ap = a, bp = b;
    ap.sgn = bp.sgn = 1;
    AlgebraVector core = gen_bracket(ap, bp);
    if (a.sgn == 1 && b.sgn == 1)
        return core;
    // [a^-1, w] = -a^-2 [a, w]   and   [w, b^-1] = -[w, b] b^-2
    AlgebraVector out;
    Scalar c = Scalar::one(alg_.field());
    Monomial shift = alg_.unit();
    if (a.sgn == -1) {
        c = -c;
        shift.grouplike[(std::size_t)a.id] -= 2;
    }
    if (b.sgn == -1) {
        c = -c;
        shift.grouplike[(std::size_t)b.id] -= 2;
    }
    add_scaled(out, alg_.multiply(alg_.vec(shift), core), c);
    return out;
}

AlgebraVector BrowderAction::bracket_left_factor(const Factor& f, const Monomial& b) const {
    std::vector<Factor> fb = factors_of(b);
    if (fb.empty())
        return {};  // bracket with the unit is zero
    if (fb.size() == 1)
        return bracket_factors(f, fb[0]);
    const Factor& g = fb[0];
    Monomial rest = strip_first(b, g);
    // [f, g*rest] = [f,g]*rest + (-1)^{|g| s(f)} g*[f, rest]
    AlgebraVector out = alg_.multiply(bracket_factors(f, g), alg_.vec(rest));
    Scalar c = Scalar::one(alg_.field());
    int sf = (factor_degree(f) + alg_.n() - 1) & 1;
    if ((factor_degree(g) & 1) && sf)
        c = -c;
    add_scaled(out, alg_.multiply(alg_.vec(factor_monomial(g)), bracket_left_factor(f, rest)), c);
    return out;
}

AlgebraVector BrowderAction::bracket_mono(const Monomial& a, const Monomial& b) const {
    std::vector<Factor> fa = factors_of(a);
    if (fa.empty() || factors_of(b).empty())
        return {};
    if (fa.size() == 1)
        return bracket_left_factor(fa[0], b);
    const Factor& f = fa[0];
    Monomial rest = strip_first(a, f);
    // [f*rest, b] = f*[rest, b] + (-1)^{|rest| s(b)} [f, b]*rest
    AlgebraVector out =
        alg_.multiply(alg_.vec(factor_monomial(f)), bracket_mono(rest, b));
    Scalar c = Scalar::one(alg_.field());
    int sb = (alg_.degree(b) + alg_.n() - 1) & 1;
    if ((alg_.degree(rest) & 1) && sb)
        c = -c;
    add_scaled(out, alg_.multiply(bracket_left_factor(f, b), alg_.vec(rest)), c);
    return out;
}

AlgebraVector BrowderAction::bracket(const AlgebraVector& u, const AlgebraVector& v) const {
    AlgebraVector out;
    if (alg_.n() == 1) {
        // graded commutator of the word algebra: [u,v] = uv - (-1)^{|u||v|} vu
        for (const auto& [mu, cu] : u)
            for (const auto& [mv, cv] : v) {
                Scalar c = cu * cv;
                add_scaled(out, alg_.multiply_mono(mu, mv), c);
                bool plus = (alg_.degree(mu) & 1) && (alg_.degree(mv) & 1);
                add_scaled(out, alg_.multiply_mono(mv, mu), plus ? c : -c);
            }
        return out;
    }
    for (const auto& [mu, cu] : u)
        for (const auto& [mv, cv] : v)
            add_scaled(out, bracket_mono(mu, mv), cu * cv);
    return out;
}

AlgebraVector BrowderAction::act_class_mono(int class_index, const Monomial& m) const {
    if (alg_.n() == 1 || m.all_grouplike_zero())
        return bracket(alg_.vec(alg_.from_class(class_index)), alg_.vec(m));

    // m = P * G with G the grouplike part:
    // [x, PG] = [x,P] G + (-1)^{|P| s(x)} P [x,G]
    Monomial pos = m;
    for (int& e : pos.grouplike)
        e = 0;
    Monomial glike = alg_.unit();
    glike.grouplike = m.grouplike;

    AlgebraVector pos_part;
    {
        std::pair<int, Monomial> key{class_index, pos};
        bool have = false;
        {
            std::lock_guard<std::mutex> lock(memo_mu_);
            auto it = act_memo_.find(key);
            if (it != act_memo_.end()) {
                pos_part = it->second;
                have = true;
            }
        }
        if (!have) {
            pos_part = bracket(alg_.vec(alg_.from_class(class_index)), alg_.vec(pos));
            std::lock_guard<std::mutex> lock(memo_mu_);
            act_memo_.emplace(std::move(key), pos_part);
        }
    }
    AlgebraVector out = alg_.multiply(pos_part, alg_.vec(glike));

    // [x, G] over the grouplike factors; everything there has degree 0
    AlgebraVector xg;
    for (std::size_t j = 0; j < m.grouplike.size(); ++j) {
        int e = m.grouplike[j];
        if (e == 0)
            continue;
        Monomial rest = glike;
        rest.grouplike[j] -= 1;
        Factor g{true, (int)j, 1};
        // the class as a factor: grouplike or generator
        const LabelClass& c = alg_.spec().cls(class_index);
        Factor xf = c.degree == 0
                        ? Factor{true, c.component, 1}
                        : Factor{false, alg_.from_class(class_index).factors[0].first, 1};
        AlgebraVector term = alg_.multiply(alg_.vec(rest), gen_bracket(xf, g));
        add_scaled(xg, term, Scalar::from_long(e, alg_.field()));
    }
    if (!xg.empty()) {
        Scalar s = Scalar::one(alg_.field());
        int sp = (alg_.degree(pos) & 1);
        int sx = (alg_.spec().cls(class_index).degree + alg_.n() - 1) & 1;
        if (sp && sx)
            s = -s;
        add_scaled(out, alg_.multiply(alg_.vec(pos), xg), s);
    }
    return out;
}

AlgebraVector BrowderAction::act(int class_index, const AlgebraVector& v) const {
    AlgebraVector out;
    for (const auto& [m, c] : v)
        add_scaled(out, act_class_mono(class_index, m), c);
    return out;
}

AlgebraVector BrowderAction::act_twisted(int class_index, const AlgebraVector& v) const {
    AlgebraVector out = act(class_index, v);
    for (const TripleTerm& t : iterated_coproduct(alg_.spec(), class_index)) {
        if (t.x1 == kUnit || t.x2 == kUnit)
            continue;  // brackets with the unit vanish
        AlgebraVector br = bracket(alg_.vec(alg_.from_class(t.x1)),
                                   alg_.vec(alg_.from_class(t.x2)));
        if (br.empty())
            continue;
        AlgebraVector term = alg_.multiply(br, chi_.of_factor(t.x3));
        term = alg_.multiply(term, v);
        add_scaled(out, term, Scalar::from_long(t.coeff, alg_.field()));
    }
    return out;
}

ActionBlock BrowderAction::action_matrix(const BlockKey& target, bool twisted) const {
    ActionBlock blk{target, alg_.block_basis(target), {}, ExactMatrix(0, 0, alg_.field())};
    std::map<Monomial, std::size_t> row_of;
    for (std::size_t r = 0; r < blk.target_basis.size(); ++r)
        row_of[blk.target_basis[r]] = r;

    const CoalgebraSpec& spec = alg_.spec();
    std::vector<AlgebraVector> images;
    for (int x = 0; x < (int)spec.classes().size(); ++x) {
        const LabelClass& c = spec.cls(x);
        BlockKey src;
        src.degree = target.degree - c.degree - (alg_.n() - 1);
        if (src.degree < 0)
            continue;
        src.comp = target.comp;
        if (c.component != kBase)
            src.comp[(std::size_t)c.component] -= 1;
        if (target.base) {
            src.base = *target.base - (c.component == kBase ? 1 : 0);
            if (*src.base < 0)
                continue;
        }
        bool skip = false;
        if (!alg_.localized())
            for (int e : src.comp)
                if (e < 0)
                    skip = true;
        if (skip)
            continue;
        for (const Monomial& v : alg_.block_basis(src)) {
            AlgebraVector w =
                twisted ? act_twisted(x, alg_.vec(v)) : act(x, alg_.vec(v));
            blk.columns.push_back({x, v});
            images.push_back(std::move(w));
        }
    }

    blk.matrix = ExactMatrix(blk.target_basis.size(), blk.columns.size(), alg_.field());
    for (std::size_t j = 0; j < images.size(); ++j) {
        for (const auto& [m, c] : images[j]) {
            auto it = row_of.find(m);
            if (it == row_of.end())
                throw std::logic_error("action image leaves the target block: " + alg_.name(m));
            blk.matrix.at(it->second, j) = c;
        }
    }
    return blk;
}

}  // namespace confsphere
