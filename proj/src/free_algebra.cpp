#include "confsphere/free_algebra.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <mutex>

namespace confsphere {

void add_term(AlgebraVector& v, const Monomial& m, const Scalar& c) {
    if (c.is_zero())
        return;
    auto it = v.find(m);
    if (it == v.end()) {
        v.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        v.erase(it);
}

void add_scaled(AlgebraVector& v, const AlgebraVector& w, const Scalar& c) {
    for (const auto& [m, s] : w)
        add_term(v, m, s * c);
}

namespace {
std::mutex g_block_cache_mu;
}

FreeAlgebra::FreeAlgebra(const CoalgebraSpec& spec, int n, const FieldSpec& field,
                         int max_degree, int max_weight, bool localized)
    : spec_(spec),
      n_(n),
      field_(field),
      max_degree_(max_degree),
      max_weight_(max_weight),
      localized_(localized) {
    if (n < 1)
        throw UnsupportedError("n must be >= 1");
    if (n == 1 && !spec.connected())
        throw UnsupportedError(
            "n = 1 with non-connected labels is unsupported (pi_0 is a free non-abelian "
            "monoid/group)");
    class_to_gen_.assign(spec.classes().size(), -1);
    if (n == 1)
        return;

    int lie_wcap = std::min(localized_ ? INT_MAX / 2 : max_weight_, max_degree_ / (n - 1) + 1);
    lie_ = std::make_unique<LieBasis>(spec_, n_, field_, max_degree_, lie_wcap);
    lie_to_gen_.assign(lie_->gens().size(), -1);
    int dl_wcap = localized_ ? INT_MAX / 2 : max_weight_;
    for (std::size_t li = 0; li < lie_->gens().size(); ++li) {
        const LieGenerator& lg = lie_->gens()[li];
        for (DLGenerator& dl : enumerate_admissible(lg, (int)li, field_, n_, max_degree_, dl_wcap)) {
            if (dl.degree < 1)
                continue;  // grouplike classes live in the exponent lattice instead
            if (dl.ops.empty())
                lie_to_gen_[li] = (int)gens_.size();
            gens_.push_back(std::move(dl));
        }
    }
    for (std::size_t li = 0; li < lie_->gens().size(); ++li) {
        const LieGenerator& lg = lie_->gens()[li];
        if (lg.weight() == 1 && lg.degree > 0)
            class_to_gen_[(std::size_t)lg.seq[0]] = lie_to_gen_[li];
    }
}

bool FreeAlgebra::gen_exterior(int g) const {
    return field_.characteristic() != 2 && (gens_[(std::size_t)g].degree & 1);
}

int FreeAlgebra::lie_gen_to_generator(int lie_index) const {
    return lie_to_gen_[(std::size_t)lie_index];
}

int FreeAlgebra::degree(const Monomial& m) const {
    int d = 0;
    for (const auto& [g, e] : m.factors)
        d += gens_[(std::size_t)g].degree * e;
    for (int c : m.word)
        d += spec_.cls(c).degree;
    return d;
}

Weight FreeAlgebra::weight_of(const Monomial& m) const {
    Weight w(spec_.components().size());
    for (const auto& [g, e] : m.factors)
        w += gens_[(std::size_t)g].component.scaled(e);
    for (std::size_t j = 0; j < m.grouplike.size(); ++j)
        w.v[j + 1] += m.grouplike[j];
    for (int c : m.word)
        w.v[(std::size_t)(spec_.cls(c).component + 1)] += 1;
    return w;
}

std::string FreeAlgebra::name(const Monomial& m) const {
    if (m.is_unit())
        return "1";
    std::string s;
    auto append = [&](const std::string& t) {
        if (!s.empty())
            s += "\xc2\xb7";  // middle dot
        s += t;
    };
    for (int c : m.word)
        append(spec_.cls(c).id);
    // heavier factors first, grouplikes last
    std::vector<std::pair<int, int>> factors = m.factors;
    std::stable_sort(factors.begin(), factors.end(), [&](const auto& a, const auto& b) {
        int wa = gens_[(std::size_t)a.first].weight();
        int wb = gens_[(std::size_t)b.first].weight();
        if (wa != wb)
            return wa > wb;
        return a.first < b.first;
    });
    for (const auto& [g, e] : factors) {
        std::string t = gens_[(std::size_t)g].name;
        if (e != 1)
            t += "^" + std::to_string(e);
        append(t);
    }
    for (std::size_t j = 0; j < m.grouplike.size(); ++j) {
        if (m.grouplike[j] == 0)
            continue;
        int cls = spec_.grouplike_of((int)j);
        std::string t = spec_.cls(cls).id;
        if (m.grouplike[j] != 1)
            t += "^" + std::to_string(m.grouplike[j]);
        append(t);
    }
    return s;
}

Monomial FreeAlgebra::unit() const {
    Monomial m;
    m.grouplike.assign(spec_.components().size(), 0);
    return m;
}

Monomial FreeAlgebra::from_generator(int gen_index) const {
    Monomial m = unit();
    m.factors.push_back({gen_index, 1});
    return m;
}

Monomial FreeAlgebra::from_class(int class_index) const {
    const LabelClass& c = spec_.cls(class_index);
    Monomial m = unit();
    if (c.degree == 0) {
        m.grouplike[(std::size_t)c.component] = 1;
        return m;
    }
    if (n_ == 1) {
        m.word.push_back(class_index);
        return m;
    }
    int g = class_to_gen_[(std::size_t)class_index];
    if (g < 0)
        throw UnsupportedError("class " + c.id + " exceeds the enumerated generator bounds");
    m.factors.push_back({g, 1});
    return m;
}

AlgebraVector FreeAlgebra::vec(const Monomial& m) const {
    AlgebraVector v;
    v.emplace(m, Scalar::one(field_));
    return v;
}

AlgebraVector FreeAlgebra::multiply_mono(const Monomial& a, const Monomial& b) const {
    AlgebraVector out;
    Monomial m = unit();
    if (n_ == 1) {
        m.word = a.word;
        m.word.insert(m.word.end(), b.word.begin(), b.word.end());
        add_term(out, m, Scalar::one(field_));
        return out;
    }
    bool sign = false;
    if (field_.characteristic() != 2) {
        // Koszul sign: one transposition per crossing pair of odd factors.
        long crossings = 0;
        for (const auto& [ga, ea] : a.factors) {
            if (!gen_exterior(ga))
                continue;
            for (const auto& [gb, eb] : b.factors) {
                if (!gen_exterior(gb))
                    continue;
                if (gb < ga)
                    ++crossings;
            }
        }
        sign = (crossings & 1) != 0;
    }
    // Merge exponents; odd squares vanish away from characteristic 2.
    std::size_t i = 0, j = 0;
    while (i < a.factors.size() || j < b.factors.size()) {
        if (j == b.factors.size() || (i < a.factors.size() && a.factors[i].first < b.factors[j].first)) {
            m.factors.push_back(a.factors[i++]);
        } else if (i == a.factors.size() || b.factors[j].first < a.factors[i].first) {
            m.factors.push_back(b.factors[j++]);
        } else {
            int g = a.factors[i].first;
            int e = a.factors[i].second + b.factors[j].second;
            if (gen_exterior(g))
                return out;  // zero
            m.factors.push_back({g, e});
            ++i;
            ++j;
        }
    }
    for (std::size_t k = 0; k < m.grouplike.size(); ++k)
        m.grouplike[k] = a.grouplike[k] + b.grouplike[k];
    Scalar c = Scalar::one(field_);
    if (sign)
        c = -c;
    add_term(out, m, c);
    return out;
}

AlgebraVector FreeAlgebra::multiply(const AlgebraVector& u, const AlgebraVector& v) const {
    AlgebraVector out;
    for (const auto& [ma, ca] : u)
        for (const auto& [mb, cb] : v)
            add_scaled(out, multiply_mono(ma, mb), ca * cb);
    return out;
}

BlockKey FreeAlgebra::block_of(const Monomial& m, bool with_base) const {
    Weight w = weight_of(m);
    BlockKey k;
    k.degree = degree(m);
    k.comp.assign(w.v.begin() + 1, w.v.end());
    if (with_base)
        k.base = w.v[0];
    return k;
}

void FreeAlgebra::enumerate_block(const BlockKey& key, std::vector<Monomial>& out) const {
    const std::size_t ncomp = spec_.components().size();
    if ((int)key.comp.size() != (int)ncomp)
        throw std::invalid_argument("block component vector has wrong length");

    if (n_ == 1) {
        // Words in the positive-degree classes.
        std::vector<int> word;
        Weight acc((std::size_t)ncomp);
        std::function<void(int)> rec = [&](int rem) {
            if (rem == 0) {
                bool ok = !key.base || acc.v[0] == *key.base;
                for (std::size_t j = 0; ok && j < ncomp; ++j)
                    ok = acc.v[j + 1] == key.comp[j];
                if (ok && (localized_ || acc.total() <= max_weight_)) {
                    Monomial m = unit();
                    m.word = word;
                    out.push_back(std::move(m));
                }
                return;
            }
            for (int c = 0; c < (int)spec_.classes().size(); ++c) {
                int d = spec_.cls(c).degree;
                if (d == 0 || d > rem)
                    continue;
                std::size_t slot = (std::size_t)(spec_.cls(c).component + 1);
                word.push_back(c);
                acc.v[slot] += 1;
                rec(rem - d);
                acc.v[slot] -= 1;
                word.pop_back();
            }
        };
        rec(key.degree);
        std::sort(out.begin(), out.end());
        return;
    }

    // Exponent vectors over the positive-degree generators; the grouplike
    // exponents are then the unique integers balancing the component (for
    // unlocalized blocks they must come out non-negative). The total weight
    // of a finished monomial is w.v[0] + sum(key.comp).
    int comp_sum = 0;
    for (int c : key.comp)
        comp_sum += c;
    Monomial cur = unit();
    std::function<void(std::size_t, int, const Weight&)> rec = [&](std::size_t gi, int rem,
                                                                   const Weight& w) {
        if (gi == gens_.size()) {
            if (rem != 0)
                return;
            if (key.base && w.v[0] != *key.base)
                return;
            if (!localized_ && w.v[0] + comp_sum > max_weight_)
                return;
            Monomial m = cur;
            for (std::size_t j = 0; j < ncomp; ++j) {
                int e = key.comp[j] - w.v[j + 1];
                if (!localized_ && e < 0)
                    return;
                m.grouplike[j] = e;
            }
            out.push_back(std::move(m));
            return;
        }
        const DLGenerator& g = gens_[gi];
        int cap = rem / g.degree;
        if (gen_exterior((int)gi))
            cap = std::min(cap, 1);
        for (int e = 0; e <= cap; ++e) {
            Weight nw = w + g.component.scaled(e);
            bool prune = false;
            if (key.base && nw.v[0] > *key.base)
                prune = true;
            if (!localized_)
                for (std::size_t j = 0; j < ncomp && !prune; ++j)
                    if (nw.v[j + 1] > key.comp[j])
                        prune = true;
            if (!prune) {
                if (e > 0)
                    cur.factors.push_back({(int)gi, e});
                rec(gi + 1, rem - e * g.degree, nw);
                if (e > 0)
                    cur.factors.pop_back();
            }
        }
    };
    rec(0, key.degree, Weight(ncomp));
    std::sort(out.begin(), out.end());
}

const std::vector<Monomial>& FreeAlgebra::block_basis(const BlockKey& key) const {
    std::lock_guard<std::mutex> lock(g_block_cache_mu);
    auto it = block_cache_.find(key);
    if (it != block_cache_.end())
        return it->second;
    std::vector<Monomial> v;
    enumerate_block(key, v);
    return block_cache_.emplace(key, std::move(v)).first->second;
}

FreeAlgebra group_complete(const CoalgebraSpec& spec, int n, const FieldSpec& field,
                           int max_degree, int max_weight) {
    if (n == 1 && !spec.connected())
        throw UnsupportedError("group completion at n = 1 needs connected labels");
    return FreeAlgebra(spec, n, field, max_degree, max_weight, true);
}

}  // namespace confsphere
