#include "confsphere/lie.hpp"

#include "confsphere/matrix.hpp"

#include <algorithm>
#include <functional>

namespace confsphere {

Tree tree_leaf(int class_index) {
    auto n = std::make_shared<TreeNode>();
    n->leaf = class_index;
    return n;
}

Tree tree_pair(Tree left, Tree right) {
    auto n = std::make_shared<TreeNode>();
    n->left = std::move(left);
    n->right = std::move(right);
    return n;
}

int tree_weight(const Tree& t) {
    return t->leaf >= 0 ? 1 : tree_weight(t->left) + tree_weight(t->right);
}

static int tree_leaf_degree_sum(const CoalgebraSpec& spec, const Tree& t) {
    if (t->leaf >= 0)
        return spec.cls(t->leaf).degree;
    return tree_leaf_degree_sum(spec, t->left) + tree_leaf_degree_sum(spec, t->right);
}

int tree_degree(const CoalgebraSpec& spec, int n, const Tree& t) {
    return tree_leaf_degree_sum(spec, t) + (tree_weight(t) - 1) * (n - 1);
}

Weight tree_component(const CoalgebraSpec& spec, const Tree& t) {
    Weight w(spec.components().size());
    if (t->leaf >= 0) {
        int c = spec.cls(t->leaf).component;
        w.v[(std::size_t)(c + 1)] += 1;
        return w;
    }
    return tree_component(spec, t->left) + tree_component(spec, t->right);
}

std::string tree_name(const CoalgebraSpec& spec, const Tree& t) {
    if (t->leaf >= 0)
        return spec.cls(t->leaf).id;
    return "[" + tree_name(spec, t->left) + "," + tree_name(spec, t->right) + "]";
}

// ---------------------------------------------------------------------------

int LieBasis::shifted_degree_mod2(int class_index) const {
    return (spec_.cls(class_index).degree + n_ - 1) & 1;
}

int LieBasis::value_shifted_parity(const TensorVec& v) const {
    // homogeneous by construction; parity of the first word
    int s = 0;
    for (int c : v.begin()->first)
        s ^= shifted_degree_mod2(c);
    return s;
}

static TensorVec concat(const TensorVec& u, const TensorVec& v) {
    TensorVec out;
    for (const auto& [wu, cu] : u)
        for (const auto& [wv, cv] : v) {
            std::vector<int> w = wu;
            w.insert(w.end(), wv.begin(), wv.end());
            Scalar s = cu * cv;
            auto it = out.find(w);
            if (it == out.end())
                out.emplace(std::move(w), s);
            else {
                it->second += s;
                if (it->second.is_zero())
                    out.erase(it);
            }
        }
    return out;
}

TensorVec LieBasis::commutator(const TensorVec& u, const TensorVec& v) const {
    if (u.empty() || v.empty())
        return {};
    TensorVec out = concat(u, v);
    bool negate = (value_shifted_parity(u) & value_shifted_parity(v)) == 0;
    // [u,v] = uv - (-1)^{s(u)s(v)} vu
    TensorVec vu = concat(v, u);
    for (auto& [w, c] : vu) {
        Scalar s = negate ? -c : c;
        auto it = out.find(w);
        if (it == out.end())
            out.emplace(w, s);
        else {
            it->second += s;
            if (it->second.is_zero())
                out.erase(it);
        }
    }
    return out;
}

TensorVec LieBasis::tree_value(const Tree& t) const {
    if (t->leaf >= 0) {
        TensorVec v;
        v[{t->leaf}] = Scalar::one(field_);
        return v;
    }
    return commutator(tree_value(t->left), tree_value(t->right));
}

namespace {

Tree left_normed_tree(const std::vector<int>& seq) {
    Tree t = tree_leaf(seq[0]);
    for (std::size_t i = 1; i < seq.size(); ++i)
        t = tree_pair(t, tree_leaf(seq[i]));
    return t;
}

// All distinct permutations of a sorted multiset, lexicographic.
std::vector<std::vector<int>> multiset_permutations(std::vector<int> m) {
    std::vector<std::vector<int>> out;
    do {
        out.push_back(m);
    } while (std::next_permutation(m.begin(), m.end()));
    return out;
}

void enumerate_multisets(int nclasses, int w, std::vector<int>& cur,
                         const std::function<void(const std::vector<int>&)>& emit, int from = 0) {
    if ((int)cur.size() == w) {
        emit(cur);
        return;
    }
    for (int c = from; c < nclasses; ++c) {
        cur.push_back(c);
        enumerate_multisets(nclasses, w, cur, emit, c);
        cur.pop_back();
    }
}

}  // namespace

LieBasis::LieBasis(const CoalgebraSpec& spec, int n, const FieldSpec& field, int max_degree,
                   int max_weight)
    : spec_(spec), n_(n), field_(field), max_degree_(max_degree), max_weight_(max_weight) {
    if (n < 2)
        throw UnsupportedError("the Lie basis is only defined for n >= 2");
    const int ncls = (int)spec.classes().size();
    // A weight-w generator has degree >= (w-1)(n-1), so the weight stays
    // bounded by the degree bound.
    int wcap = std::min(max_weight_, max_degree_ / (n - 1) + 1);

    for (int w = 1; w <= wcap; ++w) {
        std::vector<int> cur;
        enumerate_multisets(ncls, w, cur, [&](const std::vector<int>& multiset) {
            int deg = (w - 1) * (n - 1);
            for (int c : multiset)
                deg += spec.cls(c).degree;
            if (deg > max_degree_)
                return;

            // Span: left-normed values over all permutations; canonical basis
            // by the fixed pivot rule on lexicographically ordered columns.
            auto seqs = multiset_permutations(multiset);
            std::vector<TensorVec> values;
            values.reserve(seqs.size());
            std::map<std::vector<int>, std::size_t> word_index;
            for (const auto& s : seqs) {
                TensorVec v = tree_value(left_normed_tree(s));
                for (const auto& [word, coeff] : v)
                    word_index.emplace(word, word_index.size());
                values.push_back(std::move(v));
            }
            if (word_index.empty())
                return;  // everything vanished (e.g. squares at char 2)
            ExactMatrix m(word_index.size(), seqs.size(), field_);
            for (std::size_t j = 0; j < values.size(); ++j)
                for (const auto& [word, coeff] : values[j])
                    m.at(word_index[word], j) = coeff;
            ReduceResult rr = reduce(m);
            std::vector<int>& bucket = by_multiset_[multiset];
            for (std::size_t pc : rr.pivot_columns) {
                LieGenerator g;
                g.seq = seqs[pc];
                g.tree = left_normed_tree(g.seq);
                g.degree = deg;
                g.component = tree_component(spec_, g.tree);
                g.name = tree_name(spec_, g.tree);
                g.value = std::move(values[pc]);
                bucket.push_back((int)gens_.size());
                gens_.push_back(std::move(g));
            }
        });
    }
}

std::map<int, Scalar> LieBasis::normal_form_value(const TensorVec& value) const {
    std::map<int, Scalar> out;
    if (value.empty())
        return out;
    std::vector<int> multiset = value.begin()->first;
    std::sort(multiset.begin(), multiset.end());
    auto it = by_multiset_.find(multiset);
    const std::vector<int> empty;
    const std::vector<int>& bucket = it == by_multiset_.end() ? empty : it->second;

    // Solve [gen values | query] by row reduction; the query must lie in the
    // span of the canonical generators.
    std::map<std::vector<int>, std::size_t> word_index;
    for (int gi : bucket)
        for (const auto& [word, c] : gens_[(std::size_t)gi].value)
            word_index.emplace(word, word_index.size());
    for (const auto& [word, c] : value)
        word_index.emplace(word, word_index.size());
    ExactMatrix m(word_index.size(), bucket.size() + 1, field_);
    for (std::size_t j = 0; j < bucket.size(); ++j)
        for (const auto& [word, c] : gens_[(std::size_t)bucket[j]].value)
            m.at(word_index[word], j) = c;
    for (const auto& [word, c] : value)
        m.at(word_index[word], bucket.size()) = c;
    ReduceResult rr = reduce(m);
    for (std::size_t k = 0; k < rr.pivot_columns.size(); ++k) {
        if (rr.pivot_columns[k] == bucket.size())
            throw std::logic_error("bracket value outside the enumerated Lie span");
    }
    // With the last column free, kernel vector for it encodes the expansion.
    for (const auto& kv : rr.kernel_basis) {
        if (kv.back().is_zero())
            continue;
        // kv.back() is 1 on the query column: query = -sum coeff_j * gen_j
        for (std::size_t j = 0; j < bucket.size(); ++j)
            if (!kv[j].is_zero())
                out[bucket[j]] = -kv[j];
        break;
    }
    return out;
}

std::map<int, Scalar> LieBasis::normal_form(const Tree& t) const {
    int w = tree_weight(t);
    int d = tree_degree(spec_, n_, t);
    if (w > max_weight_ || d > max_degree_)
        throw UnsupportedError("bound overflow: bracket tree of weight " + std::to_string(w) +
                               ", degree " + std::to_string(d) +
                               " exceeds the enumerated Lie bounds");
    return normal_form_value(tree_value(t));
}

std::map<int, Scalar> LieBasis::normal_form(
    const std::vector<std::pair<Scalar, Tree>>& combo) const {
    std::map<int, Scalar> out;
    for (const auto& [c, t] : combo) {
        for (const auto& [g, v] : normal_form(t)) {
            auto it = out.find(g);
            if (it == out.end()) {
                Scalar s = v * c;
                if (!s.is_zero())
                    out.emplace(g, std::move(s));
            } else {
                it->second += v * c;
                if (it->second.is_zero())
                    out.erase(it);
            }
        }
    }
    return out;
}

}  // namespace confsphere
