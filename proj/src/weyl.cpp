#include "branchcone/weyl.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace branchcone {

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<std::int64_t>& v) const
    {
        std::size_t h = 1469598103934665603ull;
        for (auto x : v) {
            h ^= static_cast<std::size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

std::int64_t to_int64(const Rat& x)
{
    if (x.get_den() != 1)
        throw InvalidInput("expected integer entry");
    if (!x.get_num().fits_slong_p())
        throw InvalidInput("integer entry out of range");
    return x.get_num().get_si();
}

} // namespace

std::string word_to_string(const std::vector<std::size_t>& word, bool hat)
{
    if (word.empty())
        return "e";
    std::ostringstream os;
    for (std::size_t k = 0; k < word.size(); ++k) {
        if (k)
            os << ' ';
        os << 's' << (word[k] + 1);
        if (hat)
            os << '^';
    }
    return os.str();
}

std::vector<std::size_t> word_from_string(const std::string& s)
{
    std::vector<std::size_t> word;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
        if (tok == "e")
            continue;
        if (!tok.empty() && tok.back() == '^')
            tok.pop_back();
        if (tok.size() < 2 || tok[0] != 's')
            throw InvalidInput("bad word token '" + tok + "'");
        word.push_back(static_cast<std::size_t>(std::stoul(tok.substr(1))) - 1);
    }
    return word;
}

WeylGroup::WeylGroup(const RootDatum& datum, std::size_t order_cap)
    : datum_(datum), order_cap_(order_cap)
{
    std::size_t r = datum_.rank();
    for (std::size_t i = 0; i < r; ++i) {
        simple_matrices_.push_back(simple_matrix(i));
        // Action on coweights in x-coordinates: d -> d - d_i * (col_i of A).
        std::vector<std::int64_t> m(r * r, 0);
        for (std::size_t k = 0; k < r; ++k) {
            m[k * r + k] = 1;
            m[k * r + i] -= to_int64(datum_.cartan()[k][i]);
        }
        simple_coweight_matrices_.push_back(std::move(m));
    }
    for (std::size_t k = 0; k < datum_.positive_roots().size(); ++k) {
        std::vector<std::int64_t> ro(r), cr(r);
        QVec cc = datum_.coroot_coords(datum_.positive_coroots()[k]);
        for (std::size_t j = 0; j < r; ++j) {
            ro[j] = to_int64(datum_.positive_roots()[k].coords[j]);
            cr[j] = to_int64(cc[j]);
        }
        positive_root_index_[ro] = k;
        root_omega_.push_back(std::move(ro));
        coroot_basis_.push_back(std::move(cr));
    }
}

std::vector<std::int64_t> WeylGroup::simple_matrix(std::size_t i) const
{
    // s_i on weight coords: l -> l - l_i * (row_i of A), i.e. S = I - a_i e_i^T.
    std::size_t r = datum_.rank();
    std::vector<std::int64_t> m(r * r, 0);
    for (std::size_t k = 0; k < r; ++k) {
        m[k * r + k] = 1;
        m[k * r + i] -= to_int64(datum_.cartan()[i][k]);
    }
    return m;
}

std::vector<std::int64_t> WeylGroup::mat_product(const std::vector<std::int64_t>& a,
                                                 const std::vector<std::int64_t>& b) const
{
    std::size_t r = datum_.rank();
    std::vector<std::int64_t> out(r * r, 0);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t t = 0; t < r; ++t) {
            std::int64_t av = a[i * r + t];
            if (!av)
                continue;
            for (std::size_t j = 0; j < r; ++j)
                out[i * r + j] += av * b[t * r + j];
        }
    return out;
}

std::size_t WeylGroup::length_of(const std::vector<std::int64_t>& matrix) const
{
    // Count positive roots gamma with w(gamma) negative. The image of a root
    // is again a root, so negativity is a table lookup on omega-coordinates.
    std::size_t r = datum_.rank(), len = 0;
    std::vector<std::int64_t> img(r);
    for (const auto& root : root_omega_) {
        for (std::size_t i = 0; i < r; ++i) {
            std::int64_t acc = 0;
            for (std::size_t j = 0; j < r; ++j)
                acc += matrix[i * r + j] * root[j];
            img[i] = acc;
        }
        if (positive_root_index_.count(img))
            continue;
        for (auto& x : img)
            x = -x;
        if (!positive_root_index_.count(img))
            throw std::logic_error("length_of: image is not a root");
        ++len;
    }
    return len;
}

std::vector<std::size_t> WeylGroup::canonical_word(const std::vector<std::int64_t>& matrix,
                                                   std::size_t length) const
{
    // Greedy: repeatedly strip the least simple left descent.
    std::size_t r = datum_.rank();
    std::vector<std::size_t> word;
    std::vector<std::int64_t> cur = matrix;
    std::size_t len = length;
    while (len > 0) {
        bool found = false;
        for (std::size_t i = 0; i < r && !found; ++i) {
            auto next = mat_product(simple_matrices_[i], cur);
            if (length_of(next) == len - 1) {
                word.push_back(i);
                cur = std::move(next);
                --len;
                found = true;
            }
        }
        if (!found)
            throw std::logic_error("canonical_word: no descent found");
    }
    return word;
}

WeylElement WeylGroup::make_element(std::vector<std::int64_t> matrix) const
{
    WeylElement e;
    e.length = length_of(matrix);
    e.word = canonical_word(matrix, e.length);
    e.matrix = std::move(matrix);
    return e;
}

WeylElement WeylGroup::identity() const
{
    std::size_t r = datum_.rank();
    std::vector<std::int64_t> m(r * r, 0);
    for (std::size_t i = 0; i < r; ++i)
        m[i * r + i] = 1;
    WeylElement e;
    e.matrix = std::move(m);
    return e;
}

WeylElement WeylGroup::simple_reflection(std::size_t i) const
{
    WeylElement e;
    e.matrix = simple_matrices_.at(i);
    e.length = 1;
    e.word = {i};
    return e;
}

WeylElement WeylGroup::reflection(std::size_t k) const
{
    // s_gamma(lambda) = lambda - <lambda, gamma^vee> gamma.
    std::size_t r = datum_.rank();
    std::vector<std::int64_t> m(r * r, 0);
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) {
            std::int64_t v = (a == b) ? 1 : 0;
            v -= root_omega_[k][a] * coroot_basis_[k][b];
            m[a * r + b] = v;
        }
    return make_element(std::move(m));
}

WeylElement WeylGroup::multiply(const WeylElement& a, const WeylElement& b) const
{
    return make_element(mat_product(a.matrix, b.matrix));
}

WeylElement WeylGroup::inverse(const WeylElement& a) const
{
    // Integer matrix inverse via rational inverse (entries stay integral).
    std::size_t r = datum_.rank();
    QMat m(r, QVec(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            m[i][j] = a.matrix[i * r + j];
    QMat inv = r ? mat_inverse(m) : QMat{};
    std::vector<std::int64_t> out(r * r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            out[i * r + j] = to_int64(inv[i][j]);
    return make_element(std::move(out));
}

WeylElement WeylGroup::from_word(const std::vector<std::size_t>& word) const
{
    auto e = identity();
    std::vector<std::int64_t> m = e.matrix;
    for (std::size_t i : word)
        m = mat_product(m, simple_matrices_.at(i));
    return make_element(std::move(m));
}

Weight WeylGroup::act(const WeylElement& w, const Weight& lambda) const
{
    std::size_t r = datum_.rank();
    if (lambda.coords.size() != r)
        throw InvalidInput("act: dimension mismatch");
    Weight out{QVec(r, 0)};
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            if (w.matrix[i * r + j] != 0)
                out.coords[i] += Rat(w.matrix[i * r + j]) * lambda.coords[j];
    return out;
}

Coweight WeylGroup::act(const WeylElement& w, const Coweight& delta) const
{
    // Compose the coweight matrices along the canonical word.
    std::size_t r = datum_.rank();
    if (delta.coords.size() != r)
        throw InvalidInput("act: dimension mismatch");
    QVec cur = delta.coords;
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
        const auto& m = simple_coweight_matrices_[*it];
        QVec next(r, 0);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                if (m[i * r + j] != 0)
                    next[i] += Rat(m[i * r + j]) * cur[j];
        cur = std::move(next);
    }
    return Coweight{cur};
}

const std::vector<WeylElement>& WeylGroup::elements() const
{
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (enumerated_)
        return elements_;
    std::unordered_map<std::vector<std::int64_t>, bool, VecHash> seen;
    std::vector<WeylElement> out;
    auto e = identity();
    seen[e.matrix] = true;
    out.push_back(e);
    std::size_t frontier_begin = 0;
    while (frontier_begin < out.size()) {
        std::size_t frontier_end = out.size();
        for (std::size_t k = frontier_begin; k < frontier_end; ++k) {
            for (std::size_t i = 0; i < datum_.rank(); ++i) {
                auto m = mat_product(out[k].matrix, simple_matrices_[i]);
                if (seen.count(m))
                    continue;
                seen[m] = true;
                if (out.size() >= order_cap_)
                    throw BudgetError("Weyl group order exceeds cap");
                out.push_back(make_element(std::move(m)));
            }
        }
        frontier_begin = frontier_end;
    }
    std::sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
        if (a.length != b.length)
            return a.length < b.length;
        return a.word < b.word;
    });
    elements_ = std::move(out);
    enumerated_ = true;
    return elements_;
}

std::vector<BruhatCover> WeylGroup::covers_below(const WeylElement& w) const
{
    std::vector<BruhatCover> out;
    if (w.length == 0)
        return out;
    for (std::size_t k = 0; k < root_omega_.size(); ++k) {
        auto v = mat_product(reflection(k).matrix, w.matrix);
        if (length_of(v) != w.length - 1)
            continue;
        BruhatCover c;
        c.below = make_element(std::move(v));
        c.root_index = k;
        // Simple roots have a single root-basis coordinate equal to 1.
        QVec rb = datum_.root_basis_coords(datum_.positive_roots()[k]);
        std::size_t nonzero = 0, idx = 0;
        bool unit = true;
        for (std::size_t j = 0; j < rb.size(); ++j) {
            if (rb[j] != 0) {
                ++nonzero;
                idx = j;
                if (rb[j] != 1)
                    unit = false;
            }
        }
        c.simple = (nonzero == 1 && unit);
        c.simple_index = c.simple ? idx : 0;
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const BruhatCover& a, const BruhatCover& b) {
        return a.root_index < b.root_index;
    });
    return out;
}

bool WeylGroup::is_min_coset_rep(const WeylElement& w, const ParabolicSupport& support) const
{
    // w in W^P iff w(alpha_i) > 0 for each i in the support.
    std::size_t r = datum_.rank();
    for (std::size_t i : support) {
        Weight img = act(w, datum_.simple_roots()[i]);
        QVec rb = datum_.root_basis_coords(img);
        for (std::size_t j = 0; j < r; ++j)
            if (rb[j] < 0)
                return false;
    }
    return true;
}

std::vector<WeylElement> WeylGroup::min_coset_reps(const ParabolicSupport& support) const
{
    std::vector<WeylElement> out;
    for (const auto& w : elements())
        if (is_min_coset_rep(w, support))
            out.push_back(w);
    return out;
}

WeylElement WeylGroup::coset_min_rep(const WeylElement& w, const ParabolicSupport& support) const
{
    WeylElement cur = w;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i : support) {
            auto next = mat_product(cur.matrix, simple_matrices_[i]);
            if (length_of(next) == cur.length - 1) {
                cur = make_element(std::move(next));
                changed = true;
                break;
            }
        }
    }
    return cur;
}

ParabolicSupport WeylGroup::stabilizer_support(const Coweight& delta) const
{
    if (!datum_.is_dominant_coweight(delta))
        throw InvalidInput("stabilizer_support: coweight not dominant");
    ParabolicSupport out;
    for (std::size_t i = 0; i < datum_.rank(); ++i)
        if (delta.coords[i] == 0)
            out.insert(i);
    return out;
}

std::pair<WeylElement, Coweight> WeylGroup::dominant_conjugator(const Coweight& delta) const
{
    // Greedy ascent: each reflection at a negative simple pairing fixes one
    // inversion, so the resulting element has minimal length.
    Coweight cur = delta;
    WeylElement v = identity();
    for (;;) {
        std::size_t neg = datum_.rank();
        for (std::size_t i = 0; i < datum_.rank(); ++i)
            if (cur.coords[i] < 0) {
                neg = i;
                break;
            }
        if (neg == datum_.rank())
            break;
        v = multiply(simple_reflection(neg), v);
        cur = act(simple_reflection(neg), cur);
    }
    return {v, cur};
}

Weight WeylGroup::dominant_representative(const Weight& lambda) const
{
    Weight cur = lambda;
    for (;;) {
        std::size_t neg = datum_.rank();
        for (std::size_t i = 0; i < datum_.rank(); ++i)
            if (cur.coords[i] < 0) {
                neg = i;
                break;
            }
        if (neg == datum_.rank())
            return cur;
        cur = act(simple_reflection(neg), cur);
    }
}

WeylElement WeylGroup::longest_element(const ParabolicSupport& support) const
{
    WeylElement cur = identity();
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i : support) {
            auto next = mat_product(cur.matrix, simple_matrices_[i]);
            if (length_of(next) == cur.length + 1) {
                cur = make_element(std::move(next));
                changed = true;
                break;
            }
        }
    }
    return cur;
}

WeylElement WeylGroup::longest_element() const
{
    ParabolicSupport all;
    for (std::size_t i = 0; i < datum_.rank(); ++i)
        all.insert(i);
    return longest_element(all);
}

std::vector<std::size_t> WeylGroup::levi_positive_roots(const ParabolicSupport& support) const
{
    std::vector<std::size_t> out;
    const auto& roots = datum_.positive_roots();
    for (std::size_t k = 0; k < roots.size(); ++k) {
        QVec rb = datum_.root_basis_coords(roots[k]);
        bool inside = true;
        for (std::size_t j = 0; j < rb.size(); ++j)
            if (rb[j] != 0 && !support.count(j)) {
                inside = false;
                break;
            }
        if (inside)
            out.push_back(k);
    }
    return out;
}

std::size_t WeylGroup::dim_flag_variety(const ParabolicSupport& support) const
{
    return datum_.positive_roots().size() - levi_positive_roots(support).size();
}

} // namespace branchcone
