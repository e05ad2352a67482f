#include "branchcone/schubert.hpp"

#include <sstream>

namespace branchcone {

std::string SchubertClass::to_string() const
{
    if (coeffs.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [word, c] : coeffs) {
        os << (first ? "" : " + ") << c << "*[X_{" << word_to_string(word) << "}]";
        first = false;
    }
    return os.str();
}

Polynomial SchubertRing::divided_difference(std::size_t i, const Polynomial& f) const
{
    const RootDatum& d = weyl_.datum();
    // s_i sends x_i to x_i - alpha_i and fixes the other variables.
    QVec image(d.rank(), 0);
    image[i] = 1;
    for (std::size_t k = 0; k < d.rank(); ++k)
        image[k] -= d.cartan()[i][k];
    Polynomial reflected = f.substitute_var(i, image);
    Polynomial diff = f - reflected;
    if (diff.is_zero())
        return Polynomial(d.rank());
    return diff.divide_by_linear(d.simple_roots()[i].coords);
}

Polynomial SchubertRing::apply_chain(const WeylElement& w, const Polynomial& f) const
{
    Polynomial cur = f;
    for (std::size_t i : w.word) {
        if (cur.is_zero())
            break;
        cur = divided_difference(i, cur);
    }
    return cur;
}

Polynomial SchubertRing::bgg(const WeylElement& w) const
{
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = bgg_cache_.find(w.word);
        if (it != bgg_cache_.end())
            return it->second;
    }
    const RootDatum& d = weyl_.datum();
    Polynomial result(d.rank());
    WeylElement w0 = weyl_.longest_element();
    if (w.length == w0.length) {
        // Top class: product of the positive roots, scaled so the full
        // extraction chain has constant term 1.
        Polynomial prod = Polynomial::constant(d.rank(), 1);
        for (const auto& root : d.positive_roots())
            prod = prod * Polynomial::linear(root.coords);
        Rat scale = apply_chain(weyl_.inverse(w0), prod).constant_term();
        result = prod * (Rat(1) / scale);
    } else {
        // Any ascent j: P_w = A_j P_{s_j w}. Use the least one.
        std::size_t j = d.rank();
        for (std::size_t i = 0; i < d.rank(); ++i) {
            WeylElement up = weyl_.multiply(weyl_.simple_reflection(i), w);
            if (up.length == w.length + 1) {
                j = i;
                break;
            }
        }
        if (j == d.rank())
            throw std::logic_error("bgg: no ascent below the longest element");
        result = divided_difference(j, bgg(weyl_.multiply(weyl_.simple_reflection(j), w)));
    }
    std::lock_guard<std::mutex> lock(cache_mutex_);
    bgg_cache_.emplace(w.word, result);
    return result;
}

Polynomial SchubertRing::class_polynomial(const WeylElement& w, const ParabolicSupport& support) const
{
    // [X_w^P] corresponds to the BGG polynomial indexed by w0^P w^{-1} w0:
    // the extraction chains here compose so that this, not w0 w w0^P, is the
    // polynomial whose chain pairs to 1 against the class.
    WeylElement w0 = weyl_.longest_element();
    WeylElement w0p = weyl_.longest_element(support);
    return bgg(weyl_.multiply(weyl_.multiply(w0p, weyl_.inverse(w)), w0));
}

SchubertClass SchubertRing::expand(const Polynomial& f, const ParabolicSupport& support) const
{
    if (!f.is_homogeneous())
        throw InvalidInput("expand: polynomial is not homogeneous");
    SchubertClass out;
    out.support = support;
    if (f.is_zero())
        return out;
    long deg = f.degree();
    long dim = static_cast<long>(weyl_.dim_flag_variety(support));
    long target_len = dim - deg;
    if (target_len < 0)
        return out;
    WeylElement w0 = weyl_.longest_element();
    WeylElement w0p = weyl_.longest_element(support);
    for (const auto& w : weyl_.min_coset_reps(support)) {
        if (static_cast<long>(w.length) != target_len)
            continue;
        WeylElement index = weyl_.multiply(weyl_.multiply(w0p, weyl_.inverse(w)), w0);
        Rat c = apply_chain(index, f).constant_term();
        if (c != 0)
            out.coeffs.emplace(w.word, c);
    }
    return out;
}

Rat SchubertRing::cup_coefficient(const WeylElement& u, const WeylElement& v,
                                  const WeylElement& target,
                                  const ParabolicSupport& support) const
{
    if (!weyl_.is_min_coset_rep(u, support) || !weyl_.is_min_coset_rep(v, support) ||
        !weyl_.is_min_coset_rep(target, support))
        throw InvalidInput("cup_coefficient: arguments must be minimal coset representatives");
    long dim = static_cast<long>(weyl_.dim_flag_variety(support));
    long codim_sum = (dim - static_cast<long>(u.length)) + (dim - static_cast<long>(v.length));
    if (codim_sum != dim - static_cast<long>(target.length))
        return 0;
    Polynomial prod = class_polynomial(u, support) * class_polynomial(v, support);
    WeylElement w0 = weyl_.longest_element();
    WeylElement w0p = weyl_.longest_element(support);
    WeylElement index = weyl_.multiply(weyl_.multiply(w0p, weyl_.inverse(target)), w0);
    return apply_chain(index, prod).constant_term();
}

Rat SchubertRing::point_coefficient(const SchubertClass& c, const WeylElement& w) const
{
    // Coefficient of [X_e] in c * [X_w]; only the Poincare-dual partner of w
    // inside c can contribute.
    Rat out = 0;
    for (const auto& [word, coeff] : c.coeffs) {
        WeylElement u = weyl_.from_word(word);
        Rat k = cup_coefficient(u, w, weyl_.identity(), c.support);
        out += coeff * k;
    }
    return out;
}

Weight SchubertRing::rho_levi(const ParabolicSupport& support) const
{
    const RootDatum& d = weyl_.datum();
    QVec sum(d.rank(), 0);
    for (std::size_t k : weyl_.levi_positive_roots(support))
        for (std::size_t j = 0; j < d.rank(); ++j)
            sum[j] += d.positive_roots()[k].coords[j];
    for (auto& x : sum)
        x /= 2;
    return Weight{sum};
}

Weight SchubertRing::chi_weight(const WeylElement& w, const ParabolicSupport& support) const
{
    const RootDatum& d = weyl_.datum();
    Weight rl = rho_levi(support);
    Weight winv_rho = weyl_.act(weyl_.inverse(w), d.rho());
    QVec out(d.rank());
    for (std::size_t i = 0; i < d.rank(); ++i)
        out[i] = d.rho().coords[i] - 2 * rl.coords[i] + winv_rho.coords[i];
    return Weight{out};
}

} // namespace branchcone
