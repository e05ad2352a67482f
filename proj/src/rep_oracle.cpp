#include "branchcone/rep_oracle.hpp"

#include <algorithm>
#include <queue>

namespace branchcone {

namespace {

// Height-then-lex order key used to pick maximal weights during peeling.
struct HeightLess {
    const RootDatum& d;
    bool operator()(const QVec& a, const QVec& b) const
    {
        QVec ra = d.root_basis_coords(Weight{a});
        QVec rb = d.root_basis_coords(Weight{b});
        Rat ha = 0, hb = 0;
        for (const auto& x : ra)
            ha += x;
        for (const auto& x : rb)
            hb += x;
        if (ha != hb)
            return ha < hb;
        return a < b;
    }
};

// lambda - mu in the nonnegative-integer root lattice?
bool below(const RootDatum& d, const QVec& lambda, const QVec& mu)
{
    QVec diff(lambda.size());
    for (std::size_t i = 0; i < lambda.size(); ++i)
        diff[i] = lambda[i] - mu[i];
    QVec rc = d.root_basis_coords(Weight{diff});
    for (const auto& c : rc)
        if (c < 0 || c.get_den() != 1)
            return false;
    return true;
}

} // namespace

Int CharacterOracle::dimension(const Weight& lambda) const
{
    const RootDatum& d = weyl_.datum();
    if (!d.is_dominant(lambda) || !d.is_integral(lambda))
        throw InvalidInput("dimension: weight must be dominant integral");
    Rat num = 1, den = 1;
    QVec lr(d.rank());
    for (std::size_t i = 0; i < d.rank(); ++i)
        lr[i] = lambda.coords[i] + 1; // lambda + rho
    for (const auto& alpha : d.positive_roots()) {
        num *= d.form(Weight{lr}, alpha);
        den *= d.form(d.rho(), alpha);
    }
    Rat out = num / den;
    if (out.get_den() != 1)
        throw std::logic_error("Weyl dimension formula returned a non-integer");
    return out.get_num();
}

std::map<QVec, Int> CharacterOracle::dominant_multiplicities(const Weight& lambda) const
{
    const RootDatum& d = weyl_.datum();
    if (dimension(lambda) > dim_budget_)
        throw BudgetError("irreducible dimension exceeds the budget");
    if (d.rank() == 0)
        return {{QVec{}, 1}};

    // Collect dominant weights below lambda by BFS on simple-root steps.
    std::set<QVec> dominant;
    std::queue<QVec> queue;
    queue.push(lambda.coords);
    std::set<QVec> seen{lambda.coords};
    while (!queue.empty()) {
        QVec cur = queue.front();
        queue.pop();
        if (d.is_dominant(Weight{cur}))
            dominant.insert(cur);
        for (const auto& alpha : d.simple_roots()) {
            QVec next(cur.size());
            for (std::size_t i = 0; i < cur.size(); ++i)
                next[i] = cur[i] - alpha.coords[i];
            // Stay inside the dominant-orbit hull: |next|^2 <= |lambda|^2.
            if (seen.count(next))
                continue;
            if (d.form(Weight{next}, Weight{next}) > d.form(lambda, lambda))
                continue;
            seen.insert(next);
            queue.push(next);
        }
    }

    // Freudenthal recursion on the dominant weights, highest first.
    std::vector<QVec> order(dominant.begin(), dominant.end());
    std::sort(order.begin(), order.end(), HeightLess{d});
    std::reverse(order.begin(), order.end());
    std::map<QVec, Int> mult;
    Rat norm_lambda = d.form(Weight{QVec(lambda.coords)}, Weight{QVec(lambda.coords)});
    QVec lam_rho(d.rank());
    for (std::size_t i = 0; i < d.rank(); ++i)
        lam_rho[i] = lambda.coords[i] + 1;
    Rat lam_rho_sq = d.form(Weight{lam_rho}, Weight{lam_rho});
    auto lookup = [&](const QVec& w) -> Int {
        QVec dom = weyl_.dominant_representative(Weight{w}).coords;
        auto it = mult.find(dom);
        return it == mult.end() ? Int(0) : it->second;
    };
    for (const auto& mu : order) {
        if (mu == lambda.coords) {
            mult[mu] = 1;
            continue;
        }
        if (!below(d, lambda.coords, mu)) {
            continue;
        }
        QVec mu_rho(d.rank());
        for (std::size_t i = 0; i < d.rank(); ++i)
            mu_rho[i] = mu[i] + 1;
        Rat denom = lam_rho_sq - d.form(Weight{mu_rho}, Weight{mu_rho});
        if (denom == 0)
            throw std::logic_error("Freudenthal: vanishing denominator");
        Rat acc = 0;
        for (const auto& alpha : d.positive_roots()) {
            for (int k = 1;; ++k) {
                QVec shifted(d.rank());
                for (std::size_t i = 0; i < d.rank(); ++i)
                    shifted[i] = mu[i] + k * alpha.coords[i];
                if (d.form(Weight{shifted}, Weight{shifted}) > norm_lambda && k > 1)
                    break;
                Int m = lookup(shifted);
                if (m == 0) {
                    // No contribution; stop once we leave the weight hull.
                    if (d.form(Weight{shifted}, Weight{shifted}) > norm_lambda)
                        break;
                    continue;
                }
                acc += Rat(m) * d.form(Weight{shifted}, alpha);
            }
        }
        Rat value = 2 * acc / denom;
        if (value.get_den() != 1)
            throw std::logic_error("Freudenthal: non-integer multiplicity");
        if (value != 0)
            mult[mu] = value.get_num();
    }
    // Cross-check against the Weyl dimension formula.
    Int total = 0;
    for (const auto& [mu, m] : mult)
        total += m * Int(orbit(Weight{mu}).size());
    if (total != dimension(lambda))
        throw std::logic_error("Freudenthal: multiplicities do not sum to the dimension");
    return mult;
}

std::vector<Weight> CharacterOracle::orbit(const Weight& lambda) const
{
    std::set<QVec> seen{lambda.coords};
    std::vector<QVec> frontier{lambda.coords};
    while (!frontier.empty()) {
        std::vector<QVec> next;
        for (const auto& w : frontier) {
            for (std::size_t i = 0; i < weyl_.datum().rank(); ++i) {
                Weight img = weyl_.act(weyl_.simple_reflection(i), Weight{w});
                if (seen.insert(img.coords).second)
                    next.push_back(img.coords);
            }
        }
        frontier = std::move(next);
    }
    std::vector<Weight> out;
    for (const auto& w : seen)
        out.push_back(Weight{w});
    return out;
}

std::map<QVec, Int> CharacterOracle::all_multiplicities(const Weight& lambda) const
{
    std::map<QVec, Int> out;
    for (const auto& [mu, m] : dominant_multiplicities(lambda))
        for (const auto& w : orbit(Weight{mu}))
            out[w.coords] += m;
    return out;
}

std::map<QVec, Int> CharacterOracle::decompose(std::map<QVec, Int> character) const
{
    const RootDatum& d = weyl_.datum();
    std::map<QVec, Int> out;
    HeightLess less{d};
    while (!character.empty()) {
        // Maximal weight with positive multiplicity.
        auto best = character.end();
        for (auto it = character.begin(); it != character.end(); ++it) {
            if (it->second == 0)
                continue;
            if (it->second < 0)
                throw std::logic_error("decompose: negative multiplicity");
            if (best == character.end() || less(best->first, it->first))
                best = it;
        }
        if (best == character.end())
            break;
        Weight top{best->first};
        if (!d.is_dominant(top))
            throw std::logic_error("decompose: maximal weight is not dominant");
        Int m = best->second;
        out[top.coords] += m;
        for (const auto& [w, k] : all_multiplicities(top)) {
            auto it = character.find(w);
            if (it == character.end() || it->second < m * k)
                throw std::logic_error("decompose: invalid character");
            it->second -= m * k;
            if (it->second == 0)
                character.erase(it);
        }
    }
    return out;
}

Int branch_multiplicity(const Embedding& emb, const Weight& mu, const Weight& mu_hat,
                        Int dim_budget)
{
    const RootDatum& d = emb.datum();
    const RootDatum& dh = emb.datum_hat();
    if (!d.is_dominant(mu) || !dh.is_dominant(mu_hat))
        throw InvalidInput("branch_multiplicity: weights must be dominant");
    CharacterOracle oracle_hat(*emb.g_hat().weyl, dim_budget);
    CharacterOracle oracle(*emb.g().weyl, dim_budget);
    // Restrict the character of V(mu_hat) to h.
    std::map<QVec, Int> restricted;
    for (const auto& [w_hat, m] : oracle_hat.all_multiplicities(mu_hat))
        restricted[emb.restrict_weight(Weight{w_hat}).coords] += m;
    std::map<QVec, Int> decomposition = oracle.decompose(std::move(restricted));
    // Multiplicity of V(mu)^* = V(-w0 mu).
    Weight dual = emb.g().weyl->act(emb.g().weyl->longest_element(), mu);
    for (auto& c : dual.coords)
        c = -c;
    auto it = decomposition.find(dual.coords);
    return it == decomposition.end() ? Int(0) : it->second;
}

std::optional<int> saturation_witness(const Embedding& emb, const Weight& mu,
                                      const Weight& mu_hat, int n_max, Int dim_budget)
{
    for (int n = 1; n <= n_max; ++n) {
        Weight nm{QVec(mu.coords.size())}, nmh{QVec(mu_hat.coords.size())};
        for (std::size_t i = 0; i < mu.coords.size(); ++i)
            nm.coords[i] = Rat(n) * mu.coords[i];
        for (std::size_t i = 0; i < mu_hat.coords.size(); ++i)
            nmh.coords[i] = Rat(n) * mu_hat.coords[i];
        if (!emb.datum().is_integral(nm) || !emb.datum_hat().is_integral(nmh))
            continue;
        if (branch_multiplicity(emb, nm, nmh, dim_budget) > 0)
            return n;
    }
    return std::nullopt;
}

Int fulton_invariant_dim(const FacetDatum& facet, int n, Int dim_budget)
{
    if (n < 1)
        throw InvalidInput("fulton_invariant_dim: n must be positive");
    LeviPair levi = make_levi_pair(facet.std_emb, facet.delta);
    const auto& ring = *facet.std_emb.g().ring;
    const auto& ring_hat = *facet.std_emb.g_hat().ring;
    Weight chi = ring.chi_weight(facet.w, facet.support);
    Weight chi_hat = ring_hat.chi_weight(facet.w_hat, facet.support_hat);
    Weight nu = levi.restrict_to_levi_g(chi);
    Weight nu_hat = levi.restrict_to_levi_ghat(chi_hat);
    for (auto& c : nu.coords)
        c *= n;
    for (auto& c : nu_hat.coords)
        c *= n;
    return branch_multiplicity(levi.inner, nu, nu_hat, dim_budget);
}

} // namespace branchcone
