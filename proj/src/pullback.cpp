#include "branchcone/pullback.hpp"

namespace branchcone {

SchubertClass pullback(const Embedding& emb, const WeylElement& w_hat, const Coweight& delta)
{
    const auto& weyl = *emb.g().weyl;
    const auto& weyl_hat = *emb.g_hat().weyl;
    Coweight image = emb.map_coweight(delta);
    ParabolicSupport sup = weyl.stabilizer_support(delta);
    ParabolicSupport sup_hat = weyl_hat.stabilizer_support(image);
    if (!weyl_hat.is_min_coset_rep(w_hat, sup_hat))
        throw InvalidInput("pullback: w_hat is not a minimal coset representative");
    Polynomial cls = emb.g_hat().ring->class_polynomial(w_hat, sup_hat);
    Polynomial restricted = cls.substitute_all(emb.restriction_matrix(), emb.datum().rank());
    return emb.g().ring->expand(restricted, sup);
}

Rat bk_numeric(const Embedding& emb, const WeylElement& w, const WeylElement& w_hat,
               const Coweight& delta)
{
    const auto& d = emb.datum();
    const auto& dh = emb.datum_hat();
    const auto& weyl = *emb.g().weyl;
    const auto& weyl_hat = *emb.g_hat().weyl;
    Coweight image = emb.map_coweight(delta);
    Weight rho_sum{QVec(d.rank())};
    Weight winv_rho = weyl.act(weyl.inverse(w), d.rho());
    for (std::size_t i = 0; i < d.rank(); ++i)
        rho_sum.coords[i] = d.rho().coords[i] + winv_rho.coords[i];
    Weight rho_hat_sum{QVec(dh.rank())};
    Weight whinv_rho = weyl_hat.act(weyl_hat.inverse(w_hat), dh.rho());
    for (std::size_t i = 0; i < dh.rank(); ++i)
        rho_hat_sum.coords[i] = dh.rho().coords[i] + whinv_rho.coords[i];
    Rat out = d.pair(rho_sum, delta);
    out -= 2 * d.pair(d.rho(), delta);
    out += dh.pair(rho_hat_sum, image);
    return out;
}

SchubertClass deformed_pullback(const Embedding& emb, const WeylElement& w_hat,
                                const Coweight& delta)
{
    const auto& d = emb.datum();
    const auto& dh = emb.datum_hat();
    const auto& weyl = *emb.g().weyl;
    const auto& weyl_hat = *emb.g_hat().weyl;
    Coweight image = emb.map_coweight(delta);
    SchubertClass cls = pullback(emb, w_hat, delta);

    Weight whinv_rho = weyl_hat.act(weyl_hat.inverse(w_hat), dh.rho());
    Rat hat_side = dh.pair(dh.rho(), image) + dh.pair(whinv_rho, image);

    SchubertClass out;
    out.support = cls.support;
    for (const auto& [word, c] : cls.coeffs) {
        WeylElement u = weyl.from_word(word);
        Weight uinv_rho = weyl.act(weyl.inverse(u), d.rho());
        Rat g_side = d.pair(d.rho(), delta) + d.pair(uinv_rho, delta);
        if (g_side == hat_side)
            out.coeffs.emplace(word, c);
    }
    return out;
}

Rat facet_product_coefficient(const Embedding& emb, const WeylElement& w,
                              const WeylElement& w_hat, const Coweight& delta)
{
    const auto& weyl = *emb.g().weyl;
    ParabolicSupport sup = weyl.stabilizer_support(delta);
    if (!weyl.is_min_coset_rep(w, sup))
        throw InvalidInput("facet product: w is not a minimal coset representative");
    SchubertClass pulled = pullback(emb, w_hat, delta);
    return emb.g().ring->point_coefficient(pulled, w);
}

bool is_facet_pair(const Embedding& emb, const WeylElement& w, const WeylElement& w_hat,
                   const Coweight& delta)
{
    if (bk_numeric(emb, w, w_hat, delta) != 0)
        return false;
    return facet_product_coefficient(emb, w, w_hat, delta) == 1;
}

} // namespace branchcone
