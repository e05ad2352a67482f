#ifndef BRANCHCONE_PULLBACK_HPP
#define BRANCHCONE_PULLBACK_HPP

#include "branchcone/branching.hpp"

namespace branchcone {

// All operations below assume the embedding is standardized for delta: both
// delta and its image are dominant, so P(delta) and Phat(delta) are standard
// parabolics on their respective sides.

// phi_delta^* [Xhat_what], expanded in the Schubert basis of G/P(delta).
SchubertClass pullback(const Embedding& emb, const WeylElement& w_hat, const Coweight& delta);

// <rho + w^{-1} rho, delta> - <2 rho, delta> + <rhohat + what^{-1} rhohat, iota(delta)>.
Rat bk_numeric(const Embedding& emb, const WeylElement& w, const WeylElement& w_hat,
               const Coweight& delta);

// phi_delta^odot: the pullback with each coefficient on [X_u] zeroed unless
// <rho + u^{-1} rho, delta> = <rhohat + what^{-1} rhohat, iota(delta)>.
SchubertClass deformed_pullback(const Embedding& emb, const WeylElement& w_hat,
                                const Coweight& delta);

// phi^odot([Xhat_what]) odot_0 [X_w] = [X_e]: the coefficient of the point
// class in phi^*[Xhat_what] . [X_w] equals 1 and the numerical criterion
// vanishes.
bool is_facet_pair(const Embedding& emb, const WeylElement& w, const WeylElement& w_hat,
                   const Coweight& delta);

// Coefficient of the point class [X_e] in phi^*[Xhat_what] . [X_w].
Rat facet_product_coefficient(const Embedding& emb, const WeylElement& w,
                              const WeylElement& w_hat, const Coweight& delta);

} // namespace branchcone

#endif
