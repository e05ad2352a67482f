#ifndef BRANCHCONE_EMIT_HPP
#define BRANCHCONE_EMIT_HPP

#include "branchcone/cone_engine.hpp"

#include <string>

namespace branchcone {

// Table emitters; both formats are deterministic for a fixed config.
std::string emit_facets_tsv(ConeEngine& engine);
std::string emit_facets_json(ConeEngine& engine);
std::string emit_rays_tsv(ConeEngine& engine);
std::string emit_rays_json(ConeEngine& engine);

struct CheckReport {
    bool member = false;
    std::vector<std::string> violated; // provenance of violated inequalities
    std::optional<int> witness;        // oracle witness, when requested
    bool witness_searched = false;
    int nmax = 0;
};

CheckReport run_check(ConeEngine& engine, const std::vector<long>& mu,
                      const std::vector<long>& mu_hat, int nmax, long rep_dim_cap,
                      bool search_witness);
std::string check_to_string(const CheckReport& report, bool json);

// Cross-check suite: oracle equivalence, Prop 63 on case-B facets, the
// cover-pairing lemmas, irredundancy in case B, and deformed-pullback
// consistency. Returns human-readable lines; ok = all passed.
struct VerifyReport {
    bool ok = true;
    std::vector<std::string> lines;
};

VerifyReport run_verify(ConeEngine& engine);

} // namespace branchcone

#endif
