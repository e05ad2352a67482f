#ifndef BRANCHCONE_CONFIG_HPP
#define BRANCHCONE_CONFIG_HPP

#include "branchcone/branching.hpp"

#include <optional>
#include <string>
#include <vector>

namespace branchcone {

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Line-oriented key/value config with one optional matrix block:
//
//   # builder form
//   embedding = sp_in_sl(2)
//
//   # explicit form: groups plus the integer coroot-coordinate matrix of
//   # the map h -> hhat (rank(Ghat) rows, rank(G) columns)
//   g = C2
//   g_hat = A3
//   cartan_map =
//     1 0
//     1 1
//     0 1
//
//   # optional keys
//   weyl_cap = 10000000
//   rep_dim_cap = 1000000
//   nmax = 3
//   format = tsv
//   out = path.tsv
//   mu = 1 0
//   mu_hat = 0 1 0
struct JobConfig {
    std::optional<std::string> builder;
    std::optional<std::string> g_type, ghat_type;
    std::vector<std::vector<long>> cartan_map;
    std::size_t weyl_cap = 10000000;
    long rep_dim_cap = 1000000;
    int nmax = 3;
    std::string format = "tsv";
    std::optional<std::string> out;
    std::optional<std::vector<long>> mu, mu_hat;

    static JobConfig parse_file(const std::string& path);
    static JobConfig parse_text(const std::string& text);

    Embedding build_embedding() const;
};

} // namespace branchcone

#endif
