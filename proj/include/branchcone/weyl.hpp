#ifndef BRANCHCONE_WEYL_HPP
#define BRANCHCONE_WEYL_HPP

#include "branchcone/root_datum.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <unordered_map>
#include <vector>

namespace branchcone {

// Simple indices here are 0-based throughout the API; the 1-based names
// ("s2 s1 s2") appear only in serialized words.
using ParabolicSupport = std::set<std::size_t>;

// A Weyl group element in canonical form: its action matrix on the weight
// lattice in fundamental-weight coordinates, plus the lexicographically
// least reduced word (cached) and the length.
struct WeylElement {
    std::vector<std::int64_t> matrix; // row-major rank x rank
    std::vector<std::size_t> word;    // lex-least reduced word, 0-based letters
    std::size_t length = 0;

    bool operator==(const WeylElement& o) const { return matrix == o.matrix; }
    bool operator!=(const WeylElement& o) const { return matrix != o.matrix; }
    bool is_identity() const { return length == 0; }
};

// Deterministic ordering: by length, then lex on the canonical word.
struct WeylOrder {
    bool operator()(const WeylElement& a, const WeylElement& b) const
    {
        if (a.length != b.length)
            return a.length < b.length;
        return a.word < b.word;
    }
};

std::string word_to_string(const std::vector<std::size_t>& word, bool hat = false);
std::vector<std::size_t> word_from_string(const std::string& s);

struct BruhatCover {
    WeylElement below;       // v with v -> w, i.e. w = s_gamma v, l(w) = l(v)+1
    std::size_t root_index;  // index of gamma into positive_roots()
    bool simple;             // gamma is a simple root
    std::size_t simple_index; // valid when simple
};

class WeylGroup {
public:
    explicit WeylGroup(const RootDatum& datum, std::size_t order_cap = 10000000);

    const RootDatum& datum() const { return datum_; }

    WeylElement identity() const;
    WeylElement simple_reflection(std::size_t i) const;
    WeylElement reflection(std::size_t positive_root_index) const;
    WeylElement multiply(const WeylElement& a, const WeylElement& b) const;
    WeylElement inverse(const WeylElement& a) const;
    WeylElement from_word(const std::vector<std::size_t>& word) const;

    Weight act(const WeylElement& w, const Weight& lambda) const;
    Coweight act(const WeylElement& w, const Coweight& delta) const;

    // Number of positive roots sent to negative roots.
    std::size_t length_of(const std::vector<std::int64_t>& matrix) const;

    // Full enumeration, sorted by (length, lex word); cached, thread-safe.
    const std::vector<WeylElement>& elements() const;
    std::size_t order() const { return elements().size(); }

    std::vector<BruhatCover> covers_below(const WeylElement& w) const;

    bool is_min_coset_rep(const WeylElement& w, const ParabolicSupport& support) const;
    std::vector<WeylElement> min_coset_reps(const ParabolicSupport& support) const;
    // Minimal-length representative of the coset w W_support.
    WeylElement coset_min_rep(const WeylElement& w, const ParabolicSupport& support) const;

    ParabolicSupport stabilizer_support(const Coweight& delta) const;

    // Minimal-length v with v(delta) dominant; returns (v, dominant image).
    std::pair<WeylElement, Coweight> dominant_conjugator(const Coweight& delta) const;
    // Dominant-chamber representative of a weight.
    Weight dominant_representative(const Weight& lambda) const;

    WeylElement longest_element(const ParabolicSupport& support) const;
    WeylElement longest_element() const;

    std::size_t dim_flag_variety(const ParabolicSupport& support) const;
    // Positive-root indices of the Levi given by the support.
    std::vector<std::size_t> levi_positive_roots(const ParabolicSupport& support) const;

private:
    WeylElement make_element(std::vector<std::int64_t> matrix) const;
    std::vector<std::size_t> canonical_word(const std::vector<std::int64_t>& matrix,
                                            std::size_t length) const;
    std::vector<std::int64_t> simple_matrix(std::size_t i) const;
    std::vector<std::int64_t> mat_product(const std::vector<std::int64_t>& a,
                                          const std::vector<std::int64_t>& b) const;

    const RootDatum& datum_;
    std::size_t order_cap_;
    std::vector<std::vector<std::int64_t>> simple_matrices_;
    std::vector<std::vector<std::int64_t>> simple_coweight_matrices_;
    // Integer data of positive roots/coroots for fast length computation:
    // root_omega_[k] = omega-coords of positive root k (integers),
    // coroot_coords_[k] = coroot-basis coords of its coroot.
    std::vector<std::vector<std::int64_t>> root_omega_;
    std::vector<std::vector<std::int64_t>> coroot_basis_;
    struct RootVecHash {
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
    std::unordered_map<std::vector<std::int64_t>, std::size_t, RootVecHash> positive_root_index_;

    mutable std::mutex cache_mutex_;
    mutable std::vector<WeylElement> elements_;
    mutable bool enumerated_ = false;
};

} // namespace branchcone

#endif
