#ifndef BRANCHCONE_POLYHEDRA_HPP
#define BRANCHCONE_POLYHEDRA_HPP

#include "branchcone/rational.hpp"

#include <set>
#include <vector>

namespace branchcone {

// Exact rational cone algebra. An H-representation is a list of integer row
// vectors a with the meaning a . x >= 0; equalities enter as row pairs.
struct VRep {
    std::vector<ZVec> rays;      // primitive, sorted
    std::vector<ZVec> lineality; // canonical (RREF-scaled) basis

    bool operator==(const VRep& o) const
    {
        return rays == o.rays && lineality == o.lineality;
    }
};

class RationalCone {
public:
    RationalCone(std::size_t dim, std::vector<ZVec> hrep)
        : dim_(dim), hrep_(std::move(hrep))
    {
    }

    std::size_t dim() const { return dim_; }
    const std::vector<ZVec>& hrep() const { return hrep_; }

    // Double description: extremal rays plus lineality basis.
    const VRep& vrep() const;

    bool is_member(const QVec& x) const;
    bool on_face(const QVec& x, const ZVec& row) const;
    // Member whose set of tight inequalities has rank dim-1 (and x != 0);
    // for the pointed cones used here this certifies an extremal ray.
    bool is_extremal_ray(const QVec& x) const;
    // Dimension of the face {y in cone : row . y = 0}.
    std::size_t face_dimension(const ZVec& row) const;
    std::size_t cone_dimension() const;

    // Greedy minimal subsystem defining the same cone. Rows with index below
    // protected_count are never dropped.
    std::vector<ZVec> irredundant_subset(std::size_t protected_count = 0) const;
    // Indices (>= protected_count) of rows dropped by the greedy filter.
    std::vector<std::size_t> redundant_rows(std::size_t protected_count = 0) const;

    static RationalCone intersect(const RationalCone& a, const RationalCone& b);

private:
    std::size_t dim_;
    std::vector<ZVec> hrep_;
    mutable bool converted_ = false;
    mutable VRep vrep_;
};

// Core double-description conversion.
VRep dd_convert(const std::vector<ZVec>& hrep, std::size_t dim);

} // namespace branchcone

#endif
