#pragma once

#include "assoc/cyclotomic.hpp"

#include <string>
#include <vector>

namespace assoc {

/// A subfield K of Q(zeta_n), given through the Galois correspondence by the
/// subgroup of (Z/nZ)^x fixing it pointwise.
class SubfieldSpec {
public:
    /// Throws NotAUnit if a generator is not coprime to the conductor.
    SubfieldSpec(long ambient_conductor, std::vector<long> generators);

    /// K = Q: the whole unit group fixes it.
    static SubfieldSpec rationals(long ambient_conductor);
    /// Real subfield (fixed by -1), optionally shrunk further by extra generators.
    static SubfieldSpec real(long ambient_conductor, std::vector<long> extra = {});
    /// K = Q(zeta_n) itself; only the identity fixes it.
    static SubfieldSpec whole(long ambient_conductor);
    /// The fixed field of the subgroup generated by both fixing groups, i.e.
    /// the intersection of the two fields.
    static SubfieldSpec intersection(const SubfieldSpec& a, const SubfieldSpec& b);

    long ambient_conductor() const noexcept { return ambient_; }
    const std::vector<long>& generators() const noexcept { return generators_; }
    /// The closed fixing subgroup, sorted ascending.
    const std::vector<long>& fixing_group() const noexcept { return group_; }

    bool fixes(long k) const;

    /// Re-express the spec over a multiple m of the ambient conductor: the
    /// fixing group becomes the preimage under (Z/m)^x -> (Z/n)^x.
    SubfieldSpec lifted(long m) const;

    std::string describe() const;

private:
    long ambient_;
    std::vector<long> generators_;
    std::vector<long> group_;
};

/// True iff x is fixed by every generator of K's fixing group. Throws
/// ConductorMismatch if x's conductor does not divide K's ambient conductor.
bool subfield_membership(const Cyclotomic& x, const SubfieldSpec& K);

}  // namespace assoc
