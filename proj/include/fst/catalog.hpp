#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fst/group.hpp"
#include "fst/rep.hpp"

namespace fst {

/// A labelled family of pairwise-inequivalent irreducible reps of one K.
struct IrrepFamily {
    std::vector<std::pair<std::string, UnitaryRep>> items;

    const UnitaryRep& find(const std::string& label) const;
};

/// Builds a named representation from the built-in catalog on the given
/// subgroup. Names:
///   trivial
///   cyclic:<n>:chi<j>          characters of a cyclic K of order n
///   dihedral:<n>:triv|sign     1-dim reps of a dihedral K of order 2n
///   dihedral:<n>:sgn2|sgn3     (n even only)
///   dihedral:<n>:rho<h>        2-dim reps, 1 <= h < n/2
///   s3:triv|s3:sign|s3:std     aliases for dihedral:3:*
UnitaryRep catalog_rep(const FiniteGroup& g, const Subgroup& k, const std::string& name);

/// The full catalog for K when its shape is recognized (cyclic or
/// dihedral); validated pairwise inequivalent, each irreducible.
IrrepFamily catalog_all(const FiniteGroup& g, const Subgroup& k);

}  // namespace fst
