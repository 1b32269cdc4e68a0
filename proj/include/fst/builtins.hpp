#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fst/induce.hpp"

namespace fst {

/// Multiplication tables for the stock groups.
///   cyclic:<n>   integers mod n
///   s3           permutations of three points, lexicographic one-line order
///   d4           square symmetries, s^a r^b with index a*4 + b
FiniteGroup builtin_group(const std::string& name);

/// Stock (G, K) pairs used by the verification suites:
///   z4_z2, s3_a3, s3_tau, d4_c4, z6_z3    the quotient instances
///   s3_s3, d4_d4                          K = G (degenerate induction)
///   s3_e                                  K = {identity} (full induction)
std::shared_ptr<const GroupSystem> builtin_instance(const std::string& name);

/// The five quotient instances, in suite order.
const std::vector<std::string>& builtin_instance_names();

}  // namespace fst
