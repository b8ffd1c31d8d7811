#pragma once

#include "partition.hpp"
#include "permutation.hpp"

namespace reprlab {

// Centralizer order z_rho = prod i^{m_i} m_i!.
BigInt centralizer_order(const Partition& rho);

// Irreducible character chi^lambda_rho, |rho| = |lambda|. Border-strip
// recursion on beta numbers, memoized.
BigInt character(const Partition& lambda, const Partition& rho);

// chi^lambda on (rho, 1^{n-|rho|}) divided by dim lambda; |rho| <= |lambda|.
Rational normalized_character(const Partition& lambda, const Partition& rho);

// p#_rho(lambda) = n^{down |rho|} * normalized character; 0 when |rho| > n.
Rational p_sharp(const Partition& rho, const Partition& lambda);

// Number of skew SYT via the character sum over cycle types,
// dim lambda/nu = sum_rho chi^nu_rho chi^lambda_{(rho,1...)} / z_rho.
BigInt skew_dimension(const Partition& lambda, const Partition& nu);

// p_k of the content multiset minus the Catalan correction
// Cat(k/2)/(k/2+1) * n^{down (k/2+1)} (zero for odd k).
Rational modified_power_sum_contents(const Partition& lambda, int k);

} // namespace reprlab
