#pragma once

#include "mpoly.hpp"
#include "series.hpp"
#include "strictpartition.hpp"

namespace reprlab {

// Renormalized spin character on the odd cycle (k, 1^{n-k}) through the
// closed pole-sum formula; zero when k > |lambda|; k odd.
Rational spin_p_sharp_explicit(int k, const StrictPartition& lambda);

// Same value as the z^{-1} coefficient of -psi_k(z; lambda)/(4k) in the
// truncated descending expansion.
Rational spin_p_sharp_series(int k, const StrictPartition& lambda);

// Variable layout for multirectangular polynomials: p_1..p_m then q_1..q_m.
std::vector<std::string> stanley_variable_names(int m);

// F_k(p_1..p_m; q_1..q_m) for k odd; coefficients lie in Z/2.
MultivarPoly stanley_poly(int k, int m);

// The same residue extraction without the parity restriction; the k-even
// values vanish identically.
MultivarPoly stanley_poly_any(int k, int m);

// F_k evaluated at the multirectangular coordinates of lambda equals the
// explicit formula.
bool stanley_eval_consistency(int k, const StrictPartition& lambda);

// Monomials of -F_k(-p; q) carrying a negative coefficient (conjecturally none).
std::vector<std::pair<MultivarPoly::Monomial, Rational>> sign_flip_positivity(int k, int m);

// F_k(p; p) for k = 2j-1 as a univariate polynomial in p; the closed form is
// (-1)^j/2 Cat(j-1) (p+j)^{down 2j}.
MultivarPoly stanley_catalan_specialization(int k);
MultivarPoly stanley_catalan_closed_form(int k);

// Leading (degree k+1) term of F_k, through four routes.
MultivarPoly leading_term(int k, int m);                  // homogeneous part of F_k
MultivarPoly leading_term_inverse(int k, int m);          // compositional inverse of z prod(...)
MultivarPoly leading_term_cumulant(int k, int m);         // free cumulant of the D(lambda) measure
MultivarPoly leading_term_expansion(int k, int m);        // direct positive expansion, sign-flipped

// (-1)^k psi_k(z) = psi_k(-z + k). Full polynomial identity in z; the p, q
// coefficients are kept symbolic when symbolic_pq is set and otherwise
// evaluated at seeded random rationals.
bool psi_functional_equation_holds(int k, int m, bool symbolic_pq);

} // namespace reprlab
