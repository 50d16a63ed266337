#pragma once

#include "qloop/cartan.hpp"
#include "qloop/element.hpp"

namespace qloop {

/// True when no H letter stands left of an E letter (sym letters count as H).
bool is_normal_ordered(const Word& w);

/// Rewrites x so every monomial is an E-word followed by an H-word, using
/// H(i,s) E(j,l) = E(j,l) H(i,s) + ([s b_ij]/s) E(j, s+l).
/// Xi/Chi/Theta/SchurB letters are expanded into power sums first.
Element normal_order_H(const Element& x, const CartanData& cartan);

/// Rank-1 straightening: rewrites every E-word of x (single node, H-tails
/// pass through) into combinations of non-increasing degree sequences via
///   E_a E_{a+1} = v^B E_{a+1} E_a,
///   E_a E_b     = v^B E_b E_a + v^B E_{a+1} E_{b-1} - E_{b-1} E_{a+1}   (a < b-1),
/// with B = b_ii.  Input is normal-ordered first.
Element straighten_rank1(const Element& x, const CartanData& cartan);

/// Left-hand side of the quadratic loop relation; zero in the algebra:
/// v^{b_ij} E_{i,l+1} E_{j,m} - E_{j,m} E_{i,l+1}
///   - E_{i,l} E_{j,m+1} + v^{b_ij} E_{j,m+1} E_{i,l}.
Element quadratic_residual(int i, int j, int l, int m, const CartanData& cartan);

/// Loop Serre residual for i != j, r = 1 - a_ij, degrees ls (length r), l':
/// sum over sigma in S_r, k in 0..r of
/// (-1)^k [r choose k]_{v_i} E_{i,l_{sigma(1)}} ... E_{i,l_{sigma(k)}}
///   E_{j,l'} E_{i,l_{sigma(k+1)}} ... E_{i,l_{sigma(r)}}; zero in the algebra.
Element serre_residual(int i, int j, const std::vector<int>& ls, int lprime,
                       const CartanData& cartan);

}  // namespace qloop
