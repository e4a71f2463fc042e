#pragma once

#include "plethygen/combinat.hpp"
#include "plethygen/qlaurent.hpp"

#include <map>
#include <vector>

namespace plethygen {

/// Ordered set partition of {1..w}: disjoint nonempty blocks covering it.
using OrderedSetPartition = std::vector<std::vector<int>>;

/// Finite set of integer vectors inside the dilated cube {0..h}^w, kept in
/// lexicographic order.
struct LatticePointSet {
    int w = 0;
    int h = 0;
    std::vector<std::vector<int>> points;
};

/// Polynomial in x_0..x_h: exponent vector (length h+1) -> coefficient.
using MonomialTable = std::map<std::vector<int>, BigInt>;

/// All v in {0..h}^w constant on each block of gamma and strictly increasing
/// from block to block.
LatticePointSet face_points(const OrderedSetPartition& gamma, int h);

/// All v with v_{pi(i)} <= v_{pi(i+1)} at ascents of pi (positions where
/// pi(i) < pi(i+1)) and strict inequality at descents.
LatticePointSet chamber_points(const std::vector<int>& pi, int h);

/// All v in {0..h}^w whose RSK recording tableau is Q.
LatticePointSet coarse_points(const Tableau& q, int h);

/// The integer-point enumerator: sum of x_{v_1}...x_{v_w} over the points.
MonomialTable ipe(const LatticePointSet& points);

/// Sum of q^{2(v_1+...+v_w) - wh} over the points of the coarse chamber of Q
/// at dilation h.
QLaurent quantum_ehrhart_direct(const Tableau& q, int h);

/// The permutation pi with v in its chamber: indices sorted by (value, index).
std::vector<int> chamber_of_point(const std::vector<int>& v);

/// The ordered set partition with v in its face: indices grouped by equal
/// value, blocks in increasing value order.
OrderedSetPartition face_of_point(const std::vector<int>& v);

/// The minimal lattice point of the chamber cone of pi: p_{pi(1)} = 0 and
/// p increases by one across each position descent of pi.
std::vector<int> chamber_min_vertex(const std::vector<int>& pi);

/// Monomial quasisymmetric polynomial M_alpha(x_0..x_h).
MonomialTable monomial_qsym(const std::vector<int>& alpha, int h);
/// Fundamental quasisymmetric polynomial F_alpha = sum of M_beta over
/// refinements beta of alpha.
MonomialTable fundamental_qsym(const std::vector<int>& alpha, int h);
/// Schur polynomial s_mu(x_0..x_h) from SSYT weights.
MonomialTable schur_table(const Partition& mu, int h);

}  // namespace plethygen
