#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hubs/io.hpp"

namespace hubs {

using BigInt = boost::multiprecision::cpp_int;

// Naturally oriented minimal (C1,C2)-graph with 2*C1*C2 hubs: phi_i and
// psi_j meet at lambda(i,j) and part at mu(i,j). Vertex ids: S1=0, R1=1,
// S2=2, R2=3, then lambda(i,j), mu(i,j) row by row.
Document grid_graph(int c1, int c2);

// The grid plus n unit pairs. Each beta_k = S_k -> gamma_k - delta_k -> R_k
// shares its middle edge with phi_1 ahead of lambda(1,1). Hub count is
// 2*(C1*C2 + n).
Document ones_graph(int c1, int c2, int n);

// A minimal (2,2,2)-graph with 12 hubs: ones_graph(2,2,2) with the two unit
// pairs merged into one pair of demand 2 whose paths ride phi_1 and phi_2.
Document witness_222();

// A minimal (2,2,2)-graph on four hubs a, b, c, d where the third pair can
// use either {e1 e3 e7, e2 e6 e8} or {e1 e5 e8, e2 e4 e7}. Edge e_k has id
// k - 1; the phi and psi edges follow.
Document reroutable_witness();

// The naturally oriented (2,2)-graph listed edge by edge in the worked
// example (e_k has id k - 1).
Document example_graph();

// Recursive hub bound from the finiteness argument; the last demand plays
// the distinguished pair. Throws "bad-argument" on an empty list or a
// non-positive demand.
BigInt finiteness_bound(const std::vector<int>& demands);

}  // namespace hubs
