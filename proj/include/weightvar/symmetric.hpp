#pragma once

#include <span>

#include "weightvar/poly.hpp"

namespace weightvar {

/// e_i of the variables in `slots` (0-based slot indices of an n-block ring).
/// e_0 = 1 and e_i = 0 for i > |slots|.
Poly elementary_symmetric(int n, std::span<const int> slots, int i);

/// e_i(x_1..x_n) and e_i(u_1..u_n).
Poly elementary_symmetric_x(int n, int i);
Poly elementary_symmetric_u(int n, int i);

/// Invariant under every adjacent swap inside {x_1..x_k} and inside
/// {x_{k+1}..x_n}.
bool is_block_symmetric(const Poly& f, int k);

/// Writes a block-symmetric f in the block ring Ring::block(n, k), with
/// a_i standing for e_i(x_1..x_k) and b_j for e_j(x_{k+1}..x_n), by leading
/// term reduction in each block. Throws std::invalid_argument when f is not
/// block-symmetric.
Poly rewrite_in_block_esp(const Poly& f, int k);

/// Substitutes a_i ↦ e_i(x_1..x_k), b_j ↦ e_j(x_{k+1}..x_n) back.
Poly expand_block_esp(const Poly& g, int k);

}  // namespace weightvar
