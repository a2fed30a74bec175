#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "orbitkit/lie_algebra.hpp"

namespace orbitkit {

// Built-in algebras and their basis conventions.
//
//   su2, so3      e1 e2 e3 / L1 L2 L3, [e_i, e_j] = eps_ijk e_k. For su2 the
//                 basis is e_k = -(i/2) sigma_k; for so3 it is the generator
//                 of rotations about the k-th axis. Killing form = 2 I.
//   su3           T_a = -(i/2) lambda_a with the Gell-Mann matrices lambda_1..8,
//                 [T_a, T_b] = f_abc T_c. Killing form = 3 I. The element
//                 diag(i, -i, 0) is -2 T_3.
//   sl2r          (h, e, f) with [h,e] = 2e, [h,f] = -2f, [e,f] = h.
//   heisenberg3   (X, Y, Z) with [X,Y] = Z.
//   sl2c_real     realification of sl(2,C) in the order (h, e, f, ih, ie, if):
//                 [x, iy] = i[x, y] and [ix, iy] = -[x, y]. Traces are real
//                 traces over the 6-dim space, so the Killing form is twice
//                 the real part of the complex one.
//   abelian(n)    n-dim, all brackets zero.

[[nodiscard]] LieAlgebra catalog_load(std::string_view name);

/// Names accepted by catalog_load, with abelian(n) listed once as "abelian(4)".
[[nodiscard]] std::vector<std::string> catalog_names();

/// Whether a Haar sampler exists for the named catalog algebra.
[[nodiscard]] bool is_compact_catalog(std::string_view name);

}  // namespace orbitkit
