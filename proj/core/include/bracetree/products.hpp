#pragma once

#include <span>
#include <vector>

#include "bracetree/alphabet.hpp"
#include "bracetree/lincomb.hpp"
#include "bracetree/tree.hpp"

namespace bracetree {

using PlanarComb = LinComb<PlanarTree>;
using RootedComb = LinComb<RootedTree>;
using ForestComb = LinComb<Forest>;

// Every product below is defined on basis trees and extended (multi)linearly.
// Every term of a product of basis elements has weight equal to the sum of the
// input weights, and every coefficient is a positive integer.

/// Free pre-Lie product on rooted trees: the sum, over the vertices s of t2,
/// of t1 grafted as a new child of s.
RootedComb prelie_rooted(const RootedTree& t1, const RootedTree& t2);
RootedComb prelie_rooted(const RootedComb& x, const RootedComb& y);

/// Brace product <args; target> of the free brace algebra on planar trees.
///
/// For target = B_d(s_1 ... s_m), sums over all cuttings of args into
/// consecutive, possibly empty blocks A_0, B_1, A_1, ..., B_m, A_m the tree
/// B_d(A_0 <B_1; s_1> A_1 ... <B_m; s_m> A_m). <; t> = t.
PlanarComb brace(std::span<const PlanarTree> args, const PlanarTree& target);
PlanarComb brace(std::span<const PlanarComb> args, const PlanarComb& target);

/// <t1; t2>, the pre-Lie product induced by the braces.
PlanarComb prelie_planar(const PlanarTree& t1, const PlanarTree& t2);
PlanarComb prelie_planar(const PlanarComb& x, const PlanarComb& y);

/// t inserted at each of the n + 1 root slots of t2 = B_d(t_1 ... t_n).
PlanarComb star_planar(const PlanarTree& t, const PlanarTree& t2);
PlanarComb star_planar(const PlanarComb& x, const PlanarComb& y);

/// t1 grafted on the root of t2 (product of the free NAP algebra).
RootedTree star_rooted(const RootedTree& t1, const RootedTree& t2);
RootedComb star_rooted(const RootedComb& x, const RootedComb& y);

/// Shuffle product of two words of trees.
ForestComb shuffle(std::span<const PlanarTree> f1, std::span<const PlanarTree> f2);
ForestComb shuffle(const ForestComb& x, const ForestComb& y);

/// B_d extended linearly to combinations of forests.
PlanarComb graft_on_root(const DecorationAlphabet& alphabet, Symbol d, const ForestComb& forests);

}  // namespace bracetree
