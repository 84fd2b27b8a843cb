#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "netmoments/graphon.hpp"

namespace nm {

Graphon constant_graphon(double p);
// W(x,y) = xy.
Graphon product_graphon();
// W(x,y) = (x+y)/2.
Graphon affine_graphon();
// Two halves, value p across halves and 0 within.
Graphon bipartite_graphon(double p);
// Three equal blocks A,B,C with W = 1 on A x C, C x A and B x B, else 0:
// degree-regular, triangle-irregular.
Graphon three_block_graphon();
// Six equal blocks: two complete tripartite triples {0,1,2} and {3,4,5},
// plus value 1/2 between blocks 0 and 3. Triangle-regular, degree-irregular.
Graphon six_block_graphon();

// Names: "const:p", "product" | "wminus", "affine" | "paper-w1",
// "bipartite:p", "wplus" (= bipartite:0.5), "three-block" | "paper-w2",
// "six-block" | "paper-w3".
// Anything else is treated as a path to a block-graphon JSON file.
Graphon builtin_graphon(std::string_view spec);
bool is_builtin_graphon_name(std::string_view spec);

}  // namespace nm
