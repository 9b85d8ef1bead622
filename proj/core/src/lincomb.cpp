#include "bracetree/lincomb.hpp"

namespace bracetree {

LinComb<RootedTree> flatten(const LinComb<PlanarTree>& x) {
  LinComb<RootedTree> out;
  for (const auto& [t, c] : x) out.add_term(canonicalize(t), c);
  return out;
}

}  // namespace bracetree
