#pragma once

#include "monofock/moment_engine.hpp"

namespace monofock {

// The same spec on the other Fock space.
MomentSpec mirror_spec(const MomentSpec& spec);

// Every f_i replaced by t -> f_i(1 - t). A monotone moment equals the anti-monotone moment
// of the reflected spec.
MomentSpec reflect_functions(const MomentSpec& spec);

// The anti-monotone relation set
//   b+_i b+_j = b_j b_i = 0 (i <= j),  b_i b+_j = 0 (i != j),
//   b_i b+_i = I - sum_{k >= i} b+_k b_k
// on every decreasing probe label with modes <= mode_cap.
bool verify_anti_relations(int i, int j, int mode_cap);

} // namespace monofock
