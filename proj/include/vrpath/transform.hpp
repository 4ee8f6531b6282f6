#pragma once

#include "vrpath/multifilt.hpp"
#include "vrpath/semimetric.hpp"

namespace vrpath {

// The distance construction of the Vietoris-Rips transformation: D_ij is the
// first path step at which the pair is an edge, inf if it never is. Values
// lie in {1..m} union {inf}; the VR filtration of D at scale k reproduces the
// k-th complex along the path exactly in dimensions >= 1.
semimetric_matrix vr_transform(const edge_annotations& l, const path_t& nu, size_t n_points);
semimetric_matrix vr_transform(const pathwise_edge_list& l, size_t n_points);

} // namespace vrpath
