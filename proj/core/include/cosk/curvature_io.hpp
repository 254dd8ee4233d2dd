#ifndef COSK_CURVATURE_IO_HPP
#define COSK_CURVATURE_IO_HPP

#include <nlohmann/json.hpp>

#include "cosk/curvature.hpp"

namespace cosk {

// Exchange format: { "n": int, "entries": [[i, j, k, l, value], ...] }.
// Indices are 1-based.  The entries form a generating set: the loader
// completes each one over the symmetry orbit
//   R_{ijkl} = -R_{jikl} = -R_{ijlk} = R_{klij}
// (conflicting duplicates are an error) and then validates the result,
// including the first Bianchi identity.
CurvatureTensor load_curvature_json(const nlohmann::json& j);

// Emits the canonical generating set: i < j, k < l, (i,j) <= (k,l)
// lexicographically, nonzero values only.
nlohmann::json curvature_to_json(const CurvatureTensor& r);

}  // namespace cosk

#endif
