#pragma once

#include <istream>
#include <string>

#include "cubegrowth/cube_complex.hpp"
#include "cubegrowth/generators.hpp"
#include "cubegrowth/simplicial.hpp"

namespace cubegrowth {

// Text formats. Blank lines and lines starting with '#' are ignored.
//   cube complex:   one maximal cube per line, "cube v0 v1 ... v_{2^k-1}"
//                   in binary corner order
//   simplicial:     one facet per line, "facet v1 v2 ... vk"; a file with no
//                   facet lines is the empty complex
//   product graph:  "gen NAME order=2|inf" and "edge A B"
// Errors carry the file name, the offending line, and the violated invariant.

CubeComplex read_cube_complex(std::istream& in, const std::string& filename);
CubeComplex read_cube_complex_file(const std::string& path);

SimplicialComplex read_simplicial_complex(std::istream& in, const std::string& filename);
SimplicialComplex read_simplicial_complex_file(const std::string& path);

ProductGraph read_product_graph(std::istream& in, const std::string& filename);
ProductGraph read_product_graph_file(const std::string& path);

} // namespace cubegrowth
