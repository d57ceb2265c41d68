#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "zk/simplicial_complex.hpp"

namespace zk {

/// One facet per line, whitespace-separated 1-based labels. `#` starts a
/// comment. m is the largest label unless a `vertices: m` line overrides it.
/// Throws ParseError (with line number), VertexOutOfRange, EmptyFacetList.
SimplicialComplex parse_facet_list(std::string_view text);

/// {"vertices": m, "facets": [[...], ...]}. Throws SchemaError,
/// VertexOutOfRange, EmptyFacetList.
SimplicialComplex parse_json(std::string_view document);

/// Dispatches on the first non-blank character: `{` means JSON.
SimplicialComplex parse_complex(std::string_view text);

/// Reads a file and parses it with parse_complex. Throws ParseError (line 0)
/// when the file cannot be read.
SimplicialComplex load_complex(const std::string& path);

/// `vertices: m` header, then facets in canonical order, vertex i written as i+1.
std::string emit_facet_list(const SimplicialComplex& k);

/// Boundary of the m-gon: edges {i, i+1} and {m, 1}. Throws TooFewVertices for m < 4.
SimplicialComplex gen_polygon(int m);

/// Boundary of the cyclic polytope C(m, d) via Gale evenness, d even and
/// m ≥ d + 1 (m = d + 1 gives the simplex boundary). Throws BadParameters.
SimplicialComplex gen_cyclic_boundary(int m, int d);

/// Boundary of the (m-1)-simplex on m vertices.
SimplicialComplex gen_simplex_boundary(int m);

/// FNV-1a 64 over emit_facet_list(k), as 16 hex digits.
std::string content_hash(const SimplicialComplex& k);

}  // namespace zk
