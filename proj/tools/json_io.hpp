#pragma once

// JSON encodings shared by the CLI and its tests. Every decoder raises
// ParseError on malformed input, and decode(encode(x)) == x for every value
// the encoders emit.

#include <json.hpp>

#include <string>

#include "commlab/lamplighter.hpp"
#include "commlab/solvable_comm.hpp"
#include "commlab/storus.hpp"
#include "commlab/unipotent.hpp"

namespace commlab::io {

using Json = nlohmann::ordered_json;

/// Parses inline JSON, or reads the file when `text` does not start with
/// '{', '[' or '"'.
Json load(const std::string& text);

Json encode(const BigRat& q);
BigRat decode_rational(const Json& j);
BigInt decode_integer(const Json& j);

/// Arrays of arrays of rational strings (numbers are accepted on input).
Json encode(const MatQ& m);
MatQ decode_matq(const Json& j);
/// Shape-checked variant; [] is accepted for a 0-row matrix.
MatQ decode_matq(const Json& j, std::size_t rows, std::size_t cols);
/// A flat array read as a column vector.
MatQ decode_column(const Json& j);
Json encode_column(const MatQ& v);

Json encode(const MatF2Rat& m);
MatF2Rat decode_matf2(const Json& j);

/// {"k": polystring, "n": int}
Json encode(const lamp::LampElement& g);
lamp::LampElement decode_lamp_element(const Json& j);

/// {"level", "der_level", "der", "A", "flip"}. "level" is the overall level
/// and is informative on input; "der_level" defaults to it. The matrix size
/// fixes the linear part's level.
Json encode(const lamp::LampComm& c);
lamp::LampComm decode_lamp_comm(const Json& j);
/// Also accepts the names "identity" and "flip".
lamp::LampComm load_lamp_comm(const std::string& text);

/// {"level", "domain": [HNF generators], "images": [...], "tm_image"}
Json encode(const lamp::PartialData& d);
lamp::PartialData decode_partial_data(const Json& j);

/// {"a": int, "b": rational}; n comes from the caller.
Json encode(const solv::BSElement& g);
solv::BSElement decode_bs_element(const Json& j, long n);

/// {"r": rational, "q": rational}
Json encode(const solv::AffineMap& c);
solv::AffineMap decode_affine(const Json& j);

/// {"n": int, "L": matrix}
Json encode(const unip::LieAut& a);
unip::LieAut decode_lie_aut(const Json& j);

/// [{"kind": "Gm" | "NormOne" | "RestScalars", "d": int}, ...]
torus::TorusSpec decode_torus_spec(const Json& j);
Json encode(const torus::TorusSpec& s);
Json encode(const torus::RankReport& r);

Json encode(const solv::Dims& d);
solv::Dims decode_dims(const Json& j);

/// Blocks absent from the input default to zero (P to the identity).
template <class Red>
solv::CommDesc<Red> decode_comm_desc(const Json& j, const solv::Dims& d);
template <class Red>
Json encode(const solv::CommDesc<Red>& g);

}  // namespace commlab::io
