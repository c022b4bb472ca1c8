#pragma once

// JSON map documents, format "wedge-map/1":
//
//   {
//     "format": "wedge-map/1",
//     "name": "optional label",
//     "notes": ["optional free text"],
//     "spaces": [{"kind": "torus", "dim": 2},
//                {"kind": "generic", "betti": [1, 2, 1]}],
//     "coordinates": [
//       {"from": 1, "to": 2, "h1": [[0, 1], [1, 0]]},
//       {"from": 2, "to": 2, "graded": {"1": [[1, 0], [0, 1]], "2": [[1]]}}
//     ],
//     "h1_assembled": [[...]],
//     "permutation": [2, 1]
//   }
//
// Indices are 1-based. "h1" is only allowed between tori, "graded" on any
// pair. Omitted pairs are constant coordinates. "h1_assembled" replaces
// "coordinates" when every summand is a torus. "permutation" (optional) is
// checked against the classified structure. Matrix entries are JSON
// integers or decimal strings ("-12", "3/4").

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lefschetz/torus.hpp"
#include "lefschetz/wedge.hpp"

namespace lefschetz {

inline constexpr const char* kMapFormat = "wedge-map/1";

struct CoordinateEntry {
    std::size_t from = 0;  // 1-based
    std::size_t to = 0;    // 1-based
    std::optional<Matrix> h1;
    std::map<std::size_t, Matrix> graded;
};

struct MapSpecDocument {
    std::string name;
    std::vector<std::string> notes;
    std::vector<SpaceSignature> spaces;
    /// Torus dimension of each summand given as {kind: torus}; nullopt for
    /// generic summands.
    std::vector<std::optional<std::size_t>> torus_dims;
    std::vector<CoordinateEntry> coordinates;
    std::optional<Matrix> h1_assembled;
    /// Declared sigma, 1-based images.
    std::optional<std::vector<std::size_t>> permutation;

    std::size_t summands() const noexcept { return spaces.size(); }
    bool all_toral() const;
    /// Torus dimensions; throws SchemaError unless all_toral().
    std::vector<std::size_t> dims() const;
};

/// Throws ParseError on malformed JSON, SchemaError on schema violations.
MapSpecDocument parse_document(std::string_view text);
/// parse_document on a file; unreadable files raise ParseError.
MapSpecDocument read_document(const std::string& path);
std::string serialize(const MapSpecDocument& doc);

/// Toral description (assembled or per coordinate); nullopt when some
/// summand is generic or some coordinate is given as graded.
std::optional<ToralWedgeSpec> to_toral_spec(const MapSpecDocument& doc);

/// Homology model of the document. Coordinates between tori given by h1 are
/// lifted through exterior powers. Throws DimensionMismatch on bad shapes and
/// SchemaError when the declared permutation disagrees with the structure.
WedgeMapHomology to_wedge(const MapSpecDocument& doc);

/// Stable 64-bit FNV-1a digest of the serialized document, hex.
std::string digest(const MapSpecDocument& doc);

}  // namespace lefschetz
