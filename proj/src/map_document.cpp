#include "lefschetz/map_document.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "lefschetz/errors.hpp"

namespace lefschetz {

namespace {

using nlohmann::json;

std::string where(const std::string& path, const std::string& what) { return path + ": " + what; }

const json& field(const json& obj, const char* key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError(where(path, std::string("missing field \"") + key + "\""));
    return *it;
}

std::size_t read_index(const json& v, const std::string& path) {
    if (!v.is_number_integer() || v.get<long long>() < 0) throw SchemaError(where(path, "expected a non-negative integer"));
    return static_cast<std::size_t>(v.get<long long>());
}

Rational read_entry(const json& v, const std::string& path) {
    if (v.is_number_integer()) return Rational(Integer(std::to_string(v.get<long long>())));
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const Error& e) {
            throw SchemaError(where(path, e.what()));
        }
    }
    throw SchemaError(where(path, "matrix entry must be an integer or a decimal string"));
}

Matrix read_matrix(const json& v, const std::string& path) {
    if (!v.is_array()) throw SchemaError(where(path, "matrix must be an array of rows"));
    std::vector<std::vector<Rational>> rows;
    std::size_t width = 0;
    for (std::size_t r = 0; r < v.size(); ++r) {
        const auto rp = path + "[" + std::to_string(r) + "]";
        if (!v[r].is_array()) throw SchemaError(where(rp, "row must be an array"));
        if (r == 0)
            width = v[r].size();
        else if (v[r].size() != width)
            throw SchemaError(where(rp, "ragged matrix"));
        std::vector<Rational> row;
        for (std::size_t c = 0; c < v[r].size(); ++c) row.push_back(read_entry(v[r][c], rp + "[" + std::to_string(c) + "]"));
        rows.push_back(std::move(row));
    }
    return Matrix::from_rows(rows);
}

json write_entry(const Rational& q) {
    if (is_integer(q) && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return to_string(q);
}

json write_matrix(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(write_entry(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

SpaceSignature read_space(const json& v, const std::string& path, std::optional<std::size_t>& torus_dim) {
    if (!v.is_object()) throw SchemaError(where(path, "space must be an object"));
    const json& kind = field(v, "kind", path);
    if (kind == "torus") {
        const std::size_t n = read_index(field(v, "dim", path), path + ".dim");
        if (n == 0) throw SchemaError(where(path, "torus dimension must be positive"));
        torus_dim = n;
        return SpaceSignature::torus(n);
    }
    if (kind == "generic") {
        const json& b = field(v, "betti", path);
        if (!b.is_array() || b.empty()) throw SchemaError(where(path + ".betti", "expected a nonempty array"));
        std::vector<std::size_t> betti;
        for (std::size_t k = 0; k < b.size(); ++k) betti.push_back(read_index(b[k], path + ".betti[" + std::to_string(k) + "]"));
        if (betti[0] != 1) throw SchemaError(where(path + ".betti", "summands are path-connected, so b_0 must be 1"));
        return SpaceSignature(std::move(betti));
    }
    throw SchemaError(where(path + ".kind", "expected \"torus\" or \"generic\""));
}

}  // namespace

bool MapSpecDocument::all_toral() const {
    return std::all_of(torus_dims.begin(), torus_dims.end(), [](const auto& d) { return d.has_value(); });
}

std::vector<std::size_t> MapSpecDocument::dims() const {
    std::vector<std::size_t> out;
    for (const auto& d : torus_dims) {
        if (!d) throw SchemaError("not every summand is a torus");
        out.push_back(*d);
    }
    return out;
}

MapSpecDocument parse_document(std::string_view text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!root.is_object()) throw SchemaError("document must be a JSON object");
    const json& fmt = field(root, "format", "$");
    if (fmt != kMapFormat) throw SchemaError(std::string("unsupported format; expected \"") + kMapFormat + "\"");

    MapSpecDocument doc;
    if (auto it = root.find("name"); it != root.end() && it->is_string()) doc.name = it->get<std::string>();
    if (auto it = root.find("notes"); it != root.end()) {
        if (!it->is_array()) throw SchemaError("$.notes: expected an array of strings");
        for (const auto& n : *it) {
            if (!n.is_string()) throw SchemaError("$.notes: expected an array of strings");
            doc.notes.push_back(n.get<std::string>());
        }
    }

    const json& spaces = field(root, "spaces", "$");
    if (!spaces.is_array() || spaces.empty()) throw SchemaError("$.spaces: expected a nonempty array");
    for (std::size_t i = 0; i < spaces.size(); ++i) {
        std::optional<std::size_t> td;
        doc.spaces.push_back(read_space(spaces[i], "$.spaces[" + std::to_string(i) + "]", td));
        doc.torus_dims.push_back(td);
    }
    const std::size_t s = doc.spaces.size();

    const bool has_coords = root.contains("coordinates");
    const bool has_assembled = root.contains("h1_assembled");
    if (has_coords && has_assembled) throw SchemaError("give either \"coordinates\" or \"h1_assembled\", not both");
    if (has_assembled) {
        if (!doc.all_toral()) throw SchemaError("$.h1_assembled needs every summand to be a torus");
        doc.h1_assembled = read_matrix(root["h1_assembled"], "$.h1_assembled");
    }
    if (has_coords) {
        const json& coords = root["coordinates"];
        if (!coords.is_array()) throw SchemaError("$.coordinates: expected an array");
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (std::size_t e = 0; e < coords.size(); ++e) {
            const std::string path = "$.coordinates[" + std::to_string(e) + "]";
            const json& c = coords[e];
            if (!c.is_object()) throw SchemaError(where(path, "expected an object"));
            CoordinateEntry entry;
            entry.from = read_index(field(c, "from", path), path + ".from");
            entry.to = read_index(field(c, "to", path), path + ".to");
            if (entry.from < 1 || entry.from > s || entry.to < 1 || entry.to > s)
                throw SchemaError(where(path, "summand index out of range 1.." + std::to_string(s)));
            if (!seen.insert({entry.from, entry.to}).second)
                throw SchemaError(where(path, "duplicate coordinate " + std::to_string(entry.from) + " -> " +
                                                  std::to_string(entry.to)));
            const bool h1 = c.contains("h1"), graded = c.contains("graded");
            if (h1 == graded) throw SchemaError(where(path, "give exactly one of \"h1\" and \"graded\""));
            if (h1) {
                if (!doc.torus_dims[entry.from - 1] || !doc.torus_dims[entry.to - 1])
                    throw SchemaError(where(path, "\"h1\" is only allowed between tori; use \"graded\""));
                entry.h1 = read_matrix(c["h1"], path + ".h1");
            } else {
                const json& g = c["graded"];
                if (!g.is_object()) throw SchemaError(where(path + ".graded", "expected an object keyed by degree"));
                for (const auto& [key, mat] : g.items()) {
                    std::size_t k = 0;
                    try {
                        std::size_t used = 0;
                        k = std::stoul(key, &used);
                        if (used != key.size()) throw std::invalid_argument(key);
                    } catch (const std::exception&) {
                        throw SchemaError(where(path + ".graded", "degree key \"" + key + "\" is not an integer"));
                    }
                    if (k == 0) throw SchemaError(where(path + ".graded", "degree 0 is the identity and is implicit"));
                    entry.graded[k] = read_matrix(mat, path + ".graded." + key);
                }
            }
            doc.coordinates.push_back(std::move(entry));
        }
    }
    if (auto it = root.find("permutation"); it != root.end()) {
        if (!it->is_array() || it->size() != s) throw SchemaError("$.permutation: expected one image per summand");
        std::vector<std::size_t> p;
        for (std::size_t i = 0; i < s; ++i) {
            const std::size_t v = read_index((*it)[i], "$.permutation[" + std::to_string(i) + "]");
            if (v < 1 || v > s) throw SchemaError("$.permutation: image out of range");
            p.push_back(v);
        }
        doc.permutation = std::move(p);
    }
    return doc;
}

MapSpecDocument read_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw ParseError("cannot read " + path);
    return parse_document(buf.str());
}

std::string serialize(const MapSpecDocument& doc) {
    json root;
    root["format"] = kMapFormat;
    if (!doc.name.empty()) root["name"] = doc.name;
    if (!doc.notes.empty()) root["notes"] = doc.notes;
    json spaces = json::array();
    for (std::size_t i = 0; i < doc.summands(); ++i) {
        if (doc.torus_dims[i])
            spaces.push_back({{"kind", "torus"}, {"dim", *doc.torus_dims[i]}});
        else
            spaces.push_back({{"kind", "generic"}, {"betti", doc.spaces[i].betti_numbers()}});
    }
    root["spaces"] = spaces;
    if (doc.h1_assembled) root["h1_assembled"] = write_matrix(*doc.h1_assembled);
    if (!doc.h1_assembled || !doc.coordinates.empty()) {
        json coords = json::array();
        for (const auto& c : doc.coordinates) {
            json e = {{"from", c.from}, {"to", c.to}};
            if (c.h1) {
                e["h1"] = write_matrix(*c.h1);
            } else {
                json g = json::object();
                for (const auto& [k, m] : c.graded) g[std::to_string(k)] = write_matrix(m);
                e["graded"] = g;
            }
            coords.push_back(std::move(e));
        }
        root["coordinates"] = coords;
    }
    if (doc.permutation) root["permutation"] = *doc.permutation;
    return root.dump(2) + "\n";
}

std::optional<ToralWedgeSpec> to_toral_spec(const MapSpecDocument& doc) {
    if (!doc.all_toral()) return std::nullopt;
    if (doc.h1_assembled) return ToralWedgeSpec::from_assembled_h1(doc.dims(), *doc.h1_assembled);
    ToralWedgeSpec spec = ToralWedgeSpec::constant(doc.dims());
    for (const auto& c : doc.coordinates) {
        if (!c.h1) return std::nullopt;
        spec.coords[c.from - 1][c.to - 1] = *c.h1;
    }
    return spec;
}

WedgeMapHomology to_wedge(const MapSpecDocument& doc) {
    std::optional<WedgeMapHomology> w;
    if (auto spec = to_toral_spec(doc)) {
        w = build_toral_wedge(*spec);
    } else {
        const std::size_t s = doc.summands();
        CoordinateGrid grid(s, std::vector<std::optional<GradedLinearMap>>(s));
        for (const auto& c : doc.coordinates) {
            const auto& src = doc.spaces[c.from - 1];
            const auto& dst = doc.spaces[c.to - 1];
            const std::string label = "coordinate " + std::to_string(c.from) + " -> " + std::to_string(c.to) + ": ";
            try {
                if (c.h1) {
                    grid[c.from - 1][c.to - 1] = torus_graded_between(*c.h1, src.dimension(), dst.dimension());
                } else {
                    grid[c.from - 1][c.to - 1] = GradedLinearMap(src, dst, c.graded);
                }
            } catch (const DimensionMismatch& e) {
                throw DimensionMismatch(label + e.what());
            }
        }
        w = WedgeMapHomology::assemble(doc.spaces, std::move(grid));
    }
    if (doc.permutation) {
        const auto& p = *doc.permutation;
        if (std::set<std::size_t>(p.begin(), p.end()).size() != p.size())
            throw SchemaError("declared permutation is not a bijection");
        for (std::size_t i = 0; i < w->summands(); ++i)
            for (std::size_t j = 0; j < w->summands(); ++j)
                if (w->has_coordinate(i, j) && p[i] != j + 1)
                    throw SchemaError("declared permutation sends " + std::to_string(i + 1) + " to " +
                                      std::to_string(p[i]) + ", but coordinate " + std::to_string(i + 1) + " -> " +
                                      std::to_string(j + 1) + " is nonzero");
    }
    return *w;
}

std::string digest(const MapSpecDocument& doc) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : serialize(doc)) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

}  // namespace lefschetz
