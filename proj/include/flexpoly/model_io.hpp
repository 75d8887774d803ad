#pragma once

// File formats: the JSON model, the numexpr encoding of field elements,
// legacy split CSV inputs, OBJ export and JSON reports.
//
// Model:   {"mode": "exact"|"float", "field": [numexpr...]?,
//           "vertices": [{"id": int, "coords": [cell, cell, cell]}],
//           "edges": [[i,j]...], "faces": [[i,j,k]...]}
// numexpr: {"rat": "p/q"} | {"sqrt": e} | {"add": [e...]} | {"mul": [e...]} | {"neg": e}
// cell:    a numexpr, or a decimal string (float mode)
//
// "field" lists the radicands of the coordinate tower from the bottom up.
// With it present an exact model reads back into the same tower it was
// written from, coefficient for coefficient.

#include <json.hpp>

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "flexpoly/checker.hpp"

namespace flexpoly::io {

using Json = nlohmann::ordered_json;

class ModelError : public std::runtime_error {
 public:
  enum class Kind { Parse, Validation, Io };

  ModelError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Canonical encoding: a sum of terms, each a rational coefficient times
/// square roots of tower radicands in increasing level. Zero is {"rat": "0"}.
Json encode(const FieldElem& x);

/// Evaluates a numexpr, growing `tower` when a square root is not already in
/// it. Throws ModelError(Parse) on malformed input or a negative radicand.
FieldElem decode(const Json& expr, FieldTower& tower);

/// Radicands of `tower`, bottom level first.
Json encode_tower(const FieldTower& tower);
FieldTower decode_tower(const Json& field);

struct Model {
  SurfaceComplex complex;
  Mode mode = Mode::Exact;
  std::map<VertexId, Point3> exact;    // every cell read exactly (decimals as rationals)
  std::map<VertexId, Point3d> approx;  // decimal cells via strtod, numexprs evaluated
};

Model parse_model(const Json& j);
Model read_model(const std::filesystem::path& path);

/// Four legacy lists: s (edges "i,j"), ss (per edge, both endpoints' six
/// coordinates), t (faces "i,j,k"), tt (per face, nine coordinates), in
/// matching line order. Cells are rationals or decimals. Throws
/// ModelError(Parse) when one vertex is given two different positions.
Model read_split_inputs(const std::filesystem::path& s, const std::filesystem::path& ss,
                        const std::filesystem::path& t, const std::filesystem::path& tt);

/// Throws ModelError(Validation) listing validate_complex violations.
void require_valid(const SurfaceComplex& c);

ExactRealization realize_exact(const Model& m);
FloatRealization realize_float(const Model& m, double epsilon = kDefaultEpsilon);

Json model_json(const ExactRealization& r);
/// Float model with `digits` decimals per coordinate.
Json model_json(const ExactRealization& r, int digits);
/// Float model; coordinates printed round-trip exactly unless `digits` is given.
Json model_json(const FloatRealization& r, std::optional<int> digits = {});

/// Approximate OBJ: a header comment stating the rounding, "v" records in
/// ascending vertex id, "f" records with 1-based indices.
std::string obj_text(const ExactRealization& r, int digits);
std::string obj_text(const FloatRealization& r, int digits);

Json report_json(const CheckReport& report);

/// {"t": t, "vertices": [{"id", "coords": [x, y, z]}]}
Json frame_json(double t, const FloatRealization& r);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);
void write_json(const std::filesystem::path& path, const Json& j);

}  // namespace flexpoly::io
