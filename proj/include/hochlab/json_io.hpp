#pragma once

// JSON views of presentations, chains, and verification reports, plus file
// loading with line/column diagnostics and a structural validator for the
// schemas shipped under schemas/.
//
// Serialization rules, fixed once for golden-file stability:
//   - ordered_json everywhere; field order is the emission order here;
//   - rationals as canonical "p/q" strings (or "p" for integers);
//   - sparse vectors as {"index": "value"} with ascending numeric keys;
//   - chain and cochain terms keyed by comma-joined basis tuples;
//   - matrices as [row, col, "value"] triples in column-major order;
//   - nothing run-varying (timestamps, paths, hostnames) anywhere.

#include <cstddef>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hochlab/averaging.hpp"
#include "hochlab/homology.hpp"
#include "hochlab/homotopy.hpp"
#include "hochlab/les.hpp"
#include "hochlab/norms.hpp"

namespace hochlab {

using Json = nlohmann::ordered_json;

// Rationals and sparse containers.
Json rat_json(const Rat& r);                // "p/q" string
Rat rat_from_json(const Json& j);           // accepts "p/q" strings and integers
Json sparse_vec_json(const SparseVec& v);
SparseVec sparse_vec_from_json(const Json& j);
Json sparse_matrix_json(const SparseMatrix& m);
SparseMatrix sparse_matrix_from_json(const Json& j);

// Presentations round-trip through finalize_presentation, so a loaded
// algebra is re-validated and re-hashed; a stored content_hash that does
// not match the recomputed one is rejected.
Json algebra_json(const AlgebraPresentation& a);
AlgebraPresentation algebra_from_json(const Json& j);

// Chains and cochains carry their algebra's content hash, not the algebra.
Json chain_json(const Chain& c);
Json cochain_json(const Cochain& f);

Json norm_value_json(const NormValue& v);

// Report serializers, one per verification structure.
Json homology_report_json(const HomologyReport& rep);
Json h_unitality_json(const HUnitality& rep);
Json induced_map_json(const InducedMap& rep);
Json homotopy_verdict_json(const HomotopyVerdict& v);
Json les_report_json(const LESReport& rep);
Json excision_report_json(const ExcisionReport& rep);
Json norm_ratio_report_json(const NormRatioReport& rep);
Json decay_report_json(const DecayReport& rep);
Json averaging_report_json(const AveragingReport& rep);

// dump(2) with a trailing newline; the single dump call used everywhere a
// report is written or compared.
std::string stable_dump(const Json& j);

// Parse failure with a 1-based position in the offending text.
class JsonParseError : public std::runtime_error {
 public:
  JsonParseError(std::string message, std::size_t line, std::size_t column);
  std::size_t line;
  std::size_t column;
};

Json parse_json_text(const std::string& text);  // throws JsonParseError
Json load_json_file(const std::string& path);   // ditto; runtime_error if unreadable
void write_text_file(const std::string& path, const std::string& text);

// Structural check against the subset of JSON Schema the shipped schemas
// use: type (string or list), enum, const, required, properties,
// additionalProperties (bool or schema), items, minimum, maximum.
// Returns "" on success, else "<pointer>: <violation>" for the first
// failure in document order.
std::string schema_check(const Json& schema, const Json& doc);

// schema_check wrapped in std::invalid_argument("who: ...").
void require_schema(const Json& schema, const Json& doc, const std::string& who);

}  // namespace hochlab
