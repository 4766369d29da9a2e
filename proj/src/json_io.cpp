#include "hochlab/json_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

namespace hochlab {
namespace {

Json int_or_null(const std::optional<Index>& v) {
  if (!v) return nullptr;
  return *v;
}

std::string key_of(Index i) { return std::to_string(i); }

Index index_of_key(const std::string& key, const char* who) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(key, &used);
    if (used != key.size()) throw std::invalid_argument(key);
    return Index(v);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(who) + ": bad index key '" + key + "'");
  }
}

Json terms_json(const std::map<Index, Rat>& terms, const AlgebraPresentation* alg,
                int factors) {
  Json out = Json::object();
  for (const auto& [code, v] : terms)
    out[tuple_key(decode_tuple(code, alg->dim, factors))] = rat_str(v);
  return out;
}

Json rat_list(const std::vector<Rat>& xs) {
  Json out = Json::array();
  for (const Rat& x : xs) out.push_back(rat_str(x));
  return out;
}

const char* json_kind(const Json& j) { return j.type_name(); }

bool matches_type(const std::string& t, const Json& doc) {
  if (t == "object") return doc.is_object();
  if (t == "array") return doc.is_array();
  if (t == "string") return doc.is_string();
  if (t == "integer") return doc.is_number_integer() || doc.is_number_unsigned();
  if (t == "number") return doc.is_number();
  if (t == "boolean") return doc.is_boolean();
  if (t == "null") return doc.is_null();
  throw std::invalid_argument("schema: unknown type '" + t + "'");
}

std::string at_ptr(const std::string& ptr) { return ptr.empty() ? "/" : ptr; }

std::string check_node(const Json& schema, const Json& doc, const std::string& ptr) {
  if (schema.contains("type")) {
    const Json& t = schema["type"];
    bool ok = false;
    if (t.is_string()) {
      ok = matches_type(t.get<std::string>(), doc);
    } else {
      for (const Json& alt : t)
        if (matches_type(alt.get<std::string>(), doc)) ok = true;
    }
    if (!ok)
      return at_ptr(ptr) + ": expected " + t.dump() + ", got " + json_kind(doc);
  }
  if (schema.contains("enum")) {
    bool ok = false;
    for (const Json& alt : schema["enum"])
      if (doc == alt) ok = true;
    if (!ok) return at_ptr(ptr) + ": value not in " + schema["enum"].dump();
  }
  if (schema.contains("const") && doc != schema["const"])
    return at_ptr(ptr) + ": expected constant " + schema["const"].dump();
  if (schema.contains("minimum") && doc.is_number() &&
      doc.get<double>() < schema["minimum"].get<double>())
    return at_ptr(ptr) + ": below minimum " + schema["minimum"].dump();
  if (schema.contains("maximum") && doc.is_number() &&
      doc.get<double>() > schema["maximum"].get<double>())
    return at_ptr(ptr) + ": above maximum " + schema["maximum"].dump();

  if (doc.is_object()) {
    if (schema.contains("required"))
      for (const Json& key : schema["required"])
        if (!doc.contains(key.get<std::string>()))
          return at_ptr(ptr) + ": missing required field '" +
                 key.get<std::string>() + "'";
    const Json props =
        schema.contains("properties") ? schema["properties"] : Json::object();
    for (const auto& [key, sub] : props.items())
      if (doc.contains(key)) {
        const std::string res = check_node(sub, doc[key], ptr + "/" + key);
        if (!res.empty()) return res;
      }
    if (schema.contains("additionalProperties")) {
      const Json& extra = schema["additionalProperties"];
      for (const auto& [key, val] : doc.items()) {
        if (props.contains(key)) continue;
        if (extra.is_boolean()) {
          if (!extra.get<bool>())
            return at_ptr(ptr) + ": unexpected field '" + key + "'";
        } else {
          const std::string res = check_node(extra, val, ptr + "/" + key);
          if (!res.empty()) return res;
        }
      }
    }
  }
  if (doc.is_array() && schema.contains("items")) {
    Index i = 0;
    for (const Json& item : doc) {
      const std::string res =
          check_node(schema["items"], item, ptr + "/" + key_of(i));
      if (!res.empty()) return res;
      ++i;
    }
  }
  return "";
}

}  // namespace

Json rat_json(const Rat& r) { return rat_str(r); }

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer() || j.is_number_unsigned())
    return parse_rat(j.dump());
  throw std::invalid_argument("rational json: expected string or integer, got " +
                              std::string(json_kind(j)));
}

Json sparse_vec_json(const SparseVec& v) {
  Json out = Json::object();
  for (const auto& [i, x] : v.e) out[key_of(i)] = rat_str(x);
  return out;
}

SparseVec sparse_vec_from_json(const Json& j) {
  if (!j.is_object())
    throw std::invalid_argument("sparse vector json: expected object");
  SparseVec v;
  for (const auto& [key, val] : j.items())
    v.set(index_of_key(key, "sparse vector json"), rat_from_json(val));
  return v;
}

Json sparse_matrix_json(const SparseMatrix& m) {
  Json entries = Json::array();
  for (Index c = 0; c < m.cols; ++c)
    for (const auto& [r, v] : m.col[c].e)
      entries.push_back(Json::array({r, c, rat_str(v)}));
  Json out;
  out["rows"] = m.rows;
  out["cols"] = m.cols;
  out["entries"] = std::move(entries);
  return out;
}

SparseMatrix sparse_matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols"))
    throw std::invalid_argument("matrix json: expected rows/cols/entries object");
  SparseMatrix m(j["rows"].get<Index>(), j["cols"].get<Index>());
  for (const Json& e : j.value("entries", Json::array())) {
    if (!e.is_array() || e.size() != 3)
      throw std::invalid_argument("matrix json: entry is not a triple");
    const Index r = e[0].get<Index>(), c = e[1].get<Index>();
    if (r >= m.rows || c >= m.cols)
      throw std::invalid_argument("matrix json: entry out of bounds");
    m.set(r, c, rat_from_json(e[2]));
  }
  return m;
}

Json algebra_json(const AlgebraPresentation& a) {
  Json products = Json::array();
  for (Index i = 0; i < a.dim; ++i) {
    Json row = Json::array();
    for (Index j = 0; j < a.dim; ++j) row.push_back(sparse_vec_json(a.products[i][j]));
    products.push_back(std::move(row));
  }
  Json out;
  out["dim"] = a.dim;
  out["labels"] = a.labels;
  out["unit"] = int_or_null(a.unit);
  out["products"] = std::move(products);
  out["matrix_view"] = a.matrix_view ? Json(a.matrix_view->m) : Json(nullptr);
  if (a.norm_assignment) {
    Json na = Json::object();
    for (const auto& [b, w] : *a.norm_assignment) na[key_of(b)] = rat_str(w);
    out["norm_assignment"] = std::move(na);
  } else {
    out["norm_assignment"] = nullptr;
  }
  out["content_hash"] = a.content_hash;
  return out;
}

AlgebraPresentation algebra_from_json(const Json& j) {
  if (!j.is_object())
    throw std::invalid_argument("algebra json: expected object");
  AlgebraPresentation p;
  p.dim = j.at("dim").get<Index>();
  p.labels = j.at("labels").get<std::vector<std::string>>();
  if (j.contains("unit") && !j["unit"].is_null()) p.unit = j["unit"].get<Index>();
  const Json& products = j.at("products");
  if (!products.is_array() || products.size() != p.dim)
    throw std::invalid_argument("algebra json: products must be dim x dim");
  p.products.resize(p.dim);
  for (Index i = 0; i < p.dim; ++i) {
    if (!products[i].is_array() || products[i].size() != p.dim)
      throw std::invalid_argument("algebra json: products must be dim x dim");
    p.products[i].reserve(p.dim);
    for (Index k = 0; k < p.dim; ++k)
      p.products[i].push_back(sparse_vec_from_json(products[i][k]));
  }
  if (j.contains("matrix_view") && !j["matrix_view"].is_null())
    p.matrix_view = AlgebraPresentation::MatrixView{j["matrix_view"].get<Index>()};
  if (j.contains("norm_assignment") && !j["norm_assignment"].is_null()) {
    std::map<Index, Rat> na;
    for (const auto& [key, val] : j["norm_assignment"].items())
      na[index_of_key(key, "algebra json")] = rat_from_json(val);
    p.norm_assignment = std::move(na);
  }
  AlgebraPresentation out = finalize_presentation(std::move(p));
  if (j.contains("content_hash") && !j["content_hash"].is_null() &&
      j["content_hash"].get<std::string>() != out.content_hash)
    throw std::invalid_argument(
        "algebra json: stored content_hash does not match the presentation");
  return out;
}

Json chain_json(const Chain& c) {
  Json out;
  out["degree"] = c.degree;
  out["algebra"] = c.alg ? c.alg->content_hash : "";
  out["terms"] = c.alg ? terms_json(c.terms, c.alg, c.degree + 1) : Json::object();
  return out;
}

Json cochain_json(const Cochain& f) {
  Json out;
  out["degree"] = f.degree;
  out["algebra"] = f.alg ? f.alg->content_hash : "";
  out["values"] = f.alg ? terms_json(f.values, f.alg, f.degree + 1) : Json::object();
  return out;
}

Json norm_value_json(const NormValue& v) {
  Json out;
  out["exact"] = v.exact;
  if (v.exact) out["value"] = rat_str(v.value);
  out["approx"] = v.approx;
  if (!v.exact) out["error_bound"] = v.error_bound;
  return out;
}

Json homology_report_json(const HomologyReport& rep) {
  Json dims = Json::array();
  Json degrees = Json::array();
  for (const DegreeReport& d : rep.degrees) {
    dims.push_back(d.dim);
    Json reps = Json::array();
    for (const SparseVec& r : d.representatives) reps.push_back(sparse_vec_json(r));
    Json dj;
    dj["degree"] = d.degree;
    dj["space_dim"] = d.space_dim;
    dj["cycle_rank"] = d.cycle_rank;
    dj["boundary_rank"] = d.boundary_rank;
    dj["dim"] = d.dim;
    dj["representatives"] = std::move(reps);
    degrees.push_back(std::move(dj));
  }
  Json out;
  out["algebra"] = rep.algebra_hash;
  out["complex"] = kind_name(rep.kind);
  out["max_degree"] = rep.max_degree;
  out["dims"] = std::move(dims);
  out["degrees"] = std::move(degrees);
  return out;
}

Json h_unitality_json(const HUnitality& rep) {
  Json out;
  out["checked_up_to"] = rep.checked_up_to;
  out["bar_dims"] = rep.bar_dims;
  out["h_unital"] = rep.h_unital;
  out["first_failure"] = rep.first_failure ? Json(*rep.first_failure) : Json(nullptr);
  return out;
}

Json induced_map_json(const InducedMap& rep) {
  Json out;
  out["degree"] = rep.degree;
  out["source_dim"] = rep.source_dim;
  out["target_dim"] = rep.target_dim;
  out["on_classes"] = sparse_matrix_json(rep.on_classes);
  out["iso"] = rep.iso;
  return out;
}

Json homotopy_verdict_json(const HomotopyVerdict& v) {
  Json params = Json::object();
  for (const auto& [name, value] : v.parameters) params[name] = value;
  Json out;
  out["identity"] = v.identity;
  out["parameters"] = std::move(params);
  out["pass"] = v.pass;
  out["witness"] = v.witness;
  out["residual"] = (!v.pass && v.residual.alg) ? chain_json(v.residual) : Json(nullptr);
  return out;
}

Json les_report_json(const LESReport& rep) {
  auto matrices = [](const std::vector<SparseMatrix>& ms) {
    Json out = Json::array();
    for (const SparseMatrix& m : ms) out.push_back(sparse_matrix_json(m));
    return out;
  };
  Json junctions = Json::array();
  for (const JunctionCheck& j : rep.junctions) {
    Json jj;
    jj["node"] = j.node;
    jj["degree"] = j.degree;
    jj["incoming_rank"] = j.incoming_rank;
    jj["outgoing_nullity"] = j.outgoing_nullity;
    jj["composite_zero"] = j.composite_zero;
    jj["exact"] = j.exact;
    junctions.push_back(std::move(jj));
  }
  Json out;
  out["complex"] = kind_name(rep.kind);
  out["max_degree"] = rep.max_degree;
  out["ideal_dims"] = rep.ideal_dims;
  out["total_dims"] = rep.total_dims;
  out["quotient_dims"] = rep.quotient_dims;
  out["iota_star"] = matrices(rep.iota_star);
  out["pi_star"] = matrices(rep.pi_star);
  out["connecting"] = matrices(rep.connecting);
  out["junctions"] = std::move(junctions);
  out["exact"] = rep.exact;
  return out;
}

Json excision_report_json(const ExcisionReport& rep) {
  Json degrees = Json::array();
  for (const ExcisionDegree& d : rep.degrees) {
    Json dj;
    dj["degree"] = d.degree;
    dj["quotient_complex_dim"] = d.quotient_complex_dim;
    dj["quotient_algebra_dim"] = d.quotient_algebra_dim;
    dj["iso"] = d.iso;
    degrees.push_back(std::move(dj));
  }
  Json out;
  out["complex"] = kind_name(rep.kind);
  out["degrees"] = std::move(degrees);
  out["all_iso"] = rep.all_iso;
  return out;
}

Json norm_ratio_report_json(const NormRatioReport& rep) {
  Json rows = Json::array();
  for (const NormRatioRow& r : rep.rows) {
    Json rj;
    rj["label"] = r.label;
    rj["lhs"] = norm_value_json(r.lhs);
    rj["rhs"] = norm_value_json(r.rhs);
    rj["ratio"] = norm_value_json(r.ratio);
    rows.push_back(std::move(rj));
  }
  Json out;
  out["check"] = rep.check;
  out["norm"] = norm_name(rep.kind);
  out["tolerance"] = rep.tolerance;
  out["rows"] = std::move(rows);
  out["max_ratio"] = norm_value_json(rep.max_ratio);
  out["arg_max"] = rep.arg_max;
  out["all_one"] = rep.all_one;
  return out;
}

Json decay_report_json(const DecayReport& rep) {
  Json rows = Json::array();
  for (const DecayRow& r : rep.rows) {
    Json rj;
    rj["blocks"] = r.blocks;
    rj["averaged_abs"] = rat_str(r.averaged_abs);
    rj["pairing_abs"] = rat_str(r.pairing_abs);
    rj["tuple_constant"] = rat_str(r.tuple_constant);
    rj["tuple_bound"] = rat_str(r.tuple_bound);
    rj["identity"] = r.identity;
    rj["bounded"] = r.bounded;
    rows.push_back(std::move(rj));
  }
  Json out;
  out["norm"] = norm_name(rep.kind);
  out["degree"] = rep.degree;
  out["cocycle_norm"] = rat_str(rep.d_norm);
  out["test_chain_norm"] = rat_str(rep.tau_norm);
  out["rows"] = std::move(rows);
  out["all_identities"] = rep.all_identities;
  out["all_bounded"] = rep.all_bounded;
  return out;
}

Json averaging_report_json(const AveragingReport& rep) {
  Json cells = Json::array();
  for (const AveragingCell& c : rep.cells) {
    Json cj;
    cj["k"] = c.k;
    cj["blocks"] = c.blocks;
    cj["cycles_tested"] = c.cycles_tested;
    cj["sup_defect"] = rat_str(c.sup_defect);
    cj["sup_ratio"] = rat_str(c.sup_ratio);
    cj["substitution"] = c.substitution;
    cj["generation"] = c.generation;
    cells.push_back(std::move(cj));
  }
  Json stab = Json::array();
  for (const std::vector<Rat>& row : rep.stabilization) stab.push_back(rat_list(row));
  Json out;
  out["provenance"] = rep.provenance;
  out["degree"] = rep.degree;
  out["norm"] = norm_name(rep.kind);
  out["cocycle_norm"] = rat_str(rep.d_norm);
  out["primitive_found"] = rep.primitive_found;
  out["obstruction"] =
      rep.primitive_found ? Json(nullptr) : chain_json(rep.obstruction);
  out["cells"] = std::move(cells);
  out["stabilization"] = std::move(stab);
  out["all_identities"] = rep.all_identities;
  return out;
}

std::string stable_dump(const Json& j) { return j.dump(2) + "\n"; }

JsonParseError::JsonParseError(std::string message, std::size_t l, std::size_t c)
    : std::runtime_error(std::move(message)), line(l), column(c) {}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t stop = e.byte == 0 ? 0 : std::min(e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::ostringstream msg;
    msg << "parse error at line " << line << ", column " << column << ": "
        << e.what();
    throw JsonParseError(msg.str(), line, column);
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_json_text(buf.str());
  } catch (const JsonParseError& e) {
    throw JsonParseError(path + ": " + e.what(), e.line, e.column);
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("short write to " + path);
}

std::string schema_check(const Json& schema, const Json& doc) {
  return check_node(schema, doc, "");
}

void require_schema(const Json& schema, const Json& doc, const std::string& who) {
  const std::string res = schema_check(schema, doc);
  if (!res.empty()) throw std::invalid_argument(who + ": " + res);
}

}  // namespace hochlab
