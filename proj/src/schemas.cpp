#include "hochlab/schemas.hpp"

#include <map>
#include <stdexcept>

namespace hochlab {
namespace {

const char* kScenarioSchema = R"JSON({
  "title": "scenario",
  "type": "object",
  "required": ["name", "tasks"],
  "additionalProperties": false,
  "properties": {
    "name": {"type": "string"},
    "seed": {"type": "integer", "minimum": 0},
    "budget_cols": {"type": "integer", "minimum": 1},
    "algebra": {"type": ["object", "null"]},
    "frame": {
      "type": ["object", "null"],
      "required": ["k", "N"],
      "additionalProperties": false,
      "properties": {
        "k": {"type": "integer", "minimum": 1},
        "N": {"type": "integer", "minimum": 1},
        "spare": {"type": "integer", "minimum": 0}
      }
    },
    "tasks": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["kind"],
        "additionalProperties": false,
        "properties": {
          "kind": {
            "enum": [
              "homology", "bar-acyclicity", "verify-identities", "les",
              "excision", "average-cocycle", "decay", "norms"
            ]
          },
          "expect": {"enum": ["pass", "fail"]},
          "params": {"type": "object"}
        }
      }
    }
  }
})JSON";

const char* kAlgebraSchema = R"JSON({
  "title": "algebra presentation",
  "type": "object",
  "required": ["dim", "labels", "products"],
  "additionalProperties": false,
  "properties": {
    "dim": {"type": "integer", "minimum": 1},
    "labels": {"type": "array", "items": {"type": "string"}},
    "unit": {"type": ["integer", "null"], "minimum": 0},
    "products": {
      "type": "array",
      "items": {
        "type": "array",
        "items": {
          "type": "object",
          "additionalProperties": {"type": ["string", "integer"]}
        }
      }
    },
    "matrix_view": {"type": ["integer", "null"], "minimum": 1},
    "norm_assignment": {
      "type": ["object", "null"],
      "additionalProperties": {"type": ["string", "integer"]}
    },
    "content_hash": {"type": ["string", "null"]}
  }
})JSON";

const char* kTaskReportSchema = R"JSON({
  "title": "task report",
  "type": "object",
  "required": ["scenario", "task", "index", "expect", "inputs", "data", "error", "pass", "ok"],
  "additionalProperties": false,
  "properties": {
    "scenario": {"type": "string"},
    "task": {
      "enum": [
        "homology", "bar-acyclicity", "verify-identities", "les",
        "excision", "average-cocycle", "decay", "norms"
      ]
    },
    "index": {"type": "integer", "minimum": 0},
    "expect": {"enum": ["pass", "fail"]},
    "inputs": {
      "type": "object",
      "required": ["algebra", "frame", "seed", "budget_cols", "params"],
      "additionalProperties": false,
      "properties": {
        "algebra": {"type": ["string", "null"]},
        "frame": {
          "type": ["object", "null"],
          "required": ["k", "N", "spare", "M", "ambient"],
          "additionalProperties": false,
          "properties": {
            "k": {"type": "integer"},
            "N": {"type": "integer"},
            "spare": {"type": "integer"},
            "M": {"type": "integer"},
            "ambient": {"type": "string"}
          }
        },
        "seed": {"type": "integer", "minimum": 0},
        "budget_cols": {"type": "integer", "minimum": 1},
        "params": {"type": "object"}
      }
    },
    "data": {"type": ["object", "null"]},
    "error": {
      "type": ["object", "null"],
      "required": ["type", "message"],
      "additionalProperties": false,
      "properties": {
        "type": {"enum": ["parse", "budget", "invalid", "internal"]},
        "message": {"type": "string"}
      }
    },
    "pass": {"type": "boolean"},
    "ok": {"type": "boolean"}
  }
})JSON";

const char* kSummarySchema = R"JSON({
  "title": "run summary",
  "type": "object",
  "required": ["scenario", "seed", "budget_cols", "tasks", "counts", "exit_code"],
  "additionalProperties": false,
  "properties": {
    "scenario": {"type": "string"},
    "seed": {"type": "integer", "minimum": 0},
    "budget_cols": {"type": "integer", "minimum": 1},
    "tasks": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["index", "kind", "expect", "pass", "ok", "error", "report"],
        "additionalProperties": false,
        "properties": {
          "index": {"type": "integer", "minimum": 0},
          "kind": {"type": "string"},
          "expect": {"enum": ["pass", "fail"]},
          "pass": {"type": "boolean"},
          "ok": {"type": "boolean"},
          "error": {"type": ["string", "null"]},
          "report": {"type": "string"}
        }
      }
    },
    "counts": {
      "type": "object",
      "required": ["total", "ok"],
      "additionalProperties": false,
      "properties": {
        "total": {"type": "integer", "minimum": 0},
        "ok": {"type": "integer", "minimum": 0}
      }
    },
    "exit_code": {"type": "integer", "minimum": 0, "maximum": 3}
  }
})JSON";

const std::map<std::string, const char*>& table() {
  static const std::map<std::string, const char*> t = {
      {"scenario", kScenarioSchema},
      {"algebra", kAlgebraSchema},
      {"task-report", kTaskReportSchema},
      {"summary", kSummarySchema},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& schema_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, text] : table()) out.push_back(name);
    return out;
  }();
  return names;
}

const Json& schema(const std::string& name) {
  static std::map<std::string, Json> parsed = [] {
    std::map<std::string, Json> out;
    for (const auto& [name, text] : table()) out[name] = parse_json_text(text);
    return out;
  }();
  const auto it = parsed.find(name);
  if (it == parsed.end())
    throw std::invalid_argument("schema: unknown name '" + name + "'");
  return it->second;
}

std::string schema_file_text(const std::string& name) {
  return stable_dump(schema(name));
}

}  // namespace hochlab
