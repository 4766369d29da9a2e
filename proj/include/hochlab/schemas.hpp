#pragma once

// The JSON schemas for scenario files, algebra files, task reports, and run
// summaries.  The texts are compiled in so validation needs no search path;
// the files under schemas/ are regenerated from these with the `schemas`
// verb and tests hold them byte-identical.

#include <string>
#include <vector>

#include "hochlab/json_io.hpp"

namespace hochlab {

// "scenario" | "algebra" | "task-report" | "summary"
const std::vector<std::string>& schema_names();
const Json& schema(const std::string& name);        // throws on unknown name
std::string schema_file_text(const std::string& name);  // stable_dump of schema(name)

}  // namespace hochlab
