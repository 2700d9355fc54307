#pragma once

#include <string>

#include <json.hpp>

#include "bres/bresinsky.hpp"
#include "bres/verifier.hpp"

namespace bres::io {

enum class Format { kJson, kCsv, kText };

Format parse_format(const std::string& s);

nlohmann::ordered_json matrix_json(const SparseMatrix& m);
SparseMatrix matrix_from_json(const nlohmann::json& j, const RingPtr& ring);

// Instance data, generators and the constructed matrices.
std::string render_generate(const BresinskyInstance& inst, Format f);
// With `timings` the per-stage seconds are included; they are left out by
// default so reports are byte-stable.
std::string render_report(const ResolutionReport& r, Format f, bool timings = false);

// {"generators": [...], "matrices": {"N": ..., "P": ...}}; every key optional.
// Generators are strings or {"name", "polynomial"} objects. Throws
// DomainError on malformed input.
VerifyInput parse_fixture(const nlohmann::json& j, const BresinskyInstance& inst);
VerifyInput load_fixture(const std::string& path, const BresinskyInstance& inst);

// Macaulay2 script checking the ideal, its leading terms, N*P = 0 and the
// Betti numbers of a computed resolution.
std::string macaulay2_script(const BresinskyInstance& inst);

}  // namespace bres::io
