#pragma once

#include <string>
#include <vector>

#include "ncosc/verify.hpp"

namespace ncosc {

// Shortest decimal form (15-17 significant digits) that parses back to the
// same double; "nan"/"inf" spelled out.
std::string format_double(double v);

// CSV with the fixed column set
//   n_rho,mu,n_z,E0,dE_pt,dE_fd,dE_paper,dE_derived,res_paper,res_derived,res_fd,degenerate
// NaN cells render as "nan", degenerate as 0/1. Empty input -> header only.
std::string render_corrections_csv(const std::vector<CorrectionRow>& rows);

// {"identities":[{"name","status","residual_terms":[...]}],
//  "corrections":[{...row fields...}], "conventions":{...}}
// NaN renders as null. Key order fixed; byte-deterministic.
std::string render_report_json(const VerifyReport& report);

// {"corrections":[{...row fields...}]} — the corrections block alone.
std::string render_corrections_json(const std::vector<CorrectionRow>& rows);

// Writes via a temp file in the same directory plus rename. Throws IoError.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace ncosc
