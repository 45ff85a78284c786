#pragma once

// Machine-readable emission of verification reports, zero tables, and scan
// rows, plus the CSV parsers used for round-trip checks and data ingestion.

#include <iosfwd>
#include <string>
#include <vector>

#include "xih/types.hpp"

namespace xih {

enum class OutputFormat { JSON, CSV };

// Floats are rendered with 17 significant digits so text round-trips are
// bit-exact for doubles.
std::string format_double(double v);

// JSON: one object per report with fields exactly {identity_id, inputs,
// lhs_re, lhs_im, rhs_re, rhs_im, abs_err, rel_err, pass, variant_notes,
// n_evals}. CSV: same columns, header row, RFC-4180 quoting; the inputs
// column flattens to "name=value;...".
void emit_reports(const std::vector<VerificationReport>& reports, OutputFormat fmt,
                  std::ostream& os);
void emit_reports_to_file(const std::vector<VerificationReport>& reports, OutputFormat fmt,
                          const std::string& path);
std::vector<VerificationReport> parse_csv_reports(std::istream& is);

// Zeros tables serialize with columns {index, gamma, bracket_lo, bracket_hi}.
void emit_zeros(const ZerosTable& table, OutputFormat fmt, std::ostream& os);
void emit_zeros_to_file(const ZerosTable& table, OutputFormat fmt, const std::string& path);
ZerosTable parse_zeros_csv(std::istream& is);
ZerosTable load_zeros_file(const std::string& path);

// Plot-ready scan rows.
struct ScanRow {
    double gamma = 0.0;
    double y = 0.0;
    double value = 0.0;
};
void emit_scan(const std::vector<ScanRow>& rows, OutputFormat fmt, std::ostream& os);
void emit_scan_to_file(const std::vector<ScanRow>& rows, OutputFormat fmt,
                       const std::string& path);

}  // namespace xih
