#include "xih/report_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace xih {

namespace {

bool csv_needs_quoting(const std::string& s) {
    return s.find_first_of(",\"\r\n") != std::string::npos;
}

std::string csv_field(const std::string& s) {
    if (!csv_needs_quoting(s)) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

std::string json_string(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
    return out;
}

std::string flat_inputs(const VerificationReport& r) {
    std::string out;
    for (std::size_t i = 0; i < r.inputs.size(); ++i) {
        if (i) out += ';';
        out += r.inputs[i].first + "=" + format_double(r.inputs[i].second);
    }
    return out;
}

IdentityId identity_from_string(const std::string& s) {
    for (IdentityId id : {IdentityId::EQ11, IdentityId::UPSILON, IdentityId::DIRICHLET_U0,
                          IdentityId::LAPLACE_CHAIN, IdentityId::RK_IDENTITY,
                          IdentityId::BOUNDARY_LIMIT, IdentityId::HARMONICITY,
                          IdentityId::DUFFIN_POISSON}) {
        if (s == to_string(id)) return id;
    }
    throw IoError("unknown identity id: " + s);
}

double parse_double(const std::string& s) {
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str()) throw IoError("malformed number: " + s);
    return v;
}

// Minimal RFC-4180 reader: returns rows of fields, handling quoted fields
// with embedded separators, quotes, and newlines.
std::vector<std::vector<std::string>> read_csv(std::istream& is) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool in_quotes = false;
    bool field_started = false;
    char c;
    auto end_field = [&]() {
        row.push_back(field);
        field.clear();
        field_started = false;
    };
    auto end_row = [&]() {
        if (field_started || !field.empty() || !row.empty()) {
            end_field();
            rows.push_back(row);
            row.clear();
        }
    };
    while (is.get(c)) {
        if (in_quotes) {
            if (c == '"') {
                if (is.peek() == '"') {
                    is.get(c);
                    field += '"';
                } else {
                    in_quotes = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            in_quotes = true;
            field_started = true;
        } else if (c == ',') {
            end_field();
            field_started = true;  // next field exists even if empty
        } else if (c == '\n') {
            end_row();
        } else if (c == '\r') {
            // swallow; \n handles the row break
        } else {
            field += c;
            field_started = true;
        }
    }
    if (in_quotes) throw IoError("unterminated quoted CSV field");
    end_row();
    return rows;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open for writing: " + path);
    return os;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void emit_reports(const std::vector<VerificationReport>& reports, OutputFormat fmt,
                  std::ostream& os) {
    if (fmt == OutputFormat::JSON) {
        os << "[\n";
        for (std::size_t i = 0; i < reports.size(); ++i) {
            const VerificationReport& r = reports[i];
            os << "  {\"identity_id\": " << json_string(to_string(r.identity_id))
               << ", \"inputs\": {";
            for (std::size_t j = 0; j < r.inputs.size(); ++j) {
                if (j) os << ", ";
                os << json_string(r.inputs[j].first) << ": "
                   << format_double(r.inputs[j].second);
            }
            os << "}, \"lhs_re\": " << format_double(r.lhs.real())
               << ", \"lhs_im\": " << format_double(r.lhs.imag())
               << ", \"rhs_re\": " << format_double(r.rhs.real())
               << ", \"rhs_im\": " << format_double(r.rhs.imag())
               << ", \"abs_err\": " << format_double(r.abs_err)
               << ", \"rel_err\": " << format_double(r.rel_err)
               << ", \"pass\": " << (r.pass ? "true" : "false")
               << ", \"variant_notes\": " << json_string(r.variant_notes)
               << ", \"n_evals\": " << r.n_evals << "}";
            os << (i + 1 < reports.size() ? ",\n" : "\n");
        }
        os << "]\n";
    } else {
        os << "identity_id,inputs,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,pass,"
              "variant_notes,n_evals\n";
        for (const VerificationReport& r : reports) {
            os << csv_field(to_string(r.identity_id)) << ',' << csv_field(flat_inputs(r)) << ','
               << format_double(r.lhs.real()) << ',' << format_double(r.lhs.imag()) << ','
               << format_double(r.rhs.real()) << ',' << format_double(r.rhs.imag()) << ','
               << format_double(r.abs_err) << ',' << format_double(r.rel_err) << ','
               << (r.pass ? "true" : "false") << ',' << csv_field(r.variant_notes) << ','
               << r.n_evals << '\n';
        }
    }
    if (!os) throw IoError("report emission failed");
}

void emit_reports_to_file(const std::vector<VerificationReport>& reports, OutputFormat fmt,
                          const std::string& path) {
    std::ofstream os = open_out(path);
    emit_reports(reports, fmt, os);
}

std::vector<VerificationReport> parse_csv_reports(std::istream& is) {
    std::vector<std::vector<std::string>> rows = read_csv(is);
    if (rows.empty()) throw IoError("empty report CSV");
    std::vector<VerificationReport> out;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const std::vector<std::string>& row = rows[i];
        if (row.size() != 11) throw IoError("report CSV row has wrong arity");
        VerificationReport r;
        r.identity_id = identity_from_string(row[0]);
        if (!row[1].empty()) {
            std::stringstream ss(row[1]);
            std::string item;
            while (std::getline(ss, item, ';')) {
                std::size_t eq = item.find('=');
                if (eq == std::string::npos) throw IoError("malformed inputs cell");
                r.inputs.emplace_back(item.substr(0, eq), parse_double(item.substr(eq + 1)));
            }
        }
        r.lhs = complex(parse_double(row[2]), parse_double(row[3]));
        r.rhs = complex(parse_double(row[4]), parse_double(row[5]));
        r.abs_err = parse_double(row[6]);
        r.rel_err = parse_double(row[7]);
        if (row[8] == "true") r.pass = true;
        else if (row[8] == "false") r.pass = false;
        else throw IoError("malformed pass cell: " + row[8]);
        r.variant_notes = row[9];
        r.n_evals = static_cast<std::int64_t>(std::strtoll(row[10].c_str(), nullptr, 10));
        out.push_back(std::move(r));
    }
    return out;
}

void emit_zeros(const ZerosTable& table, OutputFormat fmt, std::ostream& os) {
    if (fmt == OutputFormat::JSON) {
        os << "[\n";
        for (std::size_t i = 0; i < table.entries.size(); ++i) {
            const ZeroEntry& z = table.entries[i];
            os << "  {\"index\": " << (i + 1) << ", \"gamma\": " << format_double(z.gamma)
               << ", \"bracket_lo\": " << format_double(z.bracket_lo)
               << ", \"bracket_hi\": " << format_double(z.bracket_hi) << "}"
               << (i + 1 < table.entries.size() ? ",\n" : "\n");
        }
        os << "]\n";
    } else {
        os << "index,gamma,bracket_lo,bracket_hi\n";
        for (std::size_t i = 0; i < table.entries.size(); ++i) {
            const ZeroEntry& z = table.entries[i];
            os << (i + 1) << ',' << format_double(z.gamma) << ','
               << format_double(z.bracket_lo) << ',' << format_double(z.bracket_hi) << '\n';
        }
    }
    if (!os) throw IoError("zeros emission failed");
}

void emit_zeros_to_file(const ZerosTable& table, OutputFormat fmt, const std::string& path) {
    std::ofstream os = open_out(path);
    emit_zeros(table, fmt, os);
}

ZerosTable parse_zeros_csv(std::istream& is) {
    std::vector<std::vector<std::string>> rows = read_csv(is);
    if (rows.empty()) throw IoError("empty zeros CSV");
    ZerosTable table;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const std::vector<std::string>& row = rows[i];
        if (row.size() != 4) throw IoError("zeros CSV row has wrong arity");
        ZeroEntry z;
        z.gamma = parse_double(row[1]);
        z.bracket_lo = parse_double(row[2]);
        z.bracket_hi = parse_double(row[3]);
        table.entries.push_back(z);
    }
    return table;
}

ZerosTable load_zeros_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open zeros file: " + path);
    return parse_zeros_csv(is);
}

void emit_scan(const std::vector<ScanRow>& rows, OutputFormat fmt, std::ostream& os) {
    if (fmt == OutputFormat::JSON) {
        os << "[\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            os << "  {\"gamma\": " << format_double(rows[i].gamma)
               << ", \"y\": " << format_double(rows[i].y)
               << ", \"value\": " << format_double(rows[i].value) << "}"
               << (i + 1 < rows.size() ? ",\n" : "\n");
        }
        os << "]\n";
    } else {
        os << "gamma,y,value\n";
        for (const ScanRow& r : rows)
            os << format_double(r.gamma) << ',' << format_double(r.y) << ','
               << format_double(r.value) << '\n';
    }
    if (!os) throw IoError("scan emission failed");
}

void emit_scan_to_file(const std::vector<ScanRow>& rows, OutputFormat fmt,
                       const std::string& path) {
    std::ofstream os = open_out(path);
    emit_scan(rows, fmt, os);
}

}  // namespace xih
