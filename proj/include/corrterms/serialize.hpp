#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "corrterms/correction.hpp"
#include "corrterms/errors.hpp"
#include "corrterms/rational.hpp"

namespace corrterms {

enum class OutputFormat { pretty, json, csv };

OutputFormat parse_format(const std::string& name);

// ", "-joined row, the exact comma convention of the CSV output.
std::string join_csv(const std::vector<std::string>& items);

std::vector<std::string> rational_strings(const std::vector<Rational>& values);

// JSON encodings.  Rationals are rendered as exact "num/den" strings (plain
// integers when the denominator is one).  Matrices are encoded by centered
// rows exactly as stored; canonicalization is the caller's choice.
nlohmann::ordered_json table_json(const CorrectionTable& t, bool uncentered_display);
nlohmann::ordered_json matrix_json(const CorrectionMatrix& m);

// Inverse maps: reconstruct the domain object from its JSON encoding, so
// that re-serializing reproduces the original bytes.
CorrectionTable table_from_json(const nlohmann::ordered_json& j);
bool table_json_is_uncentered(const nlohmann::ordered_json& j);
CorrectionMatrix matrix_from_json(const nlohmann::ordered_json& j);

// Uniform JSON rendering: two-space indentation and a trailing newline.
std::string dump_json(const nlohmann::ordered_json& j);

// Pretty printers (aligned, deterministic).
void print_table_pretty(std::ostream& out, const CorrectionTable& t, bool uncentered_display,
                        const std::string& title);
void print_matrix_pretty(std::ostream& out, const CorrectionMatrix& m, const std::string& title);

// CSV printers: one line per row, entries ", "-joined.
void print_table_csv(std::ostream& out, const CorrectionTable& t, bool uncentered_display);
void print_matrix_csv(std::ostream& out, const CorrectionMatrix& m);

}  // namespace corrterms
