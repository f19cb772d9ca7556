#pragma once

#include <filesystem>
#include <string>

#include "oqecc/additive_code.hpp"

namespace oqecc {

// Code file:
//   {"p": 2, "m": 1, "n": 2, "layout": "symplectic", "generators": [[1,1,0,0]]}
// Generators hold element encodings: 2n entries below q (symplectic) or n
// entries below q^2 (hermitian). Throws ParseError with a line or field
// diagnostic, and InvalidEncoding for out-of-range entries.
AdditiveCode parse_code_json(const std::string& text);
AdditiveCode parse_code_file(const std::filesystem::path& path);

// Canonical generators, one per line.
std::string emit_code_json(const AdditiveCode& x);
void write_code_file(const std::filesystem::path& path, const AdditiveCode& x);

// "(10|00)" for symplectic vectors and "[a b]" for hermitian ones; entries
// are comma separated once q needs more than one digit.
std::string format_vector(const CodeVector& v);

}  // namespace oqecc
