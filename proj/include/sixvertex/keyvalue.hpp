#pragma once

// Flat "key = value" text documents. Blank lines and lines starting with
// '#' are ignored; keys are unique. Complex numbers are written as
// "re", "re+imi", "re-imi", "imi" or "(re,im)".

#include <map>
#include <string>
#include <vector>

#include "sixvertex/tensor_core.hpp"

namespace sixvertex {

using KeyValues = std::map<std::string, std::string>;

KeyValues parse_key_values(const std::string& text);
KeyValues read_key_values(const std::string& path);

cplx parse_complex(const std::string& text);
/// Comma separated complex list; an empty string gives an empty list.
std::vector<cplx> parse_complex_list(const std::string& text);
double parse_double(const std::string& text);
long long parse_integer(const std::string& text);

/// Round-trip exact (17 significant digits).
std::string format_complex(cplx value);
std::string format_complex_list(const std::vector<cplx>& values);
std::string format_double(double value);

/// Writes through a temporary file and renames it over `path`.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace sixvertex
