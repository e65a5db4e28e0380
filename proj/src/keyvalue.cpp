#include "sixvertex/keyvalue.hpp"

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sixvertex/errors.hpp"

namespace sixvertex {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// Parses a full real literal; rejects trailing garbage.
double strict_double(const std::string& text, const std::string& context) {
  const std::string t = trim(text);
  if (t.empty()) throw ConfigError("empty number in '" + context + "'");
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    throw ConfigError("cannot parse number '" + context + "'");
  }
  if (used != t.size()) throw ConfigError("cannot parse number '" + context + "'");
  return v;
}

}  // namespace

KeyValues parse_key_values(const std::string& text) {
  KeyValues out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    const std::string key = trim(t.substr(0, eq));
    if (key.empty()) throw ConfigError("line " + std::to_string(lineno) + ": empty key");
    if (!out.emplace(key, trim(t.substr(eq + 1))).second) {
      throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    }
  }
  return out;
}

KeyValues read_key_values(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_key_values(ss.str());
}

cplx parse_complex(const std::string& text) {
  std::string t = trim(text);
  if (t.empty()) throw ConfigError("empty complex number");
  if (t.front() == '(') {
    if (t.back() != ')') throw ConfigError("unbalanced parentheses in '" + text + "'");
    const auto comma = t.find(',');
    if (comma == std::string::npos) throw ConfigError("expected (re,im) in '" + text + "'");
    return {strict_double(t.substr(1, comma - 1), text),
            strict_double(t.substr(comma + 1, t.size() - comma - 2), text)};
  }
  if (t.back() != 'i') return {strict_double(t, text), 0.0};
  t.pop_back();
  // Split at the last sign that is not an exponent sign and not leading.
  std::size_t split = std::string::npos;
  for (std::size_t k = t.size(); k-- > 1;) {
    if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const auto imag_part = [&](const std::string& s) {
    const std::string u = trim(s);
    if (u.empty() || u == "+") return 1.0;
    if (u == "-") return -1.0;
    return strict_double(u, text);
  };
  if (split == std::string::npos) return {0.0, imag_part(t)};
  return {strict_double(t.substr(0, split), text), imag_part(t.substr(split))};
}

std::vector<cplx> parse_complex_list(const std::string& text) {
  std::vector<cplx> out;
  if (trim(text).empty()) return out;
  // Commas inside "(re,im)" do not separate entries.
  std::string item;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(parse_complex(item));
      item.clear();
    } else {
      item.push_back(ch);
    }
  }
  out.push_back(parse_complex(item));
  return out;
}

double parse_double(const std::string& text) { return strict_double(text, text); }

long long parse_integer(const std::string& text) {
  const std::string t = trim(text);
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(t, &used);
  } catch (const std::exception&) {
    throw ConfigError("cannot parse integer '" + text + "'");
  }
  if (used != t.size()) throw ConfigError("cannot parse integer '" + text + "'");
  return v;
}

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string format_complex(cplx value) {
  if (value.imag() == 0.0) return format_double(value.real());
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", value.real(), value.imag());
  return buf;
}

std::string format_complex_list(const std::vector<cplx>& values) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += ", ";
    out += format_complex(values[k]);
  }
  return out;
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write '" + tmp.string() + "'");
    out << contents;
    if (!out.flush()) throw ConfigError("failed writing '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw ConfigError("cannot move output into place at '" + path + "': " + ec.message());
  }
}

}  // namespace sixvertex
