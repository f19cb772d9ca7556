#include "oqecc/code_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "oqecc/error.hpp"

namespace oqecc {

namespace {

using nlohmann::json;

std::size_t line_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) line += text[i] == '\n';
  return line;
}

const json& field(const json& doc, const char* name) {
  const auto it = doc.find(name);
  if (it == doc.end()) throw Error(ErrorCode::ParseError, std::string("missing field '") + name + "'");
  return *it;
}

unsigned unsigned_field(const json& doc, const char* name) {
  const json& v = field(doc, name);
  if (!v.is_number_unsigned()) {
    throw Error(ErrorCode::ParseError, std::string("field '") + name + "' must be a nonnegative integer");
  }
  return v.get<unsigned>();
}

}  // namespace

AdditiveCode parse_code_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "top level must be an object");

  const unsigned p = unsigned_field(doc, "p");
  const unsigned m = unsigned_field(doc, "m");
  const unsigned n = unsigned_field(doc, "n");
  if (n == 0) throw Error(ErrorCode::ParseError, "field 'n' must be positive");

  const json& layout_field = field(doc, "layout");
  if (!layout_field.is_string()) throw Error(ErrorCode::ParseError, "field 'layout' must be a string");
  const std::string layout_name = layout_field.get<std::string>();
  Layout layout;
  if (layout_name == "symplectic") {
    layout = Layout::Symplectic;
  } else if (layout_name == "hermitian") {
    layout = Layout::Hermitian;
  } else {
    throw Error(ErrorCode::ParseError, "field 'layout' must be \"symplectic\" or \"hermitian\"");
  }

  const auto ctx = GfContext::make(p, m);
  const std::size_t length = layout == Layout::Symplectic ? 2 * n : n;
  const unsigned bound = layout == Layout::Symplectic ? ctx->q() : ctx->q() * ctx->q();

  const json& gens = field(doc, "generators");
  if (!gens.is_array()) throw Error(ErrorCode::ParseError, "field 'generators' must be an array");
  std::vector<CodeVector> vectors;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const std::string where = "generators[" + std::to_string(g) + "]";
    const json& row = gens[g];
    if (!row.is_array()) throw Error(ErrorCode::ParseError, where + " must be an array");
    if (row.size() != length) {
      throw Error(ErrorCode::ParseError, where + " has " + std::to_string(row.size()) + " entries, expected " +
                                             std::to_string(length));
    }
    std::vector<Elem> coords;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (!row[j].is_number_integer()) {
        throw Error(ErrorCode::ParseError, where + "[" + std::to_string(j) + "] must be an integer");
      }
      const auto v = row[j].get<long long>();
      if (v < 0 || v >= static_cast<long long>(bound)) {
        throw Error(ErrorCode::InvalidEncoding, where + "[" + std::to_string(j) + "] = " + std::to_string(v) +
                                                    " is not below " + std::to_string(bound));
      }
      coords.push_back(static_cast<Elem>(v));
    }
    vectors.emplace_back(ctx, layout, std::move(coords));
  }
  return AdditiveCode::from_generators(ctx, n, layout, vectors);
}

AdditiveCode parse_code_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_code_json(buf.str());
}

std::string emit_code_json(const AdditiveCode& x) {
  std::ostringstream out;
  out << "{\n  \"p\": " << x.ctx()->p() << ",\n  \"m\": " << x.ctx()->m() << ",\n  \"n\": " << x.n()
      << ",\n  \"layout\": \"" << to_string(x.layout()) << "\",\n  \"generators\": [";
  const auto gens = x.generators();
  for (std::size_t g = 0; g < gens.size(); ++g) {
    out << (g == 0 ? "\n    [" : ",\n    [");
    const auto& c = gens[g].coords();
    for (std::size_t j = 0; j < c.size(); ++j) out << (j == 0 ? "" : ", ") << c[j];
    out << "]";
  }
  out << (gens.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return out.str();
}

void write_code_file(const std::filesystem::path& path, const AdditiveCode& x) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << emit_code_json(x);
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

std::string format_vector(const CodeVector& v) {
  const unsigned bound = v.layout() == Layout::Symplectic ? v.ctx()->q() : v.ctx()->q() * v.ctx()->q();
  const bool compact = bound <= 10;
  std::ostringstream out;
  const auto& c = v.coords();
  if (v.layout() == Layout::Symplectic) {
    out << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i == v.n()) {
        out << '|';
      } else if (i != 0 && !compact) {
        out << ',';
      }
      out << c[i];
    }
    out << ')';
  } else {
    out << '[';
    for (std::size_t i = 0; i < c.size(); ++i) out << (i == 0 ? "" : " ") << c[i];
    out << ']';
  }
  return out.str();
}

}  // namespace oqecc
