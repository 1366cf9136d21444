#include "msplit/instance_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace msplit {

namespace {

using nlohmann::json;

json require_key(const json& obj, const std::string& key) {
  if (!obj.contains(key)) throw ParseError("missing key \"" + key + "\"");
  return obj.at(key);
}

}  // namespace

LoadedInstance parse_instance_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("instance file must hold a single object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "p" && key != "ground" && key != "columns" && key != "T")
      throw ParseError("unknown key \"" + key + "\"");
  }

  const json jp = require_key(doc, "p");
  if (!jp.is_number_integer()) throw ParseError("\"p\" must be an integer");
  const int p_raw = jp.get<int>();

  const json jground = require_key(doc, "ground");
  if (!jground.is_array()) throw ParseError("\"ground\" must be an array of labels");
  std::vector<std::string> ground;
  for (const auto& g : jground) {
    if (!g.is_string()) throw ParseError("\"ground\" entries must be strings");
    ground.push_back(g.get<std::string>());
  }

  const json jcols = require_key(doc, "columns");
  if (!jcols.is_array()) throw ParseError("\"columns\" must be an array of integer arrays");
  if (jcols.size() != ground.size())
    throw ParseError("\"columns\" must hold one column per ground element");
  if (jcols.empty()) throw ParseError("instance needs at least one element");

  std::size_t rows = 0;
  std::vector<std::vector<int>> columns;
  for (std::size_t i = 0; i < jcols.size(); ++i) {
    const json& col = jcols[i];
    if (!col.is_array()) throw ParseError("column " + std::to_string(i) + " must be an array");
    if (i == 0) {
      rows = col.size();
      if (rows == 0) throw ParseError("columns must be nonempty");
    } else if (col.size() != rows) {
      throw ParseError("column " + std::to_string(i) + " has mismatched length");
    }
    std::vector<int> entries;
    for (const auto& e : col) {
      if (!e.is_number_integer())
        throw ParseError("column " + std::to_string(i) + " holds a non-integer entry");
      const int v = e.get<int>();
      if (v < 0 || v >= p_raw)
        throw ParseError("entry " + std::to_string(v) + " in column " + std::to_string(i) +
                         " is outside the residue range [0," + std::to_string(p_raw) + ")");
      entries.push_back(v);
    }
    columns.push_back(std::move(entries));
  }

  std::optional<std::vector<std::string>> t_labels;
  if (doc.contains("T")) {
    const json& jt = doc.at("T");
    if (!jt.is_array()) throw ParseError("\"T\" must be an array of labels");
    std::vector<std::string> tl;
    for (const auto& e : jt) {
      if (!e.is_string()) throw ParseError("\"T\" entries must be strings");
      tl.push_back(e.get<std::string>());
    }
    t_labels = std::move(tl);
  }

  try {
    const PrimeModulus mod(p_raw);
    FieldMatrix matrix(mod, static_cast<int>(rows), static_cast<int>(columns.size()));
    for (std::size_t c = 0; c < columns.size(); ++c)
      for (std::size_t r = 0; r < rows; ++r)
        matrix.set(static_cast<int>(r), static_cast<int>(c), columns[c][r]);
    // Coloops are allowed: files emitted by the split commands contain them.
    Matroid m = Matroid::from_matrix(mod, matrix, ground, /*allow_coloops=*/true);
    std::optional<GroundSubset> t;
    if (t_labels) t = m.subset_from_labels(*t_labels);
    return LoadedInstance{std::move(m), t};
  } catch (const ParseError&) {
    throw;
  } catch (const ValidationError&) {
    throw;
  } catch (const Error& e) {
    throw ValidationError(e.what());
  }
}

LoadedInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_text(buf.str());
}

std::string instance_to_text(const Matroid& m, const std::optional<GroundSubset>& t) {
  json doc;
  doc["p"] = m.modulus().value();
  doc["ground"] = m.ground();
  json cols = json::array();
  for (int c = 0; c < m.size(); ++c) cols.push_back(m.matrix().column(c));
  doc["columns"] = cols;
  if (t) {
    json tl = json::array();
    for (int i : t->indices()) tl.push_back(m.label(i));
    doc["T"] = tl;
  }
  return doc.dump(2) + "\n";
}

void write_instance(const std::string& path, const Matroid& m,
                    const std::optional<GroundSubset>& t) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << instance_to_text(m, t);
}

}  // namespace msplit
