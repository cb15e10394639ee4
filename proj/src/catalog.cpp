#include "ncsieve/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>

#include "ncsieve/errors.hpp"

namespace ncsieve {

namespace {

using nlohmann::json;

CycloElem parse_entry(const json& j, unsigned conductor, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": matrix entry must be an array of rationals");
  std::vector<mpq_class> coeffs;
  for (const auto& c : j) {
    mpq_class q;
    const std::string text = c.is_string() ? c.get<std::string>() : c.dump();
    if (q.set_str(text, 10) != 0) throw ParseError(where + ": bad rational '" + text + "'");
    q.canonicalize();
    coeffs.push_back(q);
  }
  if (coeffs.size() != euler_phi(conductor))
    throw ParseError(where + ": entry has " + std::to_string(coeffs.size()) + " coefficients, expected phi(" +
                     std::to_string(conductor) + ")");
  return CycloElem(conductor, std::move(coeffs));
}

CatalogEntry parse_catalog_entry(const json& e, const std::string& file) {
  CatalogEntry out;
  out.source = file;
  out.name = e.at("name").get<std::string>();
  const std::string where = file + ":" + out.name;
  out.rank = e.at("rank").get<unsigned>();
  out.conductor = e.at("conductor").get<unsigned>();
  if (out.conductor == 0) throw ParseError(where + ": conductor must be positive");
  out.degrees = e.at("degrees").get<std::vector<unsigned>>();
  std::sort(out.degrees.begin(), out.degrees.end());
  if (out.degrees.size() != out.rank) throw ParseError(where + ": need one degree per rank");
  if (e.contains("codegrees")) {
    out.codegrees = e.at("codegrees").get<std::vector<unsigned>>();
    std::sort(out.codegrees.rbegin(), out.codegrees.rend());
    if (out.codegrees.size() != out.rank) throw ParseError(where + ": need one codegree per rank");
  }
  for (const auto& g : e.at("generators")) {
    if (g.size() != out.rank) throw ParseError(where + ": generator matrix has wrong row count");
    CycloMatrix m(out.rank, out.rank);
    for (unsigned r = 0; r < out.rank; ++r) {
      if (g[r].size() != out.rank) throw ParseError(where + ": generator matrix has wrong column count");
      for (unsigned c = 0; c < out.rank; ++c) m(r, c) = parse_entry(g[r][c], out.conductor, where);
    }
    out.generators.push_back(std::move(m));
  }
  if (out.generators.empty()) throw ParseError(where + ": no generators");
  return out;
}

}  // namespace

std::filesystem::path Catalog::default_dir() { return NCSIEVE_CATALOG_DIR; }

Catalog Catalog::load(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw ParseError("catalog directory not found: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& f : std::filesystem::directory_iterator(dir))
    if (f.path().extension() == ".json") files.push_back(f.path());
  std::sort(files.begin(), files.end());
  Catalog c;
  for (const auto& f : files) c.add_file(f);
  return c;
}

const Catalog& Catalog::shipped() {
  static const Catalog c = load(default_dir());
  return c;
}

void Catalog::add_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open catalog file " + file.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& ex) {
    throw ParseError("catalog file " + file.string() + ": " + ex.what());
  }
  try {
    for (const auto& e : doc.at("entries")) {
      CatalogEntry entry = parse_catalog_entry(e, file.string());
      auto it = std::find_if(entries_.begin(), entries_.end(), [&](const auto& x) { return x.name == entry.name; });
      if (it != entries_.end())
        *it = std::move(entry);
      else
        entries_.push_back(std::move(entry));
    }
  } catch (const json::exception& ex) {
    throw ParseError("catalog file " + file.string() + ": " + ex.what());
  }
}

const CatalogEntry* Catalog::find(std::string_view name) const {
  for (const auto& e : entries_)
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace ncsieve
