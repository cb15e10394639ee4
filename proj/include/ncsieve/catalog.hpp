#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ncsieve/cyclo.hpp"

namespace ncsieve {

/// One group stored as data: generator matrices over Q(zeta_conductor).
struct CatalogEntry {
  std::string name;
  unsigned rank = 0;
  unsigned conductor = 1;
  std::vector<unsigned> degrees;    // ascending
  std::vector<unsigned> codegrees;  // descending
  std::vector<CycloMatrix> generators;
  std::string source;  // file the entry was read from
};

/// Entries from every `*.json` document in a directory. Each document is
/// {"family": ..., "entries": [{name, rank, conductor, degrees, codegrees,
/// generators}]}, where a matrix entry is the list of its phi(conductor)
/// rational coefficients in the power basis 1, z, z^2, ...
class Catalog {
 public:
  Catalog() = default;

  static Catalog load(const std::filesystem::path& dir);
  /// The catalog shipped with the build, loaded once.
  static const Catalog& shipped();
  static std::filesystem::path default_dir();

  /// Parse one document and append its entries; later files override earlier names.
  void add_file(const std::filesystem::path& file);

  const CatalogEntry* find(std::string_view name) const;
  const std::vector<CatalogEntry>& entries() const { return entries_; }

 private:
  std::vector<CatalogEntry> entries_;
};

}  // namespace ncsieve
