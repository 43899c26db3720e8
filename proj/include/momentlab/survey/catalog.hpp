#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "momentlab/perm/perm_group.hpp"

namespace momentlab {

/// One line `degree <N> id <string> gens <perm> <perm> ...` of a .grp file.
struct CatalogEntry {
  std::size_t degree = 0;
  std::string id;
  std::vector<Permutation> generators;

  PermGroup group() const { return PermGroup(degree, generators); }
};

/// Parses catalog text; '#' starts a comment line. Throws ParseError with the
/// line number on malformed lines, intransitive groups, points beyond the
/// degree, or a repeated generator set.
std::vector<CatalogEntry> parse_catalog(std::string_view text);
std::vector<CatalogEntry> load_catalog(const std::string& path);

/// A5 acting on the 10 two-element subsets of {1..5}.
PermGroup a5_on_pairs();
/// F_3^2 extended by the signed permutation matrices (a dihedral group of
/// order 8), acting on the 9 points of the plane.
PermGroup affine_e9_d8();

}  // namespace momentlab
