#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "symquot/matrix.hpp"
#include "symquot/matrix_group.hpp"
#include "symquot/symplectic_double.hpp"

namespace symquot {

/// Text serialization of a matrix group:
///
///   # comment
///   name: S3
///   conductor: 1
///   dimension: 2
///   generator:
///     0, 1
///     1, 0
///
/// Header keys may appear in any order before the first generator; name is
/// optional, conductor defaults to 1. Each generator block holds `dimension`
/// rows of comma-separated cyclotomic literals in z = exp(2 pi i / conductor).
struct GroupFile {
  std::string name;
  int conductor = 1;
  std::size_t dimension = 0;
  std::vector<Matrix> generators;

  bool operator==(const GroupFile&) const = default;
};

/// Throws ParseError with line and column for malformed text or literals,
/// dimension mismatches and conductors below 1.
GroupFile parse_group_file(std::string_view text);

/// Canonical form; parse_group_file(serialize_group_file(f)) == f.
std::string serialize_group_file(const GroupFile& f);

GroupFile load_group_file(const std::string& path);

Representation to_representation(const GroupFile& f, std::size_t max_order = kDefaultMaxOrder);

}  // namespace symquot
