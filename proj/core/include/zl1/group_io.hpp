#pragma once

#include <zl1/group.hpp>

#include <iosfwd>
#include <string>

namespace zl1 {

// Multiplication-table text format: first line n, then n rows of n
// space-separated element indices.
GroupPtr read_multiplication_table(std::istream& in, std::string name = "");
GroupPtr read_multiplication_table_file(const std::string& path);
void write_multiplication_table(std::ostream& out, const FiniteGroup& g);

// Permutation-generator text format: first line the degree, then one
// permutation per line in one-line image notation.
GroupPtr read_permutation_generators(std::istream& in, std::string name = "");
GroupPtr read_permutation_generators_file(const std::string& path);

}  // namespace zl1
