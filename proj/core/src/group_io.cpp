#include <zl1/group_io.hpp>

#include <fstream>
#include <sstream>

namespace zl1 {

namespace {

std::string stem_of(const std::string& path) {
  auto slash = path.find_last_of("/\\");
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  auto dot = base.find_last_of('.');
  return dot == std::string::npos ? base : base.substr(0, dot);
}

}  // namespace

GroupPtr read_multiplication_table(std::istream& in, std::string name) {
  int n;
  if (!(in >> n) || n < 1) throw ParseError("multiplication table: bad order line");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!(in >> table[i][j])) {
        throw ParseError("multiplication table: truncated at row " + std::to_string(i));
      }
    }
  }
  return FiniteGroup::from_multiplication_table(table, std::move(name));
}

GroupPtr read_multiplication_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_multiplication_table(in, stem_of(path));
}

void write_multiplication_table(std::ostream& out, const FiniteGroup& g) {
  const int n = g.order();
  out << n << "\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j) out << ' ';
      out << g.mul(i, j);
    }
    out << "\n";
  }
}

GroupPtr read_permutation_generators(std::istream& in, std::string name) {
  std::string line;
  int degree = -1;
  std::vector<std::vector<int>> gens;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<int> nums;
    int v;
    while (ls >> v) nums.push_back(v);
    if (nums.empty()) continue;
    if (degree < 0) {
      if (nums.size() != 1 || nums[0] < 1) {
        throw ParseError("permutation file: first line must be the degree");
      }
      degree = nums[0];
    } else {
      if (static_cast<int>(nums.size()) != degree) {
        throw ParseError("permutation file: line has wrong length");
      }
      gens.push_back(nums);
    }
  }
  if (degree < 0) throw ParseError("permutation file: empty");
  return FiniteGroup::from_permutation_generators(degree, gens, std::move(name));
}

GroupPtr read_permutation_generators_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_permutation_generators(in, stem_of(path));
}

}  // namespace zl1
