#include <zl1/catalogue.hpp>
#include <zl1/errors.hpp>
#include <zl1/family.hpp>
#include <zl1/group_io.hpp>

#include <fstream>
#include <sstream>

namespace zl1 {

namespace {

std::string trim(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  return s;
}

// "steinberg from n=2" / "stegmeir from p=5" / "aff-powers(2) from n=3" /
// "aff-powers-linear(2)" / "constant(atom)" / "abelian" / "empty"
void parse_tail_into(FamilySpec& f, const std::string& spec) {
  std::string s = trim(spec);
  if (s == "empty") {
    f.tail = TailKind::Empty;
    return;
  }
  if (s == "abelian") {
    f.tail = TailKind::Abelian;
    return;
  }
  auto from_value = [&](const std::string& key, long dflt) -> long {
    auto pos = s.find("from " + key + "=");
    if (pos == std::string::npos) return dflt;
    return std::stol(s.substr(pos + key.size() + 6));
  };
  f.tail = TailKind::Stream;
  if (s.rfind("steinberg", 0) == 0) {
    f.stream = steinberg_stream(static_cast<int>(from_value("n", 2)));
    return;
  }
  if (s.rfind("stegmeir", 0) == 0) {
    f.stream = stegmeir_stream(from_value("p", 3));
    return;
  }
  if (s.rfind("aff-powers-linear(", 0) == 0) {
    auto close = s.find(')');
    long p = std::stol(s.substr(18, close - 18));
    f.stream = aff_power_stream(p, static_cast<int>(from_value("n", 2)), true);
    return;
  }
  if (s.rfind("aff-powers(", 0) == 0) {
    auto close = s.find(')');
    long p = std::stol(s.substr(11, close - 11));
    f.stream = aff_power_stream(p, static_cast<int>(from_value("n", 2)), false);
    return;
  }
  if (s.rfind("constant(", 0) == 0 && s.back() == ')') {
    f.stream = constant_stream(parse_atom(s.substr(9, s.size() - 10)));
    return;
  }
  throw ParseError("unknown tail: " + s +
                   " (builtin streams: steinberg, stegmeir, aff-powers(p), "
                   "aff-powers-linear(p), constant(atom), abelian, empty)");
}

HeadEntry parse_head_line(const std::string& line) {
  std::string s = trim(line);
  if (s.rfind("group ", 0) == 0) {
    // group <expr> char <row>
    auto cpos = s.rfind(" char ");
    if (cpos == std::string::npos) throw ParseError("head line needs 'char <row>': " + s);
    GroupPtr g = parse_group_expr(trim(s.substr(6, cpos - 6)));
    long row = std::stol(s.substr(cpos + 6));
    CharacterTable t = character_table(g);
    if (row < 0 || row >= t.count()) throw ParseError("character row out of range: " + s);
    return HeadEntry::from_pair(g, t.irreducibles[row]);
  }
  if (s.rfind("table ", 0) == 0) {
    auto cpos = s.rfind(" char ");
    if (cpos == std::string::npos) throw ParseError("head line needs 'char <row>': " + s);
    GroupPtr g = read_multiplication_table_file(trim(s.substr(6, cpos - 6)));
    long row = std::stol(s.substr(cpos + 6));
    CharacterTable t = character_table(g);
    if (row < 0 || row >= t.count()) throw ParseError("character row out of range: " + s);
    return HeadEntry::from_pair(g, t.irreducibles[row]);
  }
  return HeadEntry::from_atom(parse_atom(s));
}

}  // namespace

FamilySpec parse_family(std::istream& in, const std::string& origin) {
  FamilySpec f;
  f.description = origin;
  bool in_head = false;
  bool have_tail = false;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string s = trim(line);
    if (s.empty()) continue;
    if (s.rfind("description:", 0) == 0) {
      f.description = trim(s.substr(12));
      in_head = false;
      continue;
    }
    if (s == "head:") {
      in_head = true;
      continue;
    }
    if (s.rfind("tail:", 0) == 0) {
      parse_tail_into(f, s.substr(5));
      have_tail = true;
      in_head = false;
      continue;
    }
    if (in_head) {
      f.head.push_back(parse_head_line(s));
      continue;
    }
    throw ParseError("unexpected line in family spec: " + s);
  }
  if (!have_tail) throw ParseError("family spec must declare a tail (may be 'tail: empty')");
  return f;
}

FamilySpec parse_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_family(in, path);
}

std::vector<std::string> builtin_family_names() {
  return {"stegmeir", "steinberg", "aff-powers(2)", "aff-powers-linear(2)", "constant-d4"};
}

FamilySpec builtin_family(const std::string& name) {
  FamilySpec f;
  f.description = name;
  if (name == "stegmeir") {
    f.tail = TailKind::Stream;
    f.stream = stegmeir_stream(3);
    return f;
  }
  if (name == "steinberg") {
    f.tail = TailKind::Stream;
    f.stream = steinberg_stream(2);
    return f;
  }
  if (name == "constant-d4") {
    f.tail = TailKind::Stream;
    f.stream = constant_stream(FamilyAtom::dihedral_two_dim(4, 1));
    return f;
  }
  if (name.rfind("aff-powers-linear(", 0) == 0 && name.back() == ')') {
    long p = std::stol(name.substr(18, name.size() - 19));
    f.tail = TailKind::Stream;
    f.stream = aff_power_stream(p, 2, true);
    return f;
  }
  if (name.rfind("aff-powers(", 0) == 0 && name.back() == ')') {
    long p = std::stol(name.substr(11, name.size() - 12));
    f.tail = TailKind::Stream;
    f.stream = aff_power_stream(p, 2, false);
    return f;
  }
  if (name.rfind("constant(", 0) == 0 && name.back() == ')') {
    f.tail = TailKind::Stream;
    f.stream = constant_stream(parse_atom(name.substr(9, name.size() - 10)));
    return f;
  }
  throw ParseError("unknown builtin family: " + name);
}

}  // namespace zl1
