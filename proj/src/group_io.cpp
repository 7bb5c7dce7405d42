#include "primex/group_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace primex {

namespace {

std::string strip_comment(std::string const &line)
{
  auto pos = line.find('#');
  std::string s = (pos == std::string::npos) ? line : line.substr(0, pos);
  // trim
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos)
    return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

} // namespace

Permutation parse_generator_line(std::string const &line, int degree)
{
  std::istringstream in(line);
  std::vector<int> img;
  int v;
  while (in >> v)
    img.push_back(v);
  if (!in.eof())
    fail(ErrorCode::Parse, "generator line contains a non-integer token: " + line);
  if (static_cast<int>(img.size()) != degree)
    fail(ErrorCode::Parse, "generator line has " + std::to_string(img.size()) +
                             " entries, expected " + std::to_string(degree));
  try {
    return Permutation(std::move(img));
  } catch (Error const &e) {
    fail(ErrorCode::Parse, std::string("generator line: ") + e.what());
  }
}

PermutationGroup parse_group(std::string const &text)
{
  std::istringstream in(text);
  std::string line;
  int degree = -1;
  std::vector<Permutation> gens;

  while (std::getline(in, line)) {
    std::string s = strip_comment(line);
    if (s.empty())
      continue;
    if (degree < 0) {
      std::istringstream head(s);
      std::string word;
      head >> word;
      if (word != "degree" || !(head >> degree) || degree < 1)
        fail(ErrorCode::Parse, "expected header line 'degree d', got: " + s);
      std::string rest;
      if (head >> rest)
        fail(ErrorCode::Parse, "trailing tokens after degree header: " + s);
      continue;
    }
    gens.push_back(parse_generator_line(s, degree));
  }

  if (degree < 0)
    fail(ErrorCode::Parse, "missing 'degree d' header line");
  if (gens.empty())
    fail(ErrorCode::Parse, "group file lists no generators");
  return PermutationGroup(std::move(gens));
}

PermutationGroup read_group_file(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    fail(ErrorCode::Parse, "cannot open group file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group(buf.str());
}

std::string serialize_group(PermutationGroup const &g)
{
  std::vector<Permutation> gens = g.generators();
  std::sort(gens.begin(), gens.end());

  std::ostringstream out;
  out << "degree " << g.degree() << "\n";
  for (auto const &p : gens) {
    for (int i = 0; i < p.degree(); ++i)
      out << (i ? " " : "") << p[i];
    out << "\n";
  }
  return out.str();
}

void write_group_file(std::string const &path, PermutationGroup const &g)
{
  std::ofstream out(path);
  if (!out)
    fail(ErrorCode::Parse, "cannot write group file: " + path);
  out << serialize_group(g);
}

} // namespace primex
