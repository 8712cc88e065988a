#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

namespace corpus {

inline std::filesystem::path data_dir() { return NEGSET_TEST_DATA_DIR; }

inline std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline std::vector<std::filesystem::path> files(const std::string& subdir) {
  std::vector<std::filesystem::path> out;
  for (const auto& entry : std::filesystem::directory_iterator(data_dir() / subdir)) {
    if (entry.path().extension() == ".neg") out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct ExpectedExits {
  int eval = -1;
  int check = -1;
};

// Reads the "# exit: eval=N check=M" header of a session script.
inline ExpectedExits expected_exits(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  std::smatch m;
  ExpectedExits out;
  if (std::regex_search(first, m, std::regex(R"(eval=(\d+))"))) out.eval = std::stoi(m[1]);
  if (std::regex_search(first, m, std::regex(R"(check=(\d+))"))) out.check = std::stoi(m[1]);
  return out;
}

struct Position {
  int line = 0;
  int column = 0;
};

// Expected error positions from malformed/expected.txt.
inline std::map<std::string, Position> malformed_positions() {
  std::map<std::string, Position> out;
  std::ifstream in(data_dir() / "malformed" / "expected.txt");
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string name;
    Position p;
    fields >> name >> p.line >> p.column;
    out[name] = p;
  }
  return out;
}

}  // namespace corpus
