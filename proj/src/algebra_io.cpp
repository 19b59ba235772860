#include "aisemi/algebra_io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "aisemi/error.hpp"

namespace aisemi {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string token;
  while (in >> token) out.push_back(token);
  return out;
}

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw StructuralError("line " + std::to_string(line) + ": " + message);
}

}  // namespace

FiniteAiSemiring parse_algebra(std::string_view text, std::string name) {
  std::vector<Line> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto tokens = split(raw);
    if (tokens.empty() || tokens.front().starts_with('#')) continue;
    lines.push_back(Line{number, std::move(tokens)});
  }

  std::size_t cursor = 0;
  auto expect_header = [&](const char* header) -> const Line& {
    if (cursor >= lines.size()) fail(number, std::string("missing '") + header + "'");
    const Line& l = lines[cursor++];
    if (l.tokens.front() != header) {
      fail(l.number, std::string("expected '") + header + "'");
    }
    return l;
  };

  const Line& header = expect_header("elements:");
  std::vector<std::string> elements(header.tokens.begin() + 1,
                                    header.tokens.end());
  if (elements.empty()) fail(header.number, "no elements listed");
  std::map<std::string, std::uint32_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!index.emplace(elements[i], static_cast<std::uint32_t>(i)).second) {
      fail(header.number, "duplicate element '" + elements[i] + "'");
    }
  }
  const std::size_t n = elements.size();

  auto read_table = [&](const char* which) {
    const Line& h = expect_header(which);
    if (h.tokens.size() != 1) fail(h.number, "rows must start on a new line");
    std::vector<std::uint32_t> table;
    table.reserve(n * n);
    for (std::size_t row = 0; row < n; ++row) {
      if (cursor >= lines.size()) {
        fail(number, std::string(which) + " table has too few rows");
      }
      const Line& l = lines[cursor++];
      if (l.tokens.size() != n) {
        fail(l.number, std::string(which) + " row has " +
                           std::to_string(l.tokens.size()) +
                           " entries, expected " + std::to_string(n));
      }
      for (const auto& t : l.tokens) {
        auto it = index.find(t);
        if (it == index.end()) fail(l.number, "unknown element '" + t + "'");
        table.push_back(it->second);
      }
    }
    return table;
  };
  auto add = read_table("add:");
  auto mul = read_table("mul:");
  if (cursor != lines.size()) {
    fail(lines[cursor].number, "unexpected trailing content");
  }
  return FiniteAiSemiring(std::move(name), std::move(elements), std::move(add),
                          std::move(mul));
}

FiniteAiSemiring load_algebra(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_algebra(buffer.str(), path.stem().string());
  } catch (const StructuralError& e) {
    throw StructuralError(path.string() + ": " + e.what());
  }
}

std::string format_algebra(const FiniteAiSemiring& s) {
  std::ostringstream out;
  const auto& names = s.element_names();
  const std::size_t n = names.size();
  out << "elements:";
  for (const auto& e : names) out << ' ' << e;
  out << '\n';
  auto table = [&](const char* header, std::span<const std::uint32_t> t) {
    out << header << '\n';
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (j) out << ' ';
        out << names[t[i * n + j]];
      }
      out << '\n';
    }
  };
  table("add:", s.add_table());
  table("mul:", s.mul_table());
  return out.str();
}

void save_algebra(const std::filesystem::path& path, const FiniteAiSemiring& s) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << format_algebra(s);
  if (!out) throw Error("error writing " + path.string());
}

}  // namespace aisemi
