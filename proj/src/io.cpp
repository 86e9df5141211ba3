#include "topochar/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "topochar/errors.hpp"

namespace topochar {

namespace {

std::vector<VertexId> parse_ids(const std::string& line, std::size_t line_no) {
  std::vector<VertexId> ids;
  std::istringstream tokens(line);
  std::string tok;
  while (tokens >> tok) {
    VertexId v{};
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || end != tok.data() + tok.size())
      throw InputError("line " + std::to_string(line_no) + ": bad vertex id '" + tok + "'");
    ids.push_back(v);
  }
  return ids;
}

bool skippable(const std::string& line) {
  auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

std::string trimmed(const std::string& line) {
  auto a = line.find_first_not_of(" \t\r");
  auto b = line.find_last_not_of(" \t\r");
  return a == std::string::npos ? "" : line.substr(a, b - a + 1);
}

}  // namespace

Complex parse_complex(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool graph = false;
  bool first = true;
  std::vector<Simplex> facets;
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    if (first) {
      first = false;
      if (trimmed(line) == "graph") {
        graph = true;
        continue;
      }
    }
    std::vector<VertexId> ids = parse_ids(line, line_no);
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (graph) {
      if (ids.size() == 1) {
        vertices.push_back(ids[0]);
      } else if (ids.size() == 2) {
        if (ids[0] == ids[1]) throw InputError(where + "self loop");
        vertices.insert(vertices.end(), ids.begin(), ids.end());
        edges.emplace_back(ids[0], ids[1]);
      } else {
        throw InputError(where + "expected 'u v' or a single vertex");
      }
    } else {
      try {
        facets.emplace_back(std::move(ids));
      } catch (const InputError& e) {
        throw InputError(where + e.what());
      }
    }
  }
  if (graph) return whitney(vertices, edges);
  return closure(facets);
}

Complex parse_complex(const std::string& text) {
  std::istringstream in(text);
  return parse_complex(in);
}

Complex read_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse_complex(in);
}

void write_facets(std::ostream& out, const Complex& g) {
  for (const Simplex& x : facets(g)) {
    bool sep = false;
    for (VertexId v : x.vertices()) {
      if (sep) out << ' ';
      out << v;
      sep = true;
    }
    out << '\n';
  }
}

std::string facets_text(const Complex& g) {
  std::ostringstream out;
  write_facets(out, g);
  return out.str();
}

}  // namespace topochar
