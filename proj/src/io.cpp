#include "wreath/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wreath {

SimplicialComplex read_complex(std::istream& in, bool prune, std::string* warnings) {
  std::vector<Simplex> facets;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::istringstream ls(line);
    std::vector<VertexLabel> labels;
    std::string tok;
    while (ls >> tok) labels.push_back(tok);
    if (labels.size() == 1 && labels[0] == "EMPTYFACET") {
      facets.push_back(Simplex{});
      continue;
    }
    for (const auto& l : labels)
      if (!valid_vertex_label(l))
        throw std::runtime_error("line " + std::to_string(lineno) +
                                 ": invalid vertex label '" + l + "'");
    try {
      facets.push_back(Simplex(labels));
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }

  // Detect facets dominated by another listed facet before constructing.
  std::vector<std::size_t> dominated;
  for (std::size_t i = 0; i < facets.size(); ++i)
    for (std::size_t j = 0; j < facets.size(); ++j) {
      if (i == j) continue;
      bool sub = facets[i].is_subset_of(facets[j]);
      bool strict = sub && !(facets[j].is_subset_of(facets[i]));
      if (strict || (sub && i > j)) {
        dominated.push_back(i);
        break;
      }
    }
  if (!dominated.empty()) {
    if (!prune) {
      throw std::runtime_error("facet '" + facets[dominated.front()].to_string() +
                               "' is contained in another facet (use prune mode to drop)");
    }
    if (warnings) {
      for (auto i : dominated)
        *warnings += "pruned non-maximal facet: " + facets[i].to_string() + "\n";
    }
  }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex read_complex_file(const std::string& path, bool prune,
                                    std::string* warnings) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_complex(in, prune, warnings);
}

void write_complex(std::ostream& out, const SimplicialComplex& K) {
  for (const auto& f : K.facets()) out << f.to_string() << '\n';
}

void write_complex_file(const std::string& path, const SimplicialComplex& K) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_complex(out, K);
}

}  // namespace wreath
