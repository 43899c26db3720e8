#include "momentlab/survey/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "momentlab/errors.hpp"

namespace momentlab {

std::vector<CatalogEntry> parse_catalog(std::string_view text) {
  std::vector<CatalogEntry> out;
  std::set<std::pair<std::size_t, std::vector<Permutation>>> seen;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream tokens(line);
    std::string word;
    if (!(tokens >> word) || word.front() == '#') continue;

    CatalogEntry e;
    long degree = 0;
    if (word != "degree" || !(tokens >> degree)) throw ParseError("expected 'degree <N>'", lineno);
    if (degree < 1 || degree > static_cast<long>(kMaxDegree)) throw ParseError("degree out of range", lineno);
    e.degree = static_cast<std::size_t>(degree);
    if (!(tokens >> word) || word != "id" || !(tokens >> e.id)) throw ParseError("expected 'id <name>'", lineno);
    if (!(tokens >> word) || word != "gens") throw ParseError("expected 'gens'", lineno);
    while (tokens >> word) {
      try {
        e.generators.push_back(parse_permutation(word, e.degree));
      } catch (const ParseError& err) {
        throw ParseError(err.what(), lineno);
      } catch (const std::invalid_argument& err) {
        throw ParseError(err.what(), lineno);
      }
    }
    if (orbits_of(e.degree, e.generators).size() != 1) {
      throw ParseError("group " + e.id + " is not transitive", lineno);
    }
    std::vector<Permutation> key = e.generators;
    std::sort(key.begin(), key.end());
    key.erase(std::unique(key.begin(), key.end()), key.end());
    if (!seen.emplace(e.degree, key).second) throw ParseError("duplicate generator set for " + e.id, lineno);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_catalog(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

PermGroup a5_on_pairs() {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) pairs.emplace_back(i, j);
  }
  auto induced = [&](const std::vector<int>& f) {
    std::vector<Point> images(pairs.size());
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      auto [a, b] = pairs[k];
      std::pair<int, int> img{std::min(f[a], f[b]), std::max(f[a], f[b])};
      images[k] = static_cast<Point>(std::find(pairs.begin(), pairs.end(), img) - pairs.begin());
    }
    return Permutation::from_images(images);
  };
  return PermGroup(10, {induced({1, 2, 3, 4, 0}), induced({1, 2, 0, 3, 4})});
}

PermGroup affine_e9_d8() {
  // point (x, y) is 3x + y
  auto affine = [](int a, int b, int c, int d, int tx, int ty) {
    std::vector<Point> images(9);
    for (int x = 0; x < 3; ++x) {
      for (int y = 0; y < 3; ++y) {
        const int nx = ((a * x + b * y + tx) % 3 + 3) % 3;
        const int ny = ((c * x + d * y + ty) % 3 + 3) % 3;
        images[static_cast<std::size_t>(3 * x + y)] = static_cast<Point>(3 * nx + ny);
      }
    }
    return Permutation::from_images(images);
  };
  return PermGroup(9, {affine(1, 0, 0, 1, 1, 0), affine(1, 0, 0, 1, 0, 1),
                       affine(-1, 0, 0, 1, 0, 0), affine(0, 1, 1, 0, 0, 0)});
}

}  // namespace momentlab
