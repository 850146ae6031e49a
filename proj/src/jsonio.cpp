#include <latq/jsonio.hpp>

#include <fstream>
#include <stdexcept>

namespace latq {

json rat_json(const Rat& r) { return rat_to_string(r); }

Rat rat_from_json(const json& j) {
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  throw std::invalid_argument("expected a rational as \"p/q\" string or integer");
}

json mat_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rat_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat mat_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw std::invalid_argument("expected a matrix as array of arrays");
  int r = static_cast<int>(j.size());
  int c = static_cast<int>(j[0].size());
  Mat m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(j[i].size()) != c)
      throw std::invalid_argument("ragged matrix rows");
    for (int k = 0; k < c; ++k) m(i, k) = rat_from_json(j[i][k]);
  }
  return m;
}

json lattice_json(const Lattice& l) {
  json doc;
  if (l.has_vectors()) {
    doc["ambient_dim"] = l.ambient_dim();
    doc["generators"] = mat_json(l.generators());
  } else {
    doc["gram"] = mat_json(l.gram());
  }
  return doc;
}

Lattice lattice_from_json(const json& doc) {
  if (doc.contains("generators")) {
    Mat gens = mat_from_json(doc["generators"]);
    if (doc.contains("ambient_dim") &&
        doc["ambient_dim"].get<int>() != static_cast<int>(gens.cols()))
      throw std::invalid_argument("ambient_dim does not match generator width");
    return Lattice::from_generators(gens);
  }
  if (doc.contains("gram")) return Lattice::from_gram(mat_from_json(doc["gram"]));
  throw std::invalid_argument("lattice document needs \"generators\" or \"gram\"");
}

Lattice lattice_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json doc = json::parse(in);
  return lattice_from_json(doc);
}

}  // namespace latq
