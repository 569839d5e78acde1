#include "knotinv/knot_io.hpp"

#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "knotinv/errors.hpp"

namespace knotinv {

DiscreteKnot parse_knot_text(std::istream& in, std::string name) {
  std::vector<Vec3> vertices;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    Vec3 v;
    if (!(fields >> v.x)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw InputError("malformed line " + std::to_string(line_no) +
                       ": expected three numbers");
    }
    std::string rest;
    if (!(fields >> v.y >> v.z) || (fields >> rest)) {
      throw InputError("malformed line " + std::to_string(line_no) +
                       ": expected three numbers");
    }
    vertices.push_back(v);
  }
  return DiscreteKnot(std::move(vertices), std::move(name));
}

void write_knot_text(const DiscreteKnot& knot, std::ostream& out) {
  if (!knot.name().empty()) out << "# " << knot.name() << '\n';
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (const Vec3& v : knot.vertices()) {
    out << v.x << ' ' << v.y << ' ' << v.z << '\n';
  }
}

DiscreteKnot parse_knot_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON knot: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") ||
      !doc["vertices"].is_array()) {
    throw InputError("JSON knot needs a \"vertices\" array");
  }
  std::vector<Vec3> vertices;
  std::size_t k = 0;
  for (const auto& row : doc["vertices"]) {
    if (!row.is_array() || row.size() != 3 || !row[0].is_number() ||
        !row[1].is_number() || !row[2].is_number()) {
      throw InputError("vertex " + std::to_string(k) +
                       " is not a triple of numbers");
    }
    vertices.push_back(
        {row[0].get<double>(), row[1].get<double>(), row[2].get<double>()});
    ++k;
  }
  std::string name = doc.value("name", std::string{});
  return DiscreteKnot(std::move(vertices), std::move(name));
}

std::string knot_to_json(const DiscreteKnot& knot) {
  nlohmann::json doc;
  doc["name"] = knot.name();
  auto rows = nlohmann::json::array();
  for (const Vec3& v : knot.vertices()) rows.push_back({v.x, v.y, v.z});
  doc["vertices"] = std::move(rows);
  doc["lattice"] = knot.is_cubic_lattice();
  return doc.dump(2);
}

DiscreteKnot load_knot(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  if (path.extension() == ".json") {
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_knot_json(buf.str());
  }
  return parse_knot_text(in, path.stem().string());
}

void save_knot(const DiscreteKnot& knot, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  if (path.extension() == ".json") {
    out << knot_to_json(knot) << '\n';
  } else {
    write_knot_text(knot, out);
  }
}

}  // namespace knotinv
