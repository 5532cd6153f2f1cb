#include "qstrat/io.hpp"

#include <fstream>

#include "qstrat/errors.hpp"

namespace qstrat {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorKind::Validation, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <class T>
T as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorKind::Validation, std::string("malformed ") + what);
  }
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Validation, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Validation, path + ": " + e.what());
  }
}

FiniteGroup parse_group(const Json& j) {
  const auto degree = as<std::size_t>(field(j, "degree"), "group degree");
  const auto gens = as<std::vector<std::vector<long long>>>(field(j, "generators"), "group generators");
  std::vector<Perm> perms;
  for (const auto& g : gens) {
    std::vector<Point> images;
    for (long long v : g) {
      if (v < 0 || v > 0xffff) throw Error(ErrorKind::Validation, "permutation image out of range");
      images.push_back(static_cast<Point>(v));
    }
    perms.emplace_back(std::move(images));
  }
  return FiniteGroup::generate(degree, std::move(perms));
}

GComplex parse_complex(const Json& j, std::size_t generator_count) {
  const auto vertices = as<std::size_t>(field(j, "vertices"), "vertex count");
  const auto facets = as<std::vector<Simplex>>(field(j, "facets"), "facets");
  const auto action = as<std::vector<std::vector<long long>>>(field(j, "action"), "action");
  if (action.size() != generator_count)
    throw Error(ErrorKind::Validation, "complex action must list one permutation per group generator");
  std::vector<Perm> perms;
  for (const auto& a : action) {
    std::vector<Point> images;
    for (long long v : a) {
      if (v < 0 || v > 0xffff) throw Error(ErrorKind::Validation, "vertex image out of range");
      images.push_back(static_cast<Point>(v));
    }
    perms.emplace_back(std::move(images));
  }
  return GComplex(vertices, facets, std::move(perms));
}

Fan parse_fan(const Json& j) {
  return Fan(as<std::size_t>(field(j, "rank"), "fan rank"),
             as<std::vector<std::vector<long long>>>(field(j, "rays"), "rays"),
             as<std::vector<Cone>>(field(j, "max_cones"), "max_cones"));
}

Json element_json(const GradedAlgebra& alg, const AlgElement& a) {
  Json out = Json::object();
  for (const auto& [m, c] : a.terms) out[alg.monomial_string(m)] = c;
  return out;
}

}  // namespace qstrat
