#pragma once

#include <doctest.h>

#include <string>
#include <vector>

#include "oracles.hpp"
#include "qstrat/io.hpp"
#include "qstrat/permgroup.hpp"

namespace testing {

inline std::string data_path(const std::string& rel) { return std::string(QSTRAT_DATA_DIR) + "/" + rel; }

inline qstrat::FiniteGroup load_group(const std::string& name) {
  return qstrat::parse_group(qstrat::read_json_file(data_path("groups/" + name + ".json")));
}

inline qstrat::GSpace point_space(const std::string& group) {
  auto g = load_group(group);
  auto x = qstrat::GComplex::point(g.generators().size());
  return qstrat::GSpace(std::move(g), std::move(x));
}

inline qstrat::GSpace load_space(const std::string& group, const std::string& space, bool subdivide = false) {
  auto g = load_group(group);
  auto x = qstrat::parse_complex(qstrat::read_json_file(data_path("spaces/" + space + ".json")),
                                 g.generators().size());
  if (subdivide) x = x.barycentric_subdivision();
  return qstrat::GSpace(std::move(g), std::move(x));
}

inline qstrat::Perm perm(std::vector<qstrat::Point> images) { return qstrat::Perm(std::move(images)); }

inline oracle::P to_oracle(const qstrat::Perm& p) { return {p.images().begin(), p.images().end()}; }

inline std::vector<oracle::P> oracle_gens(const qstrat::FiniteGroup& g) {
  std::vector<oracle::P> out;
  for (const auto& p : g.generators()) out.push_back(to_oracle(p));
  return out;
}

/// The oracle's view of a shipped space.
inline oracle::Space oracle_space(const std::string& group, const std::string& space, bool subdivide) {
  const auto g = load_group(group);
  oracle::Space s;
  s.degree = g.degree();
  s.gens = oracle_gens(g);
  if (space == "point") {
    s.action.assign(s.gens.size(), oracle::P{0});
  } else {
    const auto j = qstrat::read_json_file(data_path("spaces/" + space + ".json"));
    s.vertices = j.at("vertices").get<std::size_t>();
    s.facets = j.at("facets").get<std::vector<std::vector<int>>>();
    s.action = j.at("action").get<std::vector<oracle::P>>();
  }
  s.subdivide = subdivide;
  return s;
}

}  // namespace testing
