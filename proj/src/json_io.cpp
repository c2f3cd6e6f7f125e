#include "popdec/json_io.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace popdec {

void to_json(Json& j, const Integer& z) {
  if (z.fits_int64()) {
    j = z.to_int64();
  } else {
    j = z.str();
  }
}

void to_json(Json& j, const Rational& q) {
  j = Json::array({Json(q.num()), Json(q.den())});
}

void to_json(Json& j, const ZVector& v) {
  j = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) j.push_back(Json(v(i)));
}

void to_json(Json& j, const QVector& v) {
  j = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) j.push_back(Json(v(i)));
}

void to_json(Json& j, const PolyCell& cell) {
  j = Json{{"id", cell.id}, {"dim", cell.dim}, {"vertices", cell.vertices}, {"rays", cell.rays}};
  if (!cell.points.empty()) j["points"] = cell.points;
}

void to_json(Json& j, const PolyComplex& pc) {
  Json cells = Json::array();
  for (const PolyCell& c : pc.cells) {
    Json jc = c;
    jc["faces"] = pc.facets_of(c.id);
    cells.push_back(std::move(jc));
  }
  j = Json{{"ambient_dim", pc.ambient_dim}, {"cells", std::move(cells)}};
}

void to_json(Json& j, const Homology& h) {
  j = Json::array();
  size_t degrees = std::max(h.betti.size(), h.torsion.size());
  for (size_t k = 0; k < degrees; ++k) {
    Json entry{{"dim", k}, {"rank", k < h.betti.size() ? h.betti[k] : 0}};
    entry["torsion"] =
        k < h.torsion.size() ? Json(h.torsion[k]) : Json::array();
    j.push_back(std::move(entry));
  }
}

void to_json(Json& j, const Flat& f) {
  j = Json{{"elements", f.elements}, {"rank", f.rank}, {"mobius", Json(f.mobius)}};
}

void to_json(Json& j, const SimplicialComplex& sc) {
  j = Json{{"simplices", sc.simplices}};
}

void to_json(Json& j, const SignNerve& nerve) {
  Json labels = Json::array();
  for (int c = 0; c < 4; ++c) labels.push_back(cone_label(nerve.level, c));
  j = Json{{"n", nerve.n},
           {"level", nerve.level},
           {"max_dim", nerve.max_dim},
           {"cone_labels", std::move(labels)},
           {"vertex_cones", nerve.vertex_cones},
           {"complex", nerve.complex}};
}

void from_json(const Json& j, Integer& z) {
  if (j.is_string()) {
    z = Integer(j.get<std::string>());
  } else if (j.is_number_unsigned()) {
    std::uint64_t u = j.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(INT64_MAX)) {
      z = Integer(std::to_string(u));
    } else {
      z = Integer(static_cast<long long>(u));
    }
  } else if (j.is_number_integer()) {
    z = Integer(static_cast<long long>(j.get<std::int64_t>()));
  } else {
    throw std::invalid_argument("json: integer expected");
  }
}

void from_json(const Json& j, Rational& q) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("json: rational expected as [num, den]");
  q = Rational(j[0].get<Integer>(), j[1].get<Integer>());
}

void from_json(const Json& j, ZVector& v) {
  v.resize(static_cast<Eigen::Index>(j.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = j[i].get<Integer>();
}

void from_json(const Json& j, QVector& v) {
  v.resize(static_cast<Eigen::Index>(j.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = j[i].get<Rational>();
}

void from_json(const Json& j, PolyCell& cell) {
  cell.id = j.at("id").get<int>();
  cell.dim = j.at("dim").get<int>();
  cell.vertices = j.at("vertices").get<std::vector<QVector>>();
  cell.rays = j.at("rays").get<std::vector<QVector>>();
  cell.points =
      j.contains("points") ? j["points"].get<std::vector<int>>() : std::vector<int>{};
}

void from_json(const Json& j, PolyComplex& pc) {
  pc.ambient_dim = j.at("ambient_dim").get<int>();
  pc.cells.clear();
  pc.face_relation.clear();
  for (const Json& jc : j.at("cells")) {
    pc.cells.push_back(jc.get<PolyCell>());
    for (int f : jc.at("faces").get<std::vector<int>>())
      pc.face_relation.emplace_back(pc.cells.back().id, f);
  }
}

Json flats_json(const Matroid& m) {
  return Json(m.flats());
}

}  // namespace popdec
