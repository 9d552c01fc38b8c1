#include "deza/serialization.hpp"

#include <array>
#include <string>

#include "deza/error.hpp"

namespace deza {

namespace {

template <typename T>
Json optional_json(const std::optional<T>& x) {
  return x ? Json(*x) : Json(nullptr);
}

GraphKind kind_from_string(const std::string& s) {
  constexpr std::array kinds{GraphKind::NotRegular, GraphKind::Complete, GraphKind::Empty,
                             GraphKind::StronglyRegular, GraphKind::Deza, GraphKind::Other};
  for (GraphKind k : kinds)
    if (to_string(k) == s) return k;
  throw DomainError("malformed-census", "unknown graph kind \"" + s + "\"");
}

}  // namespace

void to_json(Json& j, const Witness& w) { j = Json{{"value", w.value}, {"u", w.u}, {"v", w.v}}; }

void to_json(Json& j, const DezaReport& r) {
  j = Json::object();
  j["n"] = r.n;
  j["k"] = optional_json(r.k);
  j["kind"] = std::string(to_string(r.kind));
  j["b"] = optional_json(r.b);
  j["a"] = optional_json(r.a);
  j["lambda"] = optional_json(r.lambda);
  j["mu"] = optional_json(r.mu);
  j["alpha"] = optional_json(r.alpha);
  j["beta"] = optional_json(r.beta);
  j["strictly_deza"] = r.strictly_deza;
  j["edge_regular"] = r.edge_regular;
  j["coedge_regular"] = r.coedge_regular;
  j["diameter"] = optional_json(r.diameter);
  j["witnesses"] = r.witnesses;
}

void to_json(Json& j, const Eigenvalue& e) {
  j = Json{{"value", e.value}, {"multiplicity", e.multiplicity}, {"is_integer", e.is_integer}};
}

void to_json(Json& j, const Spectrum& s) { j = s.eigenvalues; }

void to_json(Json& j, const SchemeData& d) {
  j = Json::object();
  j["q"] = d.q;
  j["t"] = d.t;
  Json classes = Json::array();
  for (const auto& cls : d.classes) {
    Json c = Json::array();
    for (FieldElement x : cls) c.push_back(x.value);
    classes.push_back(std::move(c));
  }
  j["classes"] = std::move(classes);
  j["p"] = d.p;
  j["r"] = d.r;
  j["s"] = d.s;
  j["L"] = d.L;
  j["M"] = d.M;
}

void to_json(Json& j, const CensusRecord& r) {
  j = Json::object();
  j["n"] = r.n;
  j["connection"] = r.connection.elements;
  j["kind"] = std::string(to_string(r.kind));
  j["k"] = r.k;
  j["b"] = r.b;
  j["a"] = r.a;
  j["strictly_deza"] = r.strictly_deza;
  j["graph6"] = r.graph6;
  j["class_id"] = r.class_id;
}

CensusRecord census_record_from_json(const Json& j) {
  try {
    CensusRecord r;
    r.n = j.at("n").get<std::size_t>();
    r.connection.n = r.n;
    r.connection.elements = j.at("connection").get<std::vector<std::int64_t>>();
    r.kind = kind_from_string(j.at("kind").get<std::string>());
    r.k = j.at("k").get<std::size_t>();
    r.b = j.at("b").get<std::size_t>();
    r.a = j.at("a").get<std::size_t>();
    r.strictly_deza = j.at("strictly_deza").get<bool>();
    r.graph6 = j.at("graph6").get<std::string>();
    r.class_id = j.at("class_id").get<std::size_t>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("malformed-census", std::string("bad census record: ") + e.what());
  }
}

}  // namespace deza
