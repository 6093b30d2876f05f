#pragma once

// JSON persistence for buildings, chamber subcomplexes and verdicts, plus
// DOT export of the chamber graph.  JSON is the only persistence format.
// Key order is alphabetical and arrays are emitted in canonical (ascending)
// order, so identical inputs give byte-identical files.

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

#include "bldg/crengine.hpp"

namespace bldg {

using Json = nlohmann::json;

inline std::string fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

// ---------------------------------------------------------------------------
// building.json

inline Json building_to_json(const Geometry& geom) {
  const Building& b = geom.building();
  Json j;
  j["format"] = "building/1";
  j["geometry"] = geom.spec();
  j["diagram"] = b.weyl().diagram().name();
  j["rank"] = b.rank();
  j["chamber_count"] = b.size();
  Json labels = Json::array();
  if (geom.kind() != GeomKind::Thin)
    for (const auto& f : geom.flags()) labels.push_back(geom.flag_key(f));
  j["labels"] = std::move(labels);
  Json panels = Json::array();
  for (const auto& family : b.panels()) {
    Json fam = Json::array();
    for (const auto& blk : family) fam.push_back(blk);
    panels.push_back(std::move(fam));
  }
  j["panels"] = std::move(panels);
  j["hash"] = fnv1a(j.dump());
  return j;
}

inline std::string building_hash(const Geometry& geom) {
  return building_to_json(geom).at("hash").get<std::string>();
}

// Rebuilds the geometry named in the file and checks the file describes it
// exactly; any corruption surfaces as HashMismatch.
inline Geometry load_building(const Json& j) {
  if (!j.is_object() || !j.contains("geometry") || !j.contains("hash"))
    fail(ErrorCode::ParseError, "not a building file");
  Geometry geom = Geometry::build(j.at("geometry").get<std::string>());
  Json fresh = building_to_json(geom);
  Json given = j;
  std::string given_hash = given.at("hash").get<std::string>();
  given.erase("hash");
  Json expect = fresh;
  expect.erase("hash");
  if (given != expect || given_hash != fresh.at("hash").get<std::string>())
    fail(ErrorCode::HashMismatch, "building file does not match its geometry");
  return geom;
}

// ---------------------------------------------------------------------------
// omega.json

inline Json omega_to_json(const Geometry& geom, const ConvexChamberSubcomplex& omega) {
  Json j;
  j["format"] = "subcomplex/1";
  j["building_hash"] = building_hash(geom);
  j["chambers"] = omega.chambers();
  return j;
}

inline ConvexChamberSubcomplex load_omega(const Geometry& geom, const Json& j) {
  if (!j.is_object() || !j.contains("chambers") || !j.contains("building_hash"))
    fail(ErrorCode::ParseError, "not a subcomplex file");
  if (j.at("building_hash").get<std::string>() != building_hash(geom))
    fail(ErrorCode::HashMismatch, "subcomplex refers to a different building");
  return ConvexChamberSubcomplex(geom.building(),
                                 j.at("chambers").get<std::vector<Chamber>>());
}

// ---------------------------------------------------------------------------
// verdict.json

inline Json simplex_to_json(const Simplex& s) {
  Json j;
  j["type"] = type_list(s.type());
  j["chamber"] = s.representative();
  return j;
}

inline Json verdict_to_json(const Verdict& v, bool with_traces = false) {
  Json j;
  switch (v.kind) {
    case Verdict::Kind::CR: j["kind"] = "CR"; break;
    case Verdict::Kind::Centre: j["kind"] = "Centre"; break;
    case Verdict::Kind::Inconclusive: j["kind"] = "Inconclusive"; break;
  }
  Json witness = Json::array();
  for (const auto& [s, o] : v.witness) {
    Json pair;
    pair["simplex"] = simplex_to_json(s);
    pair["opposite"] = simplex_to_json(o);
    witness.push_back(std::move(pair));
  }
  j["witness_count"] = v.witness.size();
  j["witness"] = std::move(witness);
  if (v.centre) {
    Json c;
    c["type"] = type_list(v.centre->simplex.type());
    c["chamber"] = v.centre->simplex.representative();
    c["subspace"] = v.centre->subspace.encode();
    c["in_subcomplex"] = v.centre->in_omega;
    j["centre"] = std::move(c);
  }
  j["trace_count"] = v.traces.size();
  if (with_traces) {
    Json traces = Json::array();
    for (const auto& tr : v.traces) {
      Json steps = Json::array();
      for (const auto& st : tr.steps) {
        Json s;
        s["step"] = st.name;
        s["type"] = type_list(st.type);
        s["chamber"] = st.representative;
        steps.push_back(std::move(s));
      }
      traces.push_back(std::move(steps));
    }
    j["traces"] = std::move(traces);
  }
  j["evidence"] = v.evidence;
  j["findings"] = v.findings;
  j["reason"] = v.reason;
  return j;
}

// ---------------------------------------------------------------------------
// DOT export

inline std::string export_dot(const Building& b,
                              const ConvexChamberSubcomplex* omega = nullptr) {
  std::ostringstream os;
  os << "graph chambers {\n";
  for (Chamber c = 0; c < b.size(); ++c) {
    os << "  c" << c;
    if (omega && omega->contains_chamber(c)) os << " [style=filled, fillcolor=lightgrey]";
    os << ";\n";
  }
  for (int t = 1; t <= b.rank(); ++t)
    for (const auto& blk : b.panels()[t - 1])
      for (std::size_t i = 0; i < blk.size(); ++i)
        for (std::size_t k = i + 1; k < blk.size(); ++k)
          os << "  c" << blk[i] << " -- c" << blk[k] << " [label=\"" << t << "\"];\n";
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// files

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::IoError, "cannot open " + path + " for writing");
  out << text;
  if (!out) fail(ErrorCode::IoError, "write failed for " + path);
}

inline void write_json(const std::string& path, const Json& j) {
  write_text(path, j.dump(2) + "\n");
}

inline Json read_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot open " + path);
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) fail(ErrorCode::ParseError, "invalid JSON in " + path);
  return j;
}

}  // namespace bldg
