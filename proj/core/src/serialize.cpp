#include "lorentzlab/serialize.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace lorentzlab {

Json coeffs_to_json(const CoeffVector& v) {
  Json arr = Json::array();
  for (int n = -v.K; n <= v.K; ++n) {
    const Complex z = v.at(n);
    arr.push_back(Json::array({z.real(), z.imag()}));
  }
  return arr;
}

CoeffVector coeffs_from_json(const Json& j) {
  if (!j.is_array() || j.size() % 2 == 0)
    throw std::invalid_argument("coeffs_from_json: need an odd-length array of [re, im] pairs");
  const int K = (static_cast<int>(j.size()) - 1) / 2;
  CoeffVector v = CoeffVector::zero(K);
  for (int idx = 0; idx < static_cast<int>(j.size()); ++idx) {
    const Json& e = j[idx];
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("coeffs_from_json: entries must be [re, im]");
    v.c[idx] = Complex(e[0].get<double>(), e[1].get<double>());
  }
  return v;
}

Json config_to_json(const RunConfig& cfg) {
  Json j;
  j["K"] = cfg.K;
  j["Q"] = cfg.Q;
  j["tol"] = cfg.tol;
  j["seed"] = cfg.seed;
  j["threads"] = cfg.threads;
  return j;
}

Json mesh_to_json(const DiscMesh& mesh, const MapState* state) {
  Json j;
  Json verts = Json::array();
  for (const auto& p : mesh.vertices) verts.push_back(Json::array({p.x(), p.y()}));
  j["vertices"] = std::move(verts);
  Json edges = Json::array();
  for (const auto& e : mesh.edges) edges.push_back(Json::array({e.i, e.j, e.w}));
  j["edges"] = std::move(edges);
  j["boundary"] = mesh.boundary;
  if (state) {
    if (static_cast<int>(state->points.size()) != mesh.vertex_count())
      throw std::invalid_argument("mesh_to_json: state size does not match the mesh");
    Json values = Json::array();
    for (const auto& p : state->points) {
      Json row = Json::array();
      for (int k = 0; k < p.v.size(); ++k) row.push_back(p.v[k]);
      values.push_back(std::move(row));
    }
    j["values"] = std::move(values);
  }
  return j;
}

DiscMesh mesh_from_json(const Json& j) {
  DiscMesh mesh;
  for (const Json& e : j.at("vertices")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("mesh_from_json: vertices must be [x, y]");
    mesh.vertices.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  const int n = static_cast<int>(mesh.vertices.size());
  mesh.adjacency.resize(mesh.vertices.size());
  for (const Json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 3)
      throw std::invalid_argument("mesh_from_json: edges must be [i, j, w]");
    DiscMesh::Edge edge{e[0].get<int>(), e[1].get<int>(), e[2].get<double>()};
    if (edge.i < 0 || edge.i >= n || edge.j < 0 || edge.j >= n || edge.i == edge.j)
      throw std::invalid_argument("mesh_from_json: edge endpoint out of range");
    if (!(edge.w > 0)) throw std::invalid_argument("mesh_from_json: edge weight must be > 0");
    const int id = static_cast<int>(mesh.edges.size());
    mesh.edges.push_back(edge);
    mesh.adjacency[edge.i].push_back(id);
    mesh.adjacency[edge.j].push_back(id);
  }
  for (const Json& b : j.at("boundary")) {
    const int idx = b.get<int>();
    if (idx < 0 || idx >= n) throw std::invalid_argument("mesh_from_json: boundary index out of range");
    mesh.boundary.push_back(idx);
  }
  return mesh;
}

MapState state_from_json(const Json& j) {
  MapState state;
  for (const Json& row : j.at("values")) {
    Eigen::VectorXd x(row.size());
    for (int k = 0; k < static_cast<int>(row.size()); ++k) x[k] = row[k].get<double>();
    state.points.push_back(project_to_sheet(x));
  }
  return state;
}

Json degree_report_to_json(const DegreeReport& r) {
  Json j;
  j["word"] = r.word;
  Json degs = Json::array();
  for (const BigInt& d : r.degrees) degs.push_back(d.str());
  j["degrees"] = std::move(degs);
  j["lambda_hat"] = r.lambda_hat;
  j["truncated"] = r.truncated;
  if (r.truncated) j["reason"] = r.reason;
  return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

void atomic_write(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path dir = target.parent_path().empty() ? fs::path(".") : target.parent_path();
  const fs::path tmp = dir / (target.filename().string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("atomic_write: cannot open " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw std::runtime_error("atomic_write: short write to " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("atomic_write: rename failed: " + ec.message());
  }
}

}  // namespace lorentzlab
