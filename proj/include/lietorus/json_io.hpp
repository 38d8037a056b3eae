#ifndef LIETORUS_JSON_IO_HPP
#define LIETORUS_JSON_IO_HPP

#include <json.hpp>

#include "lietorus/eala.hpp"

namespace lt {

using Json = nlohmann::ordered_json;

/// A parsed spec file with everything kept alive for the session.
struct ParsedSpec {
  std::string type;  // torus | lietorus | eala
  std::shared_ptr<const TorusAlgebra> torus;
  std::shared_ptr<LieTorus> lie;
  std::shared_ptr<EalaAlgebra> eala;
  std::string construction;
  std::string involution = "chevalley";  // or "identity"
  std::vector<int> sigma_e;              // anti-involution override for sl/psl3
  int window = 2;
  // multiloop involution data
  std::shared_ptr<ScalarMatrix> ml_tau, ml_psi;
};

ParsedSpec parse_spec(const Json& j);
ParsedSpec parse_spec_file(const std::string& path);

/// Involution per the spec's defaults (sigma_e = (1..1) unless overridden).
LieInvolution build_involution(const ParsedSpec& spec);

Json report_to_json(const Report& rep, const std::string& suite, const std::string& name);
std::string report_to_text(const Report& rep, const std::string& suite, const std::string& name);

/// Structure-constant export restricted to window atoms, deterministic order.
Json export_structure(const LieTorus& t, const DegreeWindow& w);

Scalar parse_scalar(const Json& j, long default_conductor);

}  // namespace lt

#endif
