#pragma once

#include "fibrant/instances.hpp"
#include "fibrant/sample.hpp"

#include <map>

namespace fibrant {

struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SessionConfig {
  Field field = Field::rationals();
  std::uint64_t seed = 0xC0FFEE;
  std::size_t sum_bound = 2;
  std::size_t random_per_pair = 5;
  std::size_t resolution_bound = 8;
  bool operator==(const SessionConfig&) const = default;
};

struct RelationSpec {
  // coeff * word, the word listing arrow labels first-applied first.
  std::vector<std::pair<Rational, std::vector<std::string>>> terms;
  bool operator==(const RelationSpec&) const = default;
};

struct ModuleSpec {
  std::string name;
  std::vector<std::size_t> dims;
  // arrow label -> row-major rational matrix (target-dim x source-dim)
  std::vector<std::pair<std::string, std::vector<std::vector<Rational>>>> maps;
  bool operator==(const ModuleSpec&) const = default;
};

struct MorphismSpec {
  std::string name;
  std::string source;
  std::string target;
  // vertex index -> matrix
  std::vector<std::vector<std::vector<Rational>>> vertex_maps;
  bool operator==(const MorphismSpec&) const = default;
};

struct InstanceSpec {
  std::string kind;       // "w" | "injective-w" | "tilting-omega" | "dual"
  std::string generator;  // module name, where the kind needs one
  std::string base;       // underlying kind for "dual"
  bool operator==(const InstanceSpec&) const = default;
};

struct ConfigDocument {
  SessionConfig session;
  std::size_t vertices = 0;
  std::vector<Arrow> arrows;  // labels resolved to indices at realization
  std::vector<RelationSpec> relations;
  std::vector<ModuleSpec> modules;
  std::vector<MorphismSpec> morphisms;
  InstanceSpec instance;
  bool operator==(const ConfigDocument&) const = default;
};

/// Parse the session file format. Throws config_error with a line-number
/// message on malformed input.
ConfigDocument parse_config(const std::string& text);

/// Canonical printer; parse(print(parse(text))) == parse(text) and
/// print(parse(print(doc))) == print(doc) bit-exactly.
std::string print_config(const ConfigDocument& doc);

/// Instantiate the algebra, named modules, and named morphisms.
struct RealizedConfig {
  AlgebraPtr algebra;
  std::vector<std::pair<std::string, Module>> modules;
  std::vector<std::pair<std::string, Morphism>> morphisms;

  const Module& module_named(const std::string& name) const;
  const Morphism& morphism_named(const std::string& name) const;
};

RealizedConfig realize(const ConfigDocument& doc);

/// Build the configured instance for the kinds "w", "injective-w", and
/// "tilting-omega"; throws config_error on "dual" (see below).
Fwfs realize_instance(const ConfigDocument& doc, const RealizedConfig& realized);

/// For kind "dual": build the base instance named by `base`, then
/// transport it across k-duality; the result lives over the opposite
/// algebra.
Cwfs realize_dual_instance(const ConfigDocument& doc, const RealizedConfig& realized);

SampleOptions sample_options(const SessionConfig& session);

}  // namespace fibrant
