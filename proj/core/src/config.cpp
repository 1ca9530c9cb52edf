#include "fibrant/config.hpp"

#include <algorithm>
#include <sstream>

namespace fibrant {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw config_error("line " + std::to_string(line) + ": " + message);
}

Rational parse_rational(const std::string& token, std::size_t line) {
  std::string t = trim(token);
  if (t.empty()) fail(line, "empty number");
  try {
    std::size_t slash = t.find('/');
    if (slash == std::string::npos) return Rational(BigInt(t));
    return Rational(BigInt(t.substr(0, slash)), BigInt(t.substr(slash + 1)));
  } catch (const std::exception&) {
    fail(line, "malformed number '" + t + "'");
  }
}

std::string print_rational(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

// "[[1, 0], [2/3, -1]]"
std::vector<std::vector<Rational>> parse_matrix(const std::string& text, std::size_t line) {
  std::vector<std::vector<Rational>> rows;
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') fail(line, "malformed matrix");
  std::string inner = trim(t.substr(1, t.size() - 2));
  std::size_t pos = 0;
  while (pos < inner.size()) {
    if (inner[pos] == ',' || inner[pos] == ' ') {
      ++pos;
      continue;
    }
    if (inner[pos] != '[') fail(line, "malformed matrix row");
    std::size_t end = inner.find(']', pos);
    if (end == std::string::npos) fail(line, "unterminated matrix row");
    std::string row_text = inner.substr(pos + 1, end - pos - 1);
    std::vector<Rational> row;
    std::stringstream ss(row_text);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      if (!trim(cell).empty()) row.push_back(parse_rational(cell, line));
    }
    rows.push_back(std::move(row));
    pos = end + 1;
  }
  return rows;
}

std::string print_matrix(const std::vector<std::vector<Rational>>& rows) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      os << (j ? ", " : "") << print_rational(rows[i][j]);
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

// "key = value" within the current line, or empty key when absent.
std::pair<std::string, std::string> split_assignment(const std::string& line) {
  std::size_t eq = line.find('=');
  if (eq == std::string::npos) return {"", ""};
  return {trim(line.substr(0, eq)), trim(line.substr(eq + 1))};
}

std::size_t parse_count(const std::string& value, std::size_t line) {
  try {
    return static_cast<std::size_t>(std::stoull(value));
  } catch (const std::exception&) {
    fail(line, "malformed count '" + value + "'");
  }
}

std::vector<std::string> split_words(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string w;
  while (std::getline(ss, w, sep)) {
    w = trim(w);
    if (!w.empty()) out.push_back(w);
  }
  return out;
}

}  // namespace

ConfigDocument parse_config(const std::string& text) {
  ConfigDocument doc;
  std::string section;
  ModuleSpec* current_module = nullptr;
  MorphismSpec* current_morphism = nullptr;

  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[' && line.back() == ']') {
      section = line.substr(1, line.size() - 2);
      current_module = nullptr;
      current_morphism = nullptr;
      if (section != "session" && section != "quiver" && section != "relations" &&
          section != "modules" && section != "morphisms" && section != "instance") {
        fail(lineno, "unknown section [" + section + "]");
      }
      continue;
    }

    if (section == "session") {
      auto [key, value] = split_assignment(line);
      if (key == "field") {
        if (value == "rational") {
          doc.session.field = Field::rationals();
        } else {
          try {
            doc.session.field = Field::prime(std::stoll(value));
          } catch (const std::exception&) {
            fail(lineno, "field must be 'rational' or a prime");
          }
        }
      } else if (key == "seed") {
        doc.session.seed = static_cast<std::uint64_t>(std::stoull(value));
      } else if (key == "sum_bound") {
        doc.session.sum_bound = parse_count(value, lineno);
      } else if (key == "random_per_pair") {
        doc.session.random_per_pair = parse_count(value, lineno);
      } else if (key == "resolution_bound") {
        doc.session.resolution_bound = parse_count(value, lineno);
      } else {
        fail(lineno, "unknown session key '" + key + "'");
      }
      if ((key == "sum_bound" || key == "random_per_pair" || key == "resolution_bound")) {
        // bounds are counts >= 1 except random_per_pair which may be 0
        if (key != "random_per_pair" &&
            ((key == "sum_bound" && doc.session.sum_bound == 0) ||
             (key == "resolution_bound" && doc.session.resolution_bound == 0))) {
          fail(lineno, key + " must be at least 1");
        }
      }
    } else if (section == "quiver") {
      if (line.rfind("arrow ", 0) == 0) {
        // arrow label: v -> w
        std::string rest = trim(line.substr(6));
        std::size_t colon = rest.find(':');
        if (colon == std::string::npos) fail(lineno, "arrow needs 'label: v -> w'");
        Arrow a;
        a.label = trim(rest.substr(0, colon));
        std::string ends = trim(rest.substr(colon + 1));
        std::size_t sep = ends.find("->");
        if (sep == std::string::npos) fail(lineno, "arrow needs 'v -> w'");
        a.source = parse_count(trim(ends.substr(0, sep)), lineno);
        a.target = parse_count(trim(ends.substr(sep + 2)), lineno);
        doc.arrows.push_back(std::move(a));
      } else {
        auto [key, value] = split_assignment(line);
        if (key == "vertices") {
          doc.vertices = parse_count(value, lineno);
        } else {
          fail(lineno, "unknown quiver line");
        }
      }
    } else if (section == "relations") {
      if (line.rfind("relation ", 0) != 0) fail(lineno, "expected 'relation ...'");
      RelationSpec rel;
      for (const auto& term : split_words(line.substr(9), '+')) {
        std::size_t star = term.find('*');
        if (star == std::string::npos) fail(lineno, "relation term needs 'coeff * word'");
        Rational coeff = parse_rational(term.substr(0, star), lineno);
        std::vector<std::string> word = split_words(term.substr(star + 1), '.');
        if (word.empty()) fail(lineno, "empty relation word");
        rel.terms.emplace_back(coeff, std::move(word));
      }
      if (rel.terms.empty()) fail(lineno, "empty relation");
      doc.relations.push_back(std::move(rel));
    } else if (section == "modules") {
      if (line.rfind("module ", 0) == 0) {
        ModuleSpec spec;
        spec.name = trim(line.substr(7));
        if (spec.name.empty()) fail(lineno, "module needs a name");
        doc.modules.push_back(std::move(spec));
        current_module = &doc.modules.back();
      } else if (current_module == nullptr) {
        fail(lineno, "module body before any 'module NAME'");
      } else if (line.rfind("map ", 0) == 0) {
        auto [key, value] = split_assignment(line.substr(4));
        if (key.empty()) fail(lineno, "map needs 'map label = [[...]]'");
        current_module->maps.emplace_back(key, parse_matrix(value, lineno));
      } else {
        auto [key, value] = split_assignment(line);
        if (key != "dims") fail(lineno, "unknown module line");
        for (const auto& w : split_words(value, ' ')) {
          current_module->dims.push_back(parse_count(w, lineno));
        }
      }
    } else if (section == "morphisms") {
      if (line.rfind("morphism ", 0) == 0) {
        // morphism name: source -> target
        std::string rest = trim(line.substr(9));
        std::size_t colon = rest.find(':');
        if (colon == std::string::npos) fail(lineno, "morphism needs 'name: src -> tgt'");
        MorphismSpec spec;
        spec.name = trim(rest.substr(0, colon));
        std::string ends = trim(rest.substr(colon + 1));
        std::size_t sep = ends.find("->");
        if (sep == std::string::npos) fail(lineno, "morphism needs 'src -> tgt'");
        spec.source = trim(ends.substr(0, sep));
        spec.target = trim(ends.substr(sep + 2));
        doc.morphisms.push_back(std::move(spec));
        current_morphism = &doc.morphisms.back();
      } else if (current_morphism == nullptr) {
        fail(lineno, "morphism body before any 'morphism NAME: ...'");
      } else if (line.rfind("map ", 0) == 0) {
        auto [key, value] = split_assignment(line.substr(4));
        std::size_t v = parse_count(key, lineno);
        if (current_morphism->vertex_maps.size() <= v) {
          current_morphism->vertex_maps.resize(v + 1);
        }
        current_morphism->vertex_maps[v] = parse_matrix(value, lineno);
      } else {
        fail(lineno, "unknown morphism line");
      }
    } else if (section == "instance") {
      auto [key, value] = split_assignment(line);
      if (key == "kind") {
        if (value != "w" && value != "injective-w" && value != "tilting-omega" &&
            value != "dual") {
          fail(lineno, "unknown instance kind '" + value + "'");
        }
        doc.instance.kind = value;
      } else if (key == "generator") {
        doc.instance.generator = value;
      } else if (key == "base") {
        doc.instance.base = value;
      } else {
        fail(lineno, "unknown instance key '" + key + "'");
      }
    } else {
      fail(lineno, "content before any section header");
    }
  }
  return doc;
}

std::string print_config(const ConfigDocument& doc) {
  std::ostringstream os;
  os << "[session]\n";
  os << "field = "
     << (doc.session.field.is_rational() ? std::string("rational")
                                         : std::to_string(doc.session.field.characteristic))
     << "\n";
  os << "seed = " << doc.session.seed << "\n";
  os << "sum_bound = " << doc.session.sum_bound << "\n";
  os << "random_per_pair = " << doc.session.random_per_pair << "\n";
  os << "resolution_bound = " << doc.session.resolution_bound << "\n";

  os << "\n[quiver]\n";
  os << "vertices = " << doc.vertices << "\n";
  for (const auto& a : doc.arrows) {
    os << "arrow " << a.label << ": " << a.source << " -> " << a.target << "\n";
  }

  if (!doc.relations.empty()) {
    os << "\n[relations]\n";
    for (const auto& rel : doc.relations) {
      os << "relation ";
      for (std::size_t i = 0; i < rel.terms.size(); ++i) {
        if (i) os << " + ";
        os << print_rational(rel.terms[i].first) << " * ";
        for (std::size_t j = 0; j < rel.terms[i].second.size(); ++j) {
          os << (j ? "." : "") << rel.terms[i].second[j];
        }
      }
      os << "\n";
    }
  }

  if (!doc.modules.empty()) {
    os << "\n[modules]\n";
    for (const auto& m : doc.modules) {
      os << "module " << m.name << "\n";
      os << "dims =";
      for (std::size_t d : m.dims) os << " " << d;
      os << "\n";
      for (const auto& [label, rows] : m.maps) {
        os << "map " << label << " = " << print_matrix(rows) << "\n";
      }
    }
  }

  if (!doc.morphisms.empty()) {
    os << "\n[morphisms]\n";
    for (const auto& f : doc.morphisms) {
      os << "morphism " << f.name << ": " << f.source << " -> " << f.target << "\n";
      for (std::size_t v = 0; v < f.vertex_maps.size(); ++v) {
        if (f.vertex_maps[v].empty()) continue;
        os << "map " << v << " = " << print_matrix(f.vertex_maps[v]) << "\n";
      }
    }
  }

  if (!doc.instance.kind.empty()) {
    os << "\n[instance]\n";
    os << "kind = " << doc.instance.kind << "\n";
    if (!doc.instance.generator.empty()) os << "generator = " << doc.instance.generator << "\n";
    if (!doc.instance.base.empty()) os << "base = " << doc.instance.base << "\n";
  }

  return os.str();
}

const Module& RealizedConfig::module_named(const std::string& name) const {
  for (const auto& [n, m] : modules) {
    if (n == name) return m;
  }
  throw config_error("unknown module '" + name + "'");
}

const Morphism& RealizedConfig::morphism_named(const std::string& name) const {
  for (const auto& [n, f] : morphisms) {
    if (n == name) return f;
  }
  throw config_error("unknown morphism '" + name + "'");
}

RealizedConfig realize(const ConfigDocument& doc) {
  RealizedConfig out;
  Quiver q;
  q.vertex_count = doc.vertices;
  q.arrows = doc.arrows;
  for (const auto& a : q.arrows) {
    if (a.source >= q.vertex_count || a.target >= q.vertex_count) {
      throw config_error("arrow '" + a.label + "' references a missing vertex");
    }
  }
  auto arrow_index = [&q](const std::string& label) {
    for (std::size_t i = 0; i < q.arrows.size(); ++i) {
      if (q.arrows[i].label == label) return i;
    }
    throw config_error("unknown arrow label '" + label + "'");
  };

  std::vector<Relation> relations;
  for (const auto& spec : doc.relations) {
    Relation rel;
    for (const auto& [coeff, word] : spec.terms) {
      RelationTerm term;
      term.coeff = coeff;
      for (const auto& label : word) term.arrows.push_back(arrow_index(label));
      // words are written first-applied first; terms store them the same way
      rel.terms.push_back(std::move(term));
    }
    relations.push_back(std::move(rel));
  }
  out.algebra = Algebra::make(q, relations, doc.session.field, 12);

  for (const auto& spec : doc.modules) {
    if (spec.dims.size() != q.vertex_count) {
      throw config_error("module '" + spec.name + "' needs " +
                         std::to_string(q.vertex_count) + " dimensions");
    }
    std::vector<Matrix> maps;
    for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
      const Arrow& a = q.arrows[ai];
      Matrix m(spec.dims[a.target], spec.dims[a.source], doc.session.field);
      for (const auto& [label, rows] : spec.maps) {
        if (label != a.label) continue;
        if (rows.size() != m.rows()) {
          throw config_error("module '" + spec.name + "' map '" + label +
                             "' has the wrong number of rows");
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
          if (rows[i].size() != m.cols()) {
            throw config_error("module '" + spec.name + "' map '" + label +
                               "' has a row of the wrong length");
          }
          for (std::size_t j = 0; j < rows[i].size(); ++j) {
            m.at(i, j) = Scalar(rows[i][j], doc.session.field);
          }
        }
      }
      maps.push_back(std::move(m));
    }
    try {
      out.modules.emplace_back(spec.name, Module(out.algebra, spec.dims, std::move(maps)));
    } catch (const invalid_module& e) {
      throw config_error("module '" + spec.name + "': " + e.what());
    }
  }

  for (const auto& spec : doc.morphisms) {
    const Module& src = out.module_named(spec.source);
    const Module& tgt = out.module_named(spec.target);
    std::vector<Matrix> maps;
    for (std::size_t v = 0; v < q.vertex_count; ++v) {
      Matrix m(tgt.dims()[v], src.dims()[v], doc.session.field);
      if (v < spec.vertex_maps.size() && !spec.vertex_maps[v].empty()) {
        const auto& rows = spec.vertex_maps[v];
        if (rows.size() != m.rows()) {
          throw config_error("morphism '" + spec.name + "' map " + std::to_string(v) +
                             " has the wrong number of rows");
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
          if (rows[i].size() != m.cols()) {
            throw config_error("morphism '" + spec.name + "' map " + std::to_string(v) +
                               " has a row of the wrong length");
          }
          for (std::size_t j = 0; j < rows[i].size(); ++j) {
            m.at(i, j) = Scalar(rows[i][j], doc.session.field);
          }
        }
      }
      maps.push_back(std::move(m));
    }
    try {
      out.morphisms.emplace_back(spec.name, Morphism(src, tgt, std::move(maps)));
    } catch (const std::exception& e) {
      throw config_error("morphism '" + spec.name + "': " + e.what());
    }
  }

  return out;
}

namespace {

Fwfs build_kind(const std::string& kind, const ConfigDocument& doc,
                const RealizedConfig& realized) {
  if (kind == "w") {
    return build_w_structure(realized.algebra, realized.module_named(doc.instance.generator));
  }
  if (kind == "injective-w") {
    return build_injective_w_structure(realized.algebra);
  }
  if (kind == "tilting-omega") {
    return build_tilting_omega_structure(realized.algebra,
                                         realized.module_named(doc.instance.generator))
        .system;
  }
  throw config_error("instance kind '" + kind + "' cannot be built directly");
}

}  // namespace

Fwfs realize_instance(const ConfigDocument& doc, const RealizedConfig& realized) {
  if (doc.instance.kind.empty()) throw config_error("no [instance] section");
  return build_kind(doc.instance.kind, doc, realized);
}

Cwfs realize_dual_instance(const ConfigDocument& doc, const RealizedConfig& realized) {
  if (doc.instance.kind != "dual") throw config_error("instance kind is not 'dual'");
  if (doc.instance.base.empty()) throw config_error("dual instance needs 'base = <kind>'");
  return dual_of_fwfs(build_kind(doc.instance.base, doc, realized));
}

SampleOptions sample_options(const SessionConfig& session) {
  SampleOptions options;
  options.seed = session.seed;
  options.sum_bound = session.sum_bound;
  options.random_per_pair = session.random_per_pair;
  return options;
}

}  // namespace fibrant
