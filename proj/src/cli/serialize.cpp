#include "coisored/cli/serialize.hpp"

#include "coisored/core/error.hpp"

namespace coisored {

Json to_json(const Witness& w) {
  Json j;
  j["generator"] = w.generator;
  j["residue"] = w.residue;
  return j;
}

Json to_json(const CheckReport& r) {
  Json items = Json::array();
  for (const auto& it : r.items()) {
    Json j;
    j["name"] = it.name;
    j["passed"] = it.passed;
    j["detail"] = it.detail;
    j["witness"] = it.witness ? to_json(*it.witness) : Json(nullptr);
    items.push_back(std::move(j));
  }
  Json j;
  j["title"] = r.title();
  j["passed"] = r.passed();
  j["items"] = std::move(items);
  return j;
}

namespace {

Json polys(const std::vector<Polynomial>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

}  // namespace

Json to_json(const PresentedAlgebra& a) {
  Json j;
  j["label"] = a.label();
  j["variables"] = a.variables();
  j["relations"] = polys(a.relations().basis(MonomialOrder::grevlex()));
  return j;
}

Json to_json(const PoissonStructure& p) {
  Json out = Json::array();
  const auto& vars = p.algebra().variables();
  for (std::size_t i = 0; i < vars.size(); ++i) {
    for (std::size_t k = i + 1; k < vars.size(); ++k) {
      const Polynomial& e = p.entry(i, k);
      if (e.is_zero()) continue;
      Json j;
      j["left"] = vars[i];
      j["right"] = vars[k];
      j["value"] = e.to_string();
      out.push_back(std::move(j));
    }
  }
  return out;
}

Json to_json(const AlgebraMorphism& m) {
  Json images = Json::object();
  const auto& vars = m.source().variables();
  for (std::size_t i = 0; i < vars.size(); ++i) images[vars[i]] = m.image(i).to_string();
  Json j;
  j["source"] = m.source().label();
  j["target"] = m.target().label();
  j["images"] = std::move(images);
  return j;
}

Json to_json(const GroupoidAction& a) {
  Json j;
  j["label"] = a.label;
  j["groupoid"] = a.groupoid.label;
  j["module"] = to_json(a.module);
  j["moment"] = to_json(a.moment);
  j["act"] = to_json(a.act);
  return j;
}

Json to_json(const InvariantBasis& inv) {
  Json per_degree = Json::array();
  Json dims = Json::array();
  for (const auto& layer : inv.per_degree) {
    per_degree.push_back(polys(layer));
    dims.push_back(layer.size());
  }
  Json gens = Json::array();
  for (const auto& t : inv.generators) {
    Json g;
    g["name"] = t.name;
    g["polynomial"] = t.generator.to_string();
    gens.push_back(std::move(g));
  }
  Json j;
  j["action"] = inv.action.label;
  j["degree_bound"] = inv.degree_bound;
  j["dimensions"] = std::move(dims);
  j["per_degree"] = std::move(per_degree);
  j["generators"] = std::move(gens);
  return j;
}

Json to_json(const ReductionResult& r) {
  Json gens = Json::array();
  for (std::size_t i = 0; i < r.generators.size(); ++i) {
    Json g;
    g["name"] = r.generators[i].name;
    g["invariant"] = r.generators[i].generator.to_string();
    g["lift"] = r.lifts[i].to_string();
    gens.push_back(std::move(g));
  }
  Json j;
  j["degree_bound"] = r.degree_bound;
  j["reduced"] = to_json(r.reduced);
  j["brackets"] = to_json(r.reduced_poisson);
  j["generators"] = std::move(gens);
  j["closure"] = r.closure_log;
  j["projection"] = to_json(r.projection);
  return j;
}

// ---- Session text ----

void SessionWriter::header(const std::string& kind, const std::string& name) {
  if (!names_.insert(name).second) throw InputError("session writer: '" + name + "' used twice");
  if (!text_.empty()) text_ += "\n";
  text_ += kind + " " + name + " {\n";
}

void SessionWriter::list(const std::string& key, const std::vector<std::string>& values) {
  std::size_t width = key.size() + 5;
  for (const auto& v : values) width += v.size() + 2;
  // Long lists continue on the next line after a trailing comma.
  const std::string sep = width <= 80 ? ", " : ",\n    ";
  text_ += "  " + key + " =";
  for (std::size_t i = 0; i < values.size(); ++i) text_ += (i ? sep : " ") + values[i];
  text_ += "\n";
}

void SessionWriter::map(const std::string& key, const AlgebraMorphism& m) {
  std::vector<std::string> entries;
  const auto& vars = m.source().variables();
  for (std::size_t i = 0; i < vars.size(); ++i) {
    entries.push_back(vars[i] + " -> " + m.image(i).to_string());
  }
  list(key, entries);
}

void SessionWriter::ring(const std::string& name, const PresentedAlgebra& a) {
  header("ring", name);
  list("vars", a.variables());
  std::vector<std::string> rels;
  for (const auto& r : a.relations().generators()) rels.push_back(r.to_string());
  if (!rels.empty()) list("relations", rels);
  text_ += "}\n";
}

void SessionWriter::poisson(const std::string& name, const std::string& ring_name,
                            const PoissonStructure& p) {
  header("poisson", name);
  text_ += "  ring = " + ring_name + "\n";
  const auto& vars = p.algebra().variables();
  for (std::size_t i = 0; i < vars.size(); ++i) {
    for (std::size_t k = i + 1; k < vars.size(); ++k) {
      const Polynomial& e = p.entry(i, k);
      if (!e.is_zero()) text_ += "  {" + vars[i] + ", " + vars[k] + "} = " + e.to_string() + "\n";
    }
  }
  text_ += "}\n";
}

void SessionWriter::groupoid(const std::string& name, const AffineGroupoid& g) {
  ring(name + "_base", g.base);
  ring(name + "_total", g.total);
  if (g.symplectic) {
    poisson(name + "_base_poisson", name + "_base", g.base_poisson());
    poisson(name + "_poisson", name + "_total", g.total_poisson());
  }
  header("groupoid", name);
  text_ += "  base = " + name + "_base\n";
  text_ += "  total = " + name + "_total\n";
  map("src", g.src);
  map("tgt", g.tgt);
  map("unit", g.unit);
  map("inv", g.inv);
  map("mult", g.mult);
  if (g.symplectic) {
    text_ += "  poisson = " + name + "_poisson\n";
    text_ += "  base_poisson = " + name + "_base_poisson\n";
    if (!g.symplectic->chart.empty()) list("chart", g.symplectic->chart);
  }
  text_ += "}\n";
}

void SessionWriter::action(const std::string& name, const GroupoidAction& a,
                           const std::string& groupoid_name, const std::string& module_name,
                           const std::optional<std::string>& poisson_name) {
  header("action", name);
  text_ += "  groupoid = " + groupoid_name + "\n";
  text_ += "  module = " + module_name + "\n";
  map("moment", a.moment);
  map("act", a.act);
  if (poisson_name) text_ += "  poisson = " + *poisson_name + "\n";
  text_ += "}\n";
}

}  // namespace coisored
