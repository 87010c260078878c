#include "commands.hpp"

#include <iomanip>
#include <memory>
#include <sstream>

#include "arq/degree.hpp"
#include "arq/generic_cover.hpp"
#include "arq/mesh_category.hpp"
#include "arq/probe.hpp"
#include "arq/quiver_io.hpp"

namespace arq::cli {

namespace {

QuiverFile load_translation(const std::string& path) { return load_quiver_file(path); }

QuiverPtr load_ordinary(const std::string& path) {
  auto f = load_quiver_file(path);
  if (f.first_translation_line)
    throw ParseError(f.first_translation_line, 1, "ordinary quiver expected, found translation data");
  return std::make_shared<const Quiver>(Quiver::from_translation_quiver(f.quiver));
}

KnitDirection direction(const Options& o) {
  return o.from_injectives ? KnitDirection::from_injectives : KnitDirection::from_projectives;
}

const char* direction_name(KnitDirection d) {
  return d == KnitDirection::from_injectives ? "from-injectives" : "from-projectives";
}

Json dims_json(const QuiverRep& m) { return Json(m.dims()); }

Json witness_json(const std::optional<DegreeWitness>& w, const ARQuiver& ar) {
  if (!w) return nullptr;
  return Json{{"z", w->z}, {"label", ar.vertex(w->z).label}, {"n", w->n}};
}

Json degree_json(const DegreeReport& r, const ARQuiver& ar) {
  Json j;
  if (!r.label.empty()) j["label"] = r.label;
  j["side"] = r.side == Side::left ? "left" : "right";
  j["outcome"] = r.finite() ? "finite" : "not-found";
  j["degree"] = r.degree ? Json(*r.degree) : Json(nullptr);
  j["bound"] = r.bound;
  j["witness"] = witness_json(r.witness, ar);
  j["zero_witness"] = witness_json(r.zero_witness, ar);
  j["path_witness"] = r.path_witness;
  j["truncated"] = r.truncated;
  j["partial"] = r.partial;
  return j;
}

std::string degree_cell(const DegreeReport& r) {
  if (r.finite()) return std::to_string(*r.degree);
  return ">" + std::to_string(r.bound);
}

Json violations_json(const CoverReport& rep) {
  Json v = Json::array();
  for (const auto& x : rep.violations) v.push_back({{"axiom", x.axiom}, {"vertex", x.vertex}, {"message", x.message}});
  return v;
}

}  // namespace

Result run_validate(const Options& o) {
  auto f = load_translation(o.input);
  const auto& q = f.quiver;
  auto rep = validate(q);
  std::optional<LengthFunction> len;
  std::string length_note;
  if (rep.ok()) {
    try {
      len = length_function(q);
    } catch (const Error& e) {
      length_note = e.what();
    }
  }
  Result r;
  r.code = rep.ok() ? Exit::ok : Exit::failed;
  if (o.json) {
    r.doc["command"] = "validate";
    r.doc["input"] = o.input;
    r.doc["valid"] = rep.ok();
    r.doc["vertices"] = q.vertex_count();
    r.doc["arrows"] = q.arrow_count();
    r.doc["violations"] = rep.violations;
    r.doc["with_length"] = len.has_value();
    if (len) {
      Json l = Json::array();
      for (const auto& [v, n] : *len) l.push_back({{"vertex", v}, {"length", n}});
      r.doc["length_function"] = l;
    } else {
      r.doc["length_function"] = nullptr;
    }
    return r;
  }
  std::ostringstream os;
  os << o.input << ": " << q.vertex_count() << " vertices, " << q.arrow_count() << " arrows\n";
  if (rep.ok()) {
    os << "valid translation quiver\n";
    if (len)
      os << "with length\n";
    else
      os << "no length function" << (length_note.empty() ? "" : " (" + length_note + ")") << "\n";
  } else {
    os << rep.violations.size() << " violation(s)\n";
    for (const auto& v : rep.violations) os << "  " << v << "\n";
  }
  r.text = os.str();
  return r;
}

Result run_mesh(const Options& o) {
  auto f = load_translation(o.input);
  auto rep = validate(f.quiver);
  if (!rep.ok()) throw Error("not a translation quiver: " + rep.violations.front());
  MeshCategory mc(f.quiver);
  Result r;
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId x : f.quiver.vertices()) {
    if (o.from && *o.from != x) continue;
    for (VertexId y : f.quiver.vertices()) {
      if (o.to && *o.to != y) continue;
      pairs.emplace_back(x, y);
    }
  }
  if (o.from && !f.quiver.has_vertex(*o.from)) throw Error("unknown vertex " + std::to_string(*o.from));
  if (o.to && !f.quiver.has_vertex(*o.to)) throw Error("unknown vertex " + std::to_string(*o.to));
  Json list = Json::array();
  std::ostringstream os;
  os << std::left << std::setw(8) << "x" << std::setw(8) << "y" << std::setw(6) << "dim"
     << "dim R^n, n = 0, 1, ...\n";
  for (auto [x, y] : pairs) {
    const auto d = mc.hom_dim(x, y);
    if (!d && !(o.from && o.to)) continue;
    auto rd = mc.radical_dims(x, y);
    list.push_back({{"x", x}, {"y", y}, {"dim", d}, {"radical_dims", rd}});
    os << std::setw(8) << x << std::setw(8) << y << std::setw(6) << d;
    for (std::size_t i = 0; i < rd.size(); ++i) os << (i ? " " : "") << rd[i];
    os << "\n";
  }
  if (o.json) {
    r.doc["command"] = "mesh";
    r.doc["input"] = o.input;
    r.doc["pairs"] = list;
  } else {
    r.text = os.str();
  }
  return r;
}

Result run_knit(const Options& o) {
  auto q = load_ordinary(o.input);
  auto ar = knit_ar_component(q, direction(o), o.bound);
  Result r;
  if (!o.json) {
    std::ostringstream os;
    os << "# " << (o.from_injectives ? "preinjective" : "preprojective") << " component, " << ar.vertex_count()
       << " vertices" << (ar.truncated() ? ", truncated at bound " + std::to_string(o.bound) : "") << "\n";
    for (const auto& v : ar.vertices()) os << "# " << v.label << "\n";
    os << serialize(ar.translation_quiver());
    r.text = os.str();
    return r;
  }
  r.doc["command"] = "knit";
  r.doc["input"] = o.input;
  r.doc["direction"] = direction_name(ar.direction());
  r.doc["bound"] = o.bound;
  r.doc["truncated"] = ar.truncated();
  Json vs = Json::array();
  for (std::size_t i = 0; i < ar.vertex_count(); ++i) {
    const auto& v = ar.vertices()[i];
    vs.push_back({{"id", i},
                  {"label", v.label},
                  {"dims", dims_json(v.module)},
                  {"projective", v.projective},
                  {"injective", v.injective},
                  {"orbit", v.orbit},
                  {"complete", v.left_complete && v.right_complete}});
  }
  r.doc["vertices"] = vs;
  Json as = Json::array();
  for (const auto& a : ar.arrows()) as.push_back({{"id", a.id}, {"source", a.source}, {"target", a.target}});
  r.doc["arrows"] = as;
  Json ms = Json::array();
  for (const auto& m : ar.meshes()) {
    Json mids = Json::array();
    for (const auto& [s, b] : m.arms) mids.push_back(ar.arrow(s).target);
    ms.push_back({{"end", m.end}, {"start", m.start}, {"middle", mids}});
  }
  r.doc["meshes"] = ms;
  return r;
}

Result run_cover(const Options& o) {
  TranslationQuiver base;
  if (o.knit) {
    base = knit_ar_component(load_ordinary(o.input), direction(o), o.bound).translation_quiver();
  } else {
    base = load_translation(o.input).quiver;
    auto v = validate(base);
    if (!v.ok()) throw Error("not a translation quiver: " + v.violations.front());
  }
  auto gc = build_cover(base, o.base, o.radius);
  auto rep = verify_cover(gc);
  Result r;
  r.code = rep.ok() ? Exit::ok : Exit::failed;
  std::size_t repeated = 0;
  for (VertexId b : base.vertices()) repeated += gc.lifts(b).size() > 1;
  if (!o.json) {
    std::ostringstream os;
    os << "# cover of " << o.input << " at vertex " << o.base << ", radius " << o.radius << ": "
       << gc.cover.vertex_count() << " vertices over " << base.vertex_count() << ", " << gc.boundary.size()
       << " on the boundary, " << (rep.ok() ? "axioms hold" : "axioms fail") << "\n";
    for (const auto& v : rep.violations) os << "# " << v.axiom << " " << v.message << "\n";
    os << serialize(export_cover(gc));
    r.text = os.str();
    return r;
  }
  r.doc["command"] = "cover";
  r.doc["input"] = o.input;
  r.doc["base_vertex"] = o.base;
  r.doc["radius"] = o.radius;
  r.doc["vertices"] = gc.cover.vertex_count();
  r.doc["arrows"] = gc.cover.arrow_count();
  r.doc["base_vertices"] = base.vertex_count();
  r.doc["repeated_base_vertices"] = repeated;
  r.doc["boundary"] = gc.boundary;
  Json pi = Json::array();
  for (const auto& [c, b] : gc.pi_vertices) pi.push_back({{"vertex", c}, {"image", b}, {"distance", gc.distance[static_cast<std::size_t>(c)]}});
  r.doc["pi"] = pi;
  r.doc["ok"] = rep.ok();
  r.doc["with_length"] = rep.has_length_function;
  r.doc["violations"] = violations_json(rep);
  return r;
}

Result run_degree(const Options& o) {
  auto ar = knit_ar_component(load_ordinary(o.input), direction(o), o.bound);
  RadicalFiltration rf(ar);
  std::vector<ArrowId> arrows;
  if (o.arrow) {
    if (*o.arrow < 0 || static_cast<std::size_t>(*o.arrow) >= ar.arrow_count())
      throw Error("unknown arrow " + std::to_string(*o.arrow));
    arrows.push_back(*o.arrow);
  } else {
    for (const auto& a : ar.arrows()) arrows.push_back(a.id);
  }
  Result r;
  Json list = Json::array();
  std::ostringstream os;
  os << std::left << std::setw(7) << "arrow" << std::setw(14) << "source" << std::setw(14) << "target" << std::setw(7)
     << "d_l" << "d_r\n";
  for (ArrowId a : arrows) {
    auto f = ArMorphism::from_arrow(ar, a);
    auto l = left_degree(f, rf, o.bound);
    auto rr = right_degree(f, rf, o.bound);
    const auto& arr = ar.arrow(a);
    list.push_back({{"arrow", a},
                    {"source", arr.source},
                    {"target", arr.target},
                    {"source_label", ar.vertex(arr.source).label},
                    {"target_label", ar.vertex(arr.target).label},
                    {"left", degree_json(l, ar)},
                    {"right", degree_json(rr, ar)}});
    os << std::setw(7) << a << std::setw(14) << ar.vertex(arr.source).label << std::setw(14)
       << ar.vertex(arr.target).label << std::setw(7) << degree_cell(l) << degree_cell(rr) << "\n";
  }
  if (ar.truncated()) os << "component truncated at bound " << o.bound << "\n";
  if (o.json) {
    r.doc["command"] = "degree";
    r.doc["input"] = o.input;
    r.doc["direction"] = direction_name(ar.direction());
    r.doc["bound"] = o.bound;
    r.doc["truncated"] = ar.truncated();
    r.doc["arrows"] = list;
  } else {
    r.text = os.str();
  }
  return r;
}

Result run_finite_type(const Options& o) {
  auto q = load_ordinary(o.input);
  auto ft = finite_type_check(q, o.bound);
  // Labels need the knitted component the check used.
  auto ar = knit_ar_component(q, KnitDirection::from_projectives, o.bound);
  Result r;
  r.code = ft.finite_type ? Exit::ok : Exit::inconclusive;
  if (o.json) {
    r.doc["command"] = "finite-type";
    r.doc["input"] = o.input;
    r.doc["bound"] = ft.bound;
    r.doc["verdict"] = ft.finite_type ? "finite-type" : "inconclusive";
    r.doc["truncated"] = ft.truncated;
    r.doc["diameter"] = ft.diameter ? Json(*ft.diameter) : Json(nullptr);
    r.doc["within_diameter"] = ft.within_diameter;
    Json p = Json::array(), i = Json::array();
    for (const auto& d : ft.projective_degrees) p.push_back(degree_json(d, ar));
    for (const auto& d : ft.injective_degrees) i.push_back(degree_json(d, ar));
    r.doc["projective_degrees"] = p;
    r.doc["injective_degrees"] = i;
    Json pb = Json::array();
    for (const auto& s : ft.path_bounds)
      pb.push_back({{"vertex", q->vertex_ids()[s.quiver_vertex]},
                    {"degree", s.degree ? Json(*s.degree) : Json(nullptr)},
                    {"modules_checked", s.modules_checked},
                    {"ok", s.ok},
                    {"problem", s.problem}});
    r.doc["path_bounds"] = pb;
    r.doc["path_bounds_ok"] = ft.path_bounds_ok;
    return r;
  }
  std::ostringstream os;
  os << std::left;
  os << "right degrees of rad P -> P\n";
  for (const auto& d : ft.projective_degrees) os << "  " << std::setw(16) << d.label << degree_cell(d) << "\n";
  os << "left degrees of I -> I/soc I\n";
  for (const auto& d : ft.injective_degrees) os << "  " << std::setw(16) << d.label << degree_cell(d) << "\n";
  if (ft.diameter) os << "diameter " << *ft.diameter << "\n";
  for (const auto& s : ft.path_bounds)
    if (!s.ok) os << "path bound fails at vertex " << q->vertex_ids()[s.quiver_vertex] << ": " << s.problem << "\n";
  os << (ft.finite_type ? "finite-type" : "inconclusive (bound " + std::to_string(ft.bound) + ")") << "\n";
  r.text = os.str();
  return r;
}

Result run_probe(const Options& o) {
  auto ar = knit_ar_component(load_ordinary(o.input), direction(o), o.bound);
  RadicalFiltration rf(ar);
  auto gc = build_cover(ar.translation_quiver(), o.base, o.radius);
  auto F = well_behaved_assignment(gc, rf);
  ProbeOptions po;
  po.max_level = o.levels;
  po.sample = o.sample;
  po.seed = o.seed;
  auto rep = generalized_standard_probe(rf, gc, F, po);
  Result r;
  if (o.json) {
    r.doc["command"] = "probe";
    r.doc["input"] = o.input;
    r.doc["bound"] = o.bound;
    r.doc["radius"] = o.radius;
    r.doc["seed"] = o.seed;
    r.doc["compared"] = rep.compared;
    r.doc["skipped"] = rep.skipped;
    r.doc["mismatches"] = rep.mismatches;
    r.doc["consistent"] = rep.consistent();
    Json pairs = Json::array();
    for (const auto& p : rep.pairs) {
      Json j{{"x", p.x}, {"y", p.y}, {"skipped", p.skipped}};
      if (p.skipped) {
        j["reason"] = p.reason;
      } else {
        j["hom_dim"] = p.hom_dim;
        j["cover_dim"] = p.cover_dim;
        j["component_layers"] = p.component_layers;
        j["cover_layers"] = p.cover_layers;
        j["induced_ranks"] = p.induced_ranks;
        j["equal"] = p.equal();
      }
      pairs.push_back(std::move(j));
    }
    r.doc["pairs"] = pairs;
    return r;
  }
  std::ostringstream os;
  os << "cover: " << gc.cover.vertex_count() << " vertices, radius " << o.radius << "\n";
  os << "pairs compared " << rep.compared << ", skipped " << rep.skipped << ", mismatches " << rep.mismatches << "\n";
  for (const auto& p : rep.pairs)
    if (!p.skipped && !p.equal())
      os << "  mismatch at cover vertex " << p.x << " and " << ar.vertex(p.y).label << ": " << p.hom_dim << " vs "
         << p.cover_dim << "\n";
  os << (rep.consistent() ? "consistent with a covering functor on this window" : "not a covering functor on this window")
     << "\n";
  r.text = os.str();
  return r;
}

}  // namespace arq::cli
