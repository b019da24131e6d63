#include "ludics/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "formula_parse.hpp"
#include "ludics/connectives.hpp"
#include "ludics/interaction.hpp"
#include "ludics/text.hpp"
#include "scanner.hpp"

namespace ludics {

using json = nlohmann::ordered_json;

namespace {

void tree(detail::Scanner& sc, Seq prefix, std::set<Seq>& out) {
  if (!sc.at_action()) sc.fail("expected an action");
  prefix.push_back(sc.action());
  out.insert(prefix);
  if (sc.accept("{"))
    while (!sc.accept("}")) tree(sc, prefix, out);
}

std::vector<std::string> name_list(detail::Scanner& sc) {
  std::vector<std::string> names;
  sc.expect("{");
  if (sc.accept("}")) return names;
  do names.push_back(sc.identifier());
  while (sc.accept(","));
  sc.expect("}");
  return names;
}

std::string join(const std::vector<std::string>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i];
  return s;
}

}  // namespace

Workspace parse_workspace(const std::string& text) {
  detail::Scanner sc(text);
  Workspace ws;
  auto taken = [&](const std::string& kind, const std::string& name) {
    for (const auto& [k, n] : ws.order)
      if (k == kind && n == name) return true;
    return false;
  };
  while (!sc.at_end()) {
    std::string kind = sc.identifier();
    if (kind != "design" && kind != "path" && kind != "net" && kind != "behaviour" && kind != "formula")
      sc.fail("unknown statement '" + kind + "'");
    std::string name = sc.identifier();
    if (taken(kind, name)) sc.fail(kind + " " + name + " defined twice");
    auto invalid = [&](const std::string& why) { sc.fail(kind + " " + name + ": " + why); };

    if (kind == "design") {
      if (!sc.at_keyword("base")) sc.fail("expected 'base'");
      sc.expect("base");
      Base b = sc.base();
      std::set<Seq> cs;
      sc.expect("{");
      while (!sc.accept("}")) tree(sc, {}, cs);
      Design d{b, cs};
      if (auto v = design_violation(d)) invalid(*v);
      ws.designs.emplace(name, std::move(d));
    } else if (kind == "path") {
      sc.expect("base");
      NamedPath p{sc.base(), {}};
      sc.expect("[");
      while (!sc.accept("]")) {
        if (!sc.at_action()) sc.fail("expected an action or ']'");
        p.seq.push_back(sc.action());
      }
      ws.paths.emplace(name, std::move(p));
    } else if (kind == "net") {
      sc.expect("=");
      auto names = name_list(sc);
      if (names.empty()) invalid("empty net");
      std::vector<Design> ds;
      for (const auto& n : names) {
        if (!ws.designs.count(n)) invalid("unknown design " + n);
        ds.push_back(ws.designs.at(n));
      }
      try {
        validate_net(Net{ds});
      } catch (const DomainError& e) {
        invalid(e.what());
      }
      ws.nets.emplace(name, std::move(names));
    } else if (kind == "behaviour") {
      sc.expect("=");
      if (!sc.at_keyword("closure")) sc.fail("expected 'closure'");
      sc.expect("closure");
      auto names = name_list(sc);
      if (names.empty()) invalid("a behaviour needs at least one generator");
      std::vector<Design> ds;
      for (const auto& n : names) {
        if (!ws.designs.count(n)) invalid("unknown design " + n);
        ds.push_back(ws.designs.at(n));
      }
      try {
        Behaviour(ds.front().base, ds);
      } catch (const DomainError& e) {
        invalid(e.what());
      }
      ws.behaviours.emplace(name, std::move(names));
    } else {
      sc.expect("=");
      Formula f = detail::parse_formula_expr(sc, std::nullopt);
      try {
        check_formula(f);
      } catch (const DomainError& e) {
        invalid(e.what());
      }
      ws.formulas.emplace(name, std::move(f));
    }
    ws.order.emplace_back(kind, name);
  }
  return ws;
}

std::string print_workspace(const Workspace& ws) {
  std::string out;
  for (const auto& [kind, name] : ws.order) {
    out += kind + " " + name;
    if (kind == "design") {
      const Design& d = ws.designs.at(name);
      out += " base " + to_string(d.base) + " " + design_body(d);
    } else if (kind == "path") {
      const NamedPath& p = ws.paths.at(name);
      out += " base " + to_string(p.base) + " [" + (p.seq.empty() ? "" : " " + to_string(p.seq)) + " ]";
    } else if (kind == "net") {
      out += " = { " + join(ws.nets.at(name)) + " }";
    } else if (kind == "behaviour") {
      out += " = closure { " + join(ws.behaviours.at(name)) + " }";
    } else {
      out += " = " + to_string(ws.formulas.at(name));
    }
    out += "\n";
  }
  return out;
}

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json seqs(const std::set<Seq>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(to_string(p));
  return a;
}

json rams(const std::vector<Ramification>& rs) {
  json a = json::array();
  for (const auto& r : rs) a.push_back(to_string(r));
  return a;
}

json design_json(const Design& d) { return json{{"base", to_string(d.base)}, {"body", design_body(d)}}; }

json designs_json(const std::vector<Design>& ds) {
  json a = json::array();
  for (const auto& d : ds) a.push_back(design_json(d));
  return a;
}

json path_report(const PathReport& r) {
  static const char* verdicts[] = {"ok", "violation", "structural"};
  json j{{"verdict", verdicts[static_cast<int>(r.verdict)]}};
  if (!r.ok()) {
    j["condition"] = condition_name(r.condition);
    j["index"] = r.index;
    j["detail"] = r.detail;
  }
  return j;
}

const char* witness_kind_name(WitnessKind k) {
  switch (k) {
    case WitnessKind::None: return "none";
    case WitnessKind::Chronicle: return "chronicle";
    case WitnessKind::Shuffle: return "shuffle";
  }
  return "none";
}

json regularity_json(const RegularityReport& r) {
  json j{{"verdict", r.regular ? "regular" : "not-regular"}};
  if (!r.regular) {
    j["witness_kind"] = witness_kind_name(r.kind);
    j["side"] = r.side == Side::Primal ? "primal" : "dual";
    j["witness"] = to_string(r.witness);
    if (r.kind == WitnessKind::Shuffle) {
      j["left"] = to_string(r.left);
      j["right"] = to_string(r.right);
    }
    j["detail"] = r.detail;
  }
  return j;
}

json normalization_json(const NormalizationResult& n) {
  json j{{"verdict", n.converged() ? "orthogonal" : "divergent"},
         {"steps", n.steps},
         {"trace", to_string(n.trace)},
         {"dual_trace", to_string(n.dual_trace)}};
  if (!n.converged()) {
    json d{{"reason", n.reason}};
    if (n.failing) d["action"] = to_string(*n.failing);
    if (n.failing_design) d["design"] = *n.failing_design;
    if (!n.missed.empty() || n.failing) d["missed"] = to_string(n.missed);
    d["offered"] = rams(n.offered);
    d["no_partner"] = n.no_partner;
    d["empty_offer"] = n.empty_offer;
    j["divergence"] = d;
  }
  return j;
}

struct Context {
  const Workspace& ws;
  std::vector<std::string> args;
  Mode mode;
  std::size_t budget;

  void arity(std::size_t lo, std::size_t hi) const {
    if (args.size() < lo || args.size() > hi) {
      std::string want = lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi);
      if (hi == static_cast<std::size_t>(-1)) want = "at least " + std::to_string(lo);
      throw UsageError("expected " + want + " item name(s), got " + std::to_string(args.size()));
    }
  }
  const Design& design(const std::string& n) const {
    auto it = ws.designs.find(n);
    if (it == ws.designs.end()) throw UsageError("unknown design " + n);
    return it->second;
  }
  const NamedPath& path(const std::string& n) const {
    auto it = ws.paths.find(n);
    if (it == ws.paths.end()) throw UsageError("unknown path " + n);
    return it->second;
  }
  const Formula& formula(const std::string& n) const {
    auto it = ws.formulas.find(n);
    if (it == ws.formulas.end()) throw UsageError("unknown formula " + n);
    return it->second;
  }
  // behaviours are looked up by name, then formulas are evaluated
  Behaviour behaviour(const std::string& n) const {
    if (auto it = ws.behaviours.find(n); it != ws.behaviours.end()) {
      std::vector<Design> ds;
      for (const auto& g : it->second) ds.push_back(ws.designs.at(g));
      return Behaviour(ds.front().base, ds, mode, budget);
    }
    if (auto it = ws.formulas.find(n); it != ws.formulas.end()) {
      Behaviour b = eval_formula(it->second, mode);
      return Behaviour(b.base(), b.generators(), mode, budget);
    }
    throw UsageError("unknown behaviour " + n);
  }
};

// fills the report and returns whether the verdict is positive
using Handler = std::function<bool(const Context&, json&)>;

bool path_check(const Context& c, json& r, PathReport (*f)(const Seq&, const Base&)) {
  c.arity(1, 1);
  const NamedPath& p = c.path(c.args[0]);
  auto rep = f(p.seq, p.base);
  r["path"] = to_string(p.seq);
  r.update(path_report(rep));
  return rep.ok();
}

const std::map<std::string, std::pair<std::string, Handler>>& handlers() {
  static const std::map<std::string, std::pair<std::string, Handler>> table = {
      {"print",
       {"[NAME...]  print the workspace, or the named items",
        [](const Context& c, json& r) {
          Workspace sub = c.ws;
          if (!c.args.empty()) {
            sub.order.clear();
            for (const auto& n : c.args) {
              bool found = false;
              for (const auto& item : c.ws.order)
                if (item.second == n) sub.order.push_back(item), found = true;
              if (!found) throw UsageError("unknown item " + n);
            }
          }
          r["verdict"] = "ok";
          r["workspace"] = print_workspace(sub);
          return true;
        }}},
      {"check",
       {"PATH  validate a path against its base",
        [](const Context& c, json& r) { return path_check(c, r, validate_path); }}},
      {"chronicle",
       {"PATH  validate a chronicle against its base",
        [](const Context& c, json& r) { return path_check(c, r, validate_chronicle); }}},
      {"reversible",
       {"PATH  check that the path and its dual are paths",
        [](const Context& c, json& r) { return path_check(c, r, is_reversible); }}},
      {"view",
       {"PATH  view of a sequence",
        [](const Context& c, json& r) {
          c.arity(1, 1);
          r["verdict"] = "ok";
          r["view"] = to_string(view(c.path(c.args[0]).seq));
          return true;
        }}},
      {"dual",
       {"PATH  dual sequence and dual base",
        [](const Context& c, json& r) {
          c.arity(1, 1);
          const NamedPath& p = c.path(c.args[0]);
          r["verdict"] = "ok";
          r["base"] = to_string(dual_base(p.base));
          r["dual"] = to_string(dual(p.seq));
          return true;
        }}},
      {"shuffle",
       {"P Q  shuffle of two paths",
        [](const Context& c, json& r) {
          c.arity(2, 2);
          auto s = try_shuffle(c.path(c.args[0]).seq, c.path(c.args[1]).seq);
          r["verdict"] = s ? "defined" : "undefined";
          if (s) {
            r["count"] = s->size();
            r["paths"] = seqs(*s);
          }
          return s.has_value();
        }}},
      {"closure",
       {"P...  shuffle closure of a set of paths",
        [](const Context& c, json& r) {
          c.arity(1, -1);
          std::set<Seq> ps;
          for (const auto& n : c.args) ps.insert(c.path(n).seq);
          auto cl = shuffle_closure(ps);
          r["verdict"] = "ok";
          r["count"] = cl.size();
          r["paths"] = seqs(cl);
          return true;
        }}},
      {"coherent",
       {"C1 C2  coherence of two chronicles",
        [](const Context& c, json& r) {
          c.arity(2, 2);
          const NamedPath &a = c.path(c.args[0]), &b = c.path(c.args[1]);
          bool ok = coherent(a.seq, a.base, b.seq, b.base);
          r["verdict"] = ok ? "coherent" : "incoherent";
          return ok;
        }}},
      {"paths",
       {"DESIGN  positive-ended paths of a design",
        [](const Context& c, json& r) {
          c.arity(1, 1);
          auto ps = paths_of_design(c.design(c.args[0]));
          r["verdict"] = "ok";
          r["count"] = ps.size();
          r["paths"] = seqs(ps);
          return true;
        }}},
      {"member",
       {"PATH DESIGN  is the path a positive-ended path of the design",
        [](const Context& c, json& r) {
          c.arity(2, 2);
          const NamedPath& p = c.path(c.args[0]);
          const Design& d = c.design(c.args[1]);
          bool ok = p.base == d.base && paths_of_design(d).count(p.seq) > 0;
          r["verdict"] = ok ? "member" : "not-member";
          return ok;
        }}},
      {"from-paths",
       {"P...  net of designs whose chronicles are the views of the paths",
        [](const Context& c, json& r) {
          c.arity(1, -1);
          std::set<Seq> ps;
          const Base& b = c.path(c.args[0]).base;
          for (const auto& n : c.args) {
            if (c.path(n).base != b) throw UsageError("paths " + c.args[0] + " and " + n + " have different bases");
            ps.insert(c.path(n).seq);
          }
          try {
            Net net = design_from_paths(ps, b);
            r["verdict"] = "ok";
            r["designs"] = designs_json(net.designs);
            return true;
          } catch (const DomainError& e) {
            r["verdict"] = "invalid";
            r["detail"] = e.what();
            return false;
          }
        }}},
      {"complete",
       {"DESIGN [BEHAVIOUR]  add daimon answers for every ramification of the universe",
        [](const Context& c, json& r) {
          c.arity(1, 2);
          const Design& d = c.design(c.args[0]);
          auto uni = c.args.size() == 2 ? c.behaviour(c.args[1]).universe() : ramification_universe({d});
          r["verdict"] = "ok";
          r["design"] = design_json(complete(d, uni));
          return true;
        }}},
      {"ortho",
       {"D R...  normalize D against the counter-net R",
        [](const Context& c, json& r) {
          c.arity(2, -1);
          std::vector<Design> rs;
          for (std::size_t i = 1; i < c.args.size(); ++i) rs.push_back(c.design(c.args[i]));
          auto n = interact(c.design(c.args[0]), rs);
          r.update(normalization_json(n));
          return n.converged();
        }}},
      {"normalize",
       {"NET [INDEX]  normalize a closed cut-net",
        [](const Context& c, json& r) {
          c.arity(1, 2);
          auto it = c.ws.nets.find(c.args[0]);
          if (it == c.ws.nets.end()) throw UsageError("unknown net " + c.args[0]);
          std::vector<Design> ds;
          for (const auto& n : it->second) ds.push_back(c.ws.designs.at(n));
          CutNet net;
          try {
            net = make_cut_net(ds);
          } catch (const CutNetError& e) {
            static const char* problems[] = {"address", "cyclic", "disconnected", "no-main", "several-mains"};
            r["verdict"] = "invalid-net";
            r["problem"] = problems[static_cast<int>(e.problem)];
            r["detail"] = e.what();
            return false;
          }
          std::size_t dist = net.main;
          if (c.args.size() == 2) {
            try {
              dist = std::stoul(c.args[1]);
            } catch (const std::exception&) {
              throw UsageError("bad design index " + c.args[1]);
            }
            if (dist >= ds.size()) throw UsageError("design index out of range");
          }
          auto n = normalize(net, dist);
          r.update(normalization_json(n));
          r["verdict"] = n.converged() ? "convergent" : "divergent";
          r["distinguished"] = it->second[n.distinguished];
          json locals = json::array();
          for (const auto& t : n.local_traces) locals.push_back(to_string(t));
          r["local_traces"] = locals;
          return n.converged();
        }}},
      {"visit",
       {"PATH BEHAVIOUR  decide whether the path is visitable",
        [](const Context& c, json& r) {
          c.arity(2, 2);
          auto b = c.behaviour(c.args[1]);
          auto v = visit(c.path(c.args[0]).seq, b);
          r["verdict"] = v.visitable ? "visitable" : "not-visitable";
          r["reason"] = visit_reason_name(v.reason);
          if (v.generator) r["generator"] = *v.generator;
          if (v.failing_generator) r["failing_generator"] = *v.failing_generator;
          if (!v.detail.empty()) r["detail"] = v.detail;
          return v.visitable;
        }}},
      {"visitables",
       {"BEHAVIOUR  visitable paths",
        [](const Context& c, json& r) {
          c.arity(1, 1);
          auto b = c.behaviour(c.args[0]);
          const auto& v = visitable_paths(b);
          r["verdict"] = "ok";
          r["count"] = v.paths.size();
          r["paths"] = seqs(v.paths);
          return true;
        }}},
      {"dual-visitables",
       {"BEHAVIOUR  duals of the visitable paths",
        [](const Context& c, json& r) {
          c.arity(1, 1);
          auto v = dual_visitable_paths(c.behaviour(c.args[0]));
          r["verdict"] = "ok";
          r["count"] = v.size();
          r["paths"] = seqs(v);
          return true;
        }}},
      {"incarnation",
       {"BEHAVIOUR  material designs",
        [](const Context& c, json& r) {
          c.arity(1, 1);
          auto b = c.behaviour(c.args[0]);
          const auto& inc = incarnation(b);
          r["verdict"] = "ok";
          r["count"] = inc.designs.size();
          r["designs"] = designs_json(inc.designs);
          r["warnings"] = inc.warnings;
          return true;
        }}},
      {"counter",
       {"BEHAVIOUR  material designs of the orthogonal",
        [](const Context& c, json& r) {
          c.arity(1, 1);
          auto b = c.behaviour(c.args[0]);
          const auto& ci = counter_incarnation(b);
          r["verdict"] = "ok";
          r["count"] = ci.size();
          r["designs"] = designs_json(ci);
          return true;
        }}},
      {"directory",
       {"BEHAVIOUR  first ramifications",
        [](const Context& c, json& r) {
          c.arity(1, 1);
          auto d = directory(c.behaviour(c.args[0]));
          r["verdict"] = "ok";
          r["directory"] = rams({d.begin(), d.end()});
          return true;
        }}},
      {"trivial",
       {"BEHAVIOUR  trivial chronicles",
        [](const Context& c, json& r) {
          c.arity(1, 1);
          auto t = trivial_chronicles(c.behaviour(c.args[0]));
          r["verdict"] = "ok";
          r["count"] = t.size();
          r["chronicles"] = seqs(t);
          return true;
        }}},
      {"regular-path",
       {"PATH BEHAVIOUR  is the path regular for the behaviour",
        [](const Context& c, json& r) {
          c.arity(2, 2);
          bool ok = is_regular_path(c.path(c.args[0]).seq, c.behaviour(c.args[1]));
          r["verdict"] = ok ? "regular" : "not-regular";
          return ok;
        }}},
      {"regular-paths",
       {"BEHAVIOUR  regular paths, a superset of the visitable ones",
        [](const Context& c, json& r) {
          c.arity(1, 1);
          auto ps = regular_paths(c.behaviour(c.args[0]));
          r["verdict"] = "ok";
          r["count"] = ps.size();
          r["paths"] = seqs(ps);
          return true;
        }}},
      {"regular",
       {"BEHAVIOUR  regularity with a witness",
        [](const Context& c, json& r) {
          c.arity(1, 1);
          auto rep = is_regular(c.behaviour(c.args[0]));
          r.update(regularity_json(rep));
          return rep.regular;
        }}},
      {"bounds",
       {"BEHAVIOUR  finiteness and size bounds",
        [](const Context& c, json& r) {
          c.arity(1, 1);
          auto b = bounds(c.behaviour(c.args[0]));
          r["verdict"] = b.essentially_finite ? "essentially-finite" : "not-essentially-finite";
          r["uniformly_bounded"] = b.uniformly_bounded;
          r["material_count"] = b.material_count;
          r["total_size"] = b.total_size;
          r["max_slice"] = b.max_slice;
          return b.essentially_finite;
        }}},
      {"decompose",
       {"BEHAVIOUR  decompose into a formula",
        [](const Context& c, json& r) {
          c.arity(1, 1);
          auto d = decompose(c.behaviour(c.args[0]));
          r["verdict"] = d.decomposed ? "decomposed" : "not-decomposable";
          if (d.decomposed) {
            r["formula"] = to_string(d.formula);
            r["depth"] = formula_depth(d.formula);
          } else {
            r["reason"] = d.failure == DecomposeFailure::NotRegular ? "not-regular" : "not-essentially-finite";
            if (d.failure == DecomposeFailure::NotRegular) r["witness"] = regularity_json(d.witness);
            r["detail"] = d.detail;
          }
          return d.decomposed;
        }}},
      {"eval",
       {"FORMULA  generators and visitable paths of a formula",
        [](const Context& c, json& r) {
          c.arity(1, 1);
          c.formula(c.args[0]);
          auto b = c.behaviour(c.args[0]);
          const auto& v = visitable_paths(b);
          r["verdict"] = "ok";
          r["base"] = to_string(b.base());
          r["generators"] = designs_json(b.generators());
          r["count"] = v.paths.size();
          r["paths"] = seqs(v.paths);
          return true;
        }}},
      {"equiv",
       {"F G  structural equivalence of formulas",
        [](const Context& c, json& r) {
          c.arity(2, 2);
          bool ok = formula_equiv(c.formula(c.args[0]), c.formula(c.args[1]));
          r["verdict"] = ok ? "equivalent" : "different";
          return ok;
        }}},
  };
  return table;
}

void render_text(const json& j, std::ostream& out, const std::string& indent) {
  for (const auto& [k, v] : j.items()) {
    if (v.is_object()) {
      out << indent << k << ":\n";
      render_text(v, out, indent + "  ");
    } else if (v.is_array()) {
      out << indent << k << ":" << (v.empty() ? " (none)" : "") << "\n";
      for (const auto& x : v) {
        if (x.is_object()) {
          out << indent << "  -\n";
          render_text(x, out, indent + "    ");
        } else {
          out << indent << "  " << (x.is_string() ? x.get<std::string>() : x.dump()) << "\n";
        }
      }
    } else if (v.is_string()) {
      const auto& s = v.get_ref<const std::string&>();
      if (s.find('\n') == std::string::npos) {
        out << indent << k << ": " << s << "\n";
      } else {
        out << indent << k << ":\n";
        std::istringstream in(s);
        for (std::string line; std::getline(in, line);) out << indent << "  " << line << "\n";
      }
    } else {
      out << indent << k << ": " << v.dump() << "\n";
    }
  }
}

std::string command_list() {
  std::string s = "Commands:\n";
  for (const auto& [name, h] : handlers()) s += "  " + name + " FILE " + h.first + "\n";
  return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ludics designs, paths and behaviours"};
  app.footer(command_list());
  std::string command, file, mode = "fast", format = "text";
  std::vector<std::string> items;
  std::optional<std::size_t> budget;
  bool timing = false;
  app.add_option("command", command, "command to run")->required();
  app.add_option("file", file, "workspace file")->required();
  app.add_option("items", items, "item names");
  app.add_option("--mode", mode, "fast or exhaustive")->check(CLI::IsMember({"fast", "exhaustive"}));
  app.add_option("--budget", budget, "search node budget (default from LUDICS_BUDGET or 1000000)");
  app.add_option("--out", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  app.add_flag("--timing", timing, "add wall-clock timing to the report");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ExitPositive;
  } catch (const CLI::ParseError& e) {
    err << "ludics: " << e.what() << "\n";
    return ExitUsage;
  }

  json report{{"command", command},
              {"file", std::filesystem::path(file).filename().string()},
              {"args", items},
              {"mode", mode}};
  bool structured = format == "structured";
  auto finish = [&](int status) {
    report["status"] = status;
    if (structured) {
      out << report.dump(2) << "\n";
    } else if (status == ExitUsage || status == ExitBudget) {
      err << "ludics: " << report.value("error", std::string("error")) << "\n";
    } else if (command == "print") {
      out << report["workspace"].get<std::string>();
    } else {
      json body = report;
      body.erase("command");
      body.erase("file");
      body.erase("args");
      body.erase("mode");
      body.erase("status");
      render_text(body, out, "");
    }
    return status;
  };

  auto h = handlers().find(command);
  if (h == handlers().end()) {
    report["error"] = "unknown command '" + command + "'";
    return finish(ExitUsage);
  }

  std::ifstream in(file);
  if (!in) {
    report["error"] = "cannot read " + file;
    return finish(ExitUsage);
  }
  std::stringstream buf;
  buf << in.rdbuf();

  auto start = std::chrono::steady_clock::now();
  int status;
  try {
    Workspace ws = parse_workspace(buf.str());
    Context ctx{ws, items, mode == "exhaustive" ? Mode::Exhaustive : Mode::Fast, budget.value_or(default_budget())};
    status = h->second.second(ctx, report) ? ExitPositive : ExitNegative;
  } catch (const ParseError& e) {
    report["error"] = file + ": " + e.what();
    status = ExitUsage;
  } catch (const UsageError& e) {
    report["error"] = e.what();
    status = ExitUsage;
  } catch (const ResourceError& e) {
    report["error"] = e.what();
    report["budget"] = e.budget;
    status = ExitBudget;
  } catch (const DomainError& e) {
    report["error"] = e.what();
    status = ExitUsage;
  }
  if (timing) {
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report["timing"] = {{"elapsed_ms", ms}};
  }
  return finish(status);
}

}  // namespace ludics
