#include "hubs/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hubs {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

// 1-based line containing the given byte offset.
int line_of(const std::string& text, std::size_t offset) {
  return 1 + static_cast<int>(std::count(text.begin(),
                                         text.begin() + std::min(offset, text.size()), '\n'));
}

class Reader {
 public:
  explicit Reader(const std::string& text) : text_(text) {}

  [[noreturn]] void fail(const std::string& field, const std::string& message) const {
    std::size_t pos = 0;
    // Best effort: locate the top-level section named by the field path.
    const std::string section = field.substr(0, field.find_first_of("[."));
    if (!section.empty()) {
      auto found = text_.find("\"" + section + "\"");
      if (found != std::string::npos) pos = found;
    }
    throw ParseError(line_of(text_, pos), field, message);
  }

  int integer(const json& j, const std::string& field) const {
    if (!j.is_number_integer()) fail(field, "expected integer");
    return j.get<int>();
  }

  bool boolean(const json& j, const std::string& field) const {
    if (!j.is_boolean()) fail(field, "expected boolean");
    return j.get<bool>();
  }

  const json& member(const json& obj, const char* key, const std::string& field) const {
    if (!obj.is_object()) fail(field, "expected object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(field + "." + key, "missing field");
    return *it;
  }

  const json& array(const json& j, const std::string& field) const {
    if (!j.is_array()) fail(field, "expected array");
    return j;
  }

 private:
  const std::string& text_;
};

}  // namespace

Document parse_network(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(line_of(text, e.byte == 0 ? 0 : e.byte - 1), "", e.what());
  }
  Reader r(text);
  if (!root.is_object()) r.fail("", "expected a JSON object");

  Document doc;
  Network& g = doc.network;
  const json& vertices = r.array(r.member(root, "vertices", ""), "vertices");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string field = "vertices[" + std::to_string(i) + "]";
    int id = r.integer(vertices[i], field);
    if (id < 0) r.fail(field, "negative vertex id");
    if (g.has_vertex(id)) r.fail(field, "duplicate vertex id");
    g.add_vertex(id);
  }

  const json& edges = r.array(r.member(root, "edges", ""), "edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string field = "edges[" + std::to_string(i) + "]";
    Edge e;
    e.id = r.integer(r.member(edges[i], "id", field), field + ".id");
    e.u = r.integer(r.member(edges[i], "u", field), field + ".u");
    e.v = r.integer(r.member(edges[i], "v", field), field + ".v");
    e.directed = r.boolean(r.member(edges[i], "directed", field), field + ".directed");
    if (e.id < 0) r.fail(field + ".id", "negative edge id");
    if (g.has_edge(e.id)) r.fail(field + ".id", "duplicate edge id");
    if (!g.has_vertex(e.u)) r.fail(field + ".u", "unknown vertex");
    if (!g.has_vertex(e.v)) r.fail(field + ".v", "unknown vertex");
    if (e.u == e.v) throw Error("self-loop", field + " joins vertex " + std::to_string(e.u) + " to itself");
    g.add_edge(e);
  }

  const json& pairs = r.array(r.member(root, "pairs", ""), "pairs");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string field = "pairs[" + std::to_string(i) + "]";
    int s = r.integer(r.member(pairs[i], "source", field), field + ".source");
    int t = r.integer(r.member(pairs[i], "sink", field), field + ".sink");
    int c = r.integer(r.member(pairs[i], "demand", field), field + ".demand");
    g.add_pair(s, t, c);
  }
  g.validate();

  auto sys_it = root.find("systems");
  if (sys_it != root.end() && !sys_it->is_null()) {
    const json& systems = r.array(*sys_it, "systems");
    if (systems.size() != pairs.size()) {
      r.fail("systems", "expected one system per pair");
    }
    for (std::size_t i = 0; i < systems.size(); ++i) {
      const std::string field = "systems[" + std::to_string(i) + "]";
      std::vector<Path> paths;
      for (std::size_t k = 0; k < r.array(systems[i], field).size(); ++k) {
        const std::string pf = field + "[" + std::to_string(k) + "]";
        Path p;
        const json& steps = r.array(systems[i][k], pf);
        for (std::size_t m = 0; m < steps.size(); ++m) {
          const std::string sf = pf + "[" + std::to_string(m) + "]";
          Step s;
          s.edge = r.integer(r.member(steps[m], "edge", sf), sf + ".edge");
          s.forward = r.boolean(r.member(steps[m], "forward", sf), sf + ".forward");
          p.steps.push_back(s);
        }
        paths.push_back(std::move(p));
      }
      PathSystem system(static_cast<int>(i), std::move(paths));
      validate_system(g, system);
      doc.systems.push_back(std::move(system));
    }
  }
  return doc;
}

std::string serialize_network(const Network& g, const std::vector<PathSystem>& systems) {
  ordered_json root;
  root["vertices"] = g.vertices();
  ordered_json edges = ordered_json::array();
  for (const Edge& e : g.edges()) {
    ordered_json je;
    je["id"] = e.id;
    je["u"] = e.u;
    je["v"] = e.v;
    je["directed"] = e.directed;
    edges.push_back(je);
  }
  root["edges"] = edges;
  ordered_json pairs = ordered_json::array();
  for (const TerminalPair& p : g.pairs()) {
    ordered_json jp;
    jp["source"] = p.source;
    jp["sink"] = p.sink;
    jp["demand"] = p.demand;
    pairs.push_back(jp);
  }
  root["pairs"] = pairs;
  if (!systems.empty()) {
    ordered_json js = ordered_json::array();
    for (const PathSystem& sys : systems) {
      ordered_json jpaths = ordered_json::array();
      for (const Path& p : sys.paths()) {
        ordered_json jsteps = ordered_json::array();
        for (const Step& s : p.steps) {
          ordered_json step;
          step["edge"] = s.edge;
          step["forward"] = s.forward;
          jsteps.push_back(step);
        }
        jpaths.push_back(jsteps);
      }
      js.push_back(jpaths);
    }
    root["systems"] = js;
  }
  return root.dump(2) + "\n";
}

std::string export_dot(const Network& g, const std::vector<PathSystem>& systems) {
  std::ostringstream out;
  out << "digraph network {\n";
  for (VertexId v : g.vertices()) {
    out << "  v" << v << " [label=\"" << v << "\"";
    if (g.is_terminal(v)) out << ", shape=box";
    out << "];\n";
  }
  std::map<EdgeId, EdgeTag> tags;
  if (systems.size() == 2) tags = classify_edges(g, systems);
  for (const Edge& e : g.edges()) {
    out << "  v" << e.u << " -> v" << e.v << " [label=\"e" << e.id << "\"";
    if (!e.directed) out << ", dir=none";
    auto it = tags.find(e.id);
    if (it != tags.end()) {
      if (it->second.kind == EdgeClass::public_edge) {
        out << ", style=bold";
      } else if (it->second.kind == EdgeClass::private_edge) {
        out << (it->second.owner == 0 ? ", style=solid" : ", style=dashed");
      } else {
        out << ", style=dotted";
      }
    }
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

Document read_network_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io-error", "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_network(buf.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("io-error", "cannot write " + path);
  out << text;
  if (!out) throw Error("io-error", "write failed for " + path);
}

}  // namespace hubs
